#include "genexp/weight.hpp"

#include "genexp/errors.hpp"
#include "genexp/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace genexp {

Weight::Weight(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw InputError("weight needs at least two coordinates (rank >= 1)");
  if (std::accumulate(coords_.begin(), coords_.end(), 0L) != 0)
    throw InputError("weight coordinates must sum to zero: " + to_string());
}

Weight Weight::zero(int rank) {
  if (rank < 1) throw InputError("rank must be >= 1");
  return Weight(std::vector<int>(static_cast<std::size_t>(rank + 1), 0), true);
}

Weight Weight::root(int rank, int i, int j) {
  if (i < 1 || j < 1 || i > rank + 1 || j > rank + 1 || i == j) throw InputError("bad root indices");
  std::vector<int> c(static_cast<std::size_t>(rank + 1), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  c[static_cast<std::size_t>(j - 1)] = -1;
  return Weight(std::move(c), true);
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; });
}

bool Weight::is_dominant() const { return std::is_sorted(coords_.rbegin(), coords_.rend()); }

bool Weight::is_first_layer() const { return *std::min_element(coords_.begin(), coords_.end()) >= -1; }

Weight Weight::operator+(const Weight& other) const {
  if (other.size() != size()) throw InputError("rank mismatch");
  std::vector<int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Weight(std::move(c), true);
}

Weight Weight::operator-(const Weight& other) const {
  if (other.size() != size()) throw InputError("rank mismatch");
  std::vector<int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return Weight(std::move(c), true);
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

Weight parse_weight(std::string_view text) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("cannot parse weight: '" + std::string(text) + "'");
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(coords));
}

int height(const Weight& w) {
  int h = 0;
  const int n = w.rank();
  for (int i = 1; i <= n + 1; ++i) h += w.coord(i) * (n + 1 - i);
  return h;
}

int norm_squared(const Weight& w) {
  int s = 0;
  for (int x : w.coords()) s += x * x;
  return s;
}

int coroot_pairing(const Weight& w, int i) {
  if (i < 1 || i > w.rank()) throw InputError("simple root index out of range");
  return w.coord(i) - w.coord(i + 1);
}

Weight simple_reflect(const Weight& w, int i) {
  if (i < 1 || i > w.rank()) throw InputError("simple reflection index out of range");
  std::vector<int> c = w.coords();
  std::swap(c[static_cast<std::size_t>(i - 1)], c[static_cast<std::size_t>(i)]);
  return Weight(std::move(c));
}

Weight theta_reflect(const Weight& w) {
  std::vector<int> c = w.coords();
  std::swap(c.front(), c.back());
  return Weight(std::move(c));
}

Weight dominant_representative(const Weight& w) {
  std::vector<int> c = w.coords();
  std::sort(c.begin(), c.end(), std::greater<>());
  return Weight(std::move(c));
}

void require_first_layer(const Weight& w) {
  if (!w.is_first_layer()) throw InputError("weight is not in the first layer: " + w.to_string());
}

void require_first_layer_dominant(const Weight& w) {
  require_first_layer(w);
  if (!w.is_dominant()) throw InputError("weight is not dominant: " + w.to_string());
}

int co_length(const Weight& w) {
  require_first_layer(w);
  return static_cast<int>(std::count(w.coords().begin(), w.coords().end(), -1));
}

int length(const Weight& w) { return w.size() - co_length(w); }

std::vector<int> aggregate_vector(const Weight& w) {
  require_first_layer(w);
  std::vector<int> out;
  int suffix = 0;
  for (int i = w.size(); i >= 1; --i) {
    suffix += w.coord(i);
    if (w.coord(i) == -1) out.push_back(suffix);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Calls f on every vector of `parts` non-negative integers summing to `total`,
// in lexicographic order.
void for_each_weak_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == parts - 1) {
      c[static_cast<std::size_t>(idx)] = remaining;
      f(c);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, total);
}

}  // namespace

std::vector<Weight> first_layer_weights(int rank) {
  if (rank < 1) throw InputError("rank must be >= 1");
  std::vector<Weight> out;
  for_each_weak_composition(rank + 1, rank + 1, [&](const std::vector<int>& c) {
    std::vector<int> mu(c);
    for (int& x : mu) x -= 1;
    out.emplace_back(std::move(mu));
  });
  return out;
}

std::vector<Weight> first_layer_dominant_weights(int rank) {
  if (rank < 1) throw InputError("rank must be >= 1");
  std::vector<Weight> out;
  for (const Partition& p : partitions_of(rank + 1)) out.push_back(composition_to_weight(Composition(p.parts()), rank));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightMultiplicity> weights_of_irrep(const Weight& lambda) {
  require_first_layer_dominant(lambda);
  const int n = lambda.rank();
  const Partition shape(phi_weight(lambda).parts());

  std::map<std::vector<int>, Integer> kostka_cache;
  std::vector<WeightMultiplicity> out;
  for_each_weak_composition(n + 1, n + 1, [&](const std::vector<int>& c) {
    std::vector<int> sorted(c);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto it = kostka_cache.find(sorted);
    if (it == kostka_cache.end()) it = kostka_cache.emplace(sorted, kostka_number(shape, sorted)).first;
    if (it->second == 0) return;
    std::vector<int> mu(c);
    for (int& x : mu) x -= 1;
    out.push_back({Weight(std::move(mu)), it->second});
  });
  return out;
}

}  // namespace genexp
