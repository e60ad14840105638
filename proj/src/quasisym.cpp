#include "genexp/quasisym.hpp"

#include "genexp/errors.hpp"

#include <algorithm>
#include <functional>

namespace genexp {

bool is_quasi_dominant(const Weight& w) {
  if (!w.is_first_layer()) return false;
  bool seen_negative = false;
  for (int x : w.coords()) {
    if (x == -1) seen_negative = true;
    else if (seen_negative) return false;
  }
  return true;
}

QuasiDominantWeight::QuasiDominantWeight(Weight w) : weight_(std::move(w)) {
  if (!is_quasi_dominant(weight_)) throw InputError("weight is not quasi-dominant: " + weight_.to_string());
}

Weight local_act(int i, const Weight& lambda) {
  if (i < 1 || i > lambda.rank()) throw InputError("local action index out of range");
  require_first_layer(lambda);
  if (lambda.coord(i) >= 0 && lambda.coord(i + 1) >= 0) return lambda;
  return simple_reflect(lambda, i);
}

std::vector<Weight> local_orbit(const Weight& lambda) {
  require_first_layer(lambda);
  std::vector<int> frozen;
  for (int x : lambda.coords())
    if (x >= 0) frozen.push_back(x);
  const int size = lambda.size();
  const int negatives = size - static_cast<int>(frozen.size());

  std::vector<Weight> out;
  std::vector<bool> is_negative(static_cast<std::size_t>(size), false);
  std::fill(is_negative.end() - negatives, is_negative.end(), true);
  // Visits each placement of the -1 entries exactly once.
  do {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(size));
    std::size_t next = 0;
    for (bool neg : is_negative) c.push_back(neg ? -1 : frozen[next++]);
    out.emplace_back(std::move(c));
  } while (std::next_permutation(is_negative.begin(), is_negative.end()));
  std::sort(out.begin(), out.end());
  return out;
}

QuasiDominantWeight quasi_dominant_representative(const Weight& lambda) {
  require_first_layer(lambda);
  std::vector<int> c;
  int negatives = 0;
  for (int x : lambda.coords()) {
    if (x == -1) ++negatives;
    else c.push_back(x);
  }
  c.insert(c.end(), static_cast<std::size_t>(negatives), -1);
  return QuasiDominantWeight(Weight(std::move(c)));
}

std::vector<PositiveRoot> canonical_expression(const QuasiDominantWeight& lambda) {
  std::vector<int> c = lambda.weight().coords();
  std::vector<PositiveRoot> reversed;
  while (true) {
    auto first_negative = std::find(c.begin(), c.end(), -1);
    if (first_negative == c.end()) break;
    auto last_positive = std::find_if(std::make_reverse_iterator(first_negative), c.rend(), [](int x) { return x > 0; });
    const int from = static_cast<int>(std::distance(last_positive, c.rend()));
    const int to = static_cast<int>(std::distance(c.begin(), first_negative)) + 1;
    reversed.push_back({from, to});
    c[static_cast<std::size_t>(from - 1)] -= 1;
    c[static_cast<std::size_t>(to - 1)] += 1;
  }
  return {reversed.rbegin(), reversed.rend()};
}

IndexSet height_set(const QuasiDominantWeight& lambda) {
  IndexSet s;
  for (const auto& beta : canonical_expression(lambda)) s.insert(beta.height());
  return s;
}

std::vector<int> height_vector(const QuasiDominantWeight& lambda) {
  const IndexSet s = height_set(lambda);
  return {s.rbegin(), s.rend()};
}

QuasiDominantWeight height_set_inverse(const IndexSet& s, int rank) {
  if (rank < 1) throw InputError("rank must be >= 1");
  for (int x : s)
    if (x < 1 || x > rank) throw InputError("height set element outside [n]");
  const int n = rank;
  const int big_n = static_cast<int>(s.size());
  std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
  int i = 1;
  for (auto it = s.rbegin(); it != s.rend(); ++it, ++i) c[static_cast<std::size_t>(n + 2 - i - *it - 1)] += 1;
  for (int k = n + 2 - big_n; k <= n + 1; ++k) c[static_cast<std::size_t>(k - 1)] = -1;
  return QuasiDominantWeight(Weight(std::move(c)));
}

std::vector<QuasiDominantWeight> quasi_dominant_weights(int rank) {
  std::vector<QuasiDominantWeight> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    IndexSet s;
    for (int b = 0; b < rank; ++b)
      if (mask & (1u << b)) s.insert(b + 1);
    out.push_back(height_set_inverse(s, rank));
  }
  return out;
}

WeightFunction monomial_quasisym(const QuasiDominantWeight& lambda) {
  WeightFunction f;
  for (const Weight& mu : local_orbit(lambda.weight())) f.add(mu, LaurentPolynomial::constant(1));
  return f;
}

namespace {

void for_each_subset(const IndexSet& s, const std::function<void(const IndexSet&)>& f) {
  const std::vector<int> elems(s.begin(), s.end());
  for (unsigned mask = 0; mask < (1u << elems.size()); ++mask) {
    IndexSet sub;
    for (std::size_t b = 0; b < elems.size(); ++b)
      if (mask & (1u << b)) sub.insert(elems[b]);
    f(sub);
  }
}

}  // namespace

WeightFunction fundamental_quasisym(const QuasiDominantWeight& lambda) {
  WeightFunction f;
  for_each_subset(height_set(lambda), [&](const IndexSet& sub) {
    f += monomial_quasisym(height_set_inverse(sub, lambda.rank()));
  });
  return f;
}

LaurentPolynomial pair_monomial(const QuasiDominantWeight& lambda) {
  const LaurentPolynomial orbit_sum = inner_with_one(monomial_quasisym(lambda));

  std::vector<int> negated = height_vector(lambda);
  for (int& x : negated) x = -x;
  const LaurentPolynomial closed = one_minus_t_set(negated).shifted(height(lambda.weight()));
  if (orbit_sum != closed)
    throw VerificationError("<1, M> mismatch at " + lambda.weight().to_string() + ": orbit sum " +
                            orbit_sum.to_string() + " vs closed form " + closed.to_string());

  const std::vector<int> hv = height_vector(lambda);
  if (t_set_minus_one(hv) != closed)
    throw VerificationError("<1, M> differs from (t^Ht - 1) at " + lambda.weight().to_string());
  return orbit_sum;
}

LaurentPolynomial pair_fundamental(const QuasiDominantWeight& lambda) {
  LaurentPolynomial sum;
  for_each_subset(height_set(lambda), [&](const IndexSet& sub) {
    sum += pair_monomial(height_set_inverse(sub, lambda.rank()));
  });
  const LaurentPolynomial expected = LaurentPolynomial::monomial(height(lambda.weight()));
  if (sum != expected)
    throw VerificationError("<1, Q> at " + lambda.weight().to_string() + " is " + sum.to_string() + ", expected " +
                            expected.to_string());
  return sum;
}

std::map<QuasiDominantWeight, Integer> quasi_weight_expansion(const Weight& lambda) {
  require_first_layer_dominant(lambda);
  const int n = lambda.rank();
  const Partition shape(phi_weight(lambda).parts());
  std::map<QuasiDominantWeight, Integer> out;
  for (const auto& t : syt_enumerate(shape)) out[height_set_inverse(phi_set(descent_set(t), n), n)] += 1;
  return out;
}

}  // namespace genexp
