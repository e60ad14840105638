#include "genexp/tableaux.hpp"

#include "genexp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace genexp {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive: " + join(parts_));
    if (i && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing: " + join(parts_));
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const { return join(parts_); }

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("cannot parse partition: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw InputError("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x <= 0) throw InputError("composition parts must be positive: " + join(parts_));
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const { return join(parts_); }

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  for (int i = 1; p.length() > 0 && i <= p.part(1); ++i) {
    int count = 0;
    for (int r : p.parts()) count += (r >= i);
    cols.push_back(count);
  }
  return Partition(std::move(cols));
}

Composition co(const IndexSet& s, int k) {
  if (k < 0) throw InputError("co: K must be non-negative");
  std::vector<int> parts;
  int prev = 0;
  for (int x : s) {
    if (x < 1 || x > k) throw InputError("co: element " + std::to_string(x) + " outside [" + std::to_string(k) + "]");
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(k + 1 - prev);
  return Composition(std::move(parts));
}

IndexSet co_inverse(const Composition& a) {
  IndexSet out;
  int sum = 0;
  for (int i = 0; i + 1 < a.length(); ++i) {
    sum += a.parts()[static_cast<std::size_t>(i)];
    out.insert(sum);
  }
  return out;
}

IndexSet complement(const IndexSet& a, int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i)
    if (!a.contains(i)) out.insert(i);
  return out;
}

IndexSet phi_set(const IndexSet& a, int n) {
  for (int x : a)
    if (x < 1 || x > n) throw InputError("phi: element outside [n]");
  IndexSet out;
  for (int x : complement(a, n)) out.insert(n + 1 - x);
  return out;
}

Composition phi_weight(const Weight& lambda) {
  require_first_layer(lambda);
  std::vector<int> parts;
  bool seen_negative = false;
  for (int x : lambda.coords()) {
    if (x == -1) {
      seen_negative = true;
    } else if (seen_negative) {
      throw InputError("phi: -1 entries must be rightmost: " + lambda.to_string());
    } else {
      parts.push_back(x + 1);
    }
  }
  return Composition(std::move(parts));
}

Weight composition_to_weight(const Composition& a, int rank) {
  if (a.total() != rank + 1 || a.length() > rank + 1)
    throw InputError("composition " + a.to_string() + " is not a composition of " + std::to_string(rank + 1));
  std::vector<int> c(static_cast<std::size_t>(rank + 1), -1);
  for (int i = 0; i < a.length(); ++i) c[static_cast<std::size_t>(i)] = a.parts()[static_cast<std::size_t>(i)] - 1;
  return Weight(std::move(c));
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& r : rows_) {
    if (r.empty()) throw InputError("tableau rows must be non-empty");
    lengths.push_back(static_cast<int>(r.size()));
    size_ += static_cast<int>(r.size());
  }
  Partition shape_check(lengths);
  row_of_.assign(static_cast<std::size_t>(size_), -1);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > size_ || row_of_[static_cast<std::size_t>(v - 1)] != -1)
        throw InputError("tableau entries must be a permutation of 1..size");
      row_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(r);
      if (c > 0 && rows_[r][c - 1] >= v) throw InputError("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw InputError("tableau columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> lengths;
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  return Partition(std::move(lengths));
}

std::vector<StandardTableau> syt_enumerate(const Partition& p) {
  const int m = p.size();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(p.length()));
  std::function<void(int)> rec = [&](int v) {
    if (v > m) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto len = rows[r].size();
      if (static_cast<int>(len) >= p.parts()[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(v);
      rec(v + 1);
      rows[r].pop_back();
    }
  };
  if (m == 0) return out;
  rec(1);
  return out;
}

IndexSet descent_set(const StandardTableau& t) {
  IndexSet des;
  for (int i = 1; i < t.size(); ++i)
    if (t.row_of(i + 1) > t.row_of(i)) des.insert(i);
  return des;
}

int tableau_height(const StandardTableau& t) {
  const int n = t.size() - 1;
  int h = 0;
  for (int a : complement(descent_set(t), n)) h += n + 1 - a;
  return h;
}

std::vector<int> reading_word(const StandardTableau& t) {
  std::vector<int> w;
  for (const auto& row : t.rows()) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

int charge(std::span<const int> word) {
  const int m = static_cast<int>(word.size());
  std::vector<int> pos(static_cast<std::size_t>(m), -1);
  for (int k = 0; k < m; ++k) {
    int v = word[static_cast<std::size_t>(k)];
    if (v < 1 || v > m || pos[static_cast<std::size_t>(v - 1)] != -1)
      throw InputError("charge is defined here for permutations only");
    pos[static_cast<std::size_t>(v - 1)] = k;
  }
  int ch = 0;
  for (int i = 2; i <= m; ++i)
    if (pos[static_cast<std::size_t>(i - 1)] < pos[static_cast<std::size_t>(i - 2)]) ch += m - (i - 1);
  return ch;
}

int charge(const StandardTableau& t) {
  const auto w = reading_word(t);
  return charge(std::span<const int>(w));
}

std::vector<SemistandardTableau> ssyt_enumerate(const Partition& p, int max_entry) {
  std::vector<SemistandardTableau> out;
  SemistandardTableau rows;
  for (int len : p.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) cells.emplace_back(r, c);

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(rows);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    // Column below needs room for strictly larger entries.
    int below = 0;
    for (std::size_t rr = r + 1; rr < rows.size() && rows[rr].size() > c; ++rr) ++below;
    for (int v = lo; v <= max_entry - below; ++v) {
      rows[r][c] = v;
      rec(k + 1);
    }
    rows[r][c] = 0;
  };
  rec(0);
  return out;
}

Integer kostka_number(const Partition& shape, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw InputError("kostka_number: content entries must be non-negative");
    total += c;
  }
  if (total != shape.size()) throw InputError("kostka_number: |shape| != sum of content");

  // Each value fills a horizontal strip on top of the cells used so far;
  // a completed chain of strips is one SSYT.
  std::vector<int> filled(static_cast<std::size_t>(shape.length()), 0);
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  std::function<Integer(std::size_t)> count = [&](std::size_t v) -> Integer {
    if (v == content.size()) return 1;
    auto key = std::make_pair(v, filled);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Integer result = 0;
    const std::vector<int> before = filled;
    std::function<void(std::size_t, int)> place = [&](std::size_t row, int remaining) {
      if (row == filled.size()) {
        if (remaining == 0) result += count(v + 1);
        return;
      }
      int cap = shape.parts()[row];
      if (row > 0) cap = std::min(cap, before[row - 1]);
      for (int add = 0; add <= std::min(remaining, cap - before[row]); ++add) {
        filled[row] = before[row] + add;
        place(row + 1, remaining - add);
      }
      filled[row] = before[row];
    };
    place(0, content[v]);
    memo.emplace(std::move(key), result);
    return result;
  };
  return count(0);
}

std::map<Composition, int> schur_fundamental_expansion(const Partition& p) {
  std::map<Composition, int> out;
  const int k = p.size() - 1;
  for (const auto& t : syt_enumerate(p)) ++out[co(descent_set(t), k)];
  return out;
}

}  // namespace genexp
