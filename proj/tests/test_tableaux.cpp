#include "genexp/errors.hpp"
#include "genexp/tableaux.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using genexp::Composition;
using genexp::IndexSet;
using genexp::Partition;
using genexp::StandardTableau;

namespace {

const StandardTableau kT1({{1, 2, 6, 8}, {3, 4, 7}, {5}});
const StandardTableau kT2({{1, 2, 4, 6}, {3, 7, 8}, {5}});

std::vector<IndexSet> subsets(int n) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet s;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) s.insert(b + 1);
    out.push_back(s);
  }
  return out;
}

StandardTableau single_row(int m) {
  std::vector<int> row(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) row[static_cast<std::size_t>(i)] = i + 1;
  return StandardTableau({row});
}

StandardTableau single_column(int m) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= m; ++i) rows.push_back({i});
  return StandardTableau(rows);
}

}  // namespace

TEST_CASE("partition validation and parsing") {
  CHECK(genexp::parse_partition("4,3,1") == Partition({4, 3, 1}));
  CHECK_THROWS_AS(genexp::parse_partition("1,2"), genexp::InputError);
  CHECK_THROWS_AS(genexp::parse_partition("3,0"), genexp::InputError);
  CHECK_THROWS_AS(genexp::parse_partition("3,,1"), genexp::InputError);
  CHECK(genexp::partitions_of(4).size() == 5);
  CHECK(genexp::partitions_of(8).size() == 22);
  CHECK(genexp::partitions_of(4).front() == Partition({4}));
}

TEST_CASE("conjugate") {
  CHECK(genexp::conjugate(Partition({4, 3, 1})) == Partition({3, 2, 2, 1}));
  CHECK(genexp::conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  for (int m = 1; m <= 8; ++m)
    for (const Partition& p : genexp::partitions_of(m)) CHECK(genexp::conjugate(genexp::conjugate(p)) == p);
}

TEST_CASE("co and its inverse") {
  CHECK(genexp::co({2, 4, 6}, 7) == Composition({2, 2, 2, 2}));
  CHECK(genexp::co({}, 7) == Composition({8}));
  CHECK_THROWS_AS(genexp::co({8}, 7), genexp::InputError);
  CHECK_THROWS_AS(genexp::co({0}, 7), genexp::InputError);
  for (int k = 0; k <= 8; ++k) {
    for (const IndexSet& s : subsets(k)) {
      const Composition a = genexp::co(s, k);
      CHECK(a.total() == k + 1);
      CHECK(genexp::co_inverse(a) == s);
    }
  }
}

TEST_CASE("phi on subsets") {
  CHECK(genexp::phi_set({2, 4, 6}, 7) == IndexSet{1, 3, 5, 7});
  for (int n = 1; n <= 6; ++n) {
    const auto all = subsets(n);
    for (const IndexSet& a : all) {
      CHECK(genexp::phi_set(genexp::phi_set(a, n), n) == a);
      for (const IndexSet& b : all) {
        if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
        const IndexSet pa = genexp::phi_set(a, n);
        const IndexSet pb = genexp::phi_set(b, n);
        CHECK(std::includes(pa.begin(), pa.end(), pb.begin(), pb.end()));
      }
    }
  }
}

TEST_CASE("phi on quasi-dominant weights") {
  CHECK(genexp::phi_weight(genexp::Weight::zero(4)) == Composition({1, 1, 1, 1, 1}));
  CHECK(genexp::phi_weight(genexp::Weight({1, 0, -1})) == Composition({2, 1}));
  CHECK(genexp::phi_weight(genexp::parse_weight("0,2,0,1,0,0,-1,-1,-1")) == Composition({1, 3, 1, 2, 1, 1}));
  CHECK_THROWS_AS(genexp::phi_weight(genexp::Weight({-1, 1})), genexp::InputError);
  CHECK(genexp::composition_to_weight(Composition({1, 3, 1, 2, 1, 1}), 8) ==
        genexp::parse_weight("0,2,0,1,0,0,-1,-1,-1"));
  CHECK_THROWS_AS(genexp::composition_to_weight(Composition({2, 2}), 2), genexp::InputError);
}

TEST_CASE("syt enumeration matches the hook length formula") {
  CHECK(genexp::syt_enumerate(Partition({2, 1})).size() == 2);
  CHECK(genexp::syt_enumerate(Partition({6})).size() == 1);
  CHECK(genexp::syt_enumerate(Partition({4, 3, 1})).size() == 70);
  for (int m = 1; m <= 8; ++m) {
    for (const Partition& p : genexp::partitions_of(m)) {
      const auto tableaux = genexp::syt_enumerate(p);
      CHECK(oracle::hook_length_count(p.parts()) == tableaux.size());
      for (std::size_t i = 0; i < tableaux.size(); ++i) {
        CHECK(tableaux[i].shape() == p);
        for (std::size_t j = i + 1; j < tableaux.size(); ++j) CHECK_FALSE(tableaux[i] == tableaux[j]);
      }
    }
  }
  // Deterministic order.
  CHECK(genexp::syt_enumerate(Partition({2, 1})).front() == StandardTableau({{1, 2}, {3}}));
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 4, 5}}), genexp::InputError);
  CHECK_THROWS_AS(StandardTableau({{2, 1}}), genexp::InputError);
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {1}}), genexp::InputError);
  CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 4}, {6}}), genexp::InputError);
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {3, 4}, {}}), genexp::InputError);
}

TEST_CASE("descent sets of the two shape (4,3,1) tableaux") {
  CHECK(genexp::descent_set(kT1) == IndexSet{2, 4, 6});
  CHECK(genexp::descent_set(kT2) == IndexSet{2, 4, 6});
  CHECK(genexp::descent_set(single_row(5)).empty());
}

TEST_CASE("tableau height") {
  CHECK(genexp::tableau_height(kT1) == 16);
  CHECK(genexp::tableau_height(kT2) == 16);
  for (int m = 1; m <= 8; ++m) {
    const int n = m - 1;
    CHECK(genexp::tableau_height(single_row(m)) == n * (n + 1) / 2);
    CHECK(genexp::tableau_height(single_column(m)) == 0);
  }
}

TEST_CASE("reading word and charge") {
  CHECK(genexp::reading_word(kT1) == std::vector<int>{8, 6, 2, 1, 7, 4, 3, 5});
  CHECK(genexp::charge(kT1) == 16);
  CHECK(genexp::charge(kT2) == 16);
  for (int m = 1; m <= 8; ++m) {
    const int n = m - 1;
    CHECK(genexp::charge(single_column(m)) == 0);
    CHECK(genexp::charge(single_row(m)) == n * (n + 1) / 2);
  }
  const int not_a_permutation[] = {1, 1, 2};
  CHECK_THROWS_AS(genexp::charge(not_a_permutation), genexp::InputError);
}

TEST_CASE("height equals charge on every standard tableau up to size 8") {
  for (int m = 1; m <= 8; ++m)
    for (const Partition& p : genexp::partitions_of(m))
      for (const auto& t : genexp::syt_enumerate(p)) CHECK(genexp::tableau_height(t) == genexp::charge(t));
}

TEST_CASE("kostka numbers") {
  const int c111[] = {1, 1, 1};
  const int c21[] = {2, 1};
  CHECK(genexp::kostka_number(Partition({2, 1}), c111) == 2);
  CHECK(genexp::kostka_number(Partition({2, 1}), c21) == 1);
  for (int m = 1; m <= 7; ++m)
    for (const Partition& p : genexp::partitions_of(m)) CHECK(genexp::kostka_number(p, p.parts()) == 1);

  const int wrong_size[] = {1, 1};
  CHECK_THROWS_AS(genexp::kostka_number(Partition({2, 1}), wrong_size), genexp::InputError);
  const int negative[] = {4, -1};
  CHECK_THROWS_AS(genexp::kostka_number(Partition({2, 1}), negative), genexp::InputError);
}

TEST_CASE("kostka numbers agree with brute-force SSYT counts and are symmetric in the content") {
  for (int m = 1; m <= 6; ++m) {
    for (const Partition& p : genexp::partitions_of(m)) {
      genexp::Integer total = 0;
      for (const auto& [content, count] : oracle::brute_force_ssyt_contents(p.parts(), m)) {
        CHECK(genexp::kostka_number(p, content) == count);
        std::vector<int> shuffled(content);
        std::reverse(shuffled.begin(), shuffled.end());
        CHECK(genexp::kostka_number(p, shuffled) == count);
        total += count;
      }
      CHECK(total == oracle::hook_content_dimension(p.parts(), m));
      CHECK(genexp::ssyt_enumerate(p, m).size() == total);
      const std::vector<int> ones(static_cast<std::size_t>(m), 1);
      CHECK(genexp::kostka_number(p, ones) == genexp::syt_enumerate(p).size());
    }
  }
}

TEST_CASE("fundamental expansion of Schur functions") {
  const auto e21 = genexp::schur_fundamental_expansion(Partition({2, 1}));
  CHECK(e21 == std::map<Composition, int>{{Composition({1, 2}), 1}, {Composition({2, 1}), 1}});
  CHECK(genexp::schur_fundamental_expansion(Partition({5})) == std::map<Composition, int>{{Composition({5}), 1}});
  CHECK(genexp::schur_fundamental_expansion(Partition({4, 3, 1})).at(Composition({2, 2, 2, 2})) >= 2);
}

TEST_CASE("Schur polynomial equals the sum of fundamental quasisymmetric polynomials over SYT") {
  for (int m = 1; m <= 6; ++m) {
    for (const Partition& p : genexp::partitions_of(m)) {
      oracle::MonomialSum lhs = oracle::schur_by_ssyt(p.parts(), m);
      oracle::MonomialSum rhs;
      for (const auto& [a, mult] : genexp::schur_fundamental_expansion(p))
        for (const auto& [mono, c] : oracle::fundamental_polynomial(genexp::co_inverse(a), m, m)) rhs[mono] += c * mult;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("horizontal and vertical labels of a partition in a box are complementary") {
  for (int n = 2; n <= 8; ++n) {
    for (int big_n = 1; big_n < n; ++big_n) {
      const int rows = n - big_n;
      // Every partition with `rows` parts (zeros allowed) bounded by big_n.
      std::vector<int> lam(static_cast<std::size_t>(rows), 0);
      std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == rows) {
          std::set<int> h, v;
          for (int k = 1; k <= rows; ++k) h.insert(big_n + k - lam[static_cast<std::size_t>(k - 1)]);
          for (int j = 1; j <= big_n; ++j) {
            int dual = 0;
            for (int x : lam) dual += x >= j;
            v.insert(dual + big_n + 1 - j);
          }
          std::set<int> all(h);
          all.insert(v.begin(), v.end());
          CHECK(h.size() + v.size() == static_cast<std::size_t>(n));
          CHECK(all.size() == static_cast<std::size_t>(n));
          CHECK(*all.begin() == 1);
          CHECK(*all.rbegin() == n);
          return;
        }
        for (int x = 0; x <= cap; ++x) {
          lam[static_cast<std::size_t>(i)] = x;
          rec(i + 1, x);
        }
      };
      rec(0, big_n);
    }
  }
}
