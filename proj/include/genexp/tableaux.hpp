#pragma once

#include "genexp/laurent.hpp"
#include "genexp/weight.hpp"

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genexp {

/// Subset of [K] = {1..K}, kept sorted.
using IndexSet = std::set<int>;

class Partition {
 public:
  /// Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// "4,3,1"
Partition parse_partition(std::string_view text);

/// All partitions of m in reverse lexicographic order, (m) first.
std::vector<Partition> partitions_of(int m);

class Composition {
 public:
  /// Parts must be positive.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int total() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// co(S) for S a subset of [K]: (s_1, s_2 - s_1, ..., K+1 - s_l).
Composition co(const IndexSet& s, int k);
/// Partial sums of all but the last part.
IndexSet co_inverse(const Composition& a);

/// Complement of A inside [n].
IndexSet complement(const IndexSet& a, int n);
/// phi(A) = (n+1) - complement(A); an order-reversing involution of P([n]).
IndexSet phi_set(const IndexSet& a, int n);

/// lambda + 1 truncated to its positive entries, for lambda quasi-dominant
/// (all -1 entries rightmost).
Composition phi_weight(const Weight& lambda);
/// Inverse of phi_weight: pad with zeros to length n+1 and subtract 1.
Weight composition_to_weight(const Composition& a, int rank);

/// Standard Young tableau, English notation: rows[0] is the top row.
class StandardTableau {
 public:
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const { return size_; }
  /// 0-based row containing value v.
  int row_of(int v) const { return row_of_[static_cast<std::size_t>(v - 1)]; }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
  int size_ = 0;
};

/// All SYT of the given shape.  Values 1, 2, ... are placed in turn, trying
/// rows top to bottom, so the output is lexicographic in the row sequence.
std::vector<StandardTableau> syt_enumerate(const Partition& p);

/// i is a descent when i+1 sits in a strictly lower row than i.
IndexSet descent_set(const StandardTableau& t);
/// Sum over non-descents a in [n] of (n+1-a), where n+1 = |T|.
int tableau_height(const StandardTableau& t);

/// Rows from the top, each read right to left.
std::vector<int> reading_word(const StandardTableau& t);
/// Charge of a permutation of 1..m: i contributes m-(i-1) when it appears
/// to the left of i-1, and 0 otherwise.
int charge(std::span<const int> word);
int charge(const StandardTableau& t);

using SemistandardTableau = std::vector<std::vector<int>>;

/// All SSYT of the given shape with entries in [max_entry].
std::vector<SemistandardTableau> ssyt_enumerate(const Partition& p, int max_entry);

/// Number of SSYT of the given shape and content.  Content entries may be
/// zero; the result is symmetric in the content.
Integer kostka_number(const Partition& shape, std::span<const int> content);

/// Multiset {co(Des(T)) : T in SYT(p)} with K = |p| - 1.
std::map<Composition, int> schur_fundamental_expansion(const Partition& p);

}  // namespace genexp
