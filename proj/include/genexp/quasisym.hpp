#pragma once

#include "genexp/fourier.hpp"
#include "genexp/laurent.hpp"
#include "genexp/tableaux.hpp"
#include "genexp/weight.hpp"

#include <map>
#include <vector>

namespace genexp {

/// First-layer weight whose -1 coordinates are all rightmost; the maximal
/// height element of its local orbit.
class QuasiDominantWeight {
 public:
  explicit QuasiDominantWeight(Weight w);

  const Weight& weight() const { return weight_; }
  int rank() const { return weight_.rank(); }

  friend auto operator<=>(const QuasiDominantWeight&, const QuasiDominantWeight&) = default;
  friend bool operator==(const QuasiDominantWeight&, const QuasiDominantWeight&) = default;

 private:
  Weight weight_;
};

bool is_quasi_dominant(const Weight& w);

/// e_from - e_to with from < to.
struct PositiveRoot {
  int from;
  int to;
  int height() const { return to - from; }
  friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

/// s_i . lambda: identity when lambda_i, lambda_{i+1} >= 0, else the usual swap.
Weight local_act(int i, const Weight& lambda);

/// Local orbit, sorted.  Built by choosing positions for the -1 entries while
/// keeping the non-negative entries in their original order.
std::vector<Weight> local_orbit(const Weight& lambda);

QuasiDominantWeight quasi_dominant_representative(const Weight& lambda);

/// (beta_1, ..., beta_N) with strictly decreasing heights; beta_N joins the
/// rightmost positive coordinate to the leftmost -1.
std::vector<PositiveRoot> canonical_expression(const QuasiDominantWeight& lambda);

IndexSet height_set(const QuasiDominantWeight& lambda);
/// Height set in decreasing order.
std::vector<int> height_vector(const QuasiDominantWeight& lambda);

/// The unique quasi-dominant weight of rank n with the given height set.
QuasiDominantWeight height_set_inverse(const IndexSet& s, int rank);

/// Every quasi-dominant weight of rank n, one per subset of [n].
std::vector<QuasiDominantWeight> quasi_dominant_weights(int rank);

/// M_lambda: indicator of the local orbit.
WeightFunction monomial_quasisym(const QuasiDominantWeight& lambda);
/// Q_lambda = sum of M_mu over Ht(mu) contained in Ht(lambda).
WeightFunction fundamental_quasisym(const QuasiDominantWeight& lambda);

/// <1, M_lambda>_t, summed over the local orbit and checked against
/// t^ht(lambda) (1 - t^{-ht vector}).  Throws VerificationError on mismatch.
LaurentPolynomial pair_monomial(const QuasiDominantWeight& lambda);
/// <1, Q_lambda>_t, checked to equal t^ht(lambda).
LaurentPolynomial pair_fundamental(const QuasiDominantWeight& lambda);

/// chi_lambda = sum q_{lambda mu} Q_mu, read off from SYT(lambda + 1):
/// each tableau T contributes Ht^-1(phi(Des(T))).
std::map<QuasiDominantWeight, Integer> quasi_weight_expansion(const Weight& lambda);

}  // namespace genexp
