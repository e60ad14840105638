#pragma once

#include "genexp/laurent.hpp"
#include "genexp/weight.hpp"

#include <map>

namespace genexp {

/// Finitely supported function on the root lattice: sum of f(mu) e^mu.
class WeightFunction {
 public:
  using Support = std::map<Weight, LaurentPolynomial>;

  WeightFunction() = default;

  static WeightFunction basis(const Weight& mu) {
    WeightFunction f;
    f.add(mu, LaurentPolynomial::constant(1));
    return f;
  }

  void add(const Weight& mu, const LaurentPolynomial& coeff);
  WeightFunction& operator+=(const WeightFunction& other);
  WeightFunction scaled(const LaurentPolynomial& c) const;

  const Support& support() const { return support_; }
  LaurentPolynomial at(const Weight& mu) const;
  bool empty() const { return support_.empty(); }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  Support support_;
  int rank_ = 0;
};

/// c_lambda(t) = t^ht(lambda) (1 - t^{a_lambda}) for a first-layer weight.
LaurentPolynomial c_closed_form(const Weight& lambda);

struct SolveOptions {
  int rank_cap = 7;
};

using FourierTable = std::map<Weight, LaurentPolynomial>;

/// Solves the defining linear system for the Fourier coefficients on every
/// first-layer weight of rank n, without reference to the closed form.
///
/// Dominant weights are handled in order of increasing norm.  Inside an
/// orbit, y at the dominant element is an unknown X; values are pushed down
/// the orbit through
///
///   y_{s_i mu} = t^-1 y_mu - y_{mu - alpha_i} + t^-1 y_{s_i mu + alpha_i}
///
/// for (mu, alpha_i^vee) > 0, carried as a(t) X + b(t), and X is fixed by
/// y_{s_theta lambda} = 0.  The zero weight is seeded with 1.  Every edge of
/// every orbit is followed, and two paths reaching the same weight must give
/// identical expressions; otherwise VerificationError is thrown.
FourierTable solve_system(int rank, const SolveOptions& options = {});

/// <1, f>_t = sum_mu f(mu) c_mu(t) for f supported on first-layer weights.
LaurentPolynomial inner_with_one(const WeightFunction& f);

}  // namespace genexp
