#pragma once

#include "genexp/laurent.hpp"
#include "genexp/weight.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genexp {

enum class Method { Weights, Signed, QuasiWeights, Tableaux, Charge, HesselinkPeterson };

std::string_view method_name(Method m);
/// Accepts the names printed by method_name: weights, signed, quasiweights,
/// tableaux, charge, hp.
Method parse_method(std::string_view name);
const std::vector<Method>& all_methods();

/// Sum over weights of V_lambda of m_{lambda mu} c_mu(t).
LaurentPolynomial exponents_by_weights(const Weight& lambda);

/// Net signed count (h_even(i) - h_odd(i)) at every i reached, i included
/// even when outside [1, ht(lambda)].
std::map<int, Integer> signed_counts(const Weight& lambda);
/// sum_{i=1}^{ht(lambda)} (h_even(i) - h_odd(i)) t^i.  Returns 1 for the zero
/// weight, whose sum range is empty.
LaurentPolynomial exponents_by_signed_count(const Weight& lambda);

/// Sum over quasi-weights of q_{lambda mu} t^ht(mu).
LaurentPolynomial exponents_by_quasiweights(const Weight& lambda);
/// Sum over SYT(lambda + 1) of t^ht(T).
LaurentPolynomial exponents_by_tableaux(const Weight& lambda);
/// Sum over SYT(lambda + 1) of t^ch(T).
LaurentPolynomial exponents_by_charge(const Weight& lambda);

/// Default rank cap for the Hesselink-Peterson oracle; GENEXP_HP_CAP overrides.
int default_hp_cap();

/// t-analogue Kostant partition function on the root lattice, tabulated on
/// the box [0, bound] in simple-root coordinates.
class KostantPartitionFunction {
 public:
  KostantPartitionFunction(int rank, std::vector<int> bound);
  /// P_t(gamma); zero when gamma is not a non-negative root-lattice combination.
  LaurentPolynomial operator()(const std::vector<int>& gamma) const;

 private:
  std::size_t index(const std::vector<int>& simple_coords) const;
  int rank_;
  std::vector<int> bound_;
  std::vector<LaurentPolynomial> table_;
};

/// sum_{w in S_{n+1}} sign(w) P_t(w(lambda + rho) - rho), rho = (n, ..., 1, 0).
LaurentPolynomial exponents_hp_oracle(const Weight& lambda, int rank_cap);
inline LaurentPolynomial exponents_hp_oracle(const Weight& lambda) {
  return exponents_hp_oracle(lambda, default_hp_cap());
}

LaurentPolynomial compute_exponents(const Weight& lambda, Method method, int hp_cap);

struct Disagreement {
  Method first;
  Method second;
  int exponent;
  Integer first_coefficient;
  Integer second_coefficient;
  std::string describe() const;
};

struct ExponentReport {
  Weight lambda;
  std::map<Method, LaurentPolynomial> polynomials;
  bool agreement = false;
  std::optional<Disagreement> disagreement;
  /// Sorted e_1 <= ... <= e_v, from the agreed polynomial.
  std::vector<int> exponents;
  /// dim V_lambda(0) = K_{lambda+1, 1^{n+1}}.
  Integer zero_weight_dimension;
  bool normalization_ok = false;
  bool nonnegative = false;
};

/// Runs the requested methods, compares them, and checks the value at t = 1
/// against the Kostka number.  Methods requiring more rank than allowed
/// (hp above hp_cap) are skipped.
ExponentReport full_report(const Weight& lambda, const std::vector<Method>& methods, int hp_cap);

}  // namespace genexp
