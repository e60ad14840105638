#pragma once

#include "genexp/exponents.hpp"

#include <set>
#include <string>
#include <vector>

namespace genexp {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::size_t cases = 0;
  double seconds = 0.0;
  /// First counterexample, or the reason for skipping.
  std::string detail;
};

struct VerifyOptions {
  /// Check names or method names to leave out.
  std::set<std::string> skip;
  int hp_cap = 5;
  int solver_cap = 7;
};

/// Names of the checks run by verify_rank, in order.
const std::vector<std::string>& check_names();

/// Runs every invariant at rank n:
///   fourier-system       closed form == solver on all first-layer weights
///   height-set-bijection Ht and Ht^-1 are mutually inverse on P([n])
///   commutation          phi(Ht^-1(phi(A))) == co(A) on P([n])
///   pair-monomial        <1, M_lambda> identity on all quasi-dominant weights
///   pair-fundamental     <1, Q_lambda> == t^ht(lambda)
///   charge-height        ht(T) == ch(T) on every SYT of size n+1
///   methods              all enabled methods agree, are non-negative and
///                        evaluate to #SYT(lambda+1) at t = 1
std::vector<CheckResult> verify_rank(int rank, const VerifyOptions& options);

}  // namespace genexp
