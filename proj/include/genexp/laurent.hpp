#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>

namespace genexp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer-coefficient Laurent polynomial in one variable t.
///
/// Stored as a sparse map exponent -> coefficient.  Zero coefficients are
/// never stored, so two polynomials are equal exactly when their maps are,
/// and the zero polynomial is the empty map.
class LaurentPolynomial {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::initializer_list<std::pair<const int, Integer>> terms);

  static LaurentPolynomial constant(const Integer& c);
  static LaurentPolynomial monomial(int exponent, const Integer& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(int exponent) const;

  // Only meaningful for non-zero polynomials.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const Integer& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);

  friend LaurentPolynomial operator+(LaurentPolynomial p, const LaurentPolynomial& q) { return p += q; }
  friend LaurentPolynomial operator-(LaurentPolynomial p, const LaurentPolynomial& q) { return p -= q; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator-(const LaurentPolynomial& p);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Multiply by t^k.
  LaurentPolynomial shifted(int k) const;

  /// Value at t = 1, i.e. the sum of the coefficients.
  Integer evaluate_at_one() const;
  Rational evaluate(const Rational& t) const;

  /// Ascending-exponent rendering, e.g. "-1 + t", "t + 2t^2", "1 - t^-3".
  std::string to_string() const;

 private:
  TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
Integer evaluate_at_one(const LaurentPolynomial& p);

/// (1 - t^S): 1 for empty S, otherwise the product of (1 - t^min(0, s)).
/// Any s >= 0 contributes the factor 1 - t^0 = 0.
LaurentPolynomial one_minus_t_set(std::span<const int> s);

/// (t^S - 1): 1 for empty S, otherwise the product of (t^s - 1) with the
/// exponents taken as given.
LaurentPolynomial t_set_minus_one(std::span<const int> s);

}  // namespace genexp
