#include "genexp/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace genexp {

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<const int, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(const Integer& c) { return monomial(0, c); }

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Integer& coeff) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& p) {
  LaurentPolynomial r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

Integer LaurentPolynomial::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Rational LaurentPolynomial::evaluate(const Rational& t) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    const Rational base = e >= 0 ? t : Rational(1) / t;
    for (int k = 0; k < std::abs(e); ++k) power *= base;
    sum += Rational(c) * power;
  }
  return sum;
}

namespace {

std::string render_monomial(int e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = render_monomial(e);
    if (mono.empty() || mag != 1) out << mag;
    out << mono;
  }
  return out.str();
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }
Integer evaluate_at_one(const LaurentPolynomial& p) { return p.evaluate_at_one(); }

LaurentPolynomial one_minus_t_set(std::span<const int> s) {
  LaurentPolynomial r = LaurentPolynomial::constant(1);
  for (int x : s) {
    if (x >= 0) return {};
    r *= LaurentPolynomial{{0, 1}, {x, -1}};
  }
  return r;
}

LaurentPolynomial t_set_minus_one(std::span<const int> s) {
  LaurentPolynomial r = LaurentPolynomial::constant(1);
  for (int x : s) r *= LaurentPolynomial::monomial(x) - LaurentPolynomial::constant(1);
  return r;
}

}  // namespace genexp
