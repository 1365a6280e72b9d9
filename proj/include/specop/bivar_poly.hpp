#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace specop {

using Rational = mpq_class;

// Exact bivariate polynomial in (x, t) with arbitrary-precision rational
// coefficients. Zero coefficients are never stored.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;  // (deg_x, deg_t)

  BivarPoly() = default;  // zero polynomial
  BivarPoly(int i) { add_term(Rational(i), 0, 0); }  // NOLINT: scalar literal

  static BivarPoly constant(const Rational& c);
  static BivarPoly monomial(const Rational& c, int deg_x, int deg_t);
  static BivarPoly var_x() { return monomial(1, 1, 0); }
  static BivarPoly var_t() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;  // -1 for the zero polynomial
  int degree_t() const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int deg_x, int deg_t) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator-() const;
  BivarPoly& operator*=(const Rational& s);
  friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }

  bool operator==(const BivarPoly&) const = default;

  // x -> x + c * t
  BivarPoly shift_x_by_t(const Rational& c) const;
  // x -> -x
  BivarPoly negate_x() const;
  // t -> t0
  BivarPoly at_t(const Rational& t0) const;
  Rational eval(const Rational& x, const Rational& t) const;
  double eval_double(double x, double t) const;

  // Terms `c*x^a*t^b` sorted by (a desc, b asc), rationals as p/q.
  std::string str() const;

  void add_term(const Rational& c, int deg_x, int deg_t);

 private:
  std::map<Key, Rational> terms_;
};

// Exact x-major quotient num / den, or nullopt when the division leaves a
// remainder (equivalently, den does not divide num over Q[x, t]).
std::optional<BivarPoly> exact_quotient(const BivarPoly& num, const BivarPoly& den);

}  // namespace specop
