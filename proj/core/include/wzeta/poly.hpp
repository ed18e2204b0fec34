// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "wzeta/numeric.hpp"

namespace wzeta {

/// Exact bivariate polynomial over Q in the variables (n, x). The second
/// variable doubles as k in WZ terms; the printer and parser accept either
/// name. No zero coefficient is ever stored.
class Poly2 {
 public:
  /// (degree in n, degree in x)
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, BigRational>;

  Poly2() = default;
  Poly2(const BigRational& c);  // NOLINT(google-explicit-constructor): constants promote
  Poly2(long c) : Poly2(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly2 monomial(int deg_n, int deg_x, const BigRational& coeff = 1);
  static Poly2 n() { return monomial(1, 0); }
  static Poly2 x() { return monomial(0, 1); }
  /// c0 + cn*n + cx*x
  static Poly2 affine(const BigRational& c0, const BigRational& cn, const BigRational& cx);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  int degree_n() const noexcept;
  int degree_x() const noexcept;
  BigRational coefficient(int deg_n, int deg_x) const;
  const TermMap& terms() const noexcept { return terms_; }

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);
  Poly2& operator*=(const BigRational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
  friend Poly2 operator-(Poly2 a) { return a *= BigRational(-1); }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  Poly2 pow(unsigned e) const;

  /// p(n_by(n,x), x_by(n,x)).
  Poly2 substitute(const Poly2& n_by, const Poly2& x_by) const;
  /// Fixes x, leaving a polynomial in n alone.
  Poly2 at_x(const BigRational& x) const;

  BigRational operator()(const BigRational& n, const BigRational& x) const;
  BigReal operator()(const BigRational& n, const BigReal& x) const;

  /// Human-readable form such as "21*n^3 + 2*k^3 - 8".
  std::string to_string(char n_name = 'n', char x_name = 'x') const;

 private:
  void add_term(const Exponent& e, const BigRational& c);

  TermMap terms_;
};

/// Parses an expression over n and x (k is accepted for x) with +, -, *, ^,
/// parentheses, integer and p/q literals. Multiplication must be explicit.
Poly2 parse_poly(std::string_view text);

/// Quotient of two Poly2; the denominator is never the zero polynomial.
class RationalFunction2 {
 public:
  RationalFunction2() : num_(0), den_(1) {}
  RationalFunction2(Poly2 numerator, Poly2 denominator);
  RationalFunction2(const Poly2& p) : RationalFunction2(p, Poly2(1)) {}  // NOLINT

  const Poly2& numerator() const noexcept { return num_; }
  const Poly2& denominator() const noexcept { return den_; }

  RationalFunction2 substitute(const Poly2& n_by, const Poly2& x_by) const;

  friend RationalFunction2 operator*(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator/(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator+(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator-(const RationalFunction2& a, const RationalFunction2& b);

  /// Equal as functions: a.num * b.den == b.num * a.den.
  bool equivalent(const RationalFunction2& other) const;

  std::string to_string(char n_name = 'n', char x_name = 'x') const;

 private:
  Poly2 num_;
  Poly2 den_;
};

/// Exact evaluation; throws PoleError where the denominator vanishes.
BigRational rf2_eval(const RationalFunction2& f, const BigRational& n, const BigRational& x);
/// Evaluation at real x; throws PoleError on an exactly-zero denominator.
BigReal rf2_eval(const RationalFunction2& f, const BigRational& n, const BigReal& x);

}  // namespace wzeta
