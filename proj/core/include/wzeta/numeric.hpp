// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "wzeta/errors.hpp"

namespace wzeta {

using BigInt = mpz_class;
/// Exact rational. gmpxx keeps results of arithmetic canonical; construct
/// from a numerator/denominator pair through make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" with an optional leading minus sign.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);
/// log10 |q| to double accuracy; -inf for zero.
double log10_abs(const BigRational& q);

/// Requested decimal digits plus guard digits absorbing rounding.
class PrecisionContext {
 public:
  static constexpr int kDefaultGuard = 20;

  explicit PrecisionContext(int digits, int guard = kDefaultGuard);

  int digits() const noexcept { return digits_; }
  int guard() const noexcept { return guard_; }
  int working_digits() const noexcept { return digits_ + guard_; }
  /// Binary precision matching working_digits().
  mpfr_prec_t bits() const noexcept;

  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_); }
  PrecisionContext with_guard(int guard) const { return PrecisionContext(digits_, guard); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_;
};

/// Arbitrary-precision binary floating value. Every operation rounds to
/// nearest at the larger precision of its operands.
class BigReal {
 public:
  explicit BigReal(const PrecisionContext& ctx);
  explicit BigReal(mpfr_prec_t bits);
  BigReal(const BigRational& q, const PrecisionContext& ctx);
  BigReal(const BigRational& q, mpfr_prec_t bits);
  BigReal(long v, const PrecisionContext& ctx);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  /// log10 |x|, accurate to double precision; -inf for zero.
  double log10_abs() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Decimal rendering with exactly `digits` significant digits.
  std::string to_string(int digits) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(const BigRational& rhs);
  BigReal& operator-=(const BigRational& rhs);
  BigReal& operator*=(const BigRational& rhs);
  BigReal& operator/=(const BigRational& rhs);
  BigReal& operator*=(const BigInt& rhs);
  BigReal& operator/=(const BigInt& rhs);

  friend BigReal operator-(const BigReal& x);
  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator+(BigReal a, const BigRational& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigRational& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigRational& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigRational& b) { return a /= b; }

  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, const BigReal& b);

 private:
  void widen_to(mpfr_prec_t bits);

  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
/// x^e for integer e (e < 0 requires x != 0).
BigReal pow(const BigReal& x, long e);
/// 10^e at the given precision.
BigReal ten_to(long e, mpfr_prec_t bits);

/// True iff |x| < 10^e.
bool abs_below_ten_power(const BigReal& x, long e);

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
BigRational pochhammer(const BigRational& a, std::int64_t n);

BigReal const_pi(const PrecisionContext& ctx);
/// Square root of a positive integer.
BigReal const_sqrt(long m, const PrecisionContext& ctx);

}  // namespace wzeta
