// SPDX-License-Identifier: Apache-2.0
// Reference values computed without any series from the library under test.
#pragma once

#include <mpfr.h>

#include <random>
#include <string>

#include "wzeta/dirichlet.hpp"
#include "wzeta/numeric.hpp"
#include "wzeta/poly.hpp"

namespace oracle {

using wzeta::BigInt;
using wzeta::BigRational;
using wzeta::BigReal;
using wzeta::PrecisionContext;

/// pi by Machin's formula in scaled integer arithmetic.
inline BigReal machin_pi(const PrecisionContext& ctx) {
  const unsigned long digits = static_cast<unsigned long>(ctx.working_digits()) + 10;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  auto arctan_inv = [&scale](long x) {
    // sum_k (-1)^k / ((2k+1) x^(2k+1)), scaled
    BigInt power = scale / x;
    BigInt sum = power;
    const long x2 = x * x;
    for (long k = 1; power != 0; ++k) {
      power /= x2;
      const BigInt term = power / (2 * k + 1);
      if (k % 2 == 1) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    return sum;
  };
  const BigInt pi_scaled = 16 * arctan_inv(5) - 4 * arctan_inv(239);
  return BigReal(wzeta::make_rational(pi_scaled, scale), ctx);
}

/// Catalan's constant sum_k (-1)^k/(2k+1)^2 by the Cohen-Villegas-Zagier
/// alternating-series acceleration.
inline BigReal catalan_cvz(const PrecisionContext& ctx) {
  const long n = static_cast<long>(1.31 * ctx.working_digits()) + 10;
  BigReal d = wzeta::pow(wzeta::const_sqrt(8, ctx) + BigRational(3), n);
  d = (d + BigReal(1, ctx) / d) / BigRational(2);
  BigReal b(-1, ctx);
  BigReal c = -d;
  BigReal s(0, ctx);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c / BigRational((2 * k + 1) * (2 * k + 1));
    b *= wzeta::make_rational((k + n) * (k - n) * 2, (2 * k + 1) * (k + 1));
  }
  return s / d;
}

inline BigReal mpfr_catalan(const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_const_catalan(out.get(), MPFR_RNDN);
  return out;
}

inline BigReal mpfr_zeta(unsigned long s, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_zeta_ui(out.get(), s, MPFR_RNDN);
  return out;
}

/// sum_{n>=1} chi(n) n^-s: direct sum to a multiple of the period, plus the
/// per-residue tail sum_m (N + j + m q)^-s from its first asymptotic terms.
inline BigReal character_series(long d, int s, long terms, const PrecisionContext& ctx) {
  const long q = d < 0 ? -d : d;
  const long N = (terms / q) * q;
  BigReal sum(0, ctx);
  for (long n = 1; n <= N; ++n) {
    const int c = wzeta::kronecker_symbol(d, n);
    if (c == 0) continue;
    const BigReal t = BigReal(1, ctx) / wzeta::pow(BigReal(n, ctx), s);
    sum += c > 0 ? t : -t;
  }
  // sum_{m>=0} (b + m)^-s ~ b^(1-s)/(s-1) + b^-s/2 + s b^(-s-1)/12, b = (N+j)/q.
  for (long j = 1; j < q; ++j) {
    const int c = wzeta::kronecker_symbol(d, j);
    if (c == 0) continue;
    const BigReal b(wzeta::make_rational(N + j, q), ctx);
    BigReal t = BigReal(1, ctx) / (wzeta::pow(b, s - 1) * BigRational(s - 1));
    t += BigReal(1, ctx) / (wzeta::pow(b, s) * BigRational(2));
    t += BigReal(s, ctx) / (wzeta::pow(b, s + 1) * BigRational(12));
    t /= wzeta::pow(BigReal(q, ctx), s);
    sum += c > 0 ? t : -t;
  }
  return sum;
}

/// Values computed with mpmath at 50 digits while writing the tests.
inline constexpr const char* kZeta2OneFifth = "26.26737720542377912330246621503190788839";
inline constexpr const char* kZeta3OneFifth = "125.7390180572179665295990450183751810319";
inline constexpr const char* kZeta2OneThird = "10.09559712542709408179200409989251636052";
inline constexpr const char* kLMinus8At2 = "1.064734171043503370392827451461668889483";
inline constexpr const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
inline constexpr const char* kCatalan = "0.915965594177219015054603514932";
inline constexpr const char* kPiSquaredOverSix = "1.64493406684822643647241516665";
/// 7 zeta(3)
inline constexpr const char* kZeta3Half = "8.414398322117159997798167130580149935355";

inline BigReal from_decimal(const char* text, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_set_str(out.get(), text, 10, MPFR_RNDN);
  return out;
}

/// |x - y| < 10^e
inline bool close(const BigReal& x, const BigReal& y, long e) { return wzeta::abs_below_ten_power(x - y, e); }

/// Fixed-seed generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRational rational(long max_num, long max_den) {
    return wzeta::make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  BigRational positive_rational(long max_num, long max_den) {
    return wzeta::make_rational(integer(1, max_num), integer(1, max_den));
  }

  wzeta::Poly2 poly(int max_dn, int max_dx, int terms) {
    wzeta::Poly2 p;
    for (int i = 0; i < terms; ++i) {
      p += wzeta::Poly2::monomial(static_cast<int>(integer(0, max_dn)), static_cast<int>(integer(0, max_dx)),
                                  rational(20, 7));
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
