// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "wzeta/numeric.hpp"
#include "wzeta/series.hpp"

namespace wzeta {

// Hurwitz zeta(s,a) = sum_{k>=0} (k+a)^-s for s in {2,3}, a > 0. The series
// specs are functions of x = a - 1.

enum class HurwitzMethod { simple, fast, oracle };

HurwitzMethod parse_hurwitz_method(std::string_view name);
std::string_view to_string(HurwitzMethod m);

/// Base-4 series, alternating for s = 3.
SeriesSpec zeta2_simple_spec();
SeriesSpec zeta3_simple_spec();
/// Base-64 and base-1024 series from the shifted pairs.
SeriesSpec zeta2_fast_spec();
SeriesSpec zeta3_fast_spec();

SeriesResult zeta2_simple(const BigRational& a, const PrecisionContext& ctx);
SeriesResult zeta3_simple(const BigRational& a, const PrecisionContext& ctx);
/// a >= 3 is first reduced into (0,1] by domain_shift.
SeriesResult zeta2_fast(const BigRational& a, const PrecisionContext& ctx);
SeriesResult zeta3_fast(const BigRational& a, const PrecisionContext& ctx);

/// Real a: the ratio is evaluated in BigReal arithmetic, so results carry
/// no exactness guarantee beyond the guard digits.
SeriesResult zeta2_fast(const BigReal& a, const PrecisionContext& ctx);
SeriesResult zeta3_fast(const BigReal& a, const PrecisionContext& ctx);

struct ShiftedArgument {
  BigRational a;
  /// sum_{j<m} (a+j)^-s, so zeta(s, a_original) = zeta(s, a) - correction
  BigRational correction;
};

/// Moves a into (0,1] using zeta(s,a) = a^-s + zeta(s,a+1).
ShiftedArgument domain_shift(int s, const BigRational& a);

/// Direct summation plus an Euler-Maclaurin tail with exact Bernoulli
/// numbers. Independent of every series in this library; meant for
/// validation, so digits are capped at 200.
BigReal hurwitz_reference(int s, const BigRational& a, const PrecisionContext& ctx);

/// Dispatches on method; oracle results report terms_used = 0.
SeriesResult hurwitz_zeta(int s, const BigRational& a, HurwitzMethod method, const PrecisionContext& ctx);

}  // namespace wzeta
