// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "wzeta/numeric.hpp"
#include "wzeta/poly.hpp"

namespace wzeta {

/// A hypergeometric series sum_{n>=0} G(n,x) described by its first term
/// and its term ratio T(n,x) = G(n+1,x)/G(n,x), geometric base folded in.
struct SeriesSpec {
  std::string name;
  /// G(0,x); evaluated at n = 0, so only its x-dependence matters.
  RationalFunction2 first_term;
  RationalFunction2 ratio;
  /// |z|^-1 where T(n,x) -> z as n -> infinity (64 for a 1/64 series).
  BigRational base_magnitude;
  bool sign_alternates = false;
};

struct SeriesResult {
  BigReal value;
  std::int64_t terms_used = 0;
  BigReal last_term_magnitude;
  PrecisionContext context;
};

/// Terms needed for the geometric tail to drop below 10^-digits:
/// ceil(digits / log10(base)) + 5.
std::int64_t plan_terms(int digits, const BigRational& base_magnitude);

/// Running-product summation H <- H*T(n,x). Sums at least
/// plan_terms(digits, base) terms, then continues only while the tail bound
/// exceeds 10^-(digits+1) * min(1, |sum|).
///
/// Throws PoleError ("pole at term n") if the ratio denominator vanishes and
/// ConvergenceError if term magnitudes stop decaying over a 50-term window.
SeriesResult eval_series(const SeriesSpec& spec, const BigRational& x, const PrecisionContext& ctx);

/// Same loop with the ratio evaluated in BigReal arithmetic. Exactness of
/// the ratio is lost, so accuracy rests on the guard digits alone.
SeriesResult eval_series(const SeriesSpec& spec, const BigReal& x, const PrecisionContext& ctx);

/// |term_n| * r / (1 - r), r = max(|T(n,x)|, 1/base). Bounds the remaining
/// tail as long as no later ratio exceeds r, which holds once |T| moves
/// monotonically toward its limit 1/base. Returns +inf when r >= 1.
BigReal tail_bound(const SeriesSpec& spec, std::int64_t n, const BigRational& x, const PrecisionContext& ctx);

/// G(n,x) computed exactly by the running product.
BigRational exact_term(const SeriesSpec& spec, std::int64_t n, const BigRational& x);
/// Sum of the first `terms` terms, exactly.
BigRational exact_partial_sum(const SeriesSpec& spec, const BigRational& x, std::int64_t terms);

/// True when |T(n,x)| * base is within 10% of 1 at n = 10^3 and 10^4.
bool ratio_limit_consistent(const SeriesSpec& spec, const BigRational& x);

}  // namespace wzeta
