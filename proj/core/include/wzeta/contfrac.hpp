// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wzeta/numeric.hpp"
#include "wzeta/poly.hpp"
#include "wzeta/series.hpp"

namespace wzeta {

/// head + b(1)/(a(1) + b(2)/(a(2) + b(3)/(a(3) + ...)))
///
/// A fraction of depth d keeps levels 1..d.
struct CFSpec {
  std::string name;
  BigRational head;
  std::function<BigRational(std::int64_t)> numerator;
  std::function<BigRational(std::int64_t)> denominator;
};

struct Convergent {
  BigReal p;
  BigReal q;
  std::int64_t depth = 0;
};

/// Continued fraction whose depth-d convergent is the d-term partial sum of
/// sum_n G0 prod_{i<n} P(i)/Q(i):
///
///   G0/(1 + (-P_0)/(A_0 + (-B_0)/(A_1 + (-B_1)/(A_2 + ...))))
///
/// with A_n = P_n + Q_n and B_n = Q_n P_{n+1}. P and Q are polynomials in n
/// alone.
CFSpec euler_transform(const BigRational& G0, const Poly2& P, const Poly2& Q);
/// euler_transform applied to a series spec at fixed rational x.
CFSpec euler_transform(const SeriesSpec& spec, const BigRational& x);

/// Bottom-up evaluation. Throws ConvergenceError on a zero denominator.
BigReal eval_cf_backward(const CFSpec& cf, std::int64_t depth, const PrecisionContext& ctx);
/// Convergents p_j/q_j for j = 1..depth from the three-term recurrence.
std::vector<Convergent> eval_cf_forward(const CFSpec& cf, std::int64_t depth, const PrecisionContext& ctx);
/// Depth-d value in exact arithmetic.
BigRational exact_convergent(const CFSpec& cf, std::int64_t depth);

/// The two polynomial families of a fixed continued fraction, in n.
struct CFPolynomials {
  Poly2 a;
  Poly2 b;
};

/// a_n = -(n+1)^3(21n+34) - 8(2n+3)^3(21n+13),
/// b_n = 8(n+1)^3(21n+34)(2n+1)^3(21n-8).
CFPolynomials zeta2_cf_polynomials();
/// a_n = -(n+1)^5(205n^2+660n+532) + 32(2n+3)^5(205n^2+250n+77),
/// b_n = 32(n+1)^5(205n^2+660n+532)(2n+1)^5(205n^2-160n+32).
CFPolynomials zeta3_cf_polynomials();
/// The a_n variant with -32 in place of +32. Its fraction tends to roughly
/// -zeta(3) instead of zeta(3).
Poly2 zeta3_cf_a_negated_variant();

/// zeta(2) = 104/(a_{-1} - b_0/(a_0 - b_1/(a_1 - ...))).
CFSpec zeta2_cf_spec();
/// zeta(3) = 1232/(a_{-1} + b_0/(a_0 + b_1/(a_1 + ...))).
CFSpec zeta3_cf_spec();

}  // namespace wzeta
