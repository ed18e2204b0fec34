// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "wzeta/wz.hpp"

namespace wzeta {

struct WzPair {
  std::string name;
  HypergeometricTerm F;
  HypergeometricTerm G;
};

namespace catalog {

// Each pair satisfies sum_n G(n,x) = sum_k F(0,k+x). For the zeta pairs
// F(0,k) = (k+1)^-s, so the sum is zeta(s, 1+x).

/// U = (1)_n^3 / ((1/2)_n (1+k)_n^2), S = 1/(n+k+1)^2, z = 1/4.
WzPair simple_zeta2();
/// The same R with a first-power (n+k+1) denominator; not a WZ mate.
RationalFunction2 simple_zeta2_R_unsquared();

/// U = (1)_n^5 / ((1/2)_n (1+k)_n^4), S = (n+2k+2)/(2(n+k+1)^4), z = -1/4.
WzPair simple_zeta3();

/// Shift of simple_zeta2: z = 1/64.
WzPair fast_zeta2();
/// T(n,x) for fast_zeta2, written with the (n+k+1) factors collected.
RationalFunction2 fast_zeta2_ratio();
/// The same expression with the leading factor 2 in place of 1/2; four
/// times the true ratio.
RationalFunction2 fast_zeta2_ratio_misscaled();

/// Shift of simple_zeta3: z = -1/1024. Its certificate is a fixture.
HypergeometricTerm fast_zeta3_F();
Poly2 fast_zeta3_denominator_shape();
WzPair fast_zeta3();

/// U = (1)_n^3 / (1/2+k)_n^3 (-1)^n (-1)^k, S = (n+2k+1)/(2n+2k+1)^3.
/// sum_k F(0,k+x) = sum_k (-1)^k / (2k+2x+1)^2.
WzPair lminus8_base();
/// Shift of lminus8_base: z = 1/64 and the (-1)^k factor survives.
HypergeometricTerm lminus8_fast_F();
Poly2 lminus8_fast_denominator_shape();
WzPair lminus8_fast();

/// Every pair above, in a fixed order.
std::vector<WzPair> all_pairs();

}  // namespace catalog

}  // namespace wzeta
