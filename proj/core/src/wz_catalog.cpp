// SPDX-License-Identifier: Apache-2.0
#include "wzeta/wz_catalog.hpp"

#include "wzeta/certificate_io.hpp"
#include "wzeta/fixtures.hpp"

namespace wzeta::catalog {

namespace {

const BigRational kHalf = make_rational(1, 2);

PochhammerFactor poch(const BigRational& constant, const BigRational& k_coeff, int power) {
  return {AffineForm{constant, k_coeff}, power};
}

RationalFunction2 rf(std::string_view num, std::string_view den) { return {parse_poly(num), parse_poly(den)}; }

}  // namespace

WzPair simple_zeta2() {
  HypergeometricTerm F;
  F.factors = {poch(1, 0, 3), poch(kHalf, 0, -1), poch(1, 1, -2)};
  F.geometric_base = make_rational(1, 4);
  F.multiplier = rf("1", "(n+k+1)^2");
  return {"simple_zeta2", F, F.with_multiplier(rf("3*n+2*k+3", "2*(2*n+1)*(n+k+1)^2"))};
}

RationalFunction2 simple_zeta2_R_unsquared() { return rf("3*n+2*k+3", "2*(2*n+1)*(n+k+1)"); }

WzPair simple_zeta3() {
  HypergeometricTerm F;
  F.factors = {poch(1, 0, 5), poch(kHalf, 0, -1), poch(1, 1, -4)};
  F.geometric_base = make_rational(-1, 4);
  F.multiplier = rf("n+2*k+2", "2*(n+k+1)^4");
  return {"simple_zeta3", F, F.with_multiplier(rf("5*n^2+6*n*k+2*k^2+10*n+6*k+5", "4*(2*n+1)*(n+k+1)^4"))};
}

WzPair fast_zeta2() {
  HypergeometricTerm F;
  F.factors = {poch(1, 0, 3), poch(1, 1, 2), poch(kHalf, 0, -1), poch(kHalf, kHalf, -2), poch(1, kHalf, -2)};
  F.geometric_base = make_rational(1, 64);
  F.multiplier = rf("1", "(2*n+k+1)^2");
  const auto R = rf("21*n^3+55*n^2+47*n+13+2*k^3+13*k^2*n+28*k*n^2+11*k^2+48*k*n+20*k",
                    "2*(2*n+k+1)^2*(2*n+1)*(2*n+k+2)^2");
  return {"fast_zeta2", F, F.with_multiplier(R)};
}

namespace {

RationalFunction2 fast_zeta2_ratio_scaled(std::string_view lead) {
  const auto poly = rf(
      "21*n^3+28*n^2*x+13*n*x^2+2*x^3+118*n^2+104*n*x+24*x^2+220*n+96*x+136",
      "21*n^3+28*n^2*x+13*n*x^2+2*x^3+55*n^2+48*n*x+11*x^2+47*n+20*x+13");
  const auto rest = rf(std::string(lead) + "*(x+n+1)^2*(n+1)^3", "(3+x+2*n)^2*(4+x+2*n)^2*(3+2*n)");
  return poly * rest;
}

}  // namespace

RationalFunction2 fast_zeta2_ratio() { return fast_zeta2_ratio_scaled("1/2"); }
RationalFunction2 fast_zeta2_ratio_misscaled() { return fast_zeta2_ratio_scaled("2"); }

HypergeometricTerm fast_zeta3_F() {
  HypergeometricTerm F;
  F.factors = {poch(1, 0, 5), poch(1, 1, 4), poch(kHalf, 0, -1), poch(kHalf, kHalf, -4), poch(1, kHalf, -4)};
  F.geometric_base = make_rational(-1, 1024);
  F.multiplier = rf("3*n+2*k+2", "2*(2*n+k+1)^4");
  return F;
}

Poly2 fast_zeta3_denominator_shape() { return parse_poly("4*(2*n+1)*(2*n+k+1)^4*(2*n+k+2)^4"); }

WzPair fast_zeta3() {
  const HypergeometricTerm F = fast_zeta3_F();
  const Certificate cert = parse_certificate(fixtures::zeta3_fast_certificate());
  return {"fast_zeta3", F, cert.companion(F)};
}

WzPair lminus8_base() {
  HypergeometricTerm F;
  F.factors = {poch(1, 0, 3), poch(kHalf, 1, -3)};
  F.sign_n = true;
  F.sign_k = true;
  F.multiplier = rf("n+2*k+1", "(2*n+2*k+1)^3");
  return {"lminus8_base", F, F.with_multiplier(rf("4*n+2*k+3", "2*(2*n+2*k+1)^3"))};
}

HypergeometricTerm lminus8_fast_F() {
  HypergeometricTerm F;
  F.factors = {poch(1, 0, 3), poch(kHalf, 1, 3), poch(make_rational(1, 4), kHalf, -3),
               poch(make_rational(3, 4), kHalf, -3)};
  F.geometric_base = make_rational(1, 64);
  F.sign_k = true;
  F.multiplier = rf("3*n+2*k+1", "(4*n+2*k+1)^3");
  return F;
}

Poly2 lminus8_fast_denominator_shape() { return parse_poly("2*(4*n+2*k+1)^3*(4*n+2*k+3)^3"); }

WzPair lminus8_fast() {
  const HypergeometricTerm F = lminus8_fast_F();
  const Certificate cert = parse_certificate(fixtures::lminus8_fast_certificate());
  return {"lminus8_fast", F, cert.companion(F)};
}

std::vector<WzPair> all_pairs() {
  return {simple_zeta2(), simple_zeta3(), fast_zeta2(), fast_zeta3(), lminus8_base(), lminus8_fast()};
}

}  // namespace wzeta::catalog
