// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support/oracles.hpp"
#include "wzeta/contfrac.hpp"
#include "wzeta/hurwitz.hpp"

using namespace wzeta;

namespace {

CFSpec golden() {
  CFSpec cf;
  cf.name = "golden";
  cf.head = 0;
  cf.numerator = [](std::int64_t) { return BigRational(1); };
  cf.denominator = [](std::int64_t) { return BigRational(1); };
  return cf;
}

}  // namespace

TEST_CASE("golden ratio fraction") {
  const PrecisionContext ctx(15);
  CHECK(eval_cf_backward(golden(), 40, ctx).to_string(15) == "0.618033988749895");
  const auto convergents = eval_cf_forward(golden(), 20, PrecisionContext(30));
  BigInt f0 = 1;
  BigInt f1 = 1;
  for (const Convergent& c : convergents) {
    // p_j / q_j = F_j / F_{j+1}
    CHECK(c.p == BigReal(BigRational(f0), PrecisionContext(30)));
    CHECK(c.q == BigReal(BigRational(f1), PrecisionContext(30)));
    const BigInt next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
}

TEST_CASE("depth one is head plus the first level") {
  CFSpec cf = golden();
  cf.head = 3;
  cf.numerator = [](std::int64_t j) { return BigRational(j + 1); };
  const PrecisionContext ctx(20);
  CHECK(oracle::close(eval_cf_backward(cf, 1, ctx), BigReal(5, ctx), -19));
  const auto fwd = eval_cf_forward(cf, 1, ctx);
  CHECK(oracle::close(fwd.back().p / fwd.back().q, eval_cf_backward(cf, 1, ctx), -19));
  CHECK(exact_convergent(cf, 1) == 5);
  CHECK_THROWS_AS(eval_cf_backward(cf, 0, ctx), DomainError);
}

TEST_CASE("zero denominators are reported") {
  CFSpec cf = golden();
  cf.denominator = [](std::int64_t j) { return BigRational(j == 2 ? 0 : 1); };
  cf.numerator = [](std::int64_t j) { return BigRational(j == 3 ? 0 : 1); };
  CHECK_THROWS_WITH_AS(eval_cf_backward(cf, 3, PrecisionContext(10)), doctest::Contains("level 2"), ConvergenceError);
  CFSpec q0 = golden();
  q0.denominator = [](std::int64_t) { return BigRational(0); };
  CHECK_THROWS_WITH_AS(eval_cf_forward(q0, 1, PrecisionContext(10)), doctest::Contains("zero q at level 1"),
                       ConvergenceError);
}

TEST_CASE("euler_transform trivial series") {
  const PrecisionContext ctx(30);
  const CFSpec half = euler_transform(1, Poly2(1), Poly2(2));
  CHECK(oracle::close(eval_cf_backward(half, 120, ctx), BigReal(2, ctx), -30));
  const CFSpec single = euler_transform(7, Poly2(0), Poly2(1));
  CHECK(exact_convergent(single, 1) == 7);
  CHECK(exact_convergent(single, 5) == 7);
  CHECK_THROWS_AS(euler_transform(1, Poly2::x(), Poly2(1)), DomainError);
}

TEST_CASE("euler_transform convergents are partial sums, exactly") {
  std::vector<std::pair<SeriesSpec, BigRational>> cases = {
      {zeta2_fast_spec(), 0}, {zeta2_fast_spec(), make_rational(-3, 4)}, {zeta3_fast_spec(), 0}};
  oracle::Gen gen(2024);
  for (int i = 0; i < 5; ++i) {
    SeriesSpec s;
    s.name = "synthetic";
    s.first_term = Poly2(gen.positive_rational(9, 4));
    s.ratio = RationalFunction2(gen.poly(3, 0, 3) + Poly2::n().pow(4), Poly2::affine(gen.integer(1, 5), 1, 0).pow(4) *
                                                                          Poly2(gen.integer(2, 9)));
    s.base_magnitude = 2;
    cases.emplace_back(s, 0);
  }
  for (const auto& [spec, x] : cases) {
    const CFSpec cf = euler_transform(spec, x);
    for (std::int64_t d = 1; d <= 25; ++d) {
      CAPTURE(spec.name);
      CAPTURE(d);
      REQUIRE(exact_convergent(cf, d) == exact_partial_sum(spec, x, d));
    }
  }
}

TEST_CASE("euler fraction for the accelerated zeta(2) series sums to pi^2/6") {
  const PrecisionContext ctx(100);
  const BigReal pi = oracle::machin_pi(ctx);
  CHECK(oracle::close(eval_cf_backward(euler_transform(zeta2_fast_spec(), 0), 70, ctx), pi * pi / BigRational(6), -100));
}

TEST_CASE("fixed fractions are equivalent to the Euler fractions") {
  // Level-wise scaling c_1 = 64 (resp. 1024), c_j = -1 (resp. 1) keeps every
  // convergent, so both fractions agree exactly at each depth.
  const CFSpec z2 = zeta2_cf_spec();
  const CFSpec e2 = euler_transform(zeta2_fast_spec(), 0);
  const CFSpec z3 = zeta3_cf_spec();
  const CFSpec e3 = euler_transform(zeta3_fast_spec(), 0);
  CHECK(z2.numerator(1) == 104);
  CHECK(z2.denominator(1) == 64);
  CHECK(z2.numerator(2) == 2176);
  CHECK(z3.numerator(1) == 1232);
  CHECK(z3.denominator(1) == 1024);
  CHECK(z3.numerator(2) == 544768);
  for (std::int64_t d = 1; d <= 25; ++d) {
    CHECK(exact_convergent(z2, d) == exact_convergent(e2, d));
    CHECK(exact_convergent(z3, d) == exact_convergent(e3, d));
  }
}

TEST_CASE("stored polynomials match the displayed coefficients") {
  const CFPolynomials z2 = zeta2_cf_polynomials();
  CHECK(z2.a == parse_poly("-(n + 1)^3*(21*n + 34) - 8*(3 + 2*n)^3*(21*n + 13)"));
  CHECK(z2.b == parse_poly("8*(n + 1)^3*(21*n + 34)*(1 + 2*n)^3*(21*n - 8)"));
  CHECK(z2.a.coefficient(4, 0) == -21 - 8 * 8 * 21);
  const CFPolynomials z3 = zeta3_cf_polynomials();
  CHECK(z3.b == parse_poly("32*(n + 1)^5*(205*n^2 + 660*n + 532)*(1 + 2*n)^5*(205*n^2 - 160*n + 32)"));
  CHECK(z3.a + zeta3_cf_a_negated_variant() == parse_poly("-2*(n + 1)^5*(205*n^2 + 660*n + 532)"));
}

TEST_CASE("zeta(2) and zeta(3) fractions at 300 digits") {
  const PrecisionContext ctx(300);
  const BigReal pi = oracle::machin_pi(ctx);
  CHECK(oracle::close(eval_cf_backward(zeta2_cf_spec(), 200, ctx), pi * pi / BigRational(6), -300));
  CHECK(oracle::close(eval_cf_backward(zeta3_cf_spec(), 200, ctx), oracle::mpfr_zeta(3, ctx), -300));
}

TEST_CASE("the negated a_n variant does not give zeta(3)") {
  CFSpec bad = zeta3_cf_spec();
  const Poly2 a = zeta3_cf_a_negated_variant();
  bad.denominator = [a](std::int64_t j) { return a(BigRational(j - 2), 0); };
  const PrecisionContext ctx(30);
  const BigReal v = eval_cf_backward(bad, 60, ctx);
  CHECK_FALSE(oracle::close(v, oracle::mpfr_zeta(3, ctx), -5));
  CHECK(oracle::close(v, -oracle::mpfr_zeta(3, ctx), -5));
}

TEST_CASE("forward and backward agree") {
  const PrecisionContext ctx(120);
  for (const CFSpec& cf : {zeta2_cf_spec(), zeta3_cf_spec(), euler_transform(zeta2_fast_spec(), make_rational(-3, 4))}) {
    const auto fwd = eval_cf_forward(cf, 80, ctx);
    for (std::int64_t d : {1, 2, 5, 17, 40, 80}) {
      const Convergent& c = fwd[static_cast<std::size_t>(d - 1)];
      CHECK(c.depth == d);
      CHECK(oracle::close(c.p / c.q, eval_cf_backward(cf, d, ctx), -115));
    }
  }
}

TEST_CASE("zeta(2) convergents improve by a factor of at least 32 per level") {
  const PrecisionContext ctx(200);
  const BigReal pi = oracle::machin_pi(ctx);
  const BigReal target = pi * pi / BigRational(6);
  const auto fwd = eval_cf_forward(zeta2_cf_spec(), 60, ctx);
  for (std::size_t j = 10; j + 1 < fwd.size(); ++j) {
    const BigReal e0 = abs(fwd[j].p / fwd[j].q - target);
    const BigReal e1 = abs(fwd[j + 1].p / fwd[j + 1].q - target);
    CHECK(e1 * BigRational(32) <= e0);
  }
}
