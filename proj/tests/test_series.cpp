// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support/oracles.hpp"
#include "wzeta/hurwitz.hpp"
#include "wzeta/series.hpp"
#include "wzeta/wz_catalog.hpp"

using namespace wzeta;

namespace {

SeriesSpec geometric(const BigRational& ratio) {
  SeriesSpec s;
  s.name = "geometric";
  s.first_term = Poly2(1);
  s.ratio = Poly2(ratio);
  s.base_magnitude = 1 / (ratio < 0 ? BigRational(-ratio) : ratio);
  return s;
}

}  // namespace

TEST_CASE("plan_terms") {
  CHECK(plan_terms(1000, 64) == 559);
  CHECK(plan_terms(1000, 1024) == 338);
  CHECK(plan_terms(1, 10) == 6);
  CHECK(plan_terms(10000, 64) == 5542);
  CHECK(plan_terms(10000, 1024) == 3327);
  CHECK_THROWS_AS(plan_terms(0, 64), DomainError);
  CHECK_THROWS_AS(plan_terms(10, 1), DomainError);
}

TEST_CASE("geometric series") {
  const PrecisionContext ctx(40);
  const SeriesResult r = eval_series(geometric(make_rational(1, 2)), BigRational(0), ctx);
  CHECK(oracle::close(r.value, BigReal(2, ctx), -40));
  CHECK(abs_below_ten_power(r.last_term_magnitude, -40));
  const SeriesResult alt = eval_series(geometric(make_rational(-1, 3)), BigRational(0), ctx);
  CHECK(oracle::close(alt.value, BigReal(make_rational(3, 4), ctx), -40));
}

TEST_CASE("accelerated zeta(2) and zeta(3) series at x = 0") {
  const PrecisionContext ctx(30);
  const SeriesResult z2 = eval_series(zeta2_fast_spec(), BigRational(0), ctx);
  CHECK(z2.value.to_string(30) == oracle::kPiSquaredOverSix);
  const SeriesResult z3 = eval_series(zeta3_fast_spec(), BigRational(0), ctx);
  CHECK(z3.value.to_string(31) == "1.202056903159594285399738161511");
  CHECK(abs_below_ten_power(z3.last_term_magnitude, -30));
}

TEST_CASE("pole and divergence detection") {
  const PrecisionContext ctx(20);
  SeriesSpec pole = geometric(make_rational(1, 2));
  pole.ratio = RationalFunction2(Poly2(1), parse_poly("2*n-6"));
  CHECK_THROWS_WITH_AS(eval_series(pole, BigRational(0), ctx), doctest::Contains("pole at term 3"), PoleError);
  SeriesSpec grow = geometric(make_rational(1, 2));
  grow.ratio = RationalFunction2(parse_poly("n+2"), parse_poly("n+1"));
  CHECK_THROWS_WITH_AS(eval_series(grow, BigRational(0), ctx), doctest::Contains("divergent"), ConvergenceError);
}

TEST_CASE("a series slower than its declared base gives up") {
  // Terms 1/(n+1) decay, so the divergence window stays quiet, but the ratio
  // tends to 1 and the tail never certifies.
  SeriesSpec slow = geometric(make_rational(1, 2));
  slow.ratio = RationalFunction2(Poly2::n() + Poly2(1), Poly2::n() + Poly2(2));
  const PrecisionContext ctx(10);
  CHECK_THROWS_WITH_AS(eval_series(slow, BigRational(0), ctx), doctest::Contains("did not reach"), ConvergenceError);
}

TEST_CASE("tail_bound") {
  const PrecisionContext ctx(20);
  const SeriesSpec g = geometric(make_rational(1, 2));
  CHECK(oracle::close(tail_bound(g, 0, 0, ctx), BigReal(1, ctx), -18));
  CHECK(abs_below_ten_power(tail_bound(zeta2_fast_spec(), 100, 0, ctx), -178));
  CHECK(abs_below_ten_power(tail_bound(zeta3_fast_spec(), 10, 0, ctx), -27));
}

TEST_CASE("tail_bound really bounds the remaining sum") {
  const PrecisionContext ctx(80);
  const SeriesSpec spec = zeta2_fast_spec();
  const BigReal total = eval_series(spec, BigRational(0), ctx).value;
  for (std::int64_t n : {3, 10, 25}) {
    const BigReal rest = total - BigReal(exact_partial_sum(spec, 0, n + 1), ctx);
    CHECK(abs(rest) <= tail_bound(spec, n, 0, ctx));
  }
}

TEST_CASE("stored ratios equal exact term quotients") {
  struct Case {
    SeriesSpec spec;
    HypergeometricTerm G;
  };
  const Case cases[] = {{zeta2_simple_spec(), catalog::simple_zeta2().G},
                        {zeta3_simple_spec(), catalog::simple_zeta3().G},
                        {zeta2_fast_spec(), catalog::fast_zeta2().G},
                        {zeta3_fast_spec(), catalog::fast_zeta3().G}};
  for (const auto& c : cases) {
    for (const BigRational& x : {BigRational(0), make_rational(-3, 4), make_rational(-4, 5)}) {
      for (std::int64_t n = 0; n <= 20; ++n) {
        const BigRational ratio = eval_term(c.G, n + 1, x) / eval_term(c.G, n, x);
        REQUIRE(ratio == rf2_eval(c.spec.ratio, BigRational(n), x));
      }
      CHECK(exact_term(c.spec, 7, x) == eval_term(c.G, 7, x));
    }
    CHECK(ratio_limit_consistent(c.spec, make_rational(1, 3)));
  }
}

TEST_CASE("the misscaled zeta(2) ratio is four times too large") {
  const RationalFunction2 bad = catalog::fast_zeta2_ratio_misscaled();
  CHECK(rf2_eval(bad, 0, 0) == make_rational(17, 351));
  CHECK(rf2_eval(bad, 3, make_rational(1, 3)) == 4 * rf2_eval(zeta2_fast_spec().ratio, 3, make_rational(1, 3)));
  SeriesSpec s = zeta2_fast_spec();
  s.ratio = bad;
  CHECK_FALSE(ratio_limit_consistent(s, 0));
}

TEST_CASE("monotone refinement") {
  for (int D : {50, 200}) {
    const PrecisionContext lo(D);
    const PrecisionContext hi(D + 100);
    for (const BigRational& x : {BigRational(0), make_rational(-4, 5)}) {
      CHECK(oracle::close(eval_series(zeta2_fast_spec(), x, lo).value, eval_series(zeta2_fast_spec(), x, hi).value,
                          -(D - 5)));
      CHECK(oracle::close(eval_series(zeta3_fast_spec(), x, lo).value, eval_series(zeta3_fast_spec(), x, hi).value,
                          -(D - 5)));
    }
  }
}

TEST_CASE("plan_terms is sufficient for the accelerated zeta(2) series") {
  const SeriesSpec spec = zeta2_fast_spec();
  for (int D : {50, 200, 1000}) {
    const PrecisionContext ctx(D);
    const std::int64_t N = plan_terms(D, 64);
    BigReal term(rf2_eval(spec.first_term, 0, 0), ctx);
    BigReal sum = term;
    for (std::int64_t n = 0; n + 1 < N; ++n) {
      term *= rf2_eval(spec.ratio, BigRational(n), 0);
      sum += term;
    }
    const BigReal pi = oracle::machin_pi(ctx);
    CHECK(abs_below_ten_power(sum - pi * pi / BigRational(6), -D));
  }
}

TEST_CASE("alternating zeta(3) partial sums bracket the value") {
  const PrecisionContext ctx(60);
  const SeriesSpec spec = zeta3_fast_spec();
  const BigReal zeta3 = oracle::mpfr_zeta(3, ctx);
  for (std::int64_t n = 1; n < 12; ++n) {
    const BigReal a(exact_partial_sum(spec, 0, n), ctx);
    const BigReal b(exact_partial_sum(spec, 0, n + 1), ctx);
    const BigReal& lo = a < b ? a : b;
    const BigReal& hi = a < b ? b : a;
    CHECK(lo <= zeta3);
    CHECK(zeta3 <= hi);
  }
}

TEST_CASE("real x follows the rational path") {
  const PrecisionContext ctx(60);
  const BigRational x = make_rational(-2, 3);
  CHECK(oracle::close(eval_series(zeta3_fast_spec(), BigReal(x, ctx), ctx).value,
                      eval_series(zeta3_fast_spec(), x, ctx).value, -58));
}
