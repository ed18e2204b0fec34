// SPDX-License-Identifier: Apache-2.0
#include "wzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace wzeta {

namespace {

constexpr std::int64_t kDecayWindow = 50;

/// Integer-coefficient polynomial in n; T(n,x) at fixed rational x becomes
/// P(n)/Q(n) after clearing a common denominator.
struct IntPoly {
  std::vector<BigInt> coeffs;  // by degree

  BigInt operator()(std::int64_t n) const {
    BigInt acc = 0;
    const BigInt nv(static_cast<long>(n));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc *= nv;
      acc += *it;
    }
    return acc;
  }
};

std::pair<IntPoly, IntPoly> specialize(const RationalFunction2& ratio, const BigRational& x) {
  const Poly2 num = ratio.numerator().at_x(x);
  const Poly2 den = ratio.denominator().at_x(x);
  BigInt scale = 1;
  for (const Poly2* p : {&num, &den}) {
    for (const auto& [e, c] : p->terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  }
  auto to_int = [&scale](const Poly2& p) {
    IntPoly out;
    out.coeffs.assign(static_cast<std::size_t>(p.degree_n()) + 1, BigInt(0));
    for (const auto& [e, c] : p.terms()) {
      BigRational scaled = c * BigRational(scale);
      out.coeffs[static_cast<std::size_t>(e.first)] = scaled.get_num();
    }
    return out;
  };
  return {to_int(num), to_int(den)};
}

struct Accumulator {
  const SeriesSpec& spec;
  const PrecisionContext& ctx;
  std::int64_t planned;
  BigReal sum;
  BigReal term;
  std::int64_t terms = 1;
  std::vector<double> history;  // log10 |term| per index

  Accumulator(const SeriesSpec& s, const PrecisionContext& c, BigReal first)
      : spec(s), ctx(c), planned(plan_terms(c.digits(), s.base_magnitude)), sum(first), term(std::move(first)) {
    history.push_back(term.log10_abs());
  }

  // Called after `term` has been advanced and added. Returns true once done;
  // `next_ratio_log10` is log10 |T| for the ratio that would produce the next term.
  bool done(double next_ratio_log10) {
    history.push_back(term.log10_abs());
    const auto idx = static_cast<std::int64_t>(history.size()) - 1;
    if (idx >= kDecayWindow && idx % kDecayWindow == 0) {
      const double then = history[static_cast<std::size_t>(idx - kDecayWindow)];
      const double now = history[static_cast<std::size_t>(idx)];
      if (!(now < then)) {
        throw ConvergenceError("series '" + spec.name + "' divergent: term magnitudes did not decay over " +
                               std::to_string(kDecayWindow) + " terms ending at n = " + std::to_string(idx));
      }
    }
    if (term.is_zero()) return true;
    if (terms < planned) return false;
    if (terms > 20 * planned + 1000) {
      throw ConvergenceError("series '" + spec.name + "' did not reach " + std::to_string(ctx.digits()) +
                             " digits within " + std::to_string(terms) + " terms");
    }
    const double cap = -log10_abs(spec.base_magnitude);
    const double lr = std::max(next_ratio_log10, cap);
    if (lr >= 0.0) return false;
    const double r = std::pow(10.0, lr);
    const double bound = history.back() + lr - std::log10(1.0 - r);
    const double target = -static_cast<double>(ctx.digits() + 1) + std::min(0.0, sum.log10_abs());
    return bound <= target;
  }

  SeriesResult finish() {
    return SeriesResult{std::move(sum), terms, abs(term), ctx};
  }
};

}  // namespace

std::int64_t plan_terms(int digits, const BigRational& base_magnitude) {
  if (digits < 1) throw DomainError("plan_terms: digits must be >= 1");
  if (base_magnitude <= 1) throw DomainError("plan_terms: base magnitude must exceed 1");
  const double per_term = log10_abs(base_magnitude);
  return static_cast<std::int64_t>(std::ceil(static_cast<double>(digits) / per_term - 1e-12)) + 5;
}

SeriesResult eval_series(const SeriesSpec& spec, const BigRational& x, const PrecisionContext& ctx) {
  const BigRational g0 = rf2_eval(spec.first_term, 0, x);
  const auto [P, Q] = specialize(spec.ratio, x);

  Accumulator acc(spec, ctx, BigReal(g0, ctx));
  if (g0 == 0) return acc.finish();

  BigInt p = P(0);
  BigInt q = Q(0);
  for (std::int64_t n = 0;; ++n) {
    if (q == 0) throw PoleError("series '" + spec.name + "': pole at term " + std::to_string(n));
    acc.term *= p;
    acc.term /= q;
    acc.sum += acc.term;
    ++acc.terms;
    p = P(n + 1);
    q = Q(n + 1);
    const double next = (q == 0) ? std::numeric_limits<double>::infinity()
                        : (p == 0) ? -std::numeric_limits<double>::infinity()
                                   : log10_abs(BigRational(p) / BigRational(q));
    if (acc.done(next)) return acc.finish();
  }
}

SeriesResult eval_series(const SeriesSpec& spec, const BigReal& x, const PrecisionContext& ctx) {
  BigReal xw(ctx);
  mpfr_set(xw.get(), x.get(), MPFR_RNDN);
  const BigReal g0 = rf2_eval(spec.first_term, 0, xw);

  Accumulator acc(spec, ctx, g0);
  if (g0.is_zero()) return acc.finish();

  auto ratio_at = [&](std::int64_t n) { return rf2_eval(spec.ratio, BigRational(static_cast<long>(n)), xw); };
  BigReal t = ratio_at(0);
  for (std::int64_t n = 0;; ++n) {
    acc.term *= t;
    acc.sum += acc.term;
    ++acc.terms;
    t = ratio_at(n + 1);
    if (acc.done(t.log10_abs())) return acc.finish();
  }
}

BigReal tail_bound(const SeriesSpec& spec, std::int64_t n, const BigRational& x, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("tail_bound: n must be nonnegative");
  BigReal term(rf2_eval(spec.first_term, 0, x), ctx);
  for (std::int64_t i = 0; i < n; ++i) term *= rf2_eval(spec.ratio, BigRational(static_cast<long>(i)), x);
  BigRational r = rf2_eval(spec.ratio, BigRational(static_cast<long>(n)), x);
  if (r < 0) r = -r;
  const BigRational cap = 1 / spec.base_magnitude;
  if (r < cap) r = cap;
  BigReal out(ctx);
  if (r >= 1) {
    mpfr_set_inf(out.get(), 1);
    return out;
  }
  out = abs(term) * (r / (1 - r));
  return out;
}

BigRational exact_term(const SeriesSpec& spec, std::int64_t n, const BigRational& x) {
  BigRational term = rf2_eval(spec.first_term, 0, x);
  for (std::int64_t i = 0; i < n; ++i) term *= rf2_eval(spec.ratio, BigRational(static_cast<long>(i)), x);
  return term;
}

BigRational exact_partial_sum(const SeriesSpec& spec, const BigRational& x, std::int64_t terms) {
  BigRational term = rf2_eval(spec.first_term, 0, x);
  BigRational sum = 0;
  for (std::int64_t i = 0; i < terms; ++i) {
    sum += term;
    if (i + 1 < terms) term *= rf2_eval(spec.ratio, BigRational(static_cast<long>(i)), x);
  }
  return sum;
}

bool ratio_limit_consistent(const SeriesSpec& spec, const BigRational& x) {
  for (long n : {1000L, 10000L}) {
    BigRational r = rf2_eval(spec.ratio, BigRational(n), x) * spec.base_magnitude;
    if (r < 0) r = -r;
    if (r < BigRational(9, 10) || r > BigRational(11, 10)) return false;
  }
  return true;
}

}  // namespace wzeta
