// SPDX-License-Identifier: Apache-2.0
#include "wzeta/hurwitz.hpp"

#include <algorithm>
#include <vector>

#include "wzeta/wz_catalog.hpp"

namespace wzeta {

namespace {

constexpr int kOracleMaxDigits = 200;

void require_s(int s) {
  if (s != 2 && s != 3) throw DomainError("Hurwitz zeta: s must be 2 or 3, got " + std::to_string(s));
}

void require_positive(const BigRational& a) {
  if (a <= 0) throw DomainError("Hurwitz zeta: a must be positive, got " + to_string(a));
}

SeriesSpec spec_from_pair(std::string name, const HypergeometricTerm& G, const BigRational& base) {
  SeriesSpec spec;
  spec.name = std::move(name);
  spec.first_term = G.multiplier.substitute(Poly2(0), Poly2::x());
  spec.ratio = term_ratio(G);
  spec.base_magnitude = base;
  spec.sign_alternates = G.geometric_base < 0;
  return spec;
}

const SeriesSpec& cached(int which) {
  static const SeriesSpec specs[4] = {
      spec_from_pair("zeta2_simple", catalog::simple_zeta2().G, 4),
      spec_from_pair("zeta3_simple", catalog::simple_zeta3().G, 4),
      [] {
        SeriesSpec s = spec_from_pair("zeta2_fast", catalog::fast_zeta2().G, 64);
        s.ratio = catalog::fast_zeta2_ratio();
        return s;
      }(),
      spec_from_pair("zeta3_fast", catalog::fast_zeta3().G, 1024),
  };
  return specs[which];
}

SeriesResult run_rational(const SeriesSpec& spec, int s, const BigRational& a, const PrecisionContext& ctx,
                          bool shift_large) {
  require_positive(a);
  if (shift_large && a >= 3) {
    const ShiftedArgument sh = domain_shift(s, a);
    SeriesResult r = eval_series(spec, sh.a - 1, ctx);
    r.value -= sh.correction;
    return r;
  }
  return eval_series(spec, a - 1, ctx);
}

SeriesResult run_real(const SeriesSpec& spec, int s, const BigReal& a, const PrecisionContext& ctx) {
  if (a.sign() <= 0 || !a.is_finite()) throw DomainError("Hurwitz zeta: a must be positive and finite");
  BigReal shifted(ctx);
  mpfr_set(shifted.get(), a.get(), MPFR_RNDN);
  BigReal correction(0, ctx);
  const BigReal three(3, ctx);
  if (shifted >= three) {
    BigReal m(ctx);
    mpfr_ceil(m.get(), shifted.get());
    mpfr_sub_ui(m.get(), m.get(), 1, MPFR_RNDN);  // a - m lands in (0,1]
    const long steps = mpfr_get_si(m.get(), MPFR_RNDN);
    shifted -= m;
    for (long j = steps - 1; j >= 0; --j) {
      const BigReal base = shifted + BigRational(j);
      correction += BigReal(1, ctx) / pow(base, s);
    }
  }
  const BigReal x = shifted - BigRational(1);
  SeriesResult r = eval_series(spec, x, ctx);
  r.value -= correction;
  return r;
}

/// B_0..B_{max} by the standard recurrence sum_{j<=m} C(m+1,j) B_j = 0.
std::vector<BigRational> bernoulli_numbers(int max) {
  std::vector<BigRational> b(static_cast<std::size_t>(max) + 1);
  b[0] = 1;
  for (int m = 1; m <= max; ++m) {
    if (m > 1 && m % 2 == 1) {
      b[static_cast<std::size_t>(m)] = 0;
      continue;
    }
    BigRational acc = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += BigRational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

}  // namespace

HurwitzMethod parse_hurwitz_method(std::string_view name) {
  if (name == "simple") return HurwitzMethod::simple;
  if (name == "fast") return HurwitzMethod::fast;
  if (name == "oracle") return HurwitzMethod::oracle;
  throw DomainError("unknown Hurwitz method '" + std::string(name) + "'");
}

std::string_view to_string(HurwitzMethod m) {
  switch (m) {
    case HurwitzMethod::simple:
      return "simple";
    case HurwitzMethod::fast:
      return "fast";
    case HurwitzMethod::oracle:
      return "oracle";
  }
  return "?";
}

SeriesSpec zeta2_simple_spec() { return cached(0); }
SeriesSpec zeta3_simple_spec() { return cached(1); }
SeriesSpec zeta2_fast_spec() { return cached(2); }
SeriesSpec zeta3_fast_spec() { return cached(3); }

SeriesResult zeta2_simple(const BigRational& a, const PrecisionContext& ctx) {
  return run_rational(cached(0), 2, a, ctx, false);
}
SeriesResult zeta3_simple(const BigRational& a, const PrecisionContext& ctx) {
  return run_rational(cached(1), 3, a, ctx, false);
}
SeriesResult zeta2_fast(const BigRational& a, const PrecisionContext& ctx) {
  return run_rational(cached(2), 2, a, ctx, true);
}
SeriesResult zeta3_fast(const BigRational& a, const PrecisionContext& ctx) {
  return run_rational(cached(3), 3, a, ctx, true);
}
SeriesResult zeta2_fast(const BigReal& a, const PrecisionContext& ctx) { return run_real(cached(2), 2, a, ctx); }
SeriesResult zeta3_fast(const BigReal& a, const PrecisionContext& ctx) { return run_real(cached(3), 3, a, ctx); }

ShiftedArgument domain_shift(int s, const BigRational& a) {
  require_s(s);
  require_positive(a);
  ShiftedArgument out{a, 0};
  if (a <= 1) return out;
  // Largest m with a - m > 0, i.e. m = ceil(a) - 1.
  BigInt m = a.get_num() / a.get_den();
  if (m * a.get_den() == a.get_num()) m -= 1;
  out.a = a - BigRational(m);
  for (BigInt j = 0; j < m; ++j) {
    const BigRational base = out.a + BigRational(j);
    BigRational p = base * base;
    if (s == 3) p *= base;
    out.correction += 1 / p;
  }
  return out;
}

BigReal hurwitz_reference(int s, const BigRational& a, const PrecisionContext& ctx) {
  require_s(s);
  require_positive(a);
  if (ctx.digits() > kOracleMaxDigits) {
    throw DomainError("hurwitz_reference: digits above " + std::to_string(kOracleMaxDigits) + " are not supported");
  }
  const long M = std::max(30, ctx.digits());
  BigReal sum(0, ctx);
  for (long k = 0; k < M; ++k) sum += BigReal(1, ctx) / pow(BigReal(a + BigRational(k), ctx), s);

  // Tail sum_{k>=M} (k+a)^-s: integral, half term, then Bernoulli corrections
  // B_2j/(2j)! * (s)_{2j-1} * N^-(s+2j-1), N = M + a.
  const BigReal N(a + BigRational(M), ctx);
  sum += BigReal(1, ctx) / (pow(N, s - 1) * BigRational(s - 1));
  sum += BigReal(1, ctx) / (pow(N, s) * BigRational(2));

  const long cutoff = -static_cast<long>(ctx.working_digits());
  int max_index = 64;
  std::vector<BigRational> bern = bernoulli_numbers(max_index);
  BigRational factorial = 1;    // (2j)!
  BigRational rising = s;       // (s)_{2j-1}
  BigReal npow = pow(N, s + 1);  // N^(s+2j-1)
  const BigReal n2 = N * N;
  for (int j = 1;; ++j) {
    if (2 * j > max_index) {
      max_index *= 2;
      bern = bernoulli_numbers(max_index);
    }
    factorial *= BigRational((2 * j - 1) * (2 * j));
    if (j > 1) {
      rising *= BigRational((s + 2 * j - 3) * (s + 2 * j - 2));
      npow *= n2;
    }
    const BigReal correction = BigReal(bern[static_cast<std::size_t>(2 * j)] / factorial * rising, ctx) / npow;
    sum += correction;
    if (abs_below_ten_power(correction, cutoff)) break;
    if (j > 4 * M) throw ConvergenceError("hurwitz_reference: Euler-Maclaurin tail failed to settle");
  }
  return sum;
}

SeriesResult hurwitz_zeta(int s, const BigRational& a, HurwitzMethod method, const PrecisionContext& ctx) {
  require_s(s);
  switch (method) {
    case HurwitzMethod::simple:
      return s == 2 ? zeta2_simple(a, ctx) : zeta3_simple(a, ctx);
    case HurwitzMethod::fast:
      return s == 2 ? zeta2_fast(a, ctx) : zeta3_fast(a, ctx);
    case HurwitzMethod::oracle: {
      BigReal v = hurwitz_reference(s, a, ctx);
      BigReal zero(0, ctx);
      return SeriesResult{std::move(v), 0, std::move(zero), ctx};
    }
  }
  throw DomainError("unknown Hurwitz method");
}

}  // namespace wzeta
