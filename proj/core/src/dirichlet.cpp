// SPDX-License-Identifier: Apache-2.0
#include "wzeta/dirichlet.hpp"

#include <future>

#include "wzeta/wz.hpp"

namespace wzeta {

namespace {

bool squarefree(long m) {
  if (m < 0) m = -m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

BigReal hurwitz_fast(int s, const BigRational& a, const PrecisionContext& ctx) {
  return hurwitz_zeta(s, a, HurwitzMethod::fast, ctx).value;
}

IdentityResidual make_residual(std::string id, std::string statement, BigReal lhs, BigReal rhs) {
  BigReal residual = abs(lhs - rhs);
  return {std::move(id), std::move(statement), std::move(lhs), std::move(rhs), std::move(residual)};
}

}  // namespace

int kronecker_symbol(long d, long n) {
  if (n < 0) throw DomainError("kronecker_symbol: n must be nonnegative");
  if (d == 0 && n == 0) throw DomainError("kronecker_symbol: (0|0) is undefined");
  const BigInt nn(n);
  return mpz_si_kronecker(d, nn.get_mpz_t());
}

bool is_fundamental_discriminant(long d) {
  if (d == 0 || d == 1) return false;
  if (mod(d, 4) == 1) return squarefree(d);
  if (mod(d, 4) != 0) return false;
  const long m = d / 4;
  const long r = mod(m, 4);
  return (r == 2 || r == 3) && squarefree(m);
}

CharacterSpec::CharacterSpec(long d) : d_(d) {
  if (!is_fundamental_discriminant(d)) {
    throw DomainError("discriminant " + std::to_string(d) + " is not fundamental");
  }
}

SeriesResult l_value(const CharacterSpec& chi, int s, const PrecisionContext& ctx, HurwitzMethod method) {
  if (s != 2 && s != 3) throw DomainError("l_value: s must be 2 or 3");
  const long m = chi.modulus();
  std::vector<std::pair<int, std::future<SeriesResult>>> parts;
  for (long j = 1; j < m; ++j) {
    const int c = chi(j);
    if (c == 0) continue;
    parts.emplace_back(c, std::async(std::launch::async, [=] {
                         return hurwitz_zeta(s, make_rational(j, m), method, ctx);
                       }));
  }
  BigReal sum(0, ctx);
  std::int64_t terms = 0;
  for (auto& [c, fut] : parts) {
    const SeriesResult r = fut.get();
    if (c > 0) {
      sum += r.value;
    } else {
      sum -= r.value;
    }
    terms += r.terms_used;
  }
  BigRational scale = make_rational(1, m * m);
  if (s == 3) scale /= m;
  sum *= scale;
  BigReal last(0, ctx);
  return SeriesResult{std::move(sum), terms, std::move(last), ctx};
}

SeriesSpec lminus8_2_series_spec() {
  HypergeometricTerm term;
  term.factors = {{{1, 0}, 3}, {{make_rational(3, 4), 0}, 3}, {{make_rational(3, 8), 0}, -3},
                  {{make_rational(7, 8), 0}, -3}};
  term.geometric_base = make_rational(1, 64);
  term.multiplier = RationalFunction2(parse_poly("5376*n^4+16768*n^3+19296*n^2+9660*n+1761"),
                                      parse_poly("(8*n+3)^3*(8*n+7)^3"));
  SeriesSpec spec;
  spec.name = "lminus8_2";
  spec.first_term = term.multiplier.substitute(Poly2(0), Poly2::x());
  spec.ratio = term_ratio(term);
  spec.base_magnitude = 64;
  return spec;
}

SeriesResult l_minus8_2_fast(const PrecisionContext& ctx) {
  static const SeriesSpec spec = lminus8_2_series_spec();
  SeriesResult r = eval_series(spec, BigRational(0), ctx);
  const BigReal pi = const_pi(ctx);
  r.value += const_sqrt(2, ctx) * pi * pi / BigRational(16);
  return r;
}

std::vector<IdentityResidual> verify_closed_forms(const PrecisionContext& ctx) {
  const BigReal pi = const_pi(ctx);
  const BigReal pi2 = pi * pi;
  const BigReal pi3 = pi2 * pi;
  auto L = [&ctx](long d, int s) { return l_value(CharacterSpec(d), s, ctx).value; };
  auto Z = [&ctx](int s, long p, long q) { return hurwitz_fast(s, make_rational(p, q), ctx); };

  std::vector<IdentityResidual> out;
  out.push_back(make_residual("1a", "8 L_{-4}(2) = -pi^2 + zeta(2,1/4)", L(-4, 2) * BigRational(8),
                              Z(2, 1, 4) - pi2));
  out.push_back(make_residual("1b", "27 L_{-3}(2) = -4 pi^2 + 6 zeta(2,1/3)", L(-3, 2) * BigRational(27),
                              Z(2, 1, 3) * BigRational(6) - pi2 * BigRational(4)));
  out.push_back(make_residual("2", "32 L_{-8}(2) = -4 pi^2 + zeta(2,1/8) + zeta(2,3/8)",
                              L(-8, 2) * BigRational(32), Z(2, 1, 8) + Z(2, 3, 8) - pi2 * BigRational(4)));
  const BigReal root = sqrt(BigReal(25, ctx) - const_sqrt(5, ctx) * BigRational(2));
  out.push_back(make_residual("3", "625 L_5(3) = -4 pi^3 sqrt(25 - 2 sqrt 5) + 10 zeta(3,1/5) - 10 zeta(3,2/5)",
                              L(5, 3) * BigRational(625),
                              (Z(3, 1, 5) - Z(3, 2, 5)) * BigRational(10) - pi3 * root * BigRational(4)));
  out.push_back(make_residual("4", "512 L_8(3) = -16 pi^3 + 2 zeta(3,1/8) - 2 zeta(3,3/8)",
                              L(8, 3) * BigRational(512),
                              (Z(3, 1, 8) - Z(3, 3, 8)) * BigRational(2) - pi3 * BigRational(16)));
  out.push_back(make_residual("5", "1728 L_12(3) = -32 sqrt 3 pi^3 + 2 zeta(3,1/12) - 2 zeta(3,5/12)",
                              L(12, 3) * BigRational(1728),
                              (Z(3, 1, 12) - Z(3, 5, 12)) * BigRational(2) -
                                  const_sqrt(3, ctx) * pi3 * BigRational(32)));
  return out;
}

IdentityResidual eighths_reflection(const PrecisionContext& ctx) {
  const BigReal pi = const_pi(ctx);
  BigReal lhs = hurwitz_fast(2, make_rational(1, 8), ctx) + hurwitz_fast(2, make_rational(7, 8), ctx);
  BigReal rhs = (const_sqrt(2, ctx) * BigRational(2) + BigRational(4)) * pi * pi;
  return make_residual("eighths", "zeta(2,1/8) + zeta(2,7/8) = (4 + 2 sqrt 2) pi^2", std::move(lhs),
                       std::move(rhs));
}

}  // namespace wzeta
