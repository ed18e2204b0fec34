// SPDX-License-Identifier: Apache-2.0
#include "wzeta/contfrac.hpp"

namespace wzeta {

namespace {

BigRational at(const Poly2& p, std::int64_t n) { return p(BigRational(static_cast<long>(n)), 0); }

void require_depth(std::int64_t depth) {
  if (depth < 1) throw DomainError("continued fraction depth must be >= 1");
}

/// Fixed fraction head/(a_{-1} + s b_0/(a_0 + s b_1/(...))) with s = sign.
CFSpec fixed_cf(std::string name, const BigRational& lead, const CFPolynomials& poly, int sign) {
  CFSpec cf;
  cf.name = std::move(name);
  cf.head = 0;
  cf.numerator = [lead, b = poly.b, sign](std::int64_t j) -> BigRational {
    if (j == 1) return lead;
    const BigRational v = at(b, j - 2);
    return sign < 0 ? BigRational(-v) : v;
  };
  cf.denominator = [a = poly.a](std::int64_t j) { return at(a, j - 2); };
  return cf;
}

}  // namespace

CFSpec euler_transform(const BigRational& G0, const Poly2& P, const Poly2& Q) {
  if (P.degree_x() > 0 || Q.degree_x() > 0) throw DomainError("euler_transform: P and Q must depend on n only");
  CFSpec cf;
  cf.name = "euler";
  cf.head = 0;
  cf.numerator = [G0, P, Q](std::int64_t j) -> BigRational {
    if (j == 1) return G0;
    if (j == 2) return -at(P, 0);
    const std::int64_t n = j - 3;
    return -(at(Q, n) * at(P, n + 1));
  };
  cf.denominator = [P, Q](std::int64_t j) -> BigRational {
    if (j == 1) return 1;
    const std::int64_t n = j - 2;
    return at(P, n) + at(Q, n);
  };
  return cf;
}

CFSpec euler_transform(const SeriesSpec& spec, const BigRational& x) {
  CFSpec cf = euler_transform(rf2_eval(spec.first_term, 0, x), spec.ratio.numerator().at_x(x),
                              spec.ratio.denominator().at_x(x));
  cf.name = "euler(" + spec.name + ")";
  return cf;
}

BigReal eval_cf_backward(const CFSpec& cf, std::int64_t depth, const PrecisionContext& ctx) {
  require_depth(depth);
  BigReal tail(0, ctx);
  for (std::int64_t j = depth; j >= 1; --j) {
    BigReal den(cf.denominator(j), ctx);
    den += tail;
    if (den.is_zero()) throw ConvergenceError(cf.name + ": zero denominator at level " + std::to_string(j));
    tail = BigReal(cf.numerator(j), ctx) / den;
  }
  tail += cf.head;
  return tail;
}

std::vector<Convergent> eval_cf_forward(const CFSpec& cf, std::int64_t depth, const PrecisionContext& ctx) {
  require_depth(depth);
  std::vector<Convergent> out;
  out.reserve(static_cast<std::size_t>(depth));
  BigReal p_prev(1, ctx);
  BigReal q_prev(0, ctx);
  BigReal p(cf.head, ctx);
  BigReal q(1, ctx);
  for (std::int64_t j = 1; j <= depth; ++j) {
    const BigRational a = cf.denominator(j);
    const BigRational b = cf.numerator(j);
    BigReal p_next = p * a + p_prev * b;
    BigReal q_next = q * a + q_prev * b;
    if (q_next.is_zero()) throw ConvergenceError(cf.name + ": zero q at level " + std::to_string(j));
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({p, q, j});
  }
  return out;
}

BigRational exact_convergent(const CFSpec& cf, std::int64_t depth) {
  require_depth(depth);
  BigRational tail = 0;
  for (std::int64_t j = depth; j >= 1; --j) {
    const BigRational den = cf.denominator(j) + tail;
    if (den == 0) throw ConvergenceError(cf.name + ": zero denominator at level " + std::to_string(j));
    tail = cf.numerator(j) / den;
  }
  return cf.head + tail;
}

CFPolynomials zeta2_cf_polynomials() {
  return {parse_poly("-(n+1)^3*(21*n+34) - 8*(3+2*n)^3*(21*n+13)"),
          parse_poly("8*(n+1)^3*(21*n+34)*(1+2*n)^3*(21*n-8)")};
}

CFPolynomials zeta3_cf_polynomials() {
  return {parse_poly("-(n+1)^5*(205*n^2+660*n+532) + 32*(2*n+3)^5*(205*n^2+250*n+77)"),
          parse_poly("32*(n+1)^5*(205*n^2+660*n+532)*(1+2*n)^5*(205*n^2-160*n+32)")};
}

Poly2 zeta3_cf_a_negated_variant() {
  return parse_poly("-(n+1)^5*(205*n^2+660*n+532) - 32*(2*n+3)^5*(205*n^2+250*n+77)");
}

CFSpec zeta2_cf_spec() { return fixed_cf("zeta2_cf", 104, zeta2_cf_polynomials(), -1); }
CFSpec zeta3_cf_spec() { return fixed_cf("zeta3_cf", 1232, zeta3_cf_polynomials(), +1); }

}  // namespace wzeta
