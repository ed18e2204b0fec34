// SPDX-License-Identifier: Apache-2.0
#include "wzeta/wz.hpp"

#include <algorithm>
#include <cmath>

namespace wzeta {

namespace {

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

bool is_odd(const BigRational& k) {
  BigInt r = k.get_num() % 2;
  return r != 0;
}

BigRational power_of(const BigRational& base, std::int64_t e) {
  BigRational out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

Poly2 linear_in_n(const AffineForm& base) {
  // alpha + beta*k + n, with k in the second Poly2 slot.
  return Poly2::affine(base.constant, 1, base.k_coeff);
}

// Fitting and verification k samples: denominators 3, 5, 7, 11, away from
// integers and half-integers.
const std::vector<BigRational>& fitting_k_values() {
  static const std::vector<BigRational> values = [] {
    std::vector<BigRational> v;
    for (auto [p, q] : std::initializer_list<std::pair<long, long>>{
             {1, 3}, {2, 5}, {3, 7}, {5, 11}, {2, 3}, {4, 5}, {6, 7}, {7, 11}, {4, 3}, {7, 5}, {9, 7}, {13, 11},
             {5, 3}, {8, 5}, {10, 7}, {15, 11}, {7, 3}, {11, 5}, {15, 7}, {19, 11}}) {
      v.push_back(make_rational(p, q));
    }
    return v;
  }();
  return values;
}

const std::vector<BigRational>& fresh_k_values() {
  static const std::vector<BigRational> values = {make_rational(8, 3), make_rational(12, 5), make_rational(17, 7),
                                                  make_rational(29, 11), make_rational(-1, 3), make_rational(1, 5)};
  return values;
}

}  // namespace

HypergeometricTerm HypergeometricTerm::normalized() const {
  HypergeometricTerm out = *this;
  out.factors.clear();
  for (const auto& f : factors) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&f](const PochhammerFactor& g) { return g.base == f.base; });
    if (it == out.factors.end()) {
      out.factors.push_back(f);
    } else {
      it->power += f.power;
    }
  }
  std::erase_if(out.factors, [](const PochhammerFactor& f) { return f.power == 0; });
  return out;
}

HypergeometricTerm HypergeometricTerm::with_multiplier(RationalFunction2 m) const {
  HypergeometricTerm out = *this;
  out.multiplier = std::move(m);
  return out;
}

BigRational eval_kernel(const HypergeometricTerm& term, std::int64_t n, const BigRational& k) {
  if (n < 0) throw DomainError("eval_term: n must be a nonnegative integer");
  BigRational num = 1;
  BigRational den = 1;
  for (const auto& f : term.factors) {
    const BigRational p = pochhammer(f.base(k), n);
    if (f.power > 0) {
      num *= power_of(p, f.power);
    } else {
      den *= power_of(p, -f.power);
    }
  }
  if (den == 0) {
    throw PoleError("Pochhammer pole at (n, k) = (" + std::to_string(n) + ", " + to_string(k) + ")");
  }
  BigRational out = num / den * power_of(term.geometric_base, n);
  if (term.sign_n && n % 2 != 0) out = -out;
  return out;
}

BigRational eval_term_reduced(const HypergeometricTerm& term, std::int64_t n, const BigRational& k) {
  return eval_kernel(term, n, k) * rf2_eval(term.multiplier, BigRational(static_cast<long>(n)), k);
}

BigRational eval_term(const HypergeometricTerm& term, std::int64_t n, const BigRational& k) {
  BigRational v = eval_term_reduced(term, n, k);
  if (term.sign_k) {
    if (!is_integer(k)) throw DomainError("(-1)^k requested at non-integer k = " + to_string(k));
    if (is_odd(k)) v = -v;
  }
  return v;
}

RationalFunction2 term_ratio(const HypergeometricTerm& term) {
  const Poly2 n_plus_1 = Poly2::affine(1, 1, 0);
  const Poly2& mnum = term.multiplier.numerator();
  const Poly2& mden = term.multiplier.denominator();

  BigRational z = term.geometric_base;
  if (term.sign_n) z = -z;
  Poly2 num(z);
  Poly2 den(1);
  for (const auto& f : term.factors) {
    const Poly2 lin = linear_in_n(f.base);
    if (f.power > 0) {
      num *= lin.pow(static_cast<unsigned>(f.power));
    } else {
      den *= lin.pow(static_cast<unsigned>(-f.power));
    }
  }
  num *= mnum.substitute(n_plus_1, Poly2::x()) * mden;
  den *= mden.substitute(n_plus_1, Poly2::x()) * mnum;
  return {num, den};
}

WzCheckResult check_wz(const HypergeometricTerm& F, const HypergeometricTerm& G, std::int64_t n_first,
                       std::int64_t n_last, const std::vector<BigRational>& k_samples) {
  // With (-1)^k on both sides it factors out: the k+1 side picks up a sign.
  const bool reduced = F.sign_k && G.sign_k;
  auto f = [&](std::int64_t n, const BigRational& k) {
    return reduced ? eval_term_reduced(F, n, k) : eval_term(F, n, k);
  };
  auto g = [&](std::int64_t n, const BigRational& k) {
    return reduced ? eval_term_reduced(G, n, k) : eval_term(G, n, k);
  };

  WzCheckResult result;
  for (std::int64_t n = n_first; n <= n_last; ++n) {
    for (const auto& k : k_samples) {
      BigRational lhs;
      BigRational rhs;
      try {
        lhs = f(n + 1, k) - f(n, k);
        const BigRational g_next = g(n, k + 1);
        rhs = (reduced ? -g_next : g_next) - g(n, k);
      } catch (const PoleError&) {
        result.skipped_poles.push_back({n, k});
        continue;
      }
      ++result.points_checked;
      if (lhs != rhs) {
        result.holds = false;
        result.witness = WzWitness{{n, k}, lhs, rhs};
        return result;
      }
    }
  }
  return result;
}

HypergeometricTerm shift_transform(const HypergeometricTerm& F) {
  HypergeometricTerm out;
  out.geometric_base = F.geometric_base;
  out.sign_k = F.sign_k;
  out.sign_n = F.sign_n != F.sign_k;  // (-1)^(k+n) = (-1)^k (-1)^n

  for (const auto& f : F.factors) {
    if (f.base.k_coeff == 0) {
      out.factors.push_back(f);
      continue;
    }
    const BigRational& beta = f.base.k_coeff;
    if (!is_integer(beta) || beta < 0) {
      throw NotRepresentableError("shift_transform: Pochhammer base " + to_string(f.base.constant) + " + (" +
                                  to_string(beta) + ")k has no (b)_{jn} rewrite");
    }
    const long j = beta.get_num().get_si();
    // (b + j n)_n = (b)_{(j+1)n} / (b)_{jn}, b = alpha + j k.
    auto expand = [&](long m, int sign) {
      for (long i = 0; i < m; ++i) {
        AffineForm base{(f.base.constant + i) / BigRational(m), beta / BigRational(m)};
        out.factors.push_back({base, sign * f.power});
      }
      BigRational scale = power_of(BigRational(m), m);
      const BigRational factor = power_of(scale, std::abs(f.power));
      if ((sign * f.power) > 0) {
        out.geometric_base *= factor;
      } else {
        out.geometric_base /= factor;
      }
    };
    expand(j + 1, +1);
    expand(j, -1);
  }
  out.multiplier = F.multiplier.substitute(Poly2::n(), Poly2::affine(0, 1, 1));
  out = out.normalized();

  // Validate against direct substitution.
  const std::vector<BigRational> ks = {0, 1, make_rational(1, 3), make_rational(2, 5)};
  for (std::int64_t n = 0; n <= 4; ++n) {
    for (const auto& k : ks) {
      BigRational direct;
      BigRational rewritten;
      bool direct_pole = false;
      bool rewritten_pole = false;
      try {
        direct = eval_term_reduced(F, n, k + n);
        if (F.sign_k && n % 2 != 0) direct = -direct;
      } catch (const PoleError&) {
        direct_pole = true;
      }
      try {
        rewritten = eval_term_reduced(out, n, k);
      } catch (const PoleError&) {
        rewritten_pole = true;
      }
      if (direct_pole && rewritten_pole) continue;
      if (direct_pole != rewritten_pole || direct != rewritten) {
        throw NotRepresentableError("shift_transform: rewrite disagrees with F(n,k+n) at n = " + std::to_string(n) +
                                    ", k = " + to_string(k));
      }
    }
  }
  return out;
}

namespace {

struct LinearSolution {
  std::vector<BigRational> values;
  std::size_t rank = 0;
  bool consistent = true;
};

/// Gauss-Jordan elimination over Q on an augmented matrix.
LinearSolution solve_exact(std::vector<std::vector<BigRational>> rows, std::size_t unknowns) {
  LinearSolution sol;
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < unknowns && pivot_row < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        best = r;
        break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[pivot_row], rows[best]);
    const BigRational inv = 1 / rows[pivot_row][col];
    for (std::size_t c = col; c <= unknowns; ++c) rows[pivot_row][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const BigRational factor = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  sol.rank = pivot_cols.size();
  for (std::size_t r = pivot_row; r < rows.size(); ++r) {
    if (rows[r][unknowns] != 0) sol.consistent = false;
  }
  sol.values.assign(unknowns, BigRational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) sol.values[pivot_cols[i]] = rows[i][unknowns];
  return sol;
}

std::vector<BigRational> powers(const BigRational& v, int max_deg) {
  std::vector<BigRational> out{BigRational(1)};
  for (int i = 1; i <= max_deg; ++i) out.push_back(out.back() * v);
  return out;
}

}  // namespace

Certificate derive_certificate(const HypergeometricTerm& F, const Poly2& denominator_shape, NumeratorDegrees degrees,
                               std::string source) {
  if (degrees.in_n < 0 || degrees.in_k < 0) throw DomainError("derive_certificate: negative degree");
  if (denominator_shape.is_zero()) throw DomainError("derive_certificate: zero denominator shape");

  const int dn = degrees.in_n;
  const int dk = degrees.in_k;
  const auto unknowns = static_cast<std::size_t>((dn + 1) * (dk + 1));
  const std::size_t wanted = unknowns + 5;
  const bool reduced = F.sign_k;

  const auto& ks = fitting_k_values();
  const std::size_t k_count = std::min<std::size_t>(ks.size(), static_cast<std::size_t>(dk) + 3);

  std::vector<std::vector<BigRational>> rows;
  for (std::int64_t n = 0; rows.size() < wanted || n <= dn + 2; ++n) {
    if (n > 4 * (dn + 3) + 40) break;
    for (std::size_t ki = 0; ki < k_count; ++ki) {
      const BigRational& k = ks[ki];
      const BigRational kn = BigRational(static_cast<long>(n));
      std::vector<BigRational> row(unknowns + 1);
      try {
        const BigRational rhs = eval_term_reduced(F, n + 1, k) - eval_term_reduced(F, n, k);
        const BigRational d0 = denominator_shape(kn, k);
        const BigRational d1 = denominator_shape(kn, k + 1);
        if (d0 == 0 || d1 == 0) continue;
        BigRational w1 = eval_kernel(F, n, k + 1) / d1;
        if (reduced) w1 = -w1;
        const BigRational w0 = eval_kernel(F, n, k) / d0;
        const auto np = powers(kn, dn);
        const auto k0p = powers(k, dk);
        const auto k1p = powers(k + 1, dk);
        std::size_t col = 0;
        for (int i = 0; i <= dn; ++i) {
          for (int j = 0; j <= dk; ++j) {
            row[col++] = np[static_cast<std::size_t>(i)] *
                         (w1 * k1p[static_cast<std::size_t>(j)] - w0 * k0p[static_cast<std::size_t>(j)]);
          }
        }
        row[unknowns] = rhs;
      } catch (const PoleError&) {
        continue;
      }
      rows.push_back(std::move(row));
    }
  }

  const std::string degree_label = "(" + std::to_string(dn) + ", " + std::to_string(dk) + ")";
  const LinearSolution sol = solve_exact(std::move(rows), unknowns);
  if (!sol.consistent) {
    throw CertificateError("no certificate at numerator degree " + degree_label, false);
  }
  if (sol.rank < unknowns) {
    throw CertificateError("underdetermined certificate system at degree " + degree_label + " (rank " +
                               std::to_string(sol.rank) + " of " + std::to_string(unknowns) + ")",
                           true);
  }

  Poly2 numerator;
  std::size_t col = 0;
  for (int i = 0; i <= dn; ++i) {
    for (int j = 0; j <= dk; ++j) numerator += Poly2::monomial(i, j, sol.values[col++]);
  }
  Certificate cert{std::move(source), RationalFunction2(numerator, denominator_shape)};

  const WzCheckResult fresh = check_wz(F, cert.companion(F), 7, 12, fresh_k_values());
  if (!fresh.holds || fresh.points_checked == 0) {
    throw CertificateError("certificate failed verification on the fresh grid", false);
  }
  return cert;
}

Certificate derive_certificate_search(const HypergeometricTerm& F, const Poly2& denominator_shape,
                                      NumeratorDegrees start, NumeratorDegrees limit, std::string source) {
  for (int dn = start.in_n; dn <= limit.in_n; ++dn) {
    for (int dk = start.in_k; dk <= limit.in_k; ++dk) {
      try {
        return derive_certificate(F, denominator_shape, {dn, dk}, source);
      } catch (const CertificateError& e) {
        if (e.underdetermined()) throw;
      }
    }
  }
  throw CertificateError("no certificate up to numerator degree (" + std::to_string(limit.in_n) + ", " +
                             std::to_string(limit.in_k) + ")",
                         false);
}

namespace {

bool decays(const std::vector<double>& seq) {
  if (seq.size() < 2) return false;
  if (!(seq.back() < seq.front())) return false;
  const std::size_t from = seq.size() - std::max<std::size_t>(seq.size() / 4, 1) - 1;
  for (std::size_t i = from; i < seq.size(); ++i) {
    if (seq[i] < seq.back()) return false;
  }
  return true;
}

}  // namespace

DecayReport boundary_decay_report(const HypergeometricTerm& F, const HypergeometricTerm& G, std::int64_t n_max,
                                  std::int64_t k_max) {
  DecayReport report;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    BigRational s = 0;
    const BigRational kv(static_cast<long>(k));
    for (std::int64_t n = 0; n <= k; ++n) s += eval_term(G, n, kv);
    report.g_boundary.push_back(log10_abs(s));
  }
  for (std::int64_t n = 0; n <= n_max; ++n) {
    BigRational s = 0;
    for (std::int64_t k = 0; k <= n; ++k) s += eval_term(F, n, BigRational(static_cast<long>(k)));
    report.f_boundary.push_back(log10_abs(s));
  }
  report.g_decays = decays(report.g_boundary);
  report.f_decays = decays(report.f_boundary);
  return report;
}

}  // namespace wzeta
