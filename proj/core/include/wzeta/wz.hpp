// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wzeta/numeric.hpp"
#include "wzeta/poly.hpp"

namespace wzeta {

/// alpha + beta*k
struct AffineForm {
  BigRational constant;
  BigRational k_coeff;

  BigRational operator()(const BigRational& k) const { return constant + k_coeff * k; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// (base)_n^power; a negative power places the factor in the denominator.
struct PochhammerFactor {
  AffineForm base;
  int power = 1;

  friend bool operator==(const PochhammerFactor&, const PochhammerFactor&) = default;
};

/// Term of the shape
///   prod_i (alpha_i + beta_i k)_n^{p_i} * M(n,k) * z^n * (-1)^n? * (-1)^k?
/// where M is a rational function in (n,k).
struct HypergeometricTerm {
  std::vector<PochhammerFactor> factors;
  RationalFunction2 multiplier;
  BigRational geometric_base = 1;
  bool sign_n = false;
  bool sign_k = false;

  /// Merges factors with equal bases and drops zero powers.
  HypergeometricTerm normalized() const;
  /// Same hypergeometric kernel with a different multiplier.
  HypergeometricTerm with_multiplier(RationalFunction2 m) const;
};

/// Exact value at integer n >= 0. Throws PoleError on a vanishing
/// denominator and DomainError for (-1)^k at non-integer k.
BigRational eval_term(const HypergeometricTerm& term, std::int64_t n, const BigRational& k);

/// Value with the (-1)^k factor left out, defined for every rational k.
/// WZ identities between terms that share (-1)^k hold for this reduced value
/// with the k-shifted side negated.
BigRational eval_term_reduced(const HypergeometricTerm& term, std::int64_t n, const BigRational& k);

/// The prod (.)_n^p * z^n * (-1)^n part alone.
BigRational eval_kernel(const HypergeometricTerm& term, std::int64_t n, const BigRational& k);

/// T(n,k) = term(n+1,k) / term(n,k) as an (unreduced) rational function.
RationalFunction2 term_ratio(const HypergeometricTerm& term);

struct WzPoint {
  std::int64_t n = 0;
  BigRational k;
};

struct WzWitness {
  WzPoint point;
  BigRational lhs;  // F(n+1,k) - F(n,k)
  BigRational rhs;  // G(n,k+1) - G(n,k)
};

struct WzCheckResult {
  bool holds = true;
  std::size_t points_checked = 0;
  std::optional<WzWitness> witness;
  std::vector<WzPoint> skipped_poles;
};

/// Exact check of F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) for n in
/// [n_first, n_last] and every k sample. Pole points are skipped and listed.
WzCheckResult check_wz(const HypergeometricTerm& F, const HypergeometricTerm& G, std::int64_t n_first,
                       std::int64_t n_last, const std::vector<BigRational>& k_samples);

/// F'(n,k) = F(n, k+n). Factors (alpha + beta k)_n with integer beta >= 0 are
/// rewritten through (b)_{jn} = j^{jn} prod_i ((b+i)/j)_n; anything else
/// raises NotRepresentableError. The rewrite is checked against direct
/// substitution at 20 points before returning.
HypergeometricTerm shift_transform(const HypergeometricTerm& F);

struct Certificate {
  std::string source;
  RationalFunction2 R;

  /// G = U * R * z^n (signs carried over from F).
  HypergeometricTerm companion(const HypergeometricTerm& F) const { return F.with_multiplier(R); }
};

struct NumeratorDegrees {
  int in_n = 0;
  int in_k = 0;
};

/// Fits the polynomial numerator N of R = N / denominator_shape so that
/// G = U R z^n is the WZ mate of F = U S z^n. The linear system is built from
/// at least (dn+1)(dk+1)+5 exact point evaluations and solved over Q; the
/// result is re-verified on a fresh grid (n in 7..12, unused k values).
///
/// Throws CertificateError (underdetermined() distinguishes rank deficiency
/// from an inconsistent system).
Certificate derive_certificate(const HypergeometricTerm& F, const Poly2& denominator_shape,
                               NumeratorDegrees degrees, std::string source = {});

/// Starts at `start` and raises the k-degree, then the n-degree, whenever the
/// system is inconsistent, up to `limit`.
Certificate derive_certificate_search(const HypergeometricTerm& F, const Poly2& denominator_shape,
                                      NumeratorDegrees start, NumeratorDegrees limit,
                                      std::string source = {});

struct DecayReport {
  /// log10 |sum_{n=0}^{k} G(n,k)| for k = 0..k_max.
  std::vector<double> g_boundary;
  /// log10 |sum_{k=0}^{n} F(n,k)| for n = 0..n_max.
  std::vector<double> f_boundary;
  bool g_decays = false;
  bool f_decays = false;

  bool flagged() const { return !g_decays || !f_decays; }
};

/// Exact boundary sums for the limits the telescoping argument needs.
/// A sequence "decays" when its last value is below its first and below
/// every value over its last quarter.
DecayReport boundary_decay_report(const HypergeometricTerm& F, const HypergeometricTerm& G, std::int64_t n_max,
                                  std::int64_t k_max);

}  // namespace wzeta
