// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "wzeta/hurwitz.hpp"
#include "wzeta/numeric.hpp"
#include "wzeta/series.hpp"

namespace wzeta {

/// Kronecker symbol (d|n) for n >= 0; (d, n) = (0, 0) is a DomainError.
int kronecker_symbol(long d, long n);

/// d = 1 mod 4 squarefree, or d = 4m with m = 2,3 mod 4 squarefree; d != 1.
bool is_fundamental_discriminant(long d);

/// Real primitive character n -> (d|n).
class CharacterSpec {
 public:
  /// Throws DomainError unless d is a fundamental discriminant.
  explicit CharacterSpec(long d);

  long discriminant() const noexcept { return d_; }
  long modulus() const noexcept { return d_ < 0 ? -d_ : d_; }
  int operator()(long n) const { return kronecker_symbol(d_, n); }

 private:
  long d_;
};

/// L(s) = |d|^-s sum_{j=1}^{|d|-1} chi(j) zeta(s, j/|d|), each Hurwitz value
/// by `method`. The per-j evaluations run concurrently; terms_used is their
/// total.
SeriesResult l_value(const CharacterSpec& chi, int s, const PrecisionContext& ctx,
                     HurwitzMethod method = HurwitzMethod::fast);

/// Base-64 series whose sum plus sqrt(2) pi^2 / 16 is L_{-8}(2). First
/// term 1761/9261.
SeriesSpec lminus8_2_series_spec();
SeriesResult l_minus8_2_fast(const PrecisionContext& ctx);

struct IdentityResidual {
  std::string id;
  std::string statement;
  BigReal lhs;
  BigReal rhs;
  BigReal residual;  // |lhs - rhs|
};

/// The six closed forms tying L-values of the characters d = -4, -3, -8, 5,
/// 8, 12 to pi and Hurwitz values at rational arguments. The left side uses
/// l_value, the right side fast Hurwitz values.
std::vector<IdentityResidual> verify_closed_forms(const PrecisionContext& ctx);

/// zeta(2,1/8) + zeta(2,7/8) = (4 + 2 sqrt 2) pi^2.
IdentityResidual eighths_reflection(const PrecisionContext& ctx);

}  // namespace wzeta
