// SPDX-License-Identifier: Apache-2.0
#include "wzeta/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace wzeta {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return make_rational(p, q);
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

double log10_abs(const BigRational& q) {
  if (q == 0) return -std::numeric_limits<double>::infinity();
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log10(std::fabs(mn) / md) + static_cast<double>(en - ed) * 0.30102999566398119521;
}

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < 1) throw DomainError("precision: digits must be >= 1");
  if (guard < 0) throw DomainError("precision: guard digits must be >= 0");
}

mpfr_prec_t PrecisionContext::bits() const noexcept {
  constexpr double kLog2Of10 = 3.32192809488736234787;
  return static_cast<mpfr_prec_t>(std::ceil(working_digits() * kLog2Of10)) + 4;
}

// --- BigReal ---------------------------------------------------------------

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(const PrecisionContext& ctx) : BigReal(ctx.bits()) {}

BigReal::BigReal(const BigRational& q, mpfr_prec_t bits) : BigReal(bits) {
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigRational& q, const PrecisionContext& ctx) : BigReal(q, ctx.bits()) {}

BigReal::BigReal(long v, const PrecisionContext& ctx) : BigReal(ctx.bits()) {
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

void BigReal::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  if (!is_finite()) return std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp) * 0.30102999566398119521;
}

std::string BigReal::to_string(int digits) const {
  if (digits < 1) throw DomainError("to_string: digits must be >= 1");
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');

  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }

  const auto e = static_cast<long>(exp);
  if (e > 0 && e <= digits) {
    std::string out = sign + mant.substr(0, static_cast<std::size_t>(e));
    if (e < digits) out += "." + mant.substr(static_cast<std::size_t>(e));
    return out;
  }
  if (e <= 0 && e > -6) {
    return sign + "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
  }
  std::string out = sign + mant.substr(0, 1);
  if (digits > 1) out += "." + mant.substr(1);
  return out + "e" + std::to_string(e - 1);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(const BigRational& rhs) {
  mpfr_add_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigRational& rhs) {
  mpfr_sub_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigRational& rhs) {
  mpfr_mul_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigRational& rhs) {
  mpfr_div_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigInt& rhs) {
  mpfr_mul_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigInt& rhs) {
  mpfr_div_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_neg(r.value_, x.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

BigReal abs(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long e) {
  if (e < 0 && x.is_zero()) throw PoleError("pow: zero to a negative power");
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigReal ten_to(long e, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_ui(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

bool abs_below_ten_power(const BigReal& x, long e) {
  if (x.is_zero()) return true;
  if (!x.is_finite()) return false;
  const double l = x.log10_abs();
  const double slack = 1e-9 * (1.0 + std::fabs(l));
  if (l < static_cast<double>(e) - slack) return true;
  if (l > static_cast<double>(e) + slack) return false;
  return abs(x) < ten_to(e, std::max<mpfr_prec_t>(x.precision(), 64));
}

BigRational pochhammer(const BigRational& a, std::int64_t n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  BigRational acc = 1;
  BigRational term = a;
  for (std::int64_t i = 0; i < n; ++i) {
    acc *= term;
    term += 1;
  }
  return acc;
}

BigReal const_pi(const PrecisionContext& ctx) {
  BigReal r(ctx);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal const_sqrt(long m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("const_sqrt: m must be >= 1");
  BigReal r(ctx);
  mpfr_sqrt_ui(r.get(), static_cast<unsigned long>(m), MPFR_RNDN);
  return r;
}

}  // namespace wzeta
