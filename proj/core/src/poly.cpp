// SPDX-License-Identifier: Apache-2.0
#include "wzeta/poly.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace wzeta {

Poly2::Poly2(const BigRational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

Poly2 Poly2::monomial(int deg_n, int deg_x, const BigRational& coeff) {
  if (deg_n < 0 || deg_x < 0) throw DomainError("Poly2: negative exponent");
  Poly2 p;
  p.add_term({deg_n, deg_x}, coeff);
  return p;
}

Poly2 Poly2::affine(const BigRational& c0, const BigRational& cn, const BigRational& cx) {
  Poly2 p(c0);
  p.add_term({1, 0}, cn);
  p.add_term({0, 1}, cx);
  return p;
}

bool Poly2::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

int Poly2::degree_n() const noexcept {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int Poly2::degree_x() const noexcept {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

BigRational Poly2::coefficient(int deg_n, int deg_x) const {
  auto it = terms_.find({deg_n, deg_x});
  return it == terms_.end() ? BigRational(0) : it->second;
}

void Poly2::add_term(const Exponent& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& rhs) {
  Poly2 out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Poly2& Poly2::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 result(1);
  Poly2 base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Poly2 Poly2::substitute(const Poly2& n_by, const Poly2& x_by) const {
  std::vector<Poly2> n_pows{Poly2(1)};
  std::vector<Poly2> x_pows{Poly2(1)};
  for (int i = 1; i <= degree_n(); ++i) n_pows.push_back(n_pows.back() * n_by);
  for (int j = 1; j <= degree_x(); ++j) x_pows.push_back(x_pows.back() * x_by);
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    Poly2 t = n_pows[static_cast<std::size_t>(e.first)] * x_pows[static_cast<std::size_t>(e.second)];
    t *= c;
    out += t;
  }
  return out;
}

Poly2 Poly2::at_x(const BigRational& x) const { return substitute(n(), Poly2(x)); }

BigRational Poly2::operator()(const BigRational& nv, const BigRational& xv) const {
  // Horner in n over x-polynomial coefficients.
  const int dn = degree_n();
  std::vector<BigRational> by_n(static_cast<std::size_t>(dn) + 1, BigRational(0));
  std::vector<BigRational> x_pows{BigRational(1)};
  for (int j = 1; j <= degree_x(); ++j) x_pows.push_back(x_pows.back() * xv);
  for (const auto& [e, c] : terms_) by_n[static_cast<std::size_t>(e.first)] += c * x_pows[static_cast<std::size_t>(e.second)];
  BigRational acc = 0;
  for (int i = dn; i >= 0; --i) acc = acc * nv + by_n[static_cast<std::size_t>(i)];
  return acc;
}

BigReal Poly2::operator()(const BigRational& nv, const BigReal& xv) const {
  // Horner in x over exact n-polynomial coefficients.
  const int dx = degree_x();
  std::vector<BigRational> by_x(static_cast<std::size_t>(dx) + 1, BigRational(0));
  std::vector<BigRational> n_pows{BigRational(1)};
  for (int i = 1; i <= degree_n(); ++i) n_pows.push_back(n_pows.back() * nv);
  for (const auto& [e, c] : terms_) by_x[static_cast<std::size_t>(e.second)] += c * n_pows[static_cast<std::size_t>(e.first)];
  BigReal acc(xv.precision());
  for (int j = dx; j >= 0; --j) {
    acc *= xv;
    acc += by_x[static_cast<std::size_t>(j)];
  }
  return acc;
}

std::string Poly2::to_string(char n_name, char x_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, then by n-degree.
  std::vector<std::pair<Exponent, BigRational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  bool first = true;
  for (const auto& [e, c] : ordered) {
    BigRational mag = c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag < 0) mag = -mag;
    first = false;
    const bool is_unit = mag == 1;
    std::string factors;
    auto append_var = [&factors](char name, int deg) {
      if (deg == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (deg > 1) factors += "^" + std::to_string(deg);
    };
    append_var(n_name, e.first);
    append_var(x_name, e.second);
    if (factors.empty()) {
      out += wzeta::to_string(mag);
    } else if (is_unit) {
      out += factors;
    } else {
      out += wzeta::to_string(mag) + "*" + factors;
    }
  }
  return out;
}

// --- parser ----------------------------------------------------------------

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly2 parse() {
    Poly2 p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  Poly2 expression() {
    skip_space();
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = take() == '-';
    Poly2 acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (peek() == '+') {
        take();
        acc += term();
      } else if (peek() == '-') {
        take();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly2 term() {
    Poly2 acc = power();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      take();
      acc *= power();
    }
  }

  Poly2 power() {
    Poly2 base = atom();
    skip_space();
    if (peek() == '^') {
      take();
      skip_space();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) take();
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly2 atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      take();
      Poly2 inner = expression();
      skip_space();
      if (take() != ')') fail("expected ')'");
      return inner;
    }
    if (c == 'n') {
      take();
      return Poly2::n();
    }
    if (c == 'x' || c == 'k') {
      take();
      return Poly2::x();
    }
    if (c == '-') {
      take();
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) take();
      if (peek() == '/' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        take();
        while (std::isdigit(static_cast<unsigned char>(peek()))) take();
      }
      return Poly2(parse_rational(text_.substr(start, pos_ - start)));
    }
    fail("unexpected token");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("parse_poly: " + why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// --- RationalFunction2 -----------------------------------------------------

RationalFunction2::RationalFunction2(Poly2 numerator, Poly2 denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("RationalFunction2: zero denominator polynomial");
}

RationalFunction2 RationalFunction2::substitute(const Poly2& n_by, const Poly2& x_by) const {
  return {num_.substitute(n_by, x_by), den_.substitute(n_by, x_by)};
}

RationalFunction2 operator*(const RationalFunction2& a, const RationalFunction2& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction2 operator/(const RationalFunction2& a, const RationalFunction2& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction2 operator+(const RationalFunction2& a, const RationalFunction2& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction2 operator-(const RationalFunction2& a, const RationalFunction2& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

bool RationalFunction2::equivalent(const RationalFunction2& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFunction2::to_string(char n_name, char x_name) const {
  return "(" + num_.to_string(n_name, x_name) + ")/(" + den_.to_string(n_name, x_name) + ")";
}

BigRational rf2_eval(const RationalFunction2& f, const BigRational& n, const BigRational& x) {
  const BigRational den = f.denominator()(n, x);
  if (den == 0) {
    throw PoleError("pole at (n, x) = (" + to_string(n) + ", " + to_string(x) + ")");
  }
  return f.numerator()(n, x) / den;
}

BigReal rf2_eval(const RationalFunction2& f, const BigRational& n, const BigReal& x) {
  BigReal den = f.denominator()(n, x);
  if (den.is_zero()) throw PoleError("pole at n = " + to_string(n) + " for real x");
  return f.numerator()(n, x) / den;
}

}  // namespace wzeta
