// SPDX-License-Identifier: Apache-2.0
#include "wzeta_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "wzeta/certificate_io.hpp"
#include "wzeta/contfrac.hpp"
#include "wzeta/dirichlet.hpp"
#include "wzeta/hurwitz.hpp"
#include "wzeta/wz_catalog.hpp"

namespace wzeta::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

/// Depth whose convergent matches the partial sum carrying `digits` digits.
std::int64_t cf_depth(int digits, long base) { return plan_terms(digits, base) + 10; }

bool below(const BigReal& x, long e) { return abs_below_ten_power(x, e); }

std::string magnitude(const BigReal& x) {
  if (x.is_zero()) return "0";
  return "1e" + std::to_string(static_cast<long>(std::floor(x.log10_abs())));
}

CheckRow residual_row(std::string name, const BigReal& residual, long exponent) {
  return {std::move(name), below(residual, exponent),
          "|diff| ~ " + magnitude(residual) + " (limit 1e" + std::to_string(exponent) + ")"};
}

std::vector<BigRational> k_samples(bool integer_k) {
  if (integer_k) return {0, 1, 2, 3};
  return {0, make_rational(1, 3), make_rational(2, 5), make_rational(5, 7)};
}

std::vector<CheckRow> suite_wz() {
  std::vector<CheckRow> rows;
  for (const auto& pair : catalog::all_pairs()) {
    const WzCheckResult r = check_wz(pair.F, pair.G, 0, 6, k_samples(false));
    rows.push_back({"wz pair " + pair.name, r.holds && r.points_checked > 0,
                    std::to_string(r.points_checked) + " points"});
  }
  {
    auto pair = catalog::simple_zeta2();
    const WzCheckResult r =
        check_wz(pair.F, pair.F.with_multiplier(catalog::simple_zeta2_R_unsquared()), 0, 6, k_samples(false));
    rows.push_back({"unsquared simple_zeta2 certificate is rejected", !r.holds, "witness found"});
  }
  {
    auto pair = catalog::simple_zeta3();
    const Certificate c = derive_certificate(pair.F, parse_poly("4*(2*n+1)*(n+k+1)^4"), {2, 2});
    rows.push_back({"derive simple_zeta3 certificate", c.R.equivalent(pair.G.multiplier), ""});
  }
  {
    auto pair = catalog::fast_zeta2();
    const Certificate c = derive_certificate(pair.F, parse_poly("2*(2*n+k+1)^2*(2*n+1)*(2*n+k+2)^2"), {3, 3});
    rows.push_back({"derive fast_zeta2 certificate", c.R.equivalent(pair.G.multiplier), ""});
  }
  for (const auto& name : {"fast_zeta3", "lminus8_fast"}) {
    const std::string text = derive_fixture(name);
    const Certificate derived = parse_certificate(text);
    const auto stored = std::string(name) == "fast_zeta3" ? catalog::fast_zeta3() : catalog::lminus8_fast();
    rows.push_back({std::string("derived ") + name + " certificate matches fixture",
                    derived.R.equivalent(stored.G.multiplier), ""});
  }
  return rows;
}

std::vector<CheckRow> suite_closed_forms() {
  const PrecisionContext ctx(50);
  std::vector<CheckRow> rows;
  for (const auto& r : verify_closed_forms(ctx)) rows.push_back(residual_row("identity " + r.id, r.residual, -45));
  rows.push_back(residual_row("zeta(2,1/8) + zeta(2,7/8)", eighths_reflection(ctx).residual, -45));
  const BigReal lm8 = l_minus8_2_fast(ctx).value - l_value(CharacterSpec(-8), 2, ctx).value;
  rows.push_back(residual_row("L_{-8}(2) fast series vs decomposition", lm8, -45));
  return rows;
}

std::vector<CheckRow> suite_cross_method() {
  const PrecisionContext ctx(60);
  std::vector<CheckRow> rows;
  for (const auto& a : {"1", "1/2", "1/3", "1/4", "1/5", "3/4", "7/8"}) {
    const BigRational av = parse_rational(a);
    for (int s : {2, 3}) {
      const BigReal fast = hurwitz_zeta(s, av, HurwitzMethod::fast, ctx).value;
      const BigReal simple = hurwitz_zeta(s, av, HurwitzMethod::simple, ctx).value;
      const BigReal oracle = hurwitz_reference(s, av, ctx);
      BigReal worst = abs(fast - simple);
      for (const BigReal& d : {abs(fast - oracle), abs(simple - oracle)}) {
        if (d > worst) worst = d;
      }
      rows.push_back(residual_row("zeta(" + std::to_string(s) + "," + a + ") fast/simple/oracle", worst, -55));
    }
  }
  return rows;
}

std::vector<CheckRow> suite_cf() {
  std::vector<CheckRow> rows;
  const PrecisionContext ctx(300);
  const BigReal pi = const_pi(ctx);
  rows.push_back(residual_row("zeta(2) continued fraction, depth 200",
                              eval_cf_backward(zeta2_cf_spec(), 200, ctx) - pi * pi / BigRational(6), -300));
  rows.push_back(residual_row("zeta(3) continued fraction, depth 200",
                              eval_cf_backward(zeta3_cf_spec(), 200, ctx) - zeta3_fast(1, ctx).value, -300));
  for (const auto& [spec, x] : {std::pair{zeta2_fast_spec(), BigRational(0)},
                                std::pair{zeta2_fast_spec(), make_rational(-3, 4)},
                                std::pair{zeta3_fast_spec(), BigRational(0)}}) {
    const CFSpec cf = euler_transform(spec, x);
    bool ok = true;
    for (std::int64_t d = 1; d <= 25 && ok; ++d) ok = exact_convergent(cf, d) == exact_partial_sum(spec, x, d);
    rows.push_back({"Euler convergents equal partial sums: " + spec.name + " at x = " + wzeta::to_string(x), ok,
                    "depths 1..25, exact"});
  }
  return rows;
}

}  // namespace

Target parse_target(std::string_view name) {
  if (name == "zeta2") return Target::zeta2;
  if (name == "zeta3") return Target::zeta3;
  if (name == "zeta2cf") return Target::zeta2cf;
  if (name == "zeta3cf") return Target::zeta3cf;
  if (name == "L") return Target::L;
  throw DomainError("unknown target '" + std::string(name) + "' (zeta2, zeta3, zeta2cf, zeta3cf, L)");
}

std::string_view to_string(Target t) {
  switch (t) {
    case Target::zeta2:
      return "zeta2";
    case Target::zeta3:
      return "zeta3";
    case Target::zeta2cf:
      return "zeta2cf";
    case Target::zeta3cf:
      return "zeta3cf";
    case Target::L:
      return "L";
  }
  return "?";
}

nlohmann::json to_json(const RunReport& r) {
  return {{"value_digits", r.value_digits},
          {"terms_used", r.terms_used},
          {"elapsed_ms", r.elapsed_ms},
          {"method", r.method},
          {"warnings", r.warnings}};
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  j.at("value_digits").get_to(r.value_digits);
  j.at("terms_used").get_to(r.terms_used);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  j.at("method").get_to(r.method);
  j.at("warnings").get_to(r.warnings);
  return r;
}

int default_guard_digits() {
  const char* env = std::getenv("WZETA_GUARD_DIGITS");
  if (env == nullptr || *env == '\0') return PrecisionContext::kDefaultGuard;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 10000) throw DomainError("WZETA_GUARD_DIGITS must be a nonnegative integer");
  return static_cast<int>(v);
}

RunReport cmd_compute(const ComputeRequest& request) {
  if (request.digits < 1) throw DomainError("digits must be >= 1");
  if (request.guard < 0) throw DomainError("guard must be >= 0");
  const PrecisionContext ctx(request.digits, request.guard);
  const auto t0 = Clock::now();
  RunReport report;
  std::string method = request.method;
  BigReal value(ctx);

  switch (request.target) {
    case Target::zeta2:
    case Target::zeta3: {
      const int s = request.target == Target::zeta2 ? 2 : 3;
      const BigRational a = parse_rational(request.a);
      if (a <= 0) throw DomainError("a must be positive, got " + request.a);
      if (method.empty()) method = "fast";
      if (method == "cf") {
        if (a != 1) throw DomainError("method cf computes zeta(s) and requires a = 1");
        const std::int64_t depth = cf_depth(request.digits, s == 2 ? 64 : 1024);
        value = eval_cf_backward(s == 2 ? zeta2_cf_spec() : zeta3_cf_spec(), depth, ctx);
        report.terms_used = depth;
        break;
      }
      const HurwitzMethod hm = parse_hurwitz_method(method);
      if (hm == HurwitzMethod::fast && a >= 3) report.warnings.push_back("a >= 3 reduced into (0,1] before summing");
      SeriesResult r = hurwitz_zeta(s, a, hm, ctx);
      value = std::move(r.value);
      report.terms_used = r.terms_used;
      break;
    }
    case Target::zeta2cf:
    case Target::zeta3cf: {
      if (method.empty()) method = "cf";
      if (method != "cf") throw DomainError("targets zeta2cf/zeta3cf only support method cf");
      const bool two = request.target == Target::zeta2cf;
      const std::int64_t depth = cf_depth(request.digits, two ? 64 : 1024);
      value = eval_cf_backward(two ? zeta2_cf_spec() : zeta3_cf_spec(), depth, ctx);
      report.terms_used = depth;
      break;
    }
    case Target::L: {
      const CharacterSpec chi(request.discriminant);
      if (request.s != 2 && request.s != 3) throw DomainError("s must be 2 or 3");
      if (method.empty()) method = "decomposition";
      SeriesResult r = [&] {
        if (method == "fast-series") {
          if (request.discriminant != -8 || request.s != 2) {
            throw DomainError("method fast-series exists only for discriminant -8, s = 2");
          }
          return l_minus8_2_fast(ctx);
        }
        if (method == "decomposition") return l_value(chi, request.s, ctx, HurwitzMethod::fast);
        if (method == "simple") return l_value(chi, request.s, ctx, HurwitzMethod::simple);
        throw DomainError("unknown method '" + method + "' for target L");
      }();
      value = std::move(r.value);
      report.terms_used = r.terms_used;
      break;
    }
  }
  report.value_digits = value.to_string(request.digits);
  report.elapsed_ms = ms_since(t0);
  report.method = method;
  return report;
}

std::vector<CheckRow> run_verify_suite(std::string_view suite) {
  if (suite == "wz") return suite_wz();
  if (suite == "closed-forms") return suite_closed_forms();
  if (suite == "cross-method") return suite_cross_method();
  if (suite == "cf") return suite_cf();
  throw DomainError("unknown suite '" + std::string(suite) + "' (wz, closed-forms, cross-method, cf)");
}

int cmd_verify(std::string_view suite, std::ostream& out) {
  const std::vector<CheckRow> rows = run_verify_suite(suite);
  const CheckRow* first_failure = nullptr;
  for (const auto& row : rows) {
    out << (row.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(52) << row.name << ' ' << row.detail << '\n';
    if (!row.pass && first_failure == nullptr) first_failure = &row;
  }
  if (first_failure != nullptr) {
    out << "first failure: " << first_failure->name << '\n';
    return 1;
  }
  out << rows.size() << " checks passed\n";
  return 0;
}

std::vector<BenchRow> cmd_bench(Target target, const std::vector<int>& digits_list, std::string_view a) {
  if (target != Target::zeta2 && target != Target::zeta3) throw DomainError("bench supports zeta2 and zeta3");
  const BigRational av = parse_rational(a);
  std::vector<BenchRow> rows;
  for (int d : digits_list) {
    const PrecisionContext ctx(d);
    const auto t0 = Clock::now();
    const SeriesResult r = target == Target::zeta2 ? zeta2_fast(av, ctx) : zeta3_fast(av, ctx);
    rows.push_back({d, r.terms_used, ms_since(t0)});
  }
  return rows;
}

void print_bench(Target target, const std::vector<BenchRow>& rows, std::ostream& out) {
  out << std::right << std::setw(10) << "digits" << std::setw(10) << "terms" << std::setw(12) << "ms" << "   "
      << to_string(target) << '\n';
  for (const auto& r : rows) {
    out << std::setw(10) << r.digits << std::setw(10) << r.terms << std::setw(12) << r.elapsed_ms << '\n';
  }
}

std::string derive_fixture(std::string_view pair, std::string_view comment) {
  if (pair == "fast_zeta3") {
    const Certificate c = derive_certificate_search(catalog::fast_zeta3_F(), catalog::fast_zeta3_denominator_shape(),
                                                    {8, 4}, {8, 8}, "fast_zeta3");
    return format_certificate(c, comment);
  }
  if (pair == "lminus8_fast") {
    const Certificate c = derive_certificate_search(
        catalog::lminus8_fast_F(), catalog::lminus8_fast_denominator_shape(), {4, 4}, {6, 6}, "lminus8_fast");
    return format_certificate(c, comment);
  }
  throw DomainError("no stored certificate named '" + std::string(pair) + "' (fast_zeta3, lminus8_fast)");
}

}  // namespace wzeta::cli
