// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "support/oracles.hpp"
#include "wzeta/errors.hpp"
#include "wzeta_cli/cli.hpp"

using namespace wzeta;
using namespace wzeta::cli;

namespace {

ComputeRequest request(Target t, std::string a, int digits, std::string method = {}) {
  ComputeRequest r;
  r.target = t;
  r.a = std::move(a);
  r.digits = digits;
  r.method = std::move(method);
  return r;
}

}  // namespace

TEST_CASE("targets parse and print") {
  for (Target t : {Target::zeta2, Target::zeta3, Target::zeta2cf, Target::zeta3cf, Target::L}) {
    CHECK(parse_target(to_string(t)) == t);
  }
  CHECK_THROWS_AS(parse_target("zeta4"), DomainError);
}

TEST_CASE("compute reproduces known values") {
  CHECK(cmd_compute(request(Target::zeta2, "1/5", 40)).value_digits == oracle::kZeta2OneFifth);
  CHECK(cmd_compute(request(Target::zeta3, "1/5", 40)).value_digits == oracle::kZeta3OneFifth);
  CHECK(cmd_compute(request(Target::zeta2, "1/3", 40, "simple")).value_digits == oracle::kZeta2OneThird);
  CHECK(cmd_compute(request(Target::zeta3, "1", 50, "cf")).value_digits == oracle::kZeta3);
  CHECK(cmd_compute(request(Target::zeta2cf, "1", 30)).value_digits == oracle::kPiSquaredOverSix);
  CHECK(cmd_compute(request(Target::zeta3cf, "1", 50)).value_digits == oracle::kZeta3);

  ComputeRequest l = request(Target::L, "1", 30);
  l.discriminant = -4;
  const RunReport catalan = cmd_compute(l);
  CHECK(catalan.value_digits == oracle::kCatalan);
  CHECK(catalan.method == "decomposition");
  l.discriminant = -8;
  l.digits = 40;
  l.method = "fast-series";
  CHECK(cmd_compute(l).value_digits == oracle::kLMinus8At2);
}

TEST_CASE("large arguments are reduced with a warning") {
  const RunReport r = cmd_compute(request(Target::zeta2, "7/2", 30));
  REQUIRE(r.warnings.size() == 1);
  const BigReal oracle_value = hurwitz_reference(2, make_rational(7, 2), PrecisionContext(30));
  CHECK(r.value_digits == oracle_value.to_string(30));
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(cmd_compute(request(Target::zeta2, "0", 10)), DomainError);
  CHECK_THROWS_AS(cmd_compute(request(Target::zeta2, "-1/2", 10)), DomainError);
  CHECK_THROWS_AS(cmd_compute(request(Target::zeta2, "1/x", 10)), ParseError);
  CHECK_THROWS_AS(cmd_compute(request(Target::zeta2, "1/2", 10, "cf")), DomainError);
  CHECK_THROWS_AS(cmd_compute(request(Target::zeta2, "1/2", 10, "bogus")), DomainError);
  CHECK_THROWS_AS(cmd_compute(request(Target::zeta2, "1/2", 0)), DomainError);
  CHECK_THROWS_AS(cmd_compute(request(Target::zeta2cf, "1", 10, "fast")), DomainError);
  ComputeRequest l = request(Target::L, "1", 10);
  l.discriminant = 9;
  CHECK_THROWS_AS(cmd_compute(l), DomainError);
  l.discriminant = 5;
  l.s = 4;
  CHECK_THROWS_AS(cmd_compute(l), DomainError);
  l.s = 2;
  l.method = "fast-series";
  CHECK_THROWS_AS(cmd_compute(l), DomainError);
}

TEST_CASE("reports round-trip through JSON") {
  const RunReport r = cmd_compute(request(Target::zeta3, "7/2", 25));
  const nlohmann::json j = to_json(r);
  CHECK(j.at("method") == "fast");
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
  RunReport empty;
  CHECK(report_from_json(to_json(empty)) == empty);
  CHECK_THROWS(report_from_json(nlohmann::json::object()));
}

TEST_CASE("compute is deterministic") {
  const RunReport a = cmd_compute(request(Target::zeta3, "2/7", 200));
  const RunReport b = cmd_compute(request(Target::zeta3, "2/7", 200));
  CHECK(a.value_digits == b.value_digits);
  CHECK(a.terms_used == b.terms_used);
}

TEST_CASE("guard digits from the environment") {
  ::setenv("WZETA_GUARD_DIGITS", "35", 1);
  CHECK(default_guard_digits() == 35);
  ::setenv("WZETA_GUARD_DIGITS", "x", 1);
  CHECK_THROWS_AS(default_guard_digits(), DomainError);
  ::unsetenv("WZETA_GUARD_DIGITS");
  CHECK(default_guard_digits() == PrecisionContext::kDefaultGuard);
}

TEST_CASE("bench rows") {
  CHECK(cmd_bench(Target::zeta2, {}).empty());
  const auto rows = cmd_bench(Target::zeta3, {50, 100});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].terms < rows[1].terms);
  std::ostringstream out;
  print_bench(Target::zeta3, rows, out);
  CHECK(out.str().find("digits") != std::string::npos);
  CHECK_THROWS_AS(cmd_bench(Target::L, {10}), DomainError);
}

TEST_CASE("verify suites pass") {
  for (const char* suite : {"wz", "closed-forms", "cross-method", "cf"}) {
    std::ostringstream out;
    CAPTURE(suite);
    CHECK(cmd_verify(suite, out) == 0);
    CHECK(out.str().find("checks passed") != std::string::npos);
  }
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_verify("nope", out), DomainError);
}

TEST_CASE("fixtures can be re-derived") {
  CHECK_THROWS_AS(derive_fixture("simple_zeta2"), DomainError);
}
