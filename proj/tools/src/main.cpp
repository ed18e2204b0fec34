// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "wzeta/errors.hpp"
#include "wzeta/numeric.hpp"
#include "wzeta_cli/cli.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace wzeta;
  CLI::App app{"High-precision Hurwitz zeta, zeta continued fractions and Dirichlet L-values"};
  app.require_subcommand(0, 1);

  cli::ComputeRequest req;
  std::string target = "zeta2";
  std::optional<std::string> x_offset;
  std::optional<int> guard;
  bool json = false;
  app.add_option("--target", target, "zeta2, zeta3, zeta2cf, zeta3cf or L")->capture_default_str();
  app.add_option("--a", req.a, "Hurwitz argument a as p/q")->capture_default_str();
  auto* x_opt = app.add_option("--x-offset", x_offset, "Offset x with a = 1 + x (alternative to --a)");
  app.get_option("--a")->excludes(x_opt);
  app.add_option("--disc", req.discriminant, "Fundamental discriminant for target L");
  app.add_option("--s", req.s, "2 or 3 for target L")->capture_default_str();
  app.add_option("--digits", req.digits, "Significant digits")->capture_default_str();
  app.add_option("--method", req.method, "simple, fast, oracle, cf, decomposition or fast-series");
  app.add_option("--guard", guard, "Guard digits (default: $WZETA_GUARD_DIGITS or 20)");
  app.add_flag("--json", json, "Emit the run report as one JSON object");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite;
  verify->add_option("suite", suite, "wz, closed-forms, cross-method or cf")->required();

  auto* bench = app.add_subcommand("bench", "Term counts and timings for zeta(s,a)");
  std::string bench_target = "zeta2";
  std::string bench_a = "1/5";
  std::vector<int> bench_digits;
  bench->add_option("--target", bench_target, "zeta2 or zeta3")->capture_default_str();
  bench->add_option("--a", bench_a, "Hurwitz argument")->capture_default_str();
  bench->add_option("--digits", bench_digits, "Digit counts")->delimiter(',');

  auto* cert = app.add_subcommand("certificate", "Re-derive a stored WZ certificate");
  std::string pair;
  std::string comment;
  cert->add_option("pair", pair, "fast_zeta3 or lminus8_fast")->required();
  cert->add_option("--comment", comment, "Comment line for the emitted file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    if (verify->parsed()) return cli::cmd_verify(suite, std::cout) == 0 ? 0 : kExitVerifyFailed;
    if (bench->parsed()) {
      const cli::Target t = cli::parse_target(bench_target);
      cli::print_bench(t, cli::cmd_bench(t, bench_digits, bench_a), std::cout);
      return 0;
    }
    if (cert->parsed()) {
      std::cout << cli::derive_fixture(pair, comment);
      return 0;
    }

    req.target = cli::parse_target(target);
    req.guard = guard ? *guard : cli::default_guard_digits();
    std::vector<std::string> notes;
    if (x_offset) {
      req.a = to_string(parse_rational(*x_offset) + 1);
      notes.push_back("a = 1 + x = " + req.a);
    }
    cli::RunReport report = cli::cmd_compute(req);
    report.warnings.insert(report.warnings.begin(), notes.begin(), notes.end());
    if (json) {
      std::cout << cli::to_json(report).dump() << '\n';
    } else {
      std::cout << report.value_digits << '\n';
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      std::cerr << report.method << ": " << report.terms_used << " terms, " << report.elapsed_ms << " ms\n";
    }
    return 0;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  }
}
