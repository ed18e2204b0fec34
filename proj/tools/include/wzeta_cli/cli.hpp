// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wzeta::cli {

enum class Target { zeta2, zeta3, zeta2cf, zeta3cf, L };

Target parse_target(std::string_view name);
std::string_view to_string(Target t);

struct ComputeRequest {
  Target target = Target::zeta2;
  /// Hurwitz argument as "p/q" or "p".
  std::string a = "1";
  long discriminant = 0;
  int s = 2;
  int digits = 50;
  /// simple, fast, oracle, cf, decomposition or fast-series. Empty picks the
  /// target's default.
  std::string method;
  int guard = 20;
};

struct RunReport {
  std::string value_digits;
  std::int64_t terms_used = 0;
  std::int64_t elapsed_ms = 0;
  std::string method;
  std::vector<std::string> warnings;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

/// Guard digits from WZETA_GUARD_DIGITS, else the library default.
int default_guard_digits();

/// Throws wzeta::DomainError for invalid requests and
/// wzeta::ConvergenceError when an evaluation breaks down.
RunReport cmd_compute(const ComputeRequest& request);

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Suites: wz, closed-forms, cross-method, cf. Unknown names raise
/// DomainError.
std::vector<CheckRow> run_verify_suite(std::string_view suite);
/// Prints the table; returns 0 when every row passes, else 1.
int cmd_verify(std::string_view suite, std::ostream& out);

struct BenchRow {
  int digits = 0;
  std::int64_t terms = 0;
  std::int64_t elapsed_ms = 0;
};

/// zeta2 or zeta3 at a = 1/5 (or the given a), one row per digit count.
std::vector<BenchRow> cmd_bench(Target target, const std::vector<int>& digits_list, std::string_view a = "1/5");
void print_bench(Target target, const std::vector<BenchRow>& rows, std::ostream& out);

/// Re-derives a stored certificate (fast_zeta3 or lminus8_fast) and returns
/// it in fixture file format.
std::string derive_fixture(std::string_view pair, std::string_view comment = {});

}  // namespace wzeta::cli
