// Verification suites and table export behind the qheis command line.
#pragma once

#include <string>
#include <vector>

#include "qheis/fieldcalc.hpp"

namespace qheis::cli {

struct RunConfig {
  double q0 = 1.1;
  std::string q0_text = "1.1";
  // suite specific default when unset
  bool has_window = false;
  IntWindow window{};
  double tol = 0;  // > 0 replaces every numeric tolerance
};

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct SuiteCheck {
  std::string id;
  Status status = Status::Fail;
  std::string residual;  // number with 17 digits, "0 (exact)" or a witness
};

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<SuiteCheck> checks;  // sorted by id
  double wall_seconds = 0;

  bool ok() const;
  size_t failed() const;
};

const std::vector<std::string>& suite_names();  // without "all"

// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

// The timing field is left out unless asked for, so reports of the same
// configuration are byte-identical.
std::string to_json(const SuiteReport& r, bool timing = false);
std::string to_csv(const SuiteReport& r);

// kind: fig12, spectrum, transform, eigen_table. format: csv or json.
std::string export_table(const std::string& kind, const RunConfig& cfg, const std::string& format);

double parse_q0(const std::string& text);  // "1.1" or "11/10"
IntWindow parse_window(const std::string& text);  // "min:max"
std::string fmt(double v);  // %.17g

}  // namespace qheis::cli
