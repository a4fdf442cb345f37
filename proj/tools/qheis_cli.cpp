#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "suites.hpp"

using namespace qheis::cli;

namespace {

int write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed Heisenberg algebra verification suites"};
  app.set_config("--config", "", "TOML or INI file with option values");
  app.require_subcommand(1);

  std::string q0_text = "1.1", window_text, out, format = "json";
  double tol = 0;
  bool timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q0", q0_text, "deformation parameter, float or rational (11/10)");
    sub->add_option("--window", window_text, "lattice window min:max");
    sub->add_option("--out", out, "output file, stdout when omitted");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  std::string suite = "all";
  CLI::App* run = app.add_subcommand("run", "run a verification suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  run->add_option("--suite", suite, "suite name")->check(CLI::IsMember(names));
  run->add_option("--tol", tol, "replace every numeric tolerance")->check(CLI::PositiveNumber);
  run->add_flag("--timing", timing, "include wall time in the JSON report");
  common(run);

  std::string table;
  CLI::App* exp = app.add_subcommand("export", "write a data table");
  exp->add_option("table", table, "fig12, spectrum, transform or eigen_table")
      ->required()
      ->check(CLI::IsMember({"fig12", "spectrum", "transform", "eigen_table"}));
  common(exp);

  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  try {
    cfg.q0 = parse_q0(q0_text);
    cfg.q0_text = q0_text;
    if (!window_text.empty()) {
      cfg.window = parse_window(window_text);
      cfg.has_window = true;
    }
    cfg.tol = tol;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*run) {
      SuiteReport rep = run_suite(suite, cfg);
      std::string text = format == "csv" ? to_csv(rep) : to_json(rep, timing);
      if (int rc = write_out(text, out)) return rc;
      std::fprintf(stderr, "%s: %zu passed, %zu failed, %.3f s\n", suite.c_str(), rep.checks.size() - rep.failed(),
                   rep.failed(), rep.wall_seconds);
      for (const auto& c : rep.checks)
        if (c.status == Status::Fail) std::fprintf(stderr, "  FAIL %s: %s\n", c.id.c_str(), c.residual.c_str());
      return rep.ok() ? 0 : 1;
    }
    return write_out(export_table(table, cfg, format), out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
