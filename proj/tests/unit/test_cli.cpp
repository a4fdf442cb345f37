#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "suites.hpp"

using namespace qheis::cli;

namespace {

size_t lines(const std::string& s) {
  std::istringstream in(s);
  std::string l;
  size_t n = 0;
  while (std::getline(in, l)) ++n;
  return n;
}

}  // namespace

TEST(Cli, ParseQ0) {
  EXPECT_DOUBLE_EQ(parse_q0("1.1"), 1.1);
  EXPECT_DOUBLE_EQ(parse_q0("11/10"), 1.1);
  EXPECT_THROW(parse_q0("abc"), std::invalid_argument);
  EXPECT_THROW(parse_q0("-2"), std::invalid_argument);
  EXPECT_THROW(parse_q0("1.1x"), std::invalid_argument);
}

TEST(Cli, ParseWindow) {
  auto w = parse_window("-60:60");
  EXPECT_EQ(w.nmin, -60);
  EXPECT_EQ(w.nmax, 60);
  EXPECT_THROW(parse_window("3:1"), std::invalid_argument);
  EXPECT_THROW(parse_window("3"), std::invalid_argument);
}

TEST(Cli, Fmt) { EXPECT_EQ(fmt(0.1), "0.10000000000000001"); }

TEST(Cli, UnknownSuite) { EXPECT_THROW(run_suite("nope", RunConfig{}), std::invalid_argument); }

TEST(Cli, RmatrixAllPassAndDeterministic) {
  SuiteReport a = run_suite("rmatrix", RunConfig{});
  EXPECT_TRUE(a.ok());
  std::set<std::string> ids;
  for (const auto& c : a.checks) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  EXPECT_TRUE(std::is_sorted(a.checks.begin(), a.checks.end(),
                             [](const SuiteCheck& x, const SuiteCheck& y) { return x.id < y.id; }));
  SuiteReport b = run_suite("rmatrix", RunConfig{});
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(to_csv(a), to_csv(b));
  EXPECT_EQ(to_json(a).find("wall_time"), std::string::npos);
  EXPECT_NE(to_json(a, true).find("wall_time"), std::string::npos);
}

TEST(Cli, FourierGramRecorded) {
  SuiteReport r = run_suite("fourier", RunConfig{});
  bool seen = false;
  for (const auto& c : r.checks)
    if (c.id == "fourier.gram.sin") {
      seen = true;
      EXPECT_EQ(c.status, Status::Pass);
      EXPECT_LT(std::stod(c.residual), 1e-6);
    }
  EXPECT_TRUE(seen);
}

TEST(Cli, TolOverride) {
  RunConfig cfg;
  cfg.tol = 1e-30;
  SuiteReport r = run_suite("groups", cfg);
  EXPECT_FALSE(r.ok());
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) EXPECT_NE(c.residual.find_first_of("0123456789"), std::string::npos);
}

TEST(Cli, Fig12Rows) {
  RunConfig cfg;
  std::string csv = export_table("fig12", cfg, "csv");
  EXPECT_EQ(lines(csv), 42u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,x,cos_q,sin_q");
  EXPECT_EQ(csv, export_table("fig12", cfg, "csv"));
}

TEST(Cli, EigenTable) {
  std::string csv = export_table("eigen_table", RunConfig{}, "csv");
  EXPECT_EQ(lines(csv), 17u);
  EXPECT_NE(csv.find("H_{sigma=+1}^{even},cos_q(x q^(2k+1)),-q^(4k+1)/lambda^2,0,"), std::string::npos);
  EXPECT_EQ(csv.find(",no\n"), std::string::npos);
  EXPECT_THROW(export_table("eigen_table", RunConfig{}, "xml"), std::invalid_argument);
  EXPECT_THROW(export_table("nope", RunConfig{}, "csv"), std::invalid_argument);
}
