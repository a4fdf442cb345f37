// Prints one PASS/FAIL line per acceptance criterion. With a criterion number
// as argument only that one runs. Exit status 0 iff every criterion run passes.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qheis/qgroups.hpp"
#include "suites.hpp"

using namespace qheis;
using namespace qheis::cli;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

RunConfig base_config() {
  RunConfig cfg;
  cfg.q0 = 1.1;
  cfg.q0_text = "1.1";
  return cfg;
}

class Reports {
 public:
  const SuiteReport& get(const std::string& suite) {
    auto it = cache_.find(suite);
    if (it == cache_.end()) {
      RunConfig cfg = base_config();
      if (suite == "fourier" || suite == "representation") {
        cfg.has_window = true;
        cfg.window = {-60, 60};
      }
      it = cache_.emplace(suite, run_suite(suite, cfg)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, SuiteReport> cache_;
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// every check under one of the prefixes must pass; at least `min_count` must exist
Outcome require(const SuiteReport& r, const std::vector<std::string>& prefixes, size_t min_count,
                const std::vector<std::string>& exclude = {}) {
  size_t n = 0;
  std::string bad;
  for (const auto& c : r.checks) {
    bool in = false;
    for (const auto& p : prefixes) in |= starts_with(c.id, p);
    for (const auto& p : exclude) in &= !starts_with(c.id, p);
    if (!in) continue;
    ++n;
    if (c.status != Status::Pass) bad += (bad.empty() ? "" : "; ") + c.id + " = " + c.residual;
  }
  if (n < min_count) return {false, std::to_string(n) + " checks found, expected at least " + std::to_string(min_count)};
  if (!bad.empty()) return {false, bad};
  return {true, std::to_string(n) + " checks"};
}

Outcome both(Outcome a, Outcome b) {
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome metric_and_epsilon_tables() {
  // index order (-, 0, +)
  So3Structure s = so3_build();
  const QScalar q = QScalar::q(), one(1), zero;
  std::array<std::array<QScalar, 3>, 3> eta{};
  for (auto& row : eta) row.fill(zero);
  eta[1][1] = one;
  eta[2][0] = -q.inv();
  eta[0][2] = -q;
  std::array<std::array<std::array<QScalar, 3>, 3>, 3> eps{};
  for (auto& a : eps)
    for (auto& b : a) b.fill(zero);
  eps[2][0][1] = q;
  eps[0][2][1] = -q;
  eps[1][1][1] = one - q * q;
  eps[2][1][2] = one;
  eps[1][2][2] = -q * q;
  eps[0][1][0] = -q * q;
  eps[1][0][0] = one;
  std::string bad;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (!(s.eta_lo[a][b] == eta[a][b])) bad += " eta" + std::to_string(a) + std::to_string(b);
      for (int c = 0; c < 3; ++c)
        if (!(s.eps[a][b][c] == eps[a][b][c])) bad += " eps" + std::to_string(a) + std::to_string(b) + std::to_string(c);
    }
  return {bad.empty(), bad.empty() ? "9 metric and 27 epsilon entries" : "mismatch:" + bad};
}

Outcome figure_property() {
  RunConfig cfg = base_config();
  cfg.has_window = true;
  cfg.window = {0, 240};
  std::istringstream csv(export_table("fig12", cfg, "csv"));
  std::string line;
  std::getline(csv, line);
  const double q0 = 1.1;
  int last_big = -1, nu_max = -1;
  double odd_cos = 0, odd_sin = 0;
  while (std::getline(csv, line)) {
    int n;
    double x, c, s;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &n, &x, &c, &s) != 4) return {false, "bad row " + line};
    if (n % 2 == 0) {
      nu_max = n / 2;
      if (std::pow(q0, n) * c * c >= 1e-12) last_big = n / 2;
    } else if (n <= 81) {
      odd_cos = std::max(odd_cos, std::abs(c));
      odd_sin = std::max(odd_sin, std::abs(s));
    }
  }
  bool tail = last_big < nu_max - 10;
  char buf[200];
  std::snprintf(buf, sizeof buf, "even tail < 1e-12 for nu > %d (checked to %d); odd max |cos| %.3g, |sin| %.3g",
                last_big, nu_max, odd_cos, odd_sin);
  return {tail && odd_cos > 1e3 && odd_sin > 1e3, buf};
}

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  Reports rep;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact calculus identities on random Laurent pairs",
       [&] { return require(rep.get("calculus"), {"calculus."}, 8); }},
      {"Pythagoras coefficients", [&] { return require(rep.get("special"), {"special.pythagoras."}, 2); }},
      {"q-Fourier Gram, Plancherel and double transform on [-60,60]",
       [&] {
         return require(rep.get("fourier"),
                        {"fourier.gram.", "fourier.gram_symmetry.", "fourier.plancherel.", "fourier.double_transform."},
                        8);
       }},
      {"lattice representation, momentum states and spectrum",
       [&] {
         return require(rep.get("representation"),
                        {"representation.algebra_exact", "representation.momentum.", "representation.lambda_map",
                         "representation.gram", "representation.hamiltonian"},
                        7);
       }},
      {"PBW overlap checks and the failing counterexample",
       [&] {
         return both(require(rep.get("rmatrix"), {"rmatrix.pbw."}, 9), require(rep.get("euclid"), {"euclid.pbw"}, 1));
       }},
      {"Yang-Baxter, projectors, RTT and quantum determinant",
       [&] {
         return both(require(rep.get("rmatrix"),
                             {"rmatrix.ybe", "rmatrix.projector.", "rmatrix.rtt.", "rmatrix.det_central"}, 17),
                     require(rep.get("euclid"), {"euclid.so3.ybe"}, 2));
       }},
      {"one-dimensional deformed Heisenberg algebra",
       [&] {
         return require(rep.get("representation"),
                        {"representation.heisenberg.", "representation.scaling.", "representation.tilde."}, 10);
       }},
      {"su_q(2) representations, coproduct and plane covariance",
       [&] { return require(rep.get("groups"), {"groups."}, 100); }},
      {"SO_q(3) R-matrix, projectors and Euclidean space",
       [&] {
         return both(require(rep.get("euclid"), {"euclid."}, 30, {"euclid.pbw"}), metric_and_epsilon_tables());
       }},
      {"cos_q/sin_q lattice decay and growth", [&] { return figure_property(); }},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all &= o.pass;
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  return all ? 0 : 1;
}
