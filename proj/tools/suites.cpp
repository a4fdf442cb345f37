#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qheis/latrep.hpp"
#include "qheis/ncalg.hpp"
#include "qheis/qfourier.hpp"
#include "qheis/qgroups.hpp"
#include "qheis/qspecial.hpp"
#include "qheis/rmatrix.hpp"

namespace qheis::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool SuiteReport::ok() const { return failed() == 0; }

size_t SuiteReport::failed() const {
  return static_cast<size_t>(
      std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.status == Status::Fail; }));
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_q0(const std::string& text) {
  try {
    double v;
    if (text.find('/') != std::string::npos) {
      mpq_class r(text);
      r.canonicalize();
      v = r.get_d();
    } else {
      size_t used = 0;
      v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    }
    if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("q0 must be a positive float or rational: " + text);
  }
}

IntWindow parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("window must be min:max: " + text);
  try {
    size_t u1 = 0, u2 = 0;
    std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    int lo = std::stoi(a, &u1), hi = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size() || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("window must be min:max with min <= max: " + text);
  }
}

namespace {

std::string window_text(const IntWindow& w) { return std::to_string(w.nmin) + ":" + std::to_string(w.nmax); }

class Collector {
 public:
  Collector(std::string prefix, const RunConfig& cfg) : prefix_(std::move(prefix)), cfg_(cfg) {}

  void exact(const std::string& id, bool pass, const std::string& witness = "") {
    add(id, pass, pass ? "0 (exact)" : (witness.empty() ? "nonzero" : witness));
  }
  void check(const Check& c) { add(c.id, c.pass, c.detail); }
  void checks(const std::vector<Check>& cs) {
    for (const auto& c : cs) check(c);
  }
  // residual below tolerance (--tol replaces tol)
  void numeric(const std::string& id, double value, double tol) {
    double t = cfg_.tol > 0 ? cfg_.tol : tol;
    add(id, std::isfinite(value) && value < t, fmt(value));
  }
  void info(const std::string& id, bool pass, const std::string& text) { add(id, pass, text); }
  void skipped(const std::string& id, const std::string& why) {
    out_.push_back({qualified(id), Status::Skipped, why});
  }

  std::vector<SuiteCheck> take() { return std::move(out_); }

 private:
  void add(const std::string& id, bool pass, const std::string& text) {
    out_.push_back({qualified(id), pass ? Status::Pass : Status::Fail, text});
  }
  std::string qualified(const std::string& id) const {
    return id.rfind(prefix_ + ".", 0) == 0 ? id : prefix_ + "." + id;
  }
  std::string prefix_;
  const RunConfig& cfg_;
  std::vector<SuiteCheck> out_;
};

// ---------------------------------------------------------------------------

FieldElem random_field(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-8, 8), coef(-4, 4), qe(-3, 3), nterm(1, 5), kind(0, 3);
  FieldElem f;
  int n = nterm(rng);
  for (int i = 0; i < n; ++i) {
    QScalar c = QScalar(coef(rng)) * QScalar::t_pow(qe(rng));
    if (kind(rng) == 0) c = c / (QScalar::q() + QScalar(2));
    f += FieldElem::monomial(c, deg(rng));
  }
  return f;
}

void suite_calculus(Collector& c, const RunConfig&) {
  std::mt19937 rng(20240611);
  const int pairs = 120;
  std::map<std::string, std::string> first_fail;
  auto note = [&](const char* id, bool ok, const FieldElem& f, const FieldElem& g) {
    if (!ok && !first_fail.count(id)) first_fail[id] = "f = " + f.str() + "; g = " + g.str();
  };
  const QScalar th = QScalar::t_pow(1), thi = QScalar::t_pow(-1);
  for (int it = 0; it < pairs; ++it) {
    FieldElem f = random_field(rng), g = random_field(rng);
    FieldElem lhs = nabla(f * g);
    note("leibniz_1", lhs == nabla(f) * l_shift(g, -1) + l_shift(f, 1) * nabla(g), f, g);
    note("leibniz_2", lhs == nabla(f) * l_shift(g, 1) + l_shift(f, -1) * nabla(g), f, g);
    note("grouplike_L", l_shift(f * g, 1) == l_shift(f, 1) * l_shift(g, 1), f, g);
    note("grouplike_Linv", l_shift(f * g, -1) == l_shift(f, -1) * l_shift(g, -1), f, g);
    FieldElem green = nabla(nabla(f)) * g - f * nabla(nabla(g)) -
                      nabla(nabla(f) * l_shift(g, -1) - l_shift(f, -1) * nabla(g));
    note("green", green.is_zero(), f, g);
    FieldElem X = FieldElem::x(1);
    FieldElem hom = FieldElem(th) * (X * nabla(f)) - FieldElem(thi) * nabla(X * f) + FieldElem(thi) * l_shift(f, 1);
    bool hom_ok = hom.is_zero() && l_shift(X * f, 1) == FieldElem(QScalar::q_pow(-1)) * (X * l_shift(f, 1)) &&
                  l_shift(nabla(f), 1) == FieldElem(QScalar::q()) * nabla(l_shift(f, 1));
    note("homomorphism", hom_ok, f, g);
    FieldElem integrand = nabla(f) * l_shift(g, -1) + l_shift(f, 1) * nabla(g);
    FieldElem fg = f * g;
    note("partial_integration", grad_inverse(integrand) == fg - FieldElem(fg.coeff(0)), f, g);
  }
  for (const char* id : {"leibniz_1", "leibniz_2", "grouplike_L", "grouplike_Linv", "green", "homomorphism",
                         "partial_integration"}) {
    auto it = first_fail.find(id);
    if (it == first_fail.end())
      c.info(id, true, "0 (exact) on " + std::to_string(pairs) + " pairs");
    else
      c.info(id, false, it->second);
  }
  // the homomorphism on monomials x^m, m in [-10, 10]
  bool mono = true;
  for (int m = -10; m <= 10; ++m) {
    FieldElem e = FieldElem::x(m), X = FieldElem::x(1);
    mono &= (FieldElem(th) * (X * nabla(e)) - FieldElem(thi) * nabla(X * e) + FieldElem(thi) * l_shift(e, 1)).is_zero();
  }
  c.exact("homomorphism_monomials", mono);
}

// ---------------------------------------------------------------------------

struct Fig12Row {
  int n;
  double x, cos, sin;
};

std::vector<Fig12Row> fig12_rows(double q0, IntWindow w) {
  std::vector<Fig12Row> rows;
  for (int n = w.nmin; n <= w.nmax; ++n)
    rows.push_back({n, std::pow(q0, n), trig_eval_lattice(TrigKind::Cos, n, q0), trig_eval_lattice(TrigKind::Sin, n, q0)});
  return rows;
}

void suite_special(Collector& c, const RunConfig& cfg) {
  c.exact("pythagoras.n0", pythagoras_coeff(0).is_one(), pythagoras_coeff(0).str());
  bool zero = true;
  std::string w;
  for (long n = 1; n <= 20; ++n)
    if (!pythagoras_coeff(n).is_zero()) {
      zero = false;
      w = "n = " + std::to_string(n) + ": " + pythagoras_coeff(n).str();
      break;
    }
  c.exact("pythagoras.n1_20", zero, w);
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    std::string k = to_string(kind);
    bool nab = true, lap = true;
    for (QScalar s : {QScalar(1), QScalar::q(), QScalar::q_pow(-2)}) {
      nab &= trig_nabla_residual(kind, s, 24).truncated_below(24).is_zero();
      lap &= trig_laplace_residual(kind, s, 24).truncated_below(24).is_zero();
    }
    c.exact("nabla." + k, nab);
    c.exact("laplace." + k, lap);
  }
  // even lattice: weighted tail below 1e-12 past some nu; odd lattice grows
  const double q0 = cfg.q0;
  if (q0 <= 1) {
    c.skipped("fig12.even_tail", "needs q0 > 1");
    return;
  }
  int last = -1;
  for (int nu = 0; nu <= 120; ++nu) {
    double v = trig_eval_lattice(TrigKind::Cos, 2 * nu, q0);
    if (std::pow(q0, 2 * nu) * v * v >= 1e-12) last = nu;
  }
  c.info("fig12.even_tail", last < 120, "q^(2nu) cos_q(q^(2nu))^2 < 1e-12 for nu > " + std::to_string(last));
  double cmax = 0, smax = 0;
  for (int n = 0; n <= 40; ++n) {
    cmax = std::max(cmax, std::abs(trig_eval_lattice(TrigKind::Cos, 2 * n + 1, q0)));
    smax = std::max(smax, std::abs(trig_eval_lattice(TrigKind::Sin, 2 * n + 1, q0)));
  }
  c.info("fig12.odd_cos_growth", cmax > 1e3, "max |cos_q(q^(2n+1))|, n <= 40: " + fmt(cmax));
  c.info("fig12.odd_sin_growth", smax > 1e3, "max |sin_q(q^(2n+1))|, n <= 40: " + fmt(smax));
}

// ---------------------------------------------------------------------------

LatticeFunction random_lattice_function(unsigned seed, int lo, int hi, double q0) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  LatticeFunction g;
  g.q0 = q0;
  for (int n = lo; n <= hi; ++n) g.samples[n] = {d(rng), d(rng)};
  return g;
}

void suite_fourier(Collector& c, const RunConfig& cfg) {
  const double q0 = cfg.q0;
  if (q0 <= 1) {
    c.skipped("all", "needs q0 > 1");
    return;
  }
  IntWindow sum = cfg.has_window ? cfg.window : IntWindow{-60, 60};
  IntWindow index{-3, 3};
  LatticeFunction g = random_lattice_function(7, -5, 5, q0);
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    std::string k = to_string(kind);
    GramReport r = gram_check(kind, index, sum, q0);
    c.numeric("gram." + k, r.residual, 1e-6);
    c.numeric("gram_symmetry." + k, r.asymmetry, 1e-12);
    c.numeric("plancherel." + k, plancherel_residual(kind, g, sum), 1e-8);
    c.numeric("double_transform." + k, double_transform_residual(kind, g, sum), 1e-8);
    // the same identities with a window sized from the kernel decay
    IntWindow gw = default_window(kind, q0, index), tw = default_window(kind, q0, g.support());
    c.numeric("adequate_window.gram." + k, gram_check(kind, index, gw, q0).residual, 1e-6);
    c.numeric("adequate_window.plancherel." + k, plancherel_residual(kind, g, tw), 1e-8);
    c.numeric("adequate_window.double_transform." + k, double_transform_residual(kind, g, tw), 1e-8);
  }
}

// ---------------------------------------------------------------------------

void suite_representation(Collector& c, const RunConfig& cfg) {
  const double q0 = cfg.q0;
  Window small;
  small.nmin = -10;
  small.nmax = 10;
  c.exact("algebra_exact", algebra_residual(build_ops(small, OpMode::Exact, q0)) == 0.0);
  if (q0 <= 1) {
    c.skipped("momentum", "needs q0 > 1");
  } else {
    Window w;
    IntWindow iw = cfg.has_window ? cfg.window : IntWindow{-60, 60};
    w.nmin = iw.nmin;
    w.nmax = iw.nmax;
    LatticeOps ops = build_ops(w, OpMode::Numeric, q0);
    for (Family f : {Family::I, Family::II}) {
      double worst = 0;
      for (int tau : {1, -1})
        for (int nu = -3; nu <= 3; ++nu) {
          MomentumState st = momentum_state(tau, nu, f, true, w, q0);
          worst = std::max(worst, eigen_residual(ops.p, st, momentum_eigenvalue(st)));
          for (int sigma : {1, -1}) {
            MomentumState si = momentum_state(tau, nu, f, false, w, q0, sigma);
            worst = std::max(worst, eigen_residual(ops.p, si, momentum_eigenvalue(si)));
          }
        }
      c.numeric(std::string("momentum.family_") + to_string(f), worst, 1e-6);
    }
    double map = 0;
    for (int tau : {1, -1})
      for (int nu = -3; nu <= 3; ++nu) {
        auto i0 = momentum_state(tau, nu, Family::I, true, w, q0);
        auto ii = momentum_state(tau, nu, Family::II, true, w, q0);
        auto i1 = momentum_state(tau, nu - 1, Family::I, true, w, q0);
        map = std::max({map, map_residual(ops.lambda_op, i0.coeffs, ii.coeffs),
                        map_residual(ops.lambda_op, ii.coeffs, i1.coeffs)});
      }
    c.numeric("lambda_map", map, 1e-6);
    Window gw = window_for_states({-3, 3}, q0);
    c.numeric("gram", momentum_gram_deviation({-3, 3}, gw, q0), 1e-6);
    double h = 0;
    for (const auto& e : hamiltonian_check(w, q0)) h = std::max(h, e.residual);
    c.numeric("hamiltonian", h, 1e-6);
    double ratio = 0;
    for (int nu = -3; nu < 3; ++nu)
      ratio = std::max(ratio, std::abs(hamiltonian_eigenvalue(Family::I, nu + 1, 1, q0) /
                                           hamiltonian_eigenvalue(Family::I, nu, 1, q0) -
                                       std::pow(q0, 4)));
    c.numeric("hamiltonian_ratio", ratio, 1e-10);
  }
  c.checks(heisenberg_1d_check());
}

// ---------------------------------------------------------------------------

constexpr const char* kQuantumMatrix =
    "gens: a b c d\n"
    "a*b = q*b*a\n"
    "a*c = q*c*a\n"
    "a*d = d*a + lambda*b*c\n"
    "b*c = c*b\n"
    "b*d = q*d*b\n"
    "c*d = q*d*c\n";

void suite_rmatrix(Collector& c, const RunConfig&) {
  for (int n : {2, 3}) {
    std::string tag = "gl" + std::to_string(n);
    RMatrix r = r_gl(n);
    size_t y = ybe_residual(r), yi = ybe_residual(r.inverse());
    c.exact("ybe." + tag, y == 0, std::to_string(y) + " nonzero entries");
    c.exact("ybe_inverse." + tag, yi == 0, std::to_string(yi) + " nonzero entries");
    auto [A, S] = projectors_gl(r);
    RMatrix one = RMatrix::identity(n);
    c.exact("projector.A2." + tag, A.matrix * A.matrix == A.matrix);
    c.exact("projector.S2." + tag, S.matrix * S.matrix == S.matrix);
    c.exact("projector.AS." + tag, (A.matrix * S.matrix).is_zero());
    c.exact("projector.sum." + tag, A.matrix + S.matrix == one);
    c.exact("projector.R." + tag, S.matrix * QScalar::q() - A.matrix * QScalar::q_pow(-1) == r);
    long ra = rank_of(A.matrix), rs = rank_of(S.matrix);
    c.info("projector.ranks." + tag, ra == n * (n - 1) / 2 && rs == n * (n + 1) / 2,
           std::to_string(ra) + "," + std::to_string(rs));
  }
  RewriteSystem sl2 = parse_relations(kQuantumMatrix).system;
  auto rtt = rtt_relations(r_gl(2));
  bool all_zero = rtt.size() == 16;
  for (const auto& p : rtt) all_zero &= normal_order(p, sl2).is_zero();
  c.exact("rtt.reduce_to_quantum_matrix", all_zero);
  RewriteSystem from_rtt = system_from_pairs(rtt_alphabet(2), interreduce(rtt));
  c.exact("rtt.same_ideal", from_rtt.rules() == sl2.rules());
  size_t mres = rtt_matrix_residual(r_gl(2));
  c.exact("rtt.matrix_rep", mres == 0, std::to_string(mres));
  NCPoly det = parse_ncpoly("a*d - q*b*c", sl2.alphabet());
  bool central = true;
  for (const auto& r : commutant_residual(det, sl2, {0, 1, 2, 3})) central &= r.is_zero();
  c.exact("det_central", central);

  auto pbw = [&](const std::string& id, const RewriteSystem& sys) {
    auto fails = pbw_overlap_check(sys);
    c.info("pbw." + id, fails.empty(),
           fails.empty() ? "0 overlap failures" : std::to_string(fails.size()) + " failures, first at " +
                                                      sys.alphabet().str(fails[0].word));
  };
  pbw("quantum_matrix", sl2);
  RMatrix r2 = r_gl(2);
  pbw("x_d", plane_system(r2, PlaneKind::XD));
  pbw("x_d_dhat", plane_system(r2, PlaneKind::XDDHat));
  pbw("x_xbar", plane_system(r2, PlaneKind::XXBar));
  pbw("x_dx", plane_system(r2, PlaneKind::XDx));
  pbw("x_dx_d", plane_system(r2, PlaneKind::XDxD));
  pbw("two_planes", plane_system(r2, PlaneKind::XY));
  pbw("rtt_gl3", system_from_pairs(rtt_alphabet(3), interreduce(rtt_relations(r_gl(3)))));

  RewriteSystem ce = parse_relations("gens: x y\ny*x -> x*y + x^2 + y^2\n").system;
  auto fails = pbw_overlap_check(ce);
  NCPoly want = parse_ncpoly("x^3 + y^3 + x^2*y + x*y^2", ce.alphabet());
  bool ok = fails.size() == 1 && fails[0].witness == want;
  c.info("pbw.counterexample_fails", ok,
         fails.empty() ? "no failure" : "witness " + fails[0].witness.str(ce.alphabet()));
}

// ---------------------------------------------------------------------------

void suite_groups(Collector& c, const RunConfig& cfg) {
  std::vector<double> qs{1.1, 1.5};
  if (std::find(qs.begin(), qs.end(), cfg.q0) == qs.end()) qs.push_back(cfg.q0);
  for (double q0 : qs)
    for (int tj : {1, 2, 3, 4, 8}) {
      std::string tag = "j=" + std::to_string(tj) + "/2.q0=" + fmt(q0);
      Suq2Residuals r = suq2_residuals(suq2_rep(tj, q0));
      c.numeric("suq2.algebra." + tag, r.algebra, 1e-10);
      c.numeric("suq2.tau_scaling." + tag, r.tau_scaling, 1e-10);
      c.numeric("suq2.conjugation." + tag, r.conjugation, 1e-10);
      if (q0 == 1.0)
        c.numeric("suq2.classical." + tag, r.classical, 1e-12);
      else
        c.numeric("suq2.casimir." + tag, r.casimir, 1e-10);
    }
  for (double q0 : qs)
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}, {4, 8}, {0, 4}}) {
      std::string tag = std::to_string(a) + "/2x" + std::to_string(b) + "/2.q0=" + fmt(q0);
      c.numeric("coproduct." + tag, coproduct_residual(a, b, q0), 1e-10);
    }
  for (int tj = 0; tj <= 8; ++tj)
    for (auto ch : suq2_exact_checks(tj)) {
      ch.id = "suq2." + ch.id;
      c.check(ch);
    }
  // spin 1/2 and 1 matrix elements, squared
  const QScalar q = QScalar::q(), s = QScalar(1) + q * q;
  SuqRep h = suq2_rep(1, 1.1), o = suq2_rep(2, 1.1);
  c.exact("suq2.table.j=1/2", h.Tplus_sq[0] == QScalar::q_pow(-2) && h.Tminus_sq[0] == QScalar::q_pow(2) &&
                                  h.T3_exact[0] == -q && h.T3_exact[1] == QScalar::q_pow(-1));
  c.exact("suq2.table.j=1", o.Tplus_sq[0] == QScalar::q_pow(-2) * s && o.Tplus_sq[1] == QScalar::q_pow(-4) * s &&
                                o.Tminus_sq[0] == q * q * s && o.Tminus_sq[1] == s && o.T3_exact[0] == -q * s &&
                                o.T3_exact[1].is_zero() &&
                                o.T3_exact[2] == QScalar::q_pow(-1) * (QScalar(1) + QScalar::q_pow(-2)));
  c.checks(suq2_plane_covariance());
}

void suite_euclid(Collector& c, const RunConfig&) {
  So3Structure s = so3_build();
  c.checks(so3_checks(s));
  c.checks(euclid3_checks(s));
}

using SuiteFn = std::function<void(Collector&, const RunConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"calculus", suite_calculus}, {"special", suite_special}, {"fourier", suite_fourier},
      {"representation", suite_representation}, {"rmatrix", suite_rmatrix}, {"groups", suite_groups},
      {"euclid", suite_euclid}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"calculus", "special", "fourier", "representation",
                                              "rmatrix", "groups", "euclid"};
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name != "all" && !registry().count(name)) throw std::invalid_argument("unknown suite: " + name);
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.config = cfg;
  for (const auto& s : suite_names()) {
    if (name != "all" && name != s) continue;
    Collector c(s, cfg);
    registry().at(s)(c, cfg);
    auto part = c.take();
    rep.checks.insert(rep.checks.end(), part.begin(), part.end());
  }
  std::sort(rep.checks.begin(), rep.checks.end(), [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
  for (size_t i = 1; i < rep.checks.size(); ++i)
    if (rep.checks[i].id == rep.checks[i - 1].id) throw std::logic_error("duplicate check id " + rep.checks[i].id);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["q0"] = cfg.q0_text;
  j["window"] = cfg.has_window ? window_text(cfg.window) : "default";
  j["tol"] = cfg.tol > 0 ? fmt(cfg.tol) : "default";
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const SuiteReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["config"] = config_json(r.config);
  j["passed"] = r.checks.size() - r.failed();
  j["failed"] = r.failed();
  if (timing) j["wall_time_s"] = fmt(r.wall_seconds);
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) arr.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"residual", c.residual}});
  return j.dump(2) + "\n";
}

std::string to_csv(const SuiteReport& r) {
  std::string out = "id,status,residual\n";
  for (const auto& c : r.checks) out += csv_field(c.id) + "," + to_string(c.status) + "," + csv_field(c.residual) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json o;
        for (size_t i = 0; i < header.size(); ++i) o[header[i]] = row[i];
        arr.push_back(o);
      }
      return arr.dump(2) + "\n";
    }
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + csv_field(header[i]);
    out += "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
      out += "\n";
    }
    return out;
  }
};

Table table_fig12(const RunConfig& cfg) {
  IntWindow w = cfg.has_window ? cfg.window : IntWindow{-20, 20};
  Table t{{"n", "x", "cos_q", "sin_q"}, {}};
  for (const auto& r : fig12_rows(cfg.q0, w)) t.rows.push_back({std::to_string(r.n), fmt(r.x), fmt(r.cos), fmt(r.sin)});
  return t;
}

Table table_spectrum(const RunConfig& cfg) {
  if (cfg.q0 <= 1) throw std::invalid_argument("spectrum needs q0 > 1");
  IntWindow iw = cfg.has_window ? cfg.window : IntWindow{-60, 60};
  Window w;
  w.nmin = iw.nmin;
  w.nmax = iw.nmax;
  LatticeOps ops = build_ops(w, OpMode::Numeric, cfg.q0);
  Table t{{"family", "tau", "nu", "p_eigenvalue", "p_residual", "h_eigenvalue", "h_residual"}, {}};
  auto h = hamiltonian_check(w, cfg.q0);
  for (const auto& e : h) {
    MomentumState st = momentum_state(e.tau, e.nu, e.family, true, w, cfg.q0);
    std::complex<double> mu = momentum_eigenvalue(st);
    t.rows.push_back({to_string(e.family), std::to_string(e.tau), std::to_string(e.nu), fmt(mu.real()),
                      fmt(eigen_residual(ops.p, st, mu)), fmt(e.eigenvalue), fmt(e.residual)});
  }
  return t;
}

Table table_transform(const RunConfig& cfg) {
  if (cfg.q0 <= 1) throw std::invalid_argument("transform needs q0 > 1");
  // transform of the delta at n = 0 for both kernels
  LatticeFunction delta;
  delta.q0 = cfg.q0;
  delta.samples[0] = 1;
  Table t{{"kind", "nu", "x", "re", "im"}, {}};
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    IntWindow w = cfg.has_window ? cfg.window : default_window(kind, cfg.q0, delta.support());
    LatticeFunction g = transform(kind, delta, w);
    for (const auto& [nu, v] : g.samples)
      t.rows.push_back({to_string(kind), std::to_string(nu), fmt(std::pow(cfg.q0, 2 * nu)), fmt(v.real()), fmt(v.imag())});
  }
  return t;
}

Table table_eigen(const RunConfig& cfg) {
  // nabla^2 eigenvalues of cos_q, sin_q at x q^(2k+1) and x q^(2k)
  struct Row {
    const char* subspace;
    TrigKind kind;
    int offset;  // argument q^(2k + offset)
    int power;   // eigenvalue -q^(4k + power)/lambda^2
  };
  const Row rows[] = {{"H_{sigma=+1}^{even}", TrigKind::Cos, 1, 1},
                      {"H_{sigma=+1}^{even}", TrigKind::Sin, 1, 3},
                      {"H_{sigma=+1}^{odd}", TrigKind::Cos, 0, -1},
                      {"H_{sigma=+1}^{odd}", TrigKind::Sin, 0, 1}};
  Table t{{"subspace", "function", "formula", "k", "eigenvalue", "value", "matches"}, {}};
  const QScalar il2 = QScalar::lambda().pow(2).inv();
  for (const Row& r : rows)
    for (int k = 0; k <= 3; ++k) {
      QScalar ev = trig_laplace_eigenvalue(r.kind, QScalar::q_pow(2 * k + r.offset));
      QScalar formula = -QScalar::q_pow(4 * k + r.power) * il2;
      std::string fn = std::string(to_string(r.kind)) + "_q(x q^(2k" + (r.offset ? "+1" : "") + "))";
      std::string fs = "-q^(4k" + std::string(r.power < 0 ? "" : "+") + std::to_string(r.power) + ")/lambda^2";
      t.rows.push_back({r.subspace, fn, fs, std::to_string(k), ev.str(), fmt(eval_at(ev, cfg.q0)),
                        ev == formula ? "yes" : "no"});
    }
  return t;
}

}  // namespace

std::string export_table(const std::string& kind, const RunConfig& cfg, const std::string& format) {
  if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
  if (kind == "fig12") return table_fig12(cfg).render(format);
  if (kind == "spectrum") return table_spectrum(cfg).render(format);
  if (kind == "transform") return table_transform(cfg).render(format);
  if (kind == "eigen_table") return table_eigen(cfg).render(format);
  throw std::invalid_argument("unknown table: " + kind);
}

}  // namespace qheis::cli
