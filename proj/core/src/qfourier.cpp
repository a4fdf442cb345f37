#include "qheis/qfourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qheis {

IntWindow LatticeFunction::support() const {
  if (samples.empty()) return {};
  return {samples.begin()->first, samples.rbegin()->first};
}

double LatticeFunction::norm2() const {
  double s = 0;
  for (const auto& [n, v] : samples) s += std::pow(q0, 2.0 * n) * std::norm(v);
  return s;
}

double normalization_nq(double q0, double tol) {
  if (!(q0 > 1)) throw std::invalid_argument("normalization_nq: requires q0 > 1");
  if (!(tol > 0)) throw std::invalid_argument("normalization_nq: requires tol > 0");
  double log_n = 0;
  for (long nu = 0;; ++nu) {
    double a = std::pow(q0, -2.0 * (2 * nu + 1)), b = std::pow(q0, -4.0 * (nu + 1));
    double term = std::log1p(-a) - std::log1p(-b);
    log_n += term;
    if (std::abs(std::expm1(term)) < tol) break;
  }
  return std::exp(log_n);
}

KernelTable::KernelTable(TrigKind kind, double q0) : kind_(kind), q0_(q0) {
  if (!(q0 > 1)) throw std::invalid_argument("KernelTable: requires q0 > 1");
}

double KernelTable::at(int m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  double v = trig_eval_lattice(kind_, 2L * m, q0_);
  cache_.emplace(m, v);
  return v;
}

IntWindow default_window(TrigKind kind, double q0, IntWindow support, double rel_tail) {
  if (support.empty()) return {};
  KernelTable k(kind, q0);
  const double n2 = std::pow(normalization_nq(q0), 2);
  const double width = support.nmax - support.nmin + 1;
  const double budget = rel_tail * (1 - std::pow(q0, -2)) / width;
  auto weight = [&](int nu) {
    double w = 0;
    for (int n = support.nmin; n <= support.nmax; ++n) {
      double v = k.at(nu + n);
      w = std::max(w, n2 * std::pow(q0, 2.0 * (nu + n)) * v * v);
    }
    return w;
  };
  // below: kernel arguments < 1 shrink geometrically with q^(2nu)
  int lo = -support.nmax;
  for (int quiet = 0; quiet < 3; --lo) quiet = weight(lo) < budget ? quiet + 1 : 0;
  // above: even-lattice values decay faster than any power once past the peak
  int hi = -support.nmin;
  for (int quiet = 0; quiet < 3; ++hi) quiet = weight(hi) < budget ? quiet + 1 : 0;
  return {lo, hi};
}

LatticeFunction transform(KernelTable& kernel, const LatticeFunction& g, IntWindow out_window) {
  if (g.q0 != kernel.q0()) throw std::invalid_argument("transform: kernel built for a different q0");
  const double nq = normalization_nq(g.q0);
  LatticeFunction out;
  out.q0 = g.q0;
  for (int nu = out_window.nmin; nu <= out_window.nmax; ++nu) {
    std::complex<double> s = 0;
    for (const auto& [n, v] : g.samples) s += std::pow(g.q0, 2.0 * n) * kernel.at(nu + n) * v;
    out.samples.emplace(nu, nq * s);
  }
  return out;
}

LatticeFunction transform(TrigKind kind, const LatticeFunction& g, IntWindow out_window) {
  KernelTable k(kind, g.q0);
  return transform(k, g, out_window);
}

GramReport gram_check(TrigKind kind, IntWindow index_window, IntWindow sum_window, double q0) {
  GramReport rep;
  if (index_window.empty()) return rep;
  KernelTable k(kind, q0);
  const double n2 = std::pow(normalization_nq(q0), 2);
  auto entry = [&](int n, int m) {
    double s = 0;
    for (int nu = sum_window.nmin; nu <= sum_window.nmax; ++nu)
      s += std::pow(q0, 2.0 * nu) * k.at(n + nu) * k.at(m + nu);
    return n2 * s;
  };
  for (int n = index_window.nmin; n <= index_window.nmax; ++n)
    for (int m = index_window.nmin; m <= index_window.nmax; ++m) {
      double g = entry(n, m);
      double target = n == m ? std::pow(q0, -2.0 * n) : 0.0;
      rep.residual = std::max(rep.residual, std::abs(g - target) * std::pow(q0, 2.0 * n));
      rep.asymmetry = std::max(rep.asymmetry, std::abs(g - entry(m, n)));
    }
  return rep;
}

double gram_residual(TrigKind kind, IntWindow index_window, IntWindow sum_window, double q0) {
  return gram_check(kind, index_window, sum_window, q0).residual;
}

double plancherel_residual(TrigKind kind, const LatticeFunction& g, IntWindow out_window) {
  double a = g.norm2();
  if (a == 0) throw std::invalid_argument("plancherel_residual: zero function");
  double b = transform(kind, g, out_window).norm2();
  return std::abs(a - b) / a;
}

double double_transform_residual(TrigKind kind, const LatticeFunction& g, IntWindow out_window) {
  if (g.samples.empty()) return 0;
  KernelTable k(kind, g.q0);
  LatticeFunction back = transform(k, transform(k, g, out_window), g.support());
  double scale = 0, err = 0;
  for (const auto& [n, v] : g.samples) scale = std::max(scale, std::abs(v));
  for (const auto& [n, v] : back.samples) {
    auto it = g.samples.find(n);
    std::complex<double> want = it == g.samples.end() ? 0.0 : it->second;
    err = std::max(err, std::abs(v - want));
  }
  return scale == 0 ? err : err / scale;
}

std::string to_csv(const LatticeFunction& g) {
  std::string out = "nu,x,re,im\n";
  char buf[160];
  for (const auto& [n, v] : g.samples) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", n, std::pow(g.q0, 2.0 * n), v.real(), v.imag());
    out += buf;
  }
  return out;
}

}  // namespace qheis
