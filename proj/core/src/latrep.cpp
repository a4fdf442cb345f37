#include "qheis/latrep.hpp"

#include <algorithm>
#include <cmath>

#include "qheis/qfourier.hpp"

namespace qheis {

using cd = std::complex<double>;

void Window::validate(double q0) const {
  if (nmin >= nmax) throw std::invalid_argument("Window: nmin must be below nmax");
  if (sigmas.empty()) throw std::invalid_argument("Window: empty sigma set");
  for (size_t i = 0; i < sigmas.size(); ++i) {
    if (sigmas[i] != 1 && sigmas[i] != -1) throw std::invalid_argument("Window: sigma must be +1 or -1");
    for (size_t j = 0; j < i; ++j)
      if (sigmas[i] == sigmas[j]) throw std::invalid_argument("Window: repeated sigma");
  }
  if (s < 1 || !(s.get_d() < q0)) throw std::invalid_argument("Window: need 1 <= s < q0");
}

bool Window::has_sigma(int sigma) const { return std::find(sigmas.begin(), sigmas.end(), sigma) != sigmas.end(); }

int Window::index(int n, int sigma) const {
  if (n < nmin || n > nmax) return -1;
  auto it = std::find(sigmas.begin(), sigmas.end(), sigma);
  if (it == sigmas.end()) return -1;
  return static_cast<int>(it - sigmas.begin()) * width() + (n - nmin);
}

const char* to_string(Family f) { return f == Family::I ? "I" : "II"; }

// --- LatticeOp ---------------------------------------------------------------

void LatticeOp::set(int row, int col, const CQScalar& v) {
  if (mode_ != OpMode::Exact) throw std::logic_error("LatticeOp: exact entry in numeric mode");
  if (v.is_zero()) {
    auto it = exact_.find(row);
    if (it != exact_.end()) it->second.erase(col);
    return;
  }
  exact_[row][col] = v;
}

void LatticeOp::set(int row, int col, cd v) {
  if (mode_ != OpMode::Numeric) throw std::logic_error("LatticeOp: numeric entry in exact mode");
  numeric_[row][col] = v;
}

cd LatticeOp::entry(int row, int col) const {
  if (mode_ == OpMode::Exact) {
    auto r = exact_.find(row);
    if (r == exact_.end()) return 0;
    auto c = r->second.find(col);
    return c == r->second.end() ? cd(0) : eval_at(c->second, q0_);
  }
  auto r = numeric_.find(row);
  if (r == numeric_.end()) return 0;
  auto c = r->second.find(col);
  return c == r->second.end() ? cd(0) : c->second;
}

void LatticeOp::check_compatible(const LatticeOp& o) const {
  if (mode_ != o.mode_ || q0_ != o.q0_ || window_.nmin != o.window_.nmin || window_.nmax != o.window_.nmax ||
      window_.sigmas != o.window_.sigmas || window_.s != o.window_.s)
    throw std::invalid_argument("LatticeOp: operators live on different windows");
}

namespace {

template <class T>
using Rows = std::map<int, std::map<int, T>>;

template <class T>
Rows<T> mat_mul(const Rows<T>& a, const Rows<T>& b) {
  Rows<T> r;
  for (const auto& [i, row] : a)
    for (const auto& [k, aik] : row) {
      auto bk = b.find(k);
      if (bk == b.end()) continue;
      for (const auto& [j, bkj] : bk->second) r[i][j] += aik * bkj;
    }
  return r;
}

template <class T>
Rows<T> mat_add(Rows<T> a, const Rows<T>& b, bool subtract) {
  for (const auto& [i, row] : b)
    for (const auto& [j, v] : row) {
      if (subtract)
        a[i][j] -= v;
      else
        a[i][j] += v;
    }
  return a;
}

void drop_zeros(Rows<CQScalar>& m) {
  for (auto it = m.begin(); it != m.end();) {
    std::erase_if(it->second, [](const auto& kv) { return kv.second.is_zero(); });
    it = it->second.empty() ? m.erase(it) : std::next(it);
  }
}

}  // namespace

LatticeOp LatticeOp::operator*(const LatticeOp& o) const {
  check_compatible(o);
  LatticeOp r(window_, mode_, q0_);
  if (mode_ == OpMode::Exact) {
    r.exact_ = mat_mul(exact_, o.exact_);
    drop_zeros(r.exact_);
  } else {
    r.numeric_ = mat_mul(numeric_, o.numeric_);
  }
  return r;
}

LatticeOp LatticeOp::operator+(const LatticeOp& o) const {
  check_compatible(o);
  LatticeOp r(window_, mode_, q0_);
  if (mode_ == OpMode::Exact) {
    r.exact_ = mat_add(exact_, o.exact_, false);
    drop_zeros(r.exact_);
  } else {
    r.numeric_ = mat_add(numeric_, o.numeric_, false);
  }
  return r;
}

LatticeOp LatticeOp::operator-(const LatticeOp& o) const {
  check_compatible(o);
  LatticeOp r(window_, mode_, q0_);
  if (mode_ == OpMode::Exact) {
    r.exact_ = mat_add(exact_, o.exact_, true);
    drop_zeros(r.exact_);
  } else {
    r.numeric_ = mat_add(numeric_, o.numeric_, true);
  }
  return r;
}

LatticeOp LatticeOp::scaled(const CQScalar& c) const {
  LatticeOp r(window_, mode_, q0_);
  if (mode_ == OpMode::Exact) {
    if (c.is_zero()) return r;
    r.exact_ = exact_;
    for (auto& [i, row] : r.exact_)
      for (auto& [j, v] : row) v *= c;
  } else {
    cd f = eval_at(c, q0_);
    r.numeric_ = numeric_;
    for (auto& [i, row] : r.numeric_)
      for (auto& [j, v] : row) v *= f;
  }
  return r;
}

LatticeOp LatticeOp::adjoint() const {
  LatticeOp r(window_, mode_, q0_);
  for (const auto& [i, row] : exact_)
    for (const auto& [j, v] : row) r.exact_[j][i] = v.conj();
  for (const auto& [i, row] : numeric_)
    for (const auto& [j, v] : row) r.numeric_[j][i] = std::conj(v);
  return r;
}

CVec LatticeOp::apply(const CVec& v) const {
  if (static_cast<int>(v.size()) != window_.dim()) throw std::invalid_argument("LatticeOp::apply: dimension mismatch");
  CVec out(v.size());
  if (mode_ == OpMode::Exact) {
    for (const auto& [i, row] : exact_)
      for (const auto& [j, e] : row) out[i] += eval_at(e, q0_) * v[j];
  } else {
    for (const auto& [i, row] : numeric_)
      for (const auto& [j, e] : row) out[i] += e * v[j];
  }
  return out;
}

double LatticeOp::interior_max(int mask) const {
  auto inside = [&](int idx) {
    int n = window_.label_n(idx);
    return n - window_.nmin >= mask && window_.nmax - n >= mask;
  };
  double m = 0;
  for (const auto& [i, row] : exact_)
    for (const auto& [j, v] : row)
      if (inside(i) && inside(j)) m = std::max(m, std::max(std::abs(eval_at(v, q0_)), 1e-300));
  for (const auto& [i, row] : numeric_)
    for (const auto& [j, v] : row)
      if (inside(i) && inside(j)) m = std::max(m, std::abs(v));
  return m;
}

// --- operators ---------------------------------------------------------------

LatticeOps build_ops(const Window& w, OpMode mode, double q0) {
  w.validate(q0);
  LatticeOps ops{LatticeOp(w, mode, q0), LatticeOp(w, mode, q0), LatticeOp(w, mode, q0)};
  const double sd = w.s.get_d(), lam = q0 - 1 / q0, rq = std::sqrt(q0);
  const QScalar s(w.s), lam_inv = QScalar::lambda().inv();
  for (int sigma : w.sigmas)
    for (int n = w.nmin; n <= w.nmax; ++n) {
      int col = w.index(n, sigma), up = w.index(n + 1, sigma), down = w.index(n - 1, sigma);
      if (mode == OpMode::Exact) {
        ops.x.set(col, col, CQScalar(QScalar(sigma) * s * QScalar::q_pow(n)));
        // p|n> = i lambda^-1 (sigma/s) q^-n (q^-1/2 |n+1> - q^1/2 |n-1>)
        QScalar base = lam_inv * QScalar(sigma) / s * QScalar::q_pow(-n);
        if (up >= 0) {
          ops.lambda_op.set(up, col, CQScalar(1));
          ops.p.set(up, col, CQScalar(QScalar(), base * QScalar::t_pow(-1)));
        }
        if (down >= 0) ops.p.set(down, col, CQScalar(QScalar(), -base * QScalar::t_pow(1)));
      } else {
        ops.x.set(col, col, cd(sigma * sd * std::pow(q0, n)));
        double base = sigma / (lam * sd) * std::pow(q0, -n);
        if (up >= 0) {
          ops.lambda_op.set(up, col, cd(1));
          ops.p.set(up, col, cd(0, base / rq));
        }
        if (down >= 0) ops.p.set(down, col, cd(0, -base * rq));
      }
    }
  return ops;
}

double algebra_residual(const LatticeOps& ops, int mask) {
  const LatticeOp &x = ops.x, &L = ops.lambda_op, &p = ops.p;
  CQScalar th(QScalar::t_pow(1)), thi(QScalar::t_pow(-1)), q(QScalar::q()), qi(QScalar::q_pow(-1));
  LatticeOp r1 = (x * p).scaled(th) - (p * x).scaled(thi) - L.scaled(CQScalar::i());
  LatticeOp r2 = L * p - (p * L).scaled(q);
  LatticeOp r3 = L * x - (x * L).scaled(qi);
  return std::max({r1.interior_max(mask), r2.interior_max(mask), r3.interior_max(mask)});
}

// --- momentum states ---------------------------------------------------------

namespace {

struct StateKernels {
  KernelTable cosk, sink;
  double amp;  // N_q / sqrt 2
  StateKernels(double q0) : cosk(TrigKind::Cos, q0), sink(TrigKind::Sin, q0), amp(normalization_nq(q0) / std::sqrt(2.0)) {}
};

int floor_div2(int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

// coefficient of |k, sigma> in the irreducible state of one sector
cd sector_coeff(StateKernels& sk, Family family, int tau, int nu, int k, double q0) {
  int n = floor_div2(k);
  bool even = k - 2 * n == 0;
  double w = sk.amp * std::pow(q0, n + nu);
  if (family == Family::I) {
    if (even) return w * sk.cosk.at(n + nu);
    return cd(0, tau * w * sk.sink.at(n + nu));
  }
  if (!even) return w * sk.cosk.at(n + nu);
  return cd(0, tau * w / q0 * sk.sink.at(n + nu - 1));
}

cd state_coeff(StateKernels& sk, const MomentumState& st, int k, int sigma) {
  if (!st.reducible) return sigma == st.sigma ? sector_coeff(sk, st.family, st.tau, st.nu, k, st.q0) : cd(0);
  int tau = sigma == 1 ? st.tau : -st.tau;
  return sector_coeff(sk, st.family, tau, st.nu, k, st.q0) / std::sqrt(2.0);
}

}  // namespace

MomentumState momentum_state(int tau, int nu, Family family, bool reducible, const Window& w, double q0, int sigma,
                             double tail_threshold) {
  w.validate(q0);
  if (tau != 1 && tau != -1) throw std::invalid_argument("momentum_state: tau must be +1 or -1");
  MomentumState st;
  st.tau = tau;
  st.nu = nu;
  st.family = family;
  st.reducible = reducible;
  st.sigma = reducible ? 1 : sigma;
  st.window = w;
  st.q0 = q0;
  if (reducible && !(w.has_sigma(1) && w.has_sigma(-1)))
    throw std::invalid_argument("momentum_state: reducible states need both sigma sectors");
  if (!reducible && !w.has_sigma(sigma)) throw std::invalid_argument("momentum_state: sigma not in window");

  StateKernels sk(q0);
  st.coeffs.assign(w.dim(), 0);
  for (int sg : w.sigmas)
    for (int k = w.nmin; k <= w.nmax; ++k) st.coeffs[w.index(k, sg)] = state_coeff(sk, st, k, sg);

  // mass outside the window: below it the weights shrink like q^k, above it
  // the even-lattice kernels die off faster than any power
  double tail = 0;
  for (int sg : w.sigmas) {
    int quiet = 0;
    for (int k = w.nmin - 1; quiet < 8; --k) {
      double m = std::norm(state_coeff(sk, st, k, sg));
      tail += m;
      quiet = m < 1e-34 ? quiet + 1 : 0;
    }
    quiet = 0;
    for (int k = w.nmax + 1; quiet < 8; ++k) {
      double m = std::norm(state_coeff(sk, st, k, sg));
      tail += m;
      quiet = (m < 1e-34 && floor_div2(k) + nu > 0) ? quiet + 1 : 0;
    }
  }
  st.tail_mass = tail;
  st.window_ok = tail <= tail_threshold;
  return st;
}

void require_window(const MomentumState& st) {
  if (!st.window_ok)
    throw WindowTooSmallError("momentum state tail mass " + std::to_string(st.tail_mass) + " exceeds threshold");
}

cd momentum_eigenvalue(const MomentumState& st) {
  double lam = st.q0 - 1 / st.q0;
  int sign = st.tau * (st.reducible ? 1 : st.sigma);
  int e = st.family == Family::I ? 2 * st.nu : 2 * st.nu - 1;
  return sign * std::pow(st.q0, e) / (st.window.s.get_d() * lam * std::sqrt(st.q0));
}

double hamiltonian_eigenvalue(Family family, int nu, double s, double q0) {
  double lam = q0 - 1 / q0;
  int e = family == Family::I ? 4 * nu : 4 * nu - 2;
  return std::pow(q0, e) / (2 * s * s * lam * lam * q0);
}

cd inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  cd s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double eigen_residual(const LatticeOp& op, const CVec& v, cd mu, int mask) {
  const Window& w = op.window();
  CVec ov = op.apply(v);
  double r = 0, nv = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    nv += std::norm(v[i]);
    int n = w.label_n(static_cast<int>(i));
    if (n - w.nmin < mask || w.nmax - n < mask) continue;
    r += std::norm(ov[i] - mu * v[i]);
  }
  if (nv == 0) throw std::invalid_argument("eigen_residual: zero vector");
  return std::sqrt(r / nv);
}

double eigen_residual(const LatticeOp& op, const MomentumState& st, cd mu, int mask) {
  return eigen_residual(op, st.coeffs, mu, mask);
}

double map_residual(const LatticeOp& op, const CVec& from, const CVec& to, int mask) {
  const Window& w = op.window();
  CVec image = op.apply(from);
  double r = 0, nt = 0;
  for (size_t i = 0; i < to.size(); ++i) {
    nt += std::norm(to[i]);
    int n = w.label_n(static_cast<int>(i));
    if (n - w.nmin < mask || w.nmax - n < mask) continue;
    r += std::norm(image[i] - to[i]);
  }
  if (nt == 0) throw std::invalid_argument("map_residual: zero target");
  return std::sqrt(r / nt);
}

double momentum_gram_deviation(IntWindow nus, const Window& w, double q0) {
  std::vector<CVec> basis;
  for (Family f : {Family::I, Family::II})
    for (int tau : {1, -1})
      for (int nu = nus.nmin; nu <= nus.nmax; ++nu) basis.push_back(momentum_state(tau, nu, f, true, w, q0).coeffs);
  double dev = 0;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b)
      dev = std::max(dev, std::abs(inner(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)));
  return dev;
}

Window window_for_states(IntWindow nus, double q0, double tail) {
  // lower edge from the geometric tail (N^2/2) q^(2m) / (1 - q^-2) of the
  // cos part, then widen until every state reports a small tail
  double n2 = std::pow(normalization_nq(q0), 2);
  double m = std::log(tail * (1 - std::pow(q0, -2)) / n2) / (2 * std::log(q0));
  Window w;
  w.nmin = 2 * (static_cast<int>(std::floor(m)) - nus.nmax) - 2;
  w.nmax = 2 * (8 - nus.nmin);
  for (;;) {
    bool ok = true;
    for (int nu : {nus.nmin, nus.nmax})
      for (Family f : {Family::I, Family::II}) ok = ok && momentum_state(1, nu, f, true, w, q0, 1, tail).window_ok;
    if (ok) return w;
    w.nmin -= 8;
    w.nmax += 8;
  }
}

std::vector<SpectrumEntry> hamiltonian_check(const Window& w, double q0, IntWindow nus) {
  LatticeOps ops = build_ops(w, OpMode::Numeric, q0);
  LatticeOp h = (ops.p * ops.p).scaled(CQScalar(QScalar(mpq_class(1, 2))));
  std::vector<SpectrumEntry> out;
  for (Family f : {Family::I, Family::II})
    for (int tau : {1, -1})
      for (int nu = nus.nmin; nu <= nus.nmax; ++nu) {
        MomentumState st = momentum_state(tau, nu, f, true, w, q0);
        cd mu = momentum_eigenvalue(st);
        double e = hamiltonian_eigenvalue(f, nu, w.s.get_d(), q0);
        out.push_back({f, tau, nu, e, eigen_residual(h, st, 0.5 * mu * mu)});
      }
  return out;
}

double sector_moment(const MomentumState& st, int sigma) {
  const Window& w = st.window;
  double s = 0;
  for (int k = w.nmin; k <= w.nmax; ++k) {
    int idx = w.index(k, sigma);
    if (idx >= 0) s += std::pow(st.q0, k) * std::norm(st.coeffs[idx]);
  }
  return s;
}

}  // namespace qheis
