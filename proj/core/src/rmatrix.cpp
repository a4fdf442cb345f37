#include "qheis/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qheis {

RMatrix::RMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RMatrix: n must be positive");
  e_.resize(static_cast<size_t>(dim()) * dim());
}

RMatrix RMatrix::identity(int n) {
  RMatrix r(n);
  for (int a = 0; a < r.dim(); ++a) r.at(a, a) = QScalar(1);
  return r;
}

RMatrix RMatrix::flip(int n) {
  RMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r(i, j, j, i) = QScalar(1);
  return r;
}

RMatrix RMatrix::operator-() const {
  RMatrix r(*this);
  for (auto& v : r.e_) v = -v;
  return r;
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("RMatrix: dimension mismatch");
  for (size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("RMatrix: dimension mismatch");
  for (size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
  return *this;
}

RMatrix& RMatrix::operator*=(const QScalar& c) {
  for (auto& v : e_)
    if (!v.is_zero()) v *= c;
  return *this;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("RMatrix: dimension mismatch");
  int d = a.dim();
  RMatrix r(a.n_);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const QScalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const QScalar& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

RMatrix RMatrix::inverse() const {
  int d = dim();
  RMatrix m(*this), inv = identity(n_);
  for (int c = 0; c < d; ++c) {
    int p = -1;
    for (int r = c; r < d; ++r)
      if (!m.at(r, c).is_zero() && (p < 0 || m.at(r, c).complexity() < m.at(p, c).complexity())) p = r;
    if (p < 0) throw std::domain_error("RMatrix::inverse: singular matrix");
    if (p != c)
      for (int j = 0; j < d; ++j) {
        std::swap(m.at(p, j), m.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    QScalar s = m.at(c, c).inv();
    for (int j = 0; j < d; ++j) {
      if (!m.at(c, j).is_zero()) m.at(c, j) *= s;
      if (!inv.at(c, j).is_zero()) inv.at(c, j) *= s;
    }
    for (int r = 0; r < d; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      QScalar f = m.at(r, c);
      for (int j = 0; j < d; ++j) {
        if (!m.at(c, j).is_zero()) m.at(r, j) -= f * m.at(c, j);
        if (!inv.at(c, j).is_zero()) inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

QScalar RMatrix::trace() const {
  QScalar t;
  for (int a = 0; a < dim(); ++a) t += at(a, a);
  return t;
}

size_t RMatrix::nonzeros() const {
  return static_cast<size_t>(std::count_if(e_.begin(), e_.end(), [](const QScalar& v) { return !v.is_zero(); }));
}

RMatrix RMatrix::pair_transpose() const {
  RMatrix r(n_);
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) r.at(a, b) = at(b, a);
  return r;
}

std::string RMatrix::str() const {
  int d = dim();
  std::vector<std::string> cells(static_cast<size_t>(d) * d);
  size_t w = 2;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      cells[a * d + b] = at(a, b).str();
      w = std::max(w, cells[a * d + b].size());
    }
  auto label = [this](int a) { return std::to_string(a / n_ + 1) + std::to_string(a % n_ + 1); };
  auto pad = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream os;
  os << "   ";
  for (int b = 0; b < d; ++b) os << "  " << pad(label(b));
  os << '\n';
  for (int a = 0; a < d; ++a) {
    os << label(a) << ' ';
    for (int b = 0; b < d; ++b) os << "  " << pad(cells[a * d + b]);
    os << '\n';
  }
  return os.str();
}

std::string to_text(const RMatrix& r) {
  std::ostringstream os;
  os << "n: " << r.n() << '\n';
  int n = r.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (!r(i, j, k, l).is_zero())
            os << '(' << i << ',' << j << ',' << k << ',' << l << ") " << r(i, j, k, l).str() << '\n';
  return os.str();
}

RMatrix parse_rmatrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  RMatrix r;
  bool have_n = false;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("rmatrix line " + std::to_string(lineno) + ": " + what);
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    if (line.rfind("n:", 0) == 0) {
      if (have_n) fail("second dimension line");
      r = RMatrix(std::stoi(line.substr(2)));
      have_n = true;
      continue;
    }
    if (!have_n) fail("dimension line must come first");
    int i, j, k, l, used = 0;
    if (std::sscanf(line.c_str(), " (%d,%d,%d,%d)%n", &i, &j, &k, &l, &used) != 4 || used == 0)
      fail("expected '(i,j,k,l) coeff'");
    for (int v : {i, j, k, l})
      if (v < 1 || v > r.n()) fail("index out of range");
    if (!r(i, j, k, l).is_zero()) fail("entry given twice");
    r(i, j, k, l) = parse_qscalar(line.substr(used));
  }
  if (!have_n) throw std::invalid_argument("rmatrix: missing dimension line");
  return r;
}

RMatrix r_gl(int n) {
  if (n < 2) throw std::invalid_argument("r_gl: n must be >= 2");
  RMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      r(j, i, i, j) += i == j ? QScalar::q() : QScalar(1);
      if (i > j) r(j, i, j, i) += QScalar::lambda();
    }
  return r;
}

namespace {

// sparse rows for the lifted matrices on n^3 indices
using SparseRows = std::vector<std::map<int, QScalar>>;

SparseRows lift(const RMatrix& r, bool first) {
  int n = r.n(), d = r.dim(), big = d * n;
  SparseRows m(big);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const QScalar& v = r.at(a, b);
      if (v.is_zero()) continue;
      for (int e = 0; e < n; ++e) {
        // first: (pair, e); second: (e, pair)
        int row = first ? a * n + e : e * d + a;
        int col = first ? b * n + e : e * d + b;
        m[row].emplace(col, v);
      }
    }
  return m;
}

SparseRows mul(const SparseRows& a, const SparseRows& b) {
  SparseRows r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& [k, x] : a[i])
      for (const auto& [j, y] : b[k]) {
        auto [it, ins] = r[i].emplace(j, x * y);
        if (!ins) {
          it->second += x * y;
          if (it->second.is_zero()) r[i].erase(it);
        }
      }
  return r;
}

}  // namespace

size_t ybe_residual(const RMatrix& r) {
  SparseRows r12 = lift(r, true), r23 = lift(r, false);
  SparseRows lhs = mul(mul(r12, r23), r12), rhs = mul(mul(r23, r12), r23);
  size_t bad = 0;
  for (size_t i = 0; i < lhs.size(); ++i) {
    std::map<int, QScalar> diff = lhs[i];
    for (const auto& [j, v] : rhs[i]) {
      auto [it, ins] = diff.emplace(j, -v);
      if (!ins) it->second -= v;
    }
    for (const auto& [j, v] : diff)
      if (!v.is_zero()) ++bad;
  }
  return bad;
}

long rank_of(const RMatrix& p) {
  QScalar t = p.trace();
  auto m = t.as_monomial();
  if (t.is_zero()) return 0;
  if (!m || m->second != 0 || m->first.get_den() != 1) throw std::domain_error("rank_of: trace is not an integer");
  return m->first.get_num().get_si();
}

GlProjectors projectors_gl(const RMatrix& r) {
  int n = r.n();
  QScalar q = QScalar::q(), qi = QScalar::q_pow(-1);
  RMatrix one = RMatrix::identity(n);
  RMatrix rm = r - q * one, rp = r + qi * one;
  if (!(rm * rp).is_zero()) throw std::domain_error("projectors_gl: (R - q)(R + 1/q) != 0");
  QScalar f = q / (QScalar(1) + QScalar::q_pow(2));
  GlProjectors out;
  out.A.matrix = (-f) * rm;
  out.A.eigenvalue = -qi;
  out.A.multiplicity = rank_of(out.A.matrix);
  out.S.matrix = f * rp;
  out.S.eigenvalue = q;
  out.S.multiplicity = rank_of(out.S.matrix);
  return out;
}

Alphabet rtt_alphabet(int n) {
  Alphabet a;
  if (n == 2) return Alphabet{"a", "b", "c", "d"};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.add("T" + std::to_string(i) + std::to_string(j));
  return a;
}

std::vector<NCPoly> rtt_relations(const RMatrix& r) {
  int n = r.n();
  auto T = [n](int i, int j) { return NCPoly::gen((i - 1) * n + (j - 1)); };
  std::vector<NCPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s1 = 1; s1 <= n; ++s1)
        for (int s2 = 1; s2 <= n; ++s2) {
          NCPoly rel;
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              if (!r(i, j, k, l).is_zero()) rel += r(i, j, k, l) * (T(k, s1) * T(l, s2));
              if (!r(k, l, s1, s2).is_zero()) rel -= r(k, l, s1, s2) * (T(i, k) * T(j, l));
            }
          out.push_back(std::move(rel));
        }
  return out;
}

size_t rtt_matrix_residual(const RMatrix& r) {
  int n = r.n();
  using Mat = std::vector<QScalar>;  // n x n, row-major, 0-based
  auto t = [&](int al, int ga) {
    Mat m(n * n);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) m[(a - 1) * n + (b - 1)] = r(a, al, ga, b);
    return m;
  };
  auto mm = [n](const Mat& x, const Mat& y) {
    Mat z(n * n);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        if (x[a * n + c].is_zero()) continue;
        for (int b = 0; b < n; ++b)
          if (!y[c * n + b].is_zero()) z[a * n + b] += x[a * n + c] * y[c * n + b];
      }
    return z;
  };
  std::vector<Mat> ts;
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c) ts.push_back(t(a, c));
  auto T = [&](int a, int c) -> const Mat& { return ts[(a - 1) * n + (c - 1)]; };
  size_t bad = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s1 = 1; s1 <= n; ++s1)
        for (int s2 = 1; s2 <= n; ++s2) {
          Mat acc(n * n);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              if (const QScalar& c = r(i, j, k, l); !c.is_zero()) {
                Mat p = mm(T(k, s1), T(l, s2));
                for (int e = 0; e < n * n; ++e) acc[e] += c * p[e];
              }
              if (const QScalar& c = r(k, l, s1, s2); !c.is_zero()) {
                Mat p = mm(T(i, k), T(j, l));
                for (int e = 0; e < n * n; ++e) acc[e] -= c * p[e];
              }
            }
          for (const auto& v : acc)
            if (!v.is_zero()) ++bad;
        }
  return bad;
}

const char* to_string(PlaneKind k) {
  switch (k) {
    case PlaneKind::XX: return "xx";
    case PlaneKind::XD: return "xd";
    case PlaneKind::XDHat: return "xdhat";
    case PlaneKind::XDDHat: return "xddhat";
    case PlaneKind::XXBar: return "xxbar";
    case PlaneKind::XDx: return "xdx";
    case PlaneKind::XDxD: return "xdxd";
    case PlaneKind::XY: return "xy";
  }
  return "?";
}

namespace {

std::vector<std::string> plane_blocks(PlaneKind kind) {
  switch (kind) {
    case PlaneKind::XX: return {"x"};
    case PlaneKind::XD: return {"x", "d"};
    case PlaneKind::XDHat: return {"x", "h"};
    case PlaneKind::XDDHat: return {"x", "d", "h"};
    case PlaneKind::XXBar: return {"x", "xb"};
    case PlaneKind::XDx: return {"x", "dx"};
    case PlaneKind::XDxD: return {"x", "dx", "d"};
    case PlaneKind::XY: return {"y", "x"};
  }
  return {};
}

}  // namespace

Alphabet plane_alphabet(int n, PlaneKind kind) {
  Alphabet a;
  for (const auto& b : plane_blocks(kind))
    for (int i = 1; i <= n; ++i) a.add(b + std::to_string(i));
  return a;
}

std::vector<NCPoly> plane_relations(const RMatrix& r, PlaneKind kind, const QScalar& kappa) {
  int n = r.n();
  auto blocks = plane_blocks(kind);
  auto block = [&](const std::string& name) {
    auto it = std::find(blocks.begin(), blocks.end(), name);
    return static_cast<int>(it - blocks.begin());
  };
  auto has = [&](const std::string& name) { return block(name) < static_cast<int>(blocks.size()); };
  auto G = [&](const std::string& name, int i) { return NCPoly::gen(block(name) * n + (i - 1)); };

  const QScalar q = QScalar::q(), qi = QScalar::q_pow(-1);
  const bool need_inv = kind == PlaneKind::XDHat || kind == PlaneKind::XDDHat || kind == PlaneKind::XXBar ||
                        kind == PlaneKind::XDxD;
  RMatrix ri = need_inv ? r.inverse() : RMatrix();

  std::vector<NCPoly> rels;
  auto add = [&rels](NCPoly p) {
    if (!p.is_zero()) rels.push_back(std::move(p));
  };
  auto delta = [](int a, int b) { return NCPoly(a == b ? 1 : 0); };

  // x^i x^j = (1/q) R^{ij}_{kl} x^k x^l, also for y
  auto plane = [&](const std::string& x) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p = G(x, i) * G(x, j);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!r(i, j, k, l).is_zero()) p -= (qi * r(i, j, k, l)) * (G(x, k) * G(x, l));
        add(p);
      }
  };
  // d_a d_b = (1/q) d_c d_e R^{ec}_{ba}
  auto derivs = [&](const std::string& d) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        NCPoly p = G(d, a) * G(d, b);
        for (int c = 1; c <= n; ++c)
          for (int e = 1; e <= n; ++e)
            if (!r(e, c, b, a).is_zero()) p -= (qi * r(e, c, b, a)) * (G(d, c) * G(d, e));
        add(p);
      }
  };

  if (kind == PlaneKind::XY) {
    plane("x");
    plane("y");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p = G("x", i) * G("y", j);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!r(i, j, k, l).is_zero()) p -= (kappa * qi * r(i, j, k, l)) * (G("y", k) * G("x", l));
        add(p);
      }
    return rels;
  }

  plane("x");
  if (has("d")) {
    derivs("d");
    // d_i x^j = delta + q R^{jk}_{il} x^l d_k
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p = G("d", i) * G("x", j) - delta(i, j);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!r(j, k, i, l).is_zero()) p -= (q * r(j, k, i, l)) * (G("x", l) * G("d", k));
        add(p);
      }
  }
  if (has("h")) {
    derivs("h");
    // h_i x^j = delta + (1/q) Rinv^{jk}_{il} x^l h_k
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p = G("h", i) * G("x", j) - delta(i, j);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!ri(j, k, i, l).is_zero()) p -= (qi * ri(j, k, i, l)) * (G("x", l) * G("h", k));
        add(p);
      }
  }
  if (kind == PlaneKind::XDDHat) {
    // h_a d_b = q R^{ce}_{ba} d_e h_c
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        NCPoly p = G("h", a) * G("d", b);
        for (int c = 1; c <= n; ++c)
          for (int e = 1; e <= n; ++e)
            if (!r(c, e, b, a).is_zero()) p -= (q * r(c, e, b, a)) * (G("d", e) * G("h", c));
        add(p);
      }
  }
  if (kind == PlaneKind::XXBar) {
    // xb_j xb_i = (1/q) R^{kl}_{ij} xb_l xb_k
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p = G("xb", j) * G("xb", i);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!r(k, l, i, j).is_zero()) p -= (qi * r(k, l, i, j)) * (G("xb", l) * G("xb", k));
        add(p);
      }
    // x^i xb_j = q Rinv^{li}_{kj} xb_l x^k
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p = G("x", i) * G("xb", j);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!ri(l, i, k, j).is_zero()) p -= (q * ri(l, i, k, j)) * (G("xb", l) * G("x", k));
        add(p);
      }
  }
  if (has("dx")) {
    // P_S dx dx = 0
    RMatrix s = projectors_gl(r).S.matrix;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        NCPoly p;
        for (int c = 1; c <= n; ++c)
          for (int e = 1; e <= n; ++e)
            if (!s(a, b, c, e).is_zero()) p += s(a, b, c, e) * (G("dx", c) * G("dx", e));
        add(p);
      }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p;
        if (kind == PlaneKind::XDx) {
          // dx^i x^j = q R^{ij}_{kl} x^k dx^l, the explicit n = 2 list
          p = G("dx", i) * G("x", j);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
              if (!r(i, j, k, l).is_zero()) p -= (q * r(i, j, k, l)) * (G("x", k) * G("dx", l));
        } else {
          // x^i dx^j = q R^{ij}_{kl} dx^k x^l, the form compatible with d = dx^l d_l
          p = G("x", i) * G("dx", j);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
              if (!r(i, j, k, l).is_zero()) p -= (q * r(i, j, k, l)) * (G("dx", k) * G("x", l));
        }
        add(p);
      }
  }
  if (kind == PlaneKind::XDxD) {
    // d_j dx^i = (1/q) Rinv^{ik}_{jl} dx^l d_k
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly p = G("d", j) * G("dx", i);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!ri(i, k, j, l).is_zero()) p -= (qi * ri(i, k, j, l)) * (G("dx", l) * G("d", k));
        add(p);
      }
  }
  return rels;
}

RewriteSystem plane_system(const RMatrix& r, PlaneKind kind, const QScalar& kappa) {
  return system_from_pairs(plane_alphabet(r.n(), kind), interreduce(plane_relations(r, kind, kappa)));
}

RewriteSystem heisenberg_1d_system(bool realized) {
  Alphabet a{"x", "D", "L", "Linv"};
  auto P = [&a](const char* s) { return parse_ncpoly(s, a); };
  std::vector<NCPoly> rels{P("D*x - 1 - q*x*D"), P("L*x - q*x*L"), P("L*D - q^-1*D*L"), P("Linv*x - q^-1*x*Linv"),
                           P("Linv*D - q*D*Linv")};
  if (realized) rels.push_back(P("x*D - (q^(-1/2)*L - 1)/(q - 1)"));
  RewriteSystem sys = system_from_pairs(a, rels);
  sys.add_inverse_pair(2, 3);
  return sys;
}

namespace {

Check zero_check(const std::string& id, const NCPoly& residual, const Alphabet& a) {
  return {id, residual.is_zero(), residual.is_zero() ? "0 (exact)" : residual.str(a)};
}

}  // namespace

std::vector<Check> heisenberg_1d_check() {
  std::vector<Check> out;

  // the realization of L inside the x, D algebra
  Alphabet xd{"x", "D"};
  RewriteSystem base = system_from_pairs(xd, {parse_ncpoly("D*x - 1 - q*x*D", xd)});
  NCPoly lr = parse_ncpoly("q^(1/2)*(1 + (q - 1)*x*D)", xd);
  NCPoly x = NCPoly::gen(0), d = NCPoly::gen(1);
  const QScalar q = QScalar::q(), qi = QScalar::q_pow(-1);
  out.push_back(zero_check("scaling.realized_Lx", normal_order(lr * x - q * (x * lr), base), xd));
  out.push_back(zero_check("scaling.realized_LD", normal_order(lr * d - qi * (d * lr), base), xd));

  RewriteSystem abstract = heisenberg_1d_system(false);
  auto fails = pbw_overlap_check(abstract);
  out.push_back({"scaling.pbw_abstract", fails.empty(), std::to_string(fails.size()) + " overlap failures"});

  RewriteSystem sys = heisenberg_1d_system(true);
  const Alphabet& a = sys.alphabet();
  auto P = [&a](const char* s) { return parse_ncpoly(s, a); };
  fails = pbw_overlap_check(sys);
  out.push_back({"scaling.pbw_realized", fails.empty(), std::to_string(fails.size()) + " overlap failures"});

  NCPoly X = P("x"), D = P("D"), L = P("L"), Li = P("Linv");
  NCPoly Dt = -QScalar::t_pow(-1) * (Li * D);
  out.push_back(zero_check("tilde.Dt_x", normal_order(Dt * X - (-qi + qi * (X * Dt)), sys), a));
  out.push_back(zero_check("tilde.Dt_D", normal_order(Dt * D - q * (D * Dt), sys), a));

  // p = -(i/2)(D - Dt) = i p_r; dividing the identity by i keeps it real:
  // q^(1/2) x p_r - q^(-1/2) p_r x = L^-1
  auto heis = [&](const NCPoly& pr) { return QScalar::t_pow(1) * (X * pr) - QScalar::t_pow(-1) * (pr * X); };
  NCPoly pr = QScalar(mpq_class(-1, 2)) * (D - Dt);
  out.push_back(zero_check("heisenberg.xp", normal_order(heis(pr) - Li, sys), a));
  // what the left side actually is, and the momentum normalization that
  // gives L^-1
  QScalar factor = (QScalar(1) + qi) / QScalar(2);
  out.push_back(zero_check("heisenberg.xp_value", normal_order(heis(pr) - factor * Li, sys), a));
  NCPoly pn = (-q / (q + QScalar(1))) * (D - Dt);
  out.push_back(zero_check("heisenberg.xp_rescaled", normal_order(heis(pn) - Li, sys), a));
  out.push_back(zero_check("heisenberg.Lx", normal_order(L * X - q * (X * L), sys), a));
  out.push_back(zero_check("heisenberg.Lp", normal_order(L * pr - qi * (pr * L), sys), a));
  return out;
}

}  // namespace qheis
