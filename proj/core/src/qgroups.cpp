#include "qheis/qgroups.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qheis {

namespace {

// [n/2] at q0; the classical value at q0 = 1
double qnum_num(int twice, double q0) {
  if (q0 == 1.0) return twice / 2.0;
  return (std::pow(q0, twice / 2.0) - std::pow(q0, -twice / 2.0)) / (q0 - 1.0 / q0);
}

// [n/2] exactly
QScalar qnum_half(int twice) {
  if (twice % 2 == 0) return qnum(twice / 2);
  return (QScalar::t_pow(twice) - QScalar::t_pow(-twice)) * QScalar::lambda().inv();
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// |a - b| relative to the size of the terms
double rel(const CMatrix& a, const CMatrix& b) { return max_abs(a - b) / std::max({1.0, max_abs(a), max_abs(b)}); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

// max residual of the three algebra relations for given T3, T+, T-
double algebra_residual(const CMatrix& T3, const CMatrix& Tp, const CMatrix& Tm, double q0) {
  const double q = q0, s = q + 1 / q;
  double r1 = rel(Tp * Tm / q - q * Tm * Tp, T3);
  double r2 = rel(q * q * T3 * Tp - Tp * T3 / (q * q), s * Tp);
  double r3 = rel(T3 * Tm / (q * q) - q * q * Tm * T3, -s * Tm);
  return std::max({r1, r2, r3});
}

}  // namespace

SuqRep suq2_rep(int two_j, double q0) {
  if (two_j < 0) throw std::invalid_argument("suq2_rep: 2j must be non-negative");
  if (!(q0 > 0)) throw std::invalid_argument("suq2_rep: q0 must be positive");
  SuqRep r;
  r.two_j = two_j;
  r.q0 = q0;
  const int d = two_j + 1;
  r.T3 = r.Tplus = r.Tminus = r.tau = CMatrix::Zero(d, d);
  const QScalar q = QScalar::q();
  // k indexes m = k - j; 2m = 2k - 2j, j + m = k, j - m = 2j - k
  for (int k = 0; k < d; ++k) {
    int m2 = 2 * k - two_j;
    r.T3(k, k) = std::pow(q0, -m2) * qnum_num(2 * m2, q0);
    r.tau(k, k) = std::pow(q0, -2 * m2);
    r.T3_exact.push_back(QScalar::q_pow(-m2) * qnum(m2));
    r.tau_exact.push_back(QScalar::q_pow(-2 * m2));
    if (k + 1 < d) {
      // T+ |m> = q^(-m-3/2) sqrt([j+m+1][j-m]) |m+1>
      double rad = qnum_num(2 * (k + 1), q0) * qnum_num(2 * (two_j - k), q0);
      r.Tplus(k + 1, k) = std::pow(q0, (-m2 - 3) / 2.0) * std::sqrt(rad);
      r.Tplus_sq.push_back(QScalar::q_pow(-m2 - 3) * qnum(k + 1) * qnum(two_j - k));
      // T- |m+1> = q^(-(m+1)+3/2) sqrt([j+m+1][j-m]) |m>
      r.Tminus(k, k + 1) = std::pow(q0, (-m2 + 1) / 2.0) * std::sqrt(rad);
      r.Tminus_sq.push_back(QScalar::q_pow(-m2 + 1) * qnum(k + 1) * qnum(two_j - k));
    }
  }
  return r;
}

double Suq2Residuals::max() const { return std::max({algebra, tau_scaling, casimir, conjugation, classical}); }

Suq2Residuals suq2_residuals(const SuqRep& rep) {
  Suq2Residuals out;
  const double q = rep.q0;
  const int d = rep.dim();
  const CMatrix I = CMatrix::Identity(d, d);
  out.conjugation = std::max(rel(rep.T3.adjoint(), rep.T3), rel(rep.Tplus.adjoint(), rep.Tminus / (q * q)));
  if (q == 1.0) {
    // T3 -> 2 j3, T+- -> j+-
    out.classical = rel(rep.Tplus * rep.Tminus - rep.Tminus * rep.Tplus, rep.T3);
    out.algebra = out.classical;
    out.tau_scaling = rel(rep.tau, I);
    return out;
  }
  out.algebra = algebra_residual(rep.T3, rep.Tplus, rep.Tminus, q);
  const double lam = q - 1 / q;
  CMatrix tau_inv = rep.tau.diagonal().cwiseInverse().asDiagonal();
  out.tau_scaling = std::max({rel(rep.tau * rep.Tplus * tau_inv, rep.Tplus / std::pow(q, 4)),
                              rel(rep.tau * rep.Tminus * tau_inv, rep.Tminus * std::pow(q, 4)),
                              rel(rep.tau, I - lam * rep.T3)});
  CMatrix sq = rep.tau.diagonal().cwiseSqrt().asDiagonal();
  CMatrix isq = sq.diagonal().cwiseInverse().asDiagonal();
  CMatrix cas = q * q * (rep.Tminus * rep.Tplus + I / (lam * lam)) * isq + (sq - I - q * q * I) / (lam * lam);
  double jj = qnum_num(rep.two_j, q) * qnum_num(rep.two_j + 2, q);
  out.casimir = rel(cas, q * jj * I);
  return out;
}

std::vector<Check> suq2_exact_checks(int two_j) {
  SuqRep r = suq2_rep(two_j, 1.5);
  const QScalar q = QScalar::q(), qi = QScalar::q_pow(-1), lam = QScalar::lambda();
  const QScalar s = q + qi, il2 = (lam * lam).inv();
  const int d = r.dim();
  const std::string tag = "j=" + std::to_string(two_j) + "/2";
  std::vector<Check> out;
  auto worst = [&](const std::string& id, const std::vector<QScalar>& vals) {
    for (const auto& v : vals)
      if (!v.is_zero()) return Check{id + " " + tag, false, v.str()};
    return Check{id + " " + tag, true, "0 (exact)"};
  };
  // diagonal products: (T+T-)(m) and (T-T+)(m), zero at the ends
  std::vector<QScalar> pm(d), mp(d);
  std::vector<QScalar> r_tau, r_alg1, r_alg2, r_alg3, r_scale, r_cas, r_conj, r_prod;
  for (int k = 0; k < d; ++k) {
    int m2 = 2 * k - two_j;
    if (k > 0) pm[k] = QScalar::q_pow(-m2 + 1) * qnum(k) * qnum(two_j - k + 1);
    if (k + 1 < d) mp[k] = QScalar::q_pow(-m2 - 1) * qnum(k + 1) * qnum(two_j - k);
    if (k > 0) r_prod.push_back(pm[k] * pm[k] - r.Tplus_sq[k - 1] * r.Tminus_sq[k - 1]);
    if (k + 1 < d) r_prod.push_back(mp[k] * mp[k] - r.Tminus_sq[k] * r.Tplus_sq[k]);
    r_tau.push_back(r.tau_exact[k] - (QScalar(1) - lam * r.T3_exact[k]));
    r_alg1.push_back(qi * pm[k] - q * mp[k] - r.T3_exact[k]);
    if (k + 1 < d) {
      r_alg2.push_back(q * q * r.T3_exact[k + 1] - qi * qi * r.T3_exact[k] - s);
      r_scale.push_back(r.tau_exact[k + 1] - QScalar::q_pow(-4) * r.tau_exact[k]);
      r_conj.push_back(r.Tplus_sq[k] - QScalar::q_pow(-4) * r.Tminus_sq[k]);
    }
    if (k > 0) {
      r_alg3.push_back(qi * qi * r.T3_exact[k - 1] - q * q * r.T3_exact[k] + s);
      r_scale.push_back(r.tau_exact[k - 1] - QScalar::q_pow(4) * r.tau_exact[k]);
    }
    QScalar half = QScalar::q_pow(-m2), ihalf = QScalar::q_pow(m2);  // tau^(1/2), tau^(-1/2)
    r_cas.push_back(q * q * (mp[k] + il2) * ihalf + il2 * (half - QScalar(1) - q * q) -
                    q * qnum_half(two_j) * qnum_half(two_j + 2));
  }
  out.push_back(worst("exact.products", r_prod));
  out.push_back(worst("exact.tau_def", r_tau));
  out.push_back(worst("exact.algebra_pm", r_alg1));
  out.push_back(worst("exact.algebra_3p", r_alg2));
  out.push_back(worst("exact.algebra_3m", r_alg3));
  out.push_back(worst("exact.tau_scaling", r_scale));
  out.push_back(worst("exact.casimir", r_cas));
  out.push_back(worst("exact.conjugation", r_conj));
  return out;
}

double coproduct_residual(int two_j1, int two_j2, double q0) {
  SuqRep a = suq2_rep(two_j1, q0), b = suq2_rep(two_j2, q0);
  const CMatrix I2 = CMatrix::Identity(b.dim(), b.dim());
  // tau^(1/2) = q^(-2m), taken from the exact exponent
  CMatrix half = CMatrix::Zero(a.dim(), a.dim());
  for (int k = 0; k < a.dim(); ++k) half(k, k) = std::pow(q0, -(2 * k - two_j1));
  CMatrix T3 = kron(a.T3, I2) + kron(a.tau, b.T3);
  CMatrix Tp = kron(a.Tplus, I2) + kron(half, b.Tplus);
  CMatrix Tm = kron(a.Tminus, I2) + kron(half, b.Tminus);
  if (q0 == 1.0) return rel(Tp * Tm - Tm * Tp, T3);
  return algebra_residual(T3, Tp, Tm, q0);
}

namespace {

constexpr const char* kPlaneRules =
    "T3*x1 = q^2*x1*T3 - q*x1\n"
    "T3*x2 = q^-2*x2*T3 + q^-1*x2\n"
    "Tp*x1 = q*x1*Tp + q^-1*x2\n"
    "Tp*x2 = q^-1*x2*Tp\n"
    "Tm*x1 = q*x1*Tm\n"
    "Tm*x2 = q^-1*x2*Tm + q*x1\n";

constexpr const char* kConjPlaneRules =
    "T3*xb1 = q^-2*xb1*T3 + q^-1*xb1\n"
    "T3*xb2 = q^2*xb2*T3 - q*xb2\n"
    "Tp*xb1 = q^-1*xb1*Tp\n"
    "Tp*xb2 = q*xb2*Tp - xb1\n"
    "Tm*xb1 = q^-1*xb1*Tm - xb2\n"
    "Tm*xb2 = q*xb2*Tm\n";

}  // namespace

RewriteSystem suq2_plane_system(bool conjugate) {
  std::string text = conjugate ? std::string("gens: xb1 xb2 T3 Tp Tm\n") + kConjPlaneRules
                               : std::string("gens: x1 x2 T3 Tp Tm\n") + kPlaneRules;
  return parse_relations(text).system;
}

std::vector<Check> suq2_plane_covariance() {
  std::vector<Check> out;
  const char* names[] = {"T3", "Tp", "Tm"};
  for (bool conj : {false, true}) {
    RewriteSystem sys = suq2_plane_system(conj);
    const Alphabet& a = sys.alphabet();
    NCPoly z = conj ? parse_ncpoly("xb2*xb1 - q*xb1*xb2", a) : parse_ncpoly("x1*x2 - q*x2*x1", a);
    auto res = commutant_residual(z, sys, {2, 3, 4});
    for (int g = 0; g < 3; ++g) {
      std::string id = std::string(conj ? "plane.conjugate." : "plane.") + names[g];
      out.push_back({id, res[g].is_zero(), res[g].is_zero() ? "0 (exact)" : res[g].str(a)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SO_q(3)

namespace {

using Tensor2 = std::array<std::array<QScalar, 3>, 3>;

// index 0,1,2 = -, 0, +
Tensor2 metric_lower() {
  Tensor2 e;
  e[1][1] = QScalar(1);
  e[2][0] = -QScalar::q_pow(-1);  // eta_{+-}
  e[0][2] = -QScalar::q();        // eta_{-+}
  return e;
}

std::array<Tensor2, 3> epsilon_table() {
  const QScalar q = QScalar::q();
  std::array<Tensor2, 3> e;  // e[A][B][C] = eps_{AB}^C
  e[2][0][1] = q;
  e[0][2][1] = -q;
  e[1][1][1] = QScalar(1) - q * q;
  e[2][1][2] = QScalar(1);
  e[1][2][2] = -q * q;
  e[0][1][0] = -q * q;
  e[1][0][0] = QScalar(1);
  return e;
}

}  // namespace

So3Structure so3_build() {
  // four planes x, y, u, v; x and y pass to the right of u and v
  Alphabet a{"u1", "u2", "v1", "v2", "x1", "x2", "y1", "y2"};
  RMatrix R = r_gl(2);
  const QScalar qi = QScalar::q_pow(-1), q = QScalar::q();
  auto G = [](int block, int i) { return NCPoly::gen(2 * block + i - 1); };
  std::vector<NCPoly> rels;
  for (int ab : {2, 3})
    for (int bb : {0, 1})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          NCPoly p = G(ab, i) * G(bb, j);
          for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
              if (!R(i, j, k, l).is_zero()) p -= (qi * R(i, j, k, l)) * (G(bb, k) * G(ab, l));
          rels.push_back(p);
        }
  RewriteSystem sys = system_from_pairs(a, rels);

  // bispinors with X^0 unnormalized: Y^0 = q x1 y2 + x2 y1 = sqrt(1+q^2) X^0,
  // the combination T+ produces from x1 y1
  auto Y = [&](int first, int second, int A) {
    if (A == 0) return G(first, 1) * G(second, 1);
    if (A == 2) return G(first, 2) * G(second, 2);
    return q * (G(first, 1) * G(second, 2)) + G(first, 2) * G(second, 1);
  };
  auto lead = [&](int A) { return A == 1 ? q : QScalar(1); };
  auto pivot = [](int A) { return A == 0 ? std::pair{1, 1} : A == 1 ? std::pair{1, 2} : std::pair{2, 2}; };
  auto n0 = [](int A, int B) { return (A == 1) + (B == 1); };
  const QScalar s2 = QScalar(1) + q * q;

  So3Structure out;
  out.Rhat = RMatrix(3);
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) {
      NCPoly prod = normal_order(Y(2, 3, A) * Y(0, 1, B), sys);
      NCPoly rebuilt;
      for (int C = 0; C < 3; ++C)
        for (int D = 0; D < 3; ++D) {
          auto [c1, c2] = pivot(C);
          auto [d1, d2] = pivot(D);
          Word w{static_cast<char>(c1 - 1), static_cast<char>(2 + c2 - 1), static_cast<char>(4 + d1 - 1),
                 static_cast<char>(6 + d2 - 1)};
          QScalar c = prod.coeff(w);
          if (c.is_zero()) continue;
          c *= (lead(C) * lead(D)).inv();
          rebuilt += c * (Y(0, 1, C) * Y(2, 3, D));
          int shift = n0(C, D) - n0(A, B);
          if (shift % 2 != 0) throw std::runtime_error("so3_build: odd rescaling");
          out.Rhat(A + 1, B + 1, C + 1, D + 1) = c * s2.pow(shift / 2);
        }
      if (rebuilt != prod) throw std::runtime_error("so3_build: product does not close in the Xt X span");
    }

  const RMatrix I = RMatrix::identity(3), &Rh = out.Rhat;
  const QScalar e1(1), e3 = -QScalar::q_pow(-4), e5 = QScalar::q_pow(-6);
  RMatrix a1 = Rh - I * e1, a3 = Rh - I * e3, a5 = Rh - I * e5;
  if (!(a1 * a3 * a5).is_zero()) throw std::runtime_error("so3_build: characteristic equation fails");
  out.P1 = (a1 * a3) * ((e5 - e1) * (e5 - e3)).inv();
  out.P3 = (a1 * a5) * ((e3 - e1) * (e3 - e5)).inv();
  out.P5 = (a3 * a5) * ((e1 - e3) * (e1 - e5)).inv();

  out.eta_lo = metric_lower();
  // eta^{AB} with eta^{BA} eta_{BC} = delta^A_C; eta_lo is its own inverse
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) out.eta_up[A][B] = out.eta_lo[B][A];
  out.eps = epsilon_table();
  return out;
}

namespace {

// eps with all indices lowered: eps_{ABC} = eps_{AB}^D eta_{DC}
std::array<Tensor2, 3> eps_lower(const So3Structure& s) {
  std::array<Tensor2, 3> r;
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B)
      for (int C = 0; C < 3; ++C)
        for (int D = 0; D < 3; ++D)
          if (!s.eps[A][B][D].is_zero() && !s.eta_lo[D][C].is_zero()) r[A][B][C] += s.eps[A][B][D] * s.eta_lo[D][C];
  return r;
}

// all indices raised with eta^{AB}
std::array<Tensor2, 3> eps_upper(const So3Structure& s) {
  auto lo = eps_lower(s);
  std::array<Tensor2, 3> r;
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B)
      for (int C = 0; C < 3; ++C)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
              const QScalar& v = lo[a][b][c];
              if (v.is_zero() || s.eta_up[A][a].is_zero() || s.eta_up[B][b].is_zero() || s.eta_up[C][c].is_zero())
                continue;
              r[A][B][C] += s.eta_up[A][a] * s.eta_up[B][b] * s.eta_up[C][c] * v;
            }
  return r;
}

}  // namespace

RMatrix so3_p1_from_metric(const So3Structure& s) {
  const QScalar q2 = QScalar::q_pow(2);
  QScalar c = q2 * (QScalar(1) + q2 + q2 * q2).inv();
  RMatrix p(3);
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B)
      for (int C = 0; C < 3; ++C)
        for (int D = 0; D < 3; ++D) p(A + 1, B + 1, C + 1, D + 1) = c * s.eta_up[A][B] * s.eta_lo[D][C];
  return p;
}

RMatrix so3_p3_from_epsilon(const So3Structure& s) {
  auto lo = eps_lower(s), up = eps_upper(s);
  QScalar c = (QScalar(1) + QScalar::q_pow(4)).inv();
  RMatrix p(3);
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B)
      for (int C = 0; C < 3; ++C)
        for (int D = 0; D < 3; ++D) {
          QScalar v;
          for (int F = 0; F < 3; ++F)
            if (!up[F][A][B].is_zero() && !lo[F][D][C].is_zero()) v += up[F][A][B] * lo[F][D][C];
          p(A + 1, B + 1, C + 1, D + 1) = c * v;
        }
  return p;
}

}  // namespace qheis

namespace qheis {

namespace {

Check matrix_zero(const std::string& id, const RMatrix& m) {
  size_t nz = m.nonzeros();
  return {id, nz == 0, nz == 0 ? "0 (exact)" : std::to_string(nz) + " nonzero entries"};
}

Check poly_zero(const std::string& id, const NCPoly& p, const Alphabet& a) {
  return {id, p.is_zero(), p.is_zero() ? "0 (exact)" : p.str(a)};
}

}  // namespace

std::vector<Check> so3_checks(const So3Structure& s) {
  std::vector<Check> out;
  const RMatrix I = RMatrix::identity(3), &R = s.Rhat;
  const QScalar one(1), e3 = -QScalar::q_pow(-4), e5 = QScalar::q_pow(-6);
  out.push_back(matrix_zero("so3.characteristic", (R - I * one) * (R - I * e3) * (R - I * e5)));
  auto count = [](size_t n) { return n == 0 ? std::string("0 (exact)") : std::to_string(n) + " nonzero entries"; };
  size_t y = ybe_residual(R), yi = ybe_residual(R.inverse());
  out.push_back({"so3.ybe", y == 0, count(y)});
  out.push_back({"so3.ybe_inverse", yi == 0, count(yi)});
  out.push_back(matrix_zero("so3.P1_idempotent", s.P1 * s.P1 - s.P1));
  out.push_back(matrix_zero("so3.P3_idempotent", s.P3 * s.P3 - s.P3));
  out.push_back(matrix_zero("so3.P5_idempotent", s.P5 * s.P5 - s.P5));
  out.push_back(matrix_zero("so3.orthogonal", s.P1 * s.P3 + s.P1 * s.P5 + s.P3 * s.P5));
  out.push_back(matrix_zero("so3.completeness", s.P1 + s.P3 + s.P5 - I));
  out.push_back(matrix_zero("so3.decomposition", s.P5 + s.P3 * e3 + s.P1 * e5 - R));
  long r1 = rank_of(s.P1), r3 = rank_of(s.P3), r5 = rank_of(s.P5);
  out.push_back({"so3.multiplicities", r1 == 1 && r3 == 3 && r5 == 5,
                 std::to_string(r5) + "," + std::to_string(r3) + "," + std::to_string(r1)});
  out.push_back(matrix_zero("so3.P1_from_metric", so3_p1_from_metric(s) - s.P1));
  out.push_back(matrix_zero("so3.P3_from_epsilon", so3_p3_from_epsilon(s) - s.P3));

  // the metric read off P1: eta_{DC} proportional to P1^{00}_{CD}, eta_{00} = 1
  bool eta_ok = true, contraction = true;
  for (int C = 0; C < 3; ++C)
    for (int D = 0; D < 3; ++D) {
      QScalar v = s.P1(2, 2, C + 1, D + 1) * s.P1(2, 2, 2, 2).inv();
      if (v != s.eta_lo[D][C]) eta_ok = false;
      QScalar c1, c2;
      for (int B = 0; B < 3; ++B) {
        c1 += s.eta_up[B][C] * s.eta_lo[B][D];
        c2 += s.eta_up[C][B] * s.eta_lo[D][B];
      }
      if (c1 != QScalar(C == D ? 1 : 0) || c2 != QScalar(C == D ? 1 : 0)) contraction = false;
    }
  out.push_back({"so3.metric_from_P1", eta_ok, eta_ok ? "0 (exact)" : "mismatch"});
  out.push_back({"so3.metric_contraction", contraction, contraction ? "0 (exact)" : "mismatch"});
  return out;
}

namespace {

struct EuclidGens {
  NCPoly X[3], d[3];   // X^A and d_A
  NCPoly Xl[3];        // X_A = X^B eta_{BA}
  NCPoly du[3];        // d^A = eta^{AB} d_B
};

EuclidGens euclid_gens(const So3Structure& s) {
  EuclidGens g;
  for (int A = 0; A < 3; ++A) {
    g.X[A] = NCPoly::gen(A);
    g.d[A] = NCPoly::gen(3 + A);
  }
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) {
      if (!s.eta_lo[B][A].is_zero()) g.Xl[A] += s.eta_lo[B][A] * g.X[B];
      if (!s.eta_up[A][B].is_zero()) g.du[A] += s.eta_up[A][B] * g.d[B];
    }
  return g;
}

}  // namespace

RewriteSystem euclid3_system(const So3Structure& s) {
  Alphabet a{"Xm", "X0", "Xp", "dm", "d0", "dp"};
  EuclidGens g = euclid_gens(s);
  const QScalar q4 = QScalar::q_pow(4);
  auto up = eps_upper(s);
  std::vector<NCPoly> rels;
  // P3 X X = 0
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) {
      NCPoly p;
      for (int C = 0; C < 3; ++C)
        for (int D = 0; D < 3; ++D)
          if (!s.P3(A + 1, B + 1, C + 1, D + 1).is_zero()) p += s.P3(A + 1, B + 1, C + 1, D + 1) * (g.X[C] * g.X[D]);
      if (!p.is_zero()) rels.push_back(p);
    }
  // d_B X^A = delta + q^4 Rhat^{AC}_{BD} X^D d_C
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) {
      NCPoly p = g.d[B] * g.X[A] - NCPoly(A == B ? 1 : 0);
      for (int C = 0; C < 3; ++C)
        for (int D = 0; D < 3; ++D)
          if (!s.Rhat(A + 1, C + 1, B + 1, D + 1).is_zero())
            p -= (q4 * s.Rhat(A + 1, C + 1, B + 1, D + 1)) * (g.X[D] * g.d[C]);
      rels.push_back(p);
    }
  // eps^{FBA} d_A d_B = 0
  for (int F = 0; F < 3; ++F) {
    NCPoly p;
    for (int A = 0; A < 3; ++A)
      for (int B = 0; B < 3; ++B)
        if (!up[F][B][A].is_zero()) p += up[F][B][A] * (g.d[A] * g.d[B]);
    if (!p.is_zero()) rels.push_back(p);
  }
  return system_from_pairs(a, interreduce(rels));
}

std::vector<Check> euclid3_checks(const So3Structure& s) {
  std::vector<Check> out;
  RewriteSystem sys = euclid3_system(s);
  const Alphabet& a = sys.alphabet();
  auto P = [&a](const char* t) { return parse_ncpoly(t, a); };
  auto N = [&sys](const NCPoly& p) { return normal_order(p, sys); };
  EuclidGens g = euclid_gens(s);
  const QScalar q = QScalar::q(), q2 = QScalar::q_pow(2), q4 = QScalar::q_pow(4), q6 = QScalar::q_pow(6);
  const QScalar one(1);

  // the X relations in explicit form
  out.push_back(poly_zero("euclid.X0Xp", N(P("X0*Xp - q^2*Xp*X0")), a));
  out.push_back(poly_zero("euclid.XmX0", N(P("Xm*X0 - q^2*X0*Xm")), a));
  out.push_back(poly_zero("euclid.XmXp", N(P("Xm*Xp - Xp*Xm - lambda*X0*X0")), a));
  // eps_{FDC} X^C X^D = 0 with the lowered epsilon
  auto lo = eps_lower(s);
  for (int F = 0; F < 3; ++F) {
    NCPoly p;
    for (int C = 0; C < 3; ++C)
      for (int D = 0; D < 3; ++D)
        if (!lo[F][D][C].is_zero()) p += lo[F][D][C] * (g.X[C] * g.X[D]);
    out.push_back(poly_zero("euclid.epsXX." + std::to_string(F), N(p), a));
  }
  auto fails = pbw_overlap_check(sys);
  out.push_back({"euclid.pbw", fails.empty(), std::to_string(fails.size()) + " overlap failures"});

  // reality: Xbar^0 = X^0, Xbar^+ = -q X^-, Xbar^- = -q^-1 X^+; antilinear
  // and order reversing, q real
  {
    NCPoly bar[3] = {-QScalar::q_pow(-1) * g.X[2], g.X[1], -q * g.X[0]};
    bool ok = true;
    std::string detail = "0 (exact)";
    for (const auto& [lhs, rhs] : sys.rules()) {
      if (lhs[0] >= 3 || lhs[1] >= 3) continue;  // X X rules only
      NCPoly rel = NCPoly::word(lhs) - rhs, img;
      for (const auto& [w, c] : rel.terms()) {
        NCPoly t(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * bar[static_cast<int>(*it)];
        img += t;
      }
      NCPoly r = N(img);
      if (!r.is_zero()) {
        ok = false;
        detail = r.str(a);
      }
    }
    out.push_back({"euclid.reality", ok, detail});
  }

  // contractions
  NCPoly XoX, Xod, dod;
  for (int A = 0; A < 3; ++A) {
    Xod += g.X[A] * g.d[A];
    dod += g.du[A] * g.d[A];
    for (int B = 0; B < 3; ++B)
      if (!s.eta_lo[B][A].is_zero()) XoX += s.eta_lo[B][A] * (g.X[A] * g.X[B]);
  }
  NCPoly Lam = q6 * (NCPoly(1) + (q4 - one) * Xod + (q2 * (q2 - one) * (q2 - one)) * (XoX * dod));
  const char* names[] = {"m", "0", "p"};
  for (int A = 0; A < 3; ++A) {
    out.push_back(poly_zero(std::string("euclid.LX") + names[A], N(Lam * g.X[A] - q4 * (g.X[A] * Lam)), a));
    out.push_back(
        poly_zero(std::string("euclid.Ld") + names[A], N(Lam * g.d[A] - QScalar::q_pow(-4) * (g.d[A] * Lam)), a));
  }

  // dbar^A = -Lam^-1 S^A, S^A = d^A + q^2(q^2-1) X^A (d o d). Multiplying the
  // dbar relations on the left by Lam removes Lam^-1 using the scaling rules.
  NCPoly S[3], Sl[3];
  for (int A = 0; A < 3; ++A) S[A] = g.du[A] + (q2 * (q2 - one)) * (g.X[A] * dod);
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B)
      if (!s.eta_lo[B][A].is_zero()) Sl[A] += s.eta_lo[B][A] * S[B];
  // Lam (dbar_C X_D + q^-6 eta_{CD} - Rhat^{BA}_{DC} X_A dbar_B)
  //   = -S_C X_D + q^-6 eta_{CD} Lam + q^4 Rhat^{BA}_{DC} X_A S_B
  bool ok = true;
  std::string detail = "0 (exact)";
  for (int C = 0; C < 3; ++C)
    for (int D = 0; D < 3; ++D) {
      NCPoly r = -(Sl[C] * g.Xl[D]);
      if (!s.eta_lo[C][D].is_zero()) r += (QScalar::q_pow(-6) * s.eta_lo[C][D]) * Lam;
      for (int A = 0; A < 3; ++A)
        for (int B = 0; B < 3; ++B)
          if (!s.Rhat(B + 1, A + 1, D + 1, C + 1).is_zero())
            r += (q4 * s.Rhat(B + 1, A + 1, D + 1, C + 1)) * (g.Xl[A] * Sl[B]);
      r = N(r);
      if (!r.is_zero() && ok) {
        ok = false;
        detail = std::string("C=") + names[C] + " D=" + names[D] + ": " + r.str(a);
      }
    }
  out.push_back({"euclid.dbar_X", ok, detail});
  // Lam^2 dbar^B dbar^A = q^-4 S^B S^A
  auto lo2 = eps_lower(s);
  for (int F = 0; F < 3; ++F) {
    NCPoly p;
    for (int A = 0; A < 3; ++A)
      for (int B = 0; B < 3; ++B)
        if (!lo2[F][A][B].is_zero()) p += lo2[F][A][B] * (S[B] * S[A]);
    out.push_back(poly_zero(std::string("euclid.eps_dbar_dbar.") + names[F], N(p), a));
  }
  return out;
}

}  // namespace qheis
