#include "qheis/qspecial.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mpfr_util.hpp"

namespace qheis {

const char* to_string(TrigKind k) { return k == TrigKind::Cos ? "cos" : "sin"; }

QScalar lambda_factorial(long m) {
  if (m < 0) throw std::invalid_argument("lambda_factorial: negative argument");
  QScalar r(1);
  for (long j = 1; j <= m; ++j) r *= QScalar::q_pow(j) - QScalar::q_pow(-j);
  return r;
}

QScalar trig_coeff(TrigKind kind, long k) {
  if (k < 0) throw std::invalid_argument("trig_coeff: negative index");
  QScalar sign(k % 2 == 0 ? 1 : -1);
  if (kind == TrigKind::Cos) return sign * QScalar::q_pow(-k) / lambda_factorial(2 * k);
  return sign * QScalar::q_pow(k + 1) / lambda_factorial(2 * k + 1);
}

QTrigCoeff trig_term(TrigKind kind, long k) { return {kind, k, trig_coeff(kind, k)}; }

QScalar qbinomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return QScalar();
  std::vector<QScalar> row{QScalar(1)};
  for (long m = 1; m <= n; ++m) {
    std::vector<QScalar> next(m + 1);
    for (long j = 0; j <= m; ++j) {
      QScalar v;
      if (j < m) v += QScalar::q_pow(-j) * row[j];
      if (j > 0) v += QScalar::q_pow(m - j) * row[j - 1];
      next[j] = std::move(v);
    }
    row.swap(next);
  }
  return row[k];
}

FieldElem trig_series(TrigKind kind, const QScalar& k_scale, int degree_cap) {
  FieldElem f;
  int first = kind == TrigKind::Cos ? 0 : 1;
  QScalar kp = kind == TrigKind::Cos ? QScalar(1) : k_scale;
  QScalar k2 = k_scale * k_scale;
  for (long k = 0; 2 * k + first < degree_cap; ++k) {
    f += FieldElem::monomial(trig_coeff(kind, k) * kp, static_cast<int>(2 * k + first));
    kp *= k2;
    if (kp.is_zero()) break;
  }
  return f;
}

namespace {

using detail::Mpfr;

// log2 |t_k / t_(k-1)| for consecutive series terms
double log2_ratio(TrigKind kind, long k, double lq, double lx) {
  // cos: q^-1 x^2 / ((q^(2k-1) - q^-(2k-1)) (q^2k - q^-2k))
  // sin: q x^2 / ((q^2k - q^-2k) (q^(2k+1) - q^-(2k+1)))
  long a = kind == TrigKind::Cos ? 2 * k - 1 : 2 * k;
  auto l2sinh = [lq](long j) {
    double v = j * lq;  // log2 q^j
    return v + std::log2(1.0 - std::exp2(-2.0 * v));
  };
  double num = (kind == TrigKind::Cos ? -lq : lq) + 2 * lx;
  return num - l2sinh(a) - l2sinh(a + 1);
}

// Sums the series at the point written by set_x. lx = log2|x| drives the
// precision estimate.
double sum_series(TrigKind kind, double q0, double lx, const std::function<void(Mpfr&)>& set_x, double tol,
                  int term_cap) {
  const double lq = std::log2(q0);
  const double l2lam = std::log2(q0 - 1 / q0);

  // peak term magnitude decides the working precision
  double lt = kind == TrigKind::Cos ? 0.0 : lq + lx - l2lam;
  double peak = lt;
  long k = 1;
  for (; k <= term_cap; ++k) {
    double r = log2_ratio(kind, k, lq, lx);
    lt += r;
    peak = std::max(peak, lt);
    if (r < 0 && lt < std::log2(tol) - 8 - std::max(0.0, peak)) break;
  }
  if (k > term_cap) throw std::runtime_error("trig_eval: series did not converge within the term cap");

  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(96 + std::max(0.0, peak) + std::log2(static_cast<double>(term_cap)));
  Mpfr q(prec, q0), x(prec), qi(prec), x2(prec), term(prec), sum(prec), a(prec), b(prec), tmp(prec);
  set_x(x);
  mpfr_ui_div(qi.get(), 1, q.get(), MPFR_RNDN);
  mpfr_sqr(x2.get(), x.get(), MPFR_RNDN);

  auto sinh2 = [&](Mpfr& out, long j) {  // q^j - q^-j
    mpfr_pow_si(out.get(), q.get(), j, MPFR_RNDN);
    mpfr_ui_div(tmp.get(), 1, out.get(), MPFR_RNDN);
    mpfr_sub(out.get(), out.get(), tmp.get(), MPFR_RNDN);
  };

  if (kind == TrigKind::Cos) {
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
  } else {
    sinh2(a, 1);
    mpfr_mul(term.get(), q.get(), x.get(), MPFR_RNDN);
    mpfr_div(term.get(), term.get(), a.get(), MPFR_RNDN);
  }
  mpfr_set(sum.get(), term.get(), MPFR_RNDN);

  for (long j = 1; j <= term_cap; ++j) {
    long e = kind == TrigKind::Cos ? 2 * j - 1 : 2 * j;
    sinh2(a, e);
    sinh2(b, e + 1);
    mpfr_mul(term.get(), term.get(), x2.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), kind == TrigKind::Cos ? qi.get() : q.get(), MPFR_RNDN);
    mpfr_div(term.get(), term.get(), a.get(), MPFR_RNDN);
    mpfr_div(term.get(), term.get(), b.get(), MPFR_RNDN);
    mpfr_neg(term.get(), term.get(), MPFR_RNDN);

    bool decreasing = log2_ratio(kind, j, lq, lx) < 0;
    double t = std::abs(term.to_double());
    double s = std::abs(sum.to_double());
    if (decreasing && t < tol * (1 + s)) return sum.to_double();
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  throw std::runtime_error("trig_eval: series did not converge within the term cap");
}

void check_args(double q0, double tol) {
  if (!(q0 > 1)) throw std::invalid_argument("trig_eval: requires q0 > 1");
  if (!(tol > 0)) throw std::invalid_argument("trig_eval: requires tol > 0");
}

}  // namespace

double trig_eval(TrigKind kind, double x0, double q0, double tol, int term_cap) {
  check_args(q0, tol);
  if (x0 == 0) return kind == TrigKind::Cos ? 1.0 : 0.0;
  return sum_series(kind, q0, std::log2(std::abs(x0)), [x0](Mpfr& x) { mpfr_set_d(x.get(), x0, MPFR_RNDN); }, tol,
                    term_cap);
}

double trig_eval_lattice(TrigKind kind, long n, double q0, double tol, int term_cap) {
  check_args(q0, tol);
  return sum_series(kind, q0, n * std::log2(q0),
                    [n, q0](Mpfr& x) {
                      mpfr_set_d(x.get(), q0, MPFR_RNDN);
                      mpfr_pow_si(x.get(), x.get(), n, MPFR_RNDN);
                    },
                    tol, term_cap);
}

QScalar pythagoras_coeff(long n) {
  if (n < 0) throw std::invalid_argument("pythagoras_coeff: negative index");
  // Multiply every product of series coefficients by [2n]! lambda^2n; each
  // becomes a Gaussian binomial, so the sum stays a Laurent polynomial.
  std::vector<QScalar> row{QScalar(1)};
  for (long m = 1; m <= 2 * n; ++m) {
    std::vector<QScalar> next(m + 1);
    for (long j = 0; j <= m; ++j) {
      QScalar v;
      if (j < m) v += QScalar::q_pow(-j) * row[j];
      if (j > 0) v += QScalar::q_pow(m - j) * row[j - 1];
      next[j] = std::move(v);
    }
    row.swap(next);
  }
  QScalar p;
  // cos_q(x) cos_q(qx): c_k c_l q^2l, l = n - k
  for (long k = 0; k <= n; ++k) p += QScalar::q_pow(n - 2 * k) * row[2 * k];
  // q^-1 sin_q(x) sin_q(x/q): s_k s_l q^-(2l+1), l = n - 1 - k
  for (long k = 0; k + 1 <= n; ++k) p -= QScalar::q_pow(2 * k + 1 - n) * row[2 * k + 1];
  if (n % 2 == 1) p = -p;
  if (p.is_zero()) return p;
  return p / lambda_factorial(2 * n);
}

QScalar trig_laplace_eigenvalue(TrigKind kind, const QScalar& k_scale) {
  QScalar lam = QScalar::lambda();
  QScalar k2 = k_scale * k_scale;
  if (kind == TrigKind::Cos) return -k2 / (QScalar::q() * lam * lam);
  return -k2 * QScalar::q() / (lam * lam);
}

FieldElem trig_nabla_residual(TrigKind kind, const QScalar& k_scale, int degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("trig_nabla_residual: degree_cap must be >= 1");
  QScalar lam = QScalar::lambda(), q = QScalar::q();
  FieldElem lhs = nabla(trig_series(kind, k_scale, degree_cap + 1)).truncated_below(degree_cap);
  FieldElem rhs;
  if (kind == TrigKind::Cos)
    rhs = FieldElem(-k_scale / (q * lam)) * trig_series(TrigKind::Sin, k_scale / q, degree_cap);
  else
    rhs = FieldElem(k_scale * q / lam) * trig_series(TrigKind::Cos, q * k_scale, degree_cap);
  return lhs - rhs;
}

FieldElem trig_laplace_residual(TrigKind kind, const QScalar& k_scale, int degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("trig_laplace_residual: degree_cap must be >= 1");
  FieldElem lhs = nabla(nabla(trig_series(kind, k_scale, degree_cap + 2))).truncated_below(degree_cap);
  return lhs - FieldElem(trig_laplace_eigenvalue(kind, k_scale)) * trig_series(kind, k_scale, degree_cap);
}

}  // namespace qheis
