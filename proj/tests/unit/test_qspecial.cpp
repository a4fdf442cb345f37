#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qheis/qspecial.hpp"

using namespace qheis;

namespace {

QScalar Q(long k) { return QScalar::q_pow(k); }

// x^-1 * f, for series with no constant term
FieldElem divide_by_x(const FieldElem& f) {
  FieldElem r;
  for (const auto& [m, c] : f.coeffs()) r += FieldElem::monomial(c, m - 1);
  return r;
}

}  // namespace

TEST(TrigCoeff, Examples) {
  QScalar lam = QScalar::lambda();
  EXPECT_EQ(trig_coeff(TrigKind::Cos, 0), QScalar(1));
  EXPECT_EQ(trig_coeff(TrigKind::Sin, 0), QScalar::q() / lam);
  EXPECT_EQ(trig_coeff(TrigKind::Cos, 2), Q(-2) / (qfact(4) * lam.pow(4)));
  EXPECT_EQ(trig_coeff(TrigKind::Sin, 3), -Q(4) / (qfact(7) * lam.pow(7)));
  EXPECT_THROW(trig_coeff(TrigKind::Cos, -1), std::invalid_argument);
  QTrigCoeff t = trig_term(TrigKind::Sin, 2);
  EXPECT_EQ(t.value, trig_coeff(TrigKind::Sin, 2));
  EXPECT_EQ(t.k, 2);
}

TEST(LambdaFactorial, MatchesQFactorial) {
  for (long m = 0; m <= 12; ++m) EXPECT_EQ(lambda_factorial(m), qfact(m) * QScalar::lambda().pow(m));
}

TEST(QBinomial, MatchesFactorialQuotient) {
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) {
      QScalar b = qbinomial(n, k);
      EXPECT_TRUE(b.is_laurent());
      EXPECT_EQ(b, qfact(n) / (qfact(k) * qfact(n - k))) << n << " " << k;
    }
  EXPECT_TRUE(qbinomial(3, 4).is_zero());
}

TEST(Pythagoras, VanishesBeyondZero) {
  EXPECT_EQ(pythagoras_coeff(0), QScalar(1));
  for (long n = 1; n <= 20; ++n) EXPECT_TRUE(pythagoras_coeff(n).is_zero()) << n;
}

TEST(Pythagoras, BruteForceConvolution) {
  // Cauchy product of exact series coefficients, independent of the binomial route
  auto c = [](long k) { return trig_coeff(TrigKind::Cos, k); };
  auto s = [](long k) { return trig_coeff(TrigKind::Sin, k); };
  for (long n = 0; n <= 5; ++n) {
    QScalar total;
    for (long k = 0; k <= n; ++k) total += c(k) * c(n - k) * Q(2 * (n - k));
    for (long k = 0; k + 1 <= n; ++k) total += Q(-1) * s(k) * s(n - 1 - k) * Q(-(2 * (n - 1 - k) + 1));
    EXPECT_EQ(total, n == 0 ? QScalar(1) : QScalar()) << n;
  }
}

TEST(Pythagoras, AlternatingBinomialSum) {
  // sum_k (-1)^k q^(n-k) [2n]!/([k]![2n-k]!) vanishes for n >= 1
  for (long n = 1; n <= 7; ++n) {
    QScalar total;
    for (long k = 0; k <= 2 * n; ++k)
      total += QScalar(k % 2 == 0 ? 1 : -1) * Q(n - k) * qfact(2 * n) / (qfact(k) * qfact(2 * n - k));
    EXPECT_TRUE(total.is_zero()) << n;
  }
  EXPECT_TRUE((QScalar::q() - qnum(2) + Q(-1)).is_zero());
}

TEST(Recurrence, DifferenceEquationsToOrder40) {
  const int cap = 41;
  QScalar one(1), qm2 = Q(-2);
  FieldElem sinx = trig_series(TrigKind::Sin, one, cap + 1), sin2 = trig_series(TrigKind::Sin, qm2, cap + 1);
  FieldElem cosx = trig_series(TrigKind::Cos, one, cap + 1), cos2 = trig_series(TrigKind::Cos, qm2, cap + 1);
  FieldElem r1 = divide_by_x(sinx - sin2).truncated_below(cap) - cosx.truncated_below(cap);
  EXPECT_TRUE(r1.is_zero()) << r1.str();
  FieldElem r2 = divide_by_x(cosx - cos2).truncated_below(cap) + FieldElem(qm2) * sin2.truncated_below(cap);
  EXPECT_TRUE(r2.is_zero()) << r2.str();
  for (long k = 0; k <= 20; ++k)
    EXPECT_EQ(one - Q(-2 * (2 * k + 1)), QScalar::lambda() / QScalar::q() * Q(-2 * k) * qnum(2 * k + 1));
}

TEST(Derivative, NablaResiduals) {
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin})
    for (QScalar k : {QScalar(1), Q(1), Q(-2), QScalar(3) * QScalar::t_pow(1)}) {
      EXPECT_TRUE(trig_nabla_residual(kind, k, 20).truncated_below(20).is_zero()) << to_string(kind);
      EXPECT_TRUE(trig_laplace_residual(kind, k, 20).truncated_below(20).is_zero()) << to_string(kind);
    }
  EXPECT_TRUE(trig_nabla_residual(TrigKind::Cos, QScalar(), 7).is_zero());
  EXPECT_THROW(trig_nabla_residual(TrigKind::Sin, QScalar(1), 0), std::invalid_argument);
  EXPECT_EQ(trig_laplace_eigenvalue(TrigKind::Cos, QScalar(1)), -QScalar(1) / (QScalar::q() * QScalar::lambda().pow(2)));
}

TEST(TrigEval, AgreesWithExactCoefficients) {
  const double q0 = 1.1;
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    std::vector<double> coef;
    for (long k = 0; k < 60; ++k) coef.push_back(eval_at(trig_coeff(kind, k), q0));
    for (double x : {1.0, 0.3, -2.0, 5.0}) {
      // the double oracle itself carries about eps * sum |terms| of rounding
      double ref = 0, mag = 0;
      for (long k = 0; k < 60; ++k) {
        double term = coef[k] * std::pow(x, kind == TrigKind::Cos ? 2 * k : 2 * k + 1);
        ref += term;
        mag += std::abs(term);
      }
      EXPECT_NEAR(trig_eval(kind, x, q0), ref, 1e-14 * std::max(1.0, mag)) << x;
    }
  }
  EXPECT_EQ(trig_eval(TrigKind::Cos, 0, 1.3), 1.0);
  EXPECT_EQ(trig_eval(TrigKind::Sin, 0, 1.3), 0.0);
  EXPECT_THROW(trig_eval(TrigKind::Cos, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(trig_eval(TrigKind::Cos, 1, 0.9), std::invalid_argument);
  EXPECT_THROW(trig_eval(TrigKind::Cos, 1, 1.1, 0), std::invalid_argument);
  EXPECT_THROW(trig_eval(TrigKind::Cos, 1e30, 1.01, 1e-16, 5), std::runtime_error);
}

TEST(TrigEval, LatticeAgainstHighPrecisionReference) {
  // independent 500-digit summation at q = 1.1 (as a double), x = q^n
  struct Ref {
    long n;
    double c, s;
  };
  const Ref refs[] = {{20, 2.5230560203224849e-7, 3.821221547333151e-8},
                      {40, 4.0890344750542211e-32, 9.0383401135665556e-34},
                      {41, 2.4467607618534334e+31, 1.2175292542139077e+33},
                      {61, 6.0267264558440766e+72, 2.018508534554729e+75}};
  for (const Ref& r : refs) {
    EXPECT_NEAR(trig_eval_lattice(TrigKind::Cos, r.n, 1.1), r.c, 1e-16 + 1e-12 * std::abs(r.c)) << r.n;
    EXPECT_NEAR(trig_eval_lattice(TrigKind::Sin, r.n, 1.1), r.s, 1e-16 + 1e-12 * std::abs(r.s)) << r.n;
  }
}

TEST(TrigEval, OddLatticeGrowsEvenLatticeDecays) {
  const double q0 = 1.1;
  bool cos_big = false, sin_big = false;
  for (int n = 0; n <= 40; ++n) {
    cos_big |= std::abs(trig_eval_lattice(TrigKind::Cos, 2 * n + 1, q0)) > 1e3;
    sin_big |= std::abs(trig_eval_lattice(TrigKind::Sin, 2 * n + 1, q0)) > 1e3;
  }
  EXPECT_TRUE(cos_big);
  EXPECT_TRUE(sin_big);
  int last_big = -1;
  for (int nu = 0; nu <= 120; ++nu) {
    double c = trig_eval_lattice(TrigKind::Cos, 2 * nu, q0);
    if (std::pow(q0, 2 * nu) * c * c >= 1e-12) last_big = nu;
  }
  EXPECT_LT(last_big, 20);
}
