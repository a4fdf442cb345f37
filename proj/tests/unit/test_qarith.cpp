#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qheis/qarith.hpp"

using namespace qheis;

namespace {

QScalar Q(long k) { return QScalar::q_pow(k); }

// sum of c * q^e given as pairs, built without qnum
QScalar laurent(std::initializer_list<std::pair<long, long>> terms) {
  QScalar r;
  for (auto [c, e] : terms) r += QScalar(c) * Q(e);
  return r;
}

QScalar random_scalar(std::mt19937& rng, int max_exp, bool rational) {
  std::uniform_int_distribution<int> coef(-5, 5), ex(-max_exp, max_exp), nterm(1, 4);
  auto poly = [&] {
    QScalar p;
    int n = nterm(rng);
    for (int i = 0; i < n; ++i) p += QScalar(coef(rng)) * QScalar::t_pow(ex(rng));
    return p;
  };
  QScalar n = poly();
  if (!rational) return n;
  QScalar d = poly();
  while (d.is_zero()) d = poly();
  return n / d;
}

}  // namespace

TEST(QNum, SmallValues) {
  EXPECT_TRUE(qnum(0).is_zero());
  EXPECT_TRUE(qnum(1).is_one());
  EXPECT_EQ(qnum(2), Q(1) + Q(-1));
  EXPECT_EQ(qnum(3), laurent({{1, 2}, {1, 0}, {1, -2}}));
}

TEST(QNum, MatchesDefiningQuotient) {
  QScalar lam = Q(1) - Q(-1);
  for (long m = -12; m <= 12; ++m) EXPECT_EQ(qnum(m), (Q(m) - Q(-m)) / lam) << m;
}

TEST(QNum, OddSymmetry) {
  for (long m = 0; m <= 30; ++m) EXPECT_EQ(qnum(-m), -qnum(m));
}

TEST(QNum, PascalIdentity) {
  for (long m = 0; m <= 15; ++m)
    for (long n = 0; n <= 15; ++n) EXPECT_EQ(qnum(m + n), Q(n) * qnum(m) + Q(-m) * qnum(n));
}

TEST(QFact, Values) {
  EXPECT_TRUE(qfact(0).is_one());
  EXPECT_EQ(qfact(2), Q(1) + Q(-1));
  EXPECT_EQ(qfact(3), (Q(1) + Q(-1)) * laurent({{1, 2}, {1, 0}, {1, -2}}));
  EXPECT_THROW(qfact(-1), std::invalid_argument);
}

TEST(QScalarCanon, CancelsCommonFactors) {
  QScalar a = (Q(2) - QScalar(1)) / (Q(1) - QScalar(1));
  EXPECT_EQ(a, Q(1) + QScalar(1));
  EXPECT_TRUE(a.is_laurent());
  QScalar b = (Q(3) - Q(-3)) / (Q(1) - Q(-1));
  EXPECT_EQ(b, qnum(3));
  QScalar c = QScalar(mpq_class(6, 4)) * (Q(1) + QScalar(1)) / (QScalar(3) * Q(1) + QScalar(3));
  EXPECT_EQ(c, QScalar(mpq_class(1, 2)));
}

TEST(QScalarCanon, DenominatorSignAndShift) {
  QScalar a = QScalar(1) / (QScalar(-1) * Q(3) - Q(5));
  HalfLaurent d = a.den();
  EXPECT_EQ(d.low_exp(), 0);
  EXPECT_GT(d.coeff(0), 0);
  EXPECT_EQ(a * (QScalar(-1) * Q(3) - Q(5)), QScalar(1));
}

TEST(QScalarCanon, LargeDegreeGcd) {
  // E_m = prod_{j<=m} (q^j - q^-j); E_12 / (E_5 E_7) is a polynomial
  auto E = [](int m) {
    QScalar r(1);
    for (int j = 1; j <= m; ++j) r *= Q(j) - Q(-j);
    return r;
  };
  QScalar v = E(12) / (E(5) * E(7));
  EXPECT_TRUE(v.is_laurent());
  QScalar w = QScalar(1) / E(5) - QScalar(1) / E(6);
  EXPECT_EQ(w * E(6), (Q(6) - Q(-6)) - QScalar(1));
}

TEST(QScalarRing, RandomizedAxioms) {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    QScalar a = random_scalar(rng, 6, true), b = random_scalar(rng, 6, true), c = random_scalar(rng, 6, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a / a).is_one());
  }
}

TEST(QScalarEval, Examples) {
  EXPECT_NEAR(eval_at(qnum(2), 1.1), 1.1 + 1 / 1.1, 1e-15);
  EXPECT_EQ(eval_at(QScalar::lambda(), 1.0), 0.0);
  EXPECT_NEAR(eval_at(qnum(3), 2.0), 5.25, 1e-14);
  EXPECT_NEAR(eval_at(QScalar::t_pow(1), 2.0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(eval_at(qnum(3), mpq_class(2)), 5.25, 1e-15);
}

TEST(QScalarEval, PoleIsReported) {
  QScalar inv_lam = QScalar(1) / QScalar::lambda();
  EXPECT_THROW(eval_at(inv_lam, 1.0), PoleError);
  EXPECT_THROW(eval_at(QScalar(1) / (QScalar::t_pow(1) - QScalar(2)), mpq_class(4)), PoleError);
  EXPECT_NO_THROW(eval_at(QScalar(1) / (QScalar::t_pow(1) - QScalar(2)), mpq_class(2)));
}

TEST(QScalarEval, CommutesWithArithmetic) {
  std::mt19937 rng(11);
  for (double q0 : {1.1, 1.5, 2.0}) {
    for (int it = 0; it < 40; ++it) {
      QScalar a = random_scalar(rng, 40, true), b = random_scalar(rng, 40, true);
      double av = eval_at(a, q0), bv = eval_at(b, q0);
      EXPECT_LE(std::abs(eval_at(a + b, q0) - (av + bv)), 1e-12 * std::max(1.0, std::abs(av) + std::abs(bv)));
      EXPECT_LE(std::abs(eval_at(a * b, q0) - av * bv), 1e-12 * std::max(1.0, std::abs(av * bv)));
    }
  }
}

TEST(QScalarText, RoundTrip) {
  std::mt19937 rng(3);
  for (int it = 0; it < 80; ++it) {
    QScalar a = random_scalar(rng, 9, it % 2 == 0) * QScalar(mpq_class(it % 7 + 1, 3));
    EXPECT_EQ(parse_qscalar(a.str()), a) << a.str();
  }
  EXPECT_EQ(parse_qscalar("q + q^-1"), qnum(2));
  EXPECT_EQ(parse_qscalar("q^(1/2)*q^(1/2)"), Q(1));
  EXPECT_EQ(parse_qscalar("lambda"), QScalar::lambda());
  EXPECT_EQ(parse_qscalar("-1/3*q^(-3/2)"), QScalar(mpq_class(-1, 3)) * QScalar::t_pow(-3));
  EXPECT_EQ(QScalar::t_pow(-3).str(), "q^(-3/2)");
  EXPECT_EQ(qnum(3).str(), "q^2 + 1 + q^-2");
  EXPECT_THROW(parse_qscalar("q + "), std::invalid_argument);
  EXPECT_THROW(parse_qscalar("(q+1)^(1/2)"), std::invalid_argument);
}

TEST(CQScalar, Basics) {
  CQScalar i = CQScalar::i();
  EXPECT_EQ(i * i, CQScalar(-1));
  CQScalar z(qnum(2), QScalar::lambda());
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_EQ((z * z.conj()).im(), QScalar());
  EXPECT_EQ(parse_cqscalar(z.str()), z);
  auto v = eval_at(z, 1.5);
  EXPECT_NEAR(v.imag(), 1.5 - 1 / 1.5, 1e-15);
  EXPECT_EQ(z / z, CQScalar(1));
}
