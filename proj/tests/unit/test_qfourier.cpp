#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qheis/qfourier.hpp"

using namespace qheis;

namespace {

LatticeFunction random_g(unsigned seed, int lo, int hi) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  LatticeFunction g;
  for (int n = lo; n <= hi; ++n) g.samples[n] = {d(rng), d(rng)};
  return g;
}

double direct_product(double q0, int factors) {
  double p = 1;
  for (int nu = 0; nu < factors; ++nu)
    p *= (1 - std::pow(q0, -2.0 * (2 * nu + 1))) / (1 - std::pow(q0, -4.0 * (nu + 1)));
  return p;
}

}  // namespace

TEST(Normalization, TruncationIsStable) {
  double nq = normalization_nq(1.1);
  // the factors are within 1e-16 of 1 after roughly 200 terms; double that
  EXPECT_NEAR(nq, direct_product(1.1, 800), 1e-12);
  EXPECT_NEAR(normalization_nq(10), direct_product(10, 3), 1e-12);
  for (double q0 : {1.01, 1.5, 3.0}) {
    double v = normalization_nq(q0);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 0);
    EXPECT_LT(v, 1);
  }
  EXPECT_THROW(normalization_nq(1.0), std::invalid_argument);
}

TEST(Transform, ZeroAndDelta) {
  LatticeFunction zero;
  for (const auto& [nu, v] : transform(TrigKind::Cos, zero, {-5, 5}).samples) EXPECT_EQ(v, 0.0);

  LatticeFunction delta;
  delta.samples[0] = 1;
  double nq = normalization_nq(1.1);
  LatticeFunction t = transform(TrigKind::Cos, delta, {-10, 10});
  for (const auto& [nu, v] : t.samples)
    EXPECT_NEAR(v.real(), nq * trig_eval_lattice(TrigKind::Cos, 2 * nu, 1.1), 1e-15);
}

TEST(Transform, Linear) {
  LatticeFunction f = random_g(1, -5, 5), g = random_g(2, -3, 7), h;
  std::complex<double> a(0.7, -1.2), b(-2.0, 0.5);
  for (const auto& [n, v] : f.samples) h.samples[n] += a * v;
  for (const auto& [n, v] : g.samples) h.samples[n] += b * v;
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    KernelTable k(kind, 1.1);
    auto tf = transform(k, f, {-40, 20}), tg = transform(k, g, {-40, 20}), th = transform(k, h, {-40, 20});
    for (const auto& [nu, v] : th.samples) {
      std::complex<double> want = a * tf.samples[nu] + b * tg.samples[nu];
      EXPECT_NEAR(std::abs(v - want), 0.0, 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(Transform, InvolutionWithAdequateWindow) {
  LatticeFunction g = random_g(3, -5, 5);
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    IntWindow w = default_window(kind, 1.1, g.support());
    EXPECT_LT(double_transform_residual(kind, g, w), 1e-8) << to_string(kind);
    EXPECT_LT(plancherel_residual(kind, g, w), 1e-8) << to_string(kind);
  }
  // the sin kernel vanishes at small arguments, so a short window suffices
  EXPECT_LT(double_transform_residual(TrigKind::Sin, g, {-40, 40}), 1e-8);
  EXPECT_LT(plancherel_residual(TrigKind::Sin, g, {-40, 40}), 1e-8);
}

TEST(Transform, CosTailBelowShortWindow) {
  // cos_q -> 1 at small arguments, so the transform decays only like q^nu;
  // the dropped tail of a [-40, 40] window is visible well above 1e-8
  LatticeFunction g = random_g(3, -5, 5);
  EXPECT_GT(plancherel_residual(TrigKind::Cos, g, {-40, 40}), 1e-6);
}

TEST(Plancherel, SmallFunctions) {
  LatticeFunction d2;
  d2.samples[2] = 1;
  LatticeFunction two;
  two.samples[-1] = 1;
  two.samples[1] = -1;
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin})
    for (const LatticeFunction* g : {&d2, &two}) {
      IntWindow w = default_window(kind, 1.1, g->support());
      EXPECT_LT(plancherel_residual(kind, *g, w), 1e-8);
    }
  EXPECT_THROW(plancherel_residual(TrigKind::Cos, LatticeFunction{}, {0, 3}), std::invalid_argument);
}

TEST(Gram, OrthogonalityAndSymmetry) {
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    IntWindow w = default_window(kind, 1.1, {-3, 3});
    GramReport r = gram_check(kind, {-3, 3}, w, 1.1);
    EXPECT_LT(r.residual, 1e-6) << to_string(kind);
    EXPECT_LT(r.asymmetry, 1e-12);
  }
  EXPECT_LT(gram_residual(TrigKind::Sin, {-3, 3}, {-60, 60}, 1.1), 1e-6);
  EXPECT_EQ(gram_residual(TrigKind::Cos, {1, 0}, {-60, 60}, 1.1), 0.0);
}

TEST(Csv, Rows) {
  LatticeFunction g;
  g.samples[0] = {1.5, -2};
  g.samples[1] = {0, 1};
  EXPECT_EQ(to_csv(g), "nu,x,re,im\n0,1,1.5,-2\n1,1.2100000000000002,0,1\n");
}
