// sl_q(2) representations, the coproduct and plane covariance; the SO_q(3)
// vector R-matrix, its projectors and the three-dimensional Euclidean space.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "qheis/ncalg.hpp"
#include "qheis/qarith.hpp"
#include "qheis/report.hpp"
#include "qheis/rmatrix.hpp"

namespace qheis {

using CMatrix = Eigen::MatrixXcd;

// Spin j = two_j/2 in the basis |j,m>, m ascending from -j to j.
struct SuqRep {
  int two_j = 0;
  double q0 = 1;
  CMatrix T3, Tplus, Tminus, tau;
  // exact diagonals, index k <-> m = k - j
  std::vector<QScalar> T3_exact, tau_exact;
  // squares of the off-diagonal entries: Tplus(k+1,k)^2 and Tminus(k,k+1)^2
  std::vector<QScalar> Tplus_sq, Tminus_sq;

  int dim() const { return two_j + 1; }
};

// q0 = 1 gives the classical limit [n] -> n. Throws std::invalid_argument
// for two_j < 0 or q0 <= 0.
SuqRep suq2_rep(int two_j, double q0);

struct Suq2Residuals {
  double algebra = 0;      // max over the three relations
  double tau_scaling = 0;  // tau T+ tau^-1 - q^-4 T+ and the T- analogue
  double casimir = 0;      // Casimir - q [j][j+1]
  double conjugation = 0;  // T3^dagger - T3, Tplus^dagger - q^-2 Tminus
  double classical = 0;    // q0 = 1 only: [j+, j-] - 2 j3 with T3 = 2 j3
  double max() const;
};

Suq2Residuals suq2_residuals(const SuqRep& rep);

// The same relations checked on the radical-free data, exactly in q.
std::vector<Check> suq2_exact_checks(int two_j);

// Max residual of the algebra relations for Delta(T) on V_j1 x V_j2.
double coproduct_residual(int two_j1, int two_j2, double q0);

// Alphabet x1 x2 T3 Tp Tm (or xb1 xb2 T3 Tp Tm) with the T x rules.
RewriteSystem suq2_plane_system(bool conjugate);
// x1 x2 - q x2 x1 and xb2 xb1 - q xb1 xb2 through T3, Tp, Tm.
std::vector<Check> suq2_plane_covariance();

// Index order 1,2,3 = (-, 0, +).
struct So3Structure {
  RMatrix Rhat;                                        // X Xt = Rhat Xt X
  std::array<std::array<QScalar, 3>, 3> eta_lo;        // eta_{AB}
  std::array<std::array<QScalar, 3>, 3> eta_up;        // eta^{AB}
  std::array<std::array<std::array<QScalar, 3>, 3>, 3> eps;  // eps_{AB}^C
  RMatrix P1, P3, P5;
};

// Builds Rhat from the four-plane normal ordering and the projectors by
// Lagrange interpolation on the eigenvalues 1, -q^-4, q^-6. Throws
// std::runtime_error when a product fails to close in the Xt X span or the
// characteristic equation fails.
So3Structure so3_build();

// Index-shaped tensors built from eta and eps.
RMatrix so3_p1_from_metric(const So3Structure& s);
RMatrix so3_p3_from_epsilon(const So3Structure& s);

std::vector<Check> so3_checks(const So3Structure& s);

// Alphabet Xm X0 Xp dm d0 dp; the X relations from P3 X X = 0, the d X
// relations with q^4 Rhat, eps d d = 0.
RewriteSystem euclid3_system(const So3Structure& s);
std::vector<Check> euclid3_checks(const So3Structure& s);

}  // namespace qheis
