// Exact R-matrices over QScalar: Yang-Baxter checks, projectors, RTT and
// quantum-plane relations.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qheis/ncalg.hpp"
#include "qheis/qarith.hpp"
#include "qheis/report.hpp"

namespace qheis {

// Square matrix on pairs of indices. entry (i,j,k,l) = R^{ij}_{kl}, indices
// 1..n, row pair (i,j) and column pair (k,l) in lexicographic order.
class RMatrix {
 public:
  RMatrix() = default;
  explicit RMatrix(int n);
  static RMatrix identity(int n);
  static RMatrix flip(int n);  // R^{ij}_{kl} = delta^i_l delta^j_k

  int n() const { return n_; }
  int dim() const { return n_ * n_; }
  int pair(int i, int j) const { return (i - 1) * n_ + (j - 1); }

  const QScalar& operator()(int i, int j, int k, int l) const { return at(pair(i, j), pair(k, l)); }
  QScalar& operator()(int i, int j, int k, int l) { return at(pair(i, j), pair(k, l)); }
  const QScalar& at(int row, int col) const { return e_[static_cast<size_t>(row) * dim() + col]; }
  QScalar& at(int row, int col) { return e_[static_cast<size_t>(row) * dim() + col]; }

  RMatrix operator-() const;
  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  RMatrix& operator*=(const QScalar& c);
  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(RMatrix a, const QScalar& c) { return a *= c; }
  friend RMatrix operator*(const QScalar& c, RMatrix a) { return a *= c; }
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix&, const RMatrix&) = default;

  // throws std::domain_error when singular
  RMatrix inverse() const;
  QScalar trace() const;
  size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  // entries with upper and lower pairs exchanged
  RMatrix pair_transpose() const;

  // aligned table with pair labels
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<QScalar> e_;
};

// Sparse text form:
//   n: 2
//   (1,1,1,1) q
RMatrix parse_rmatrix(std::string_view text);
std::string to_text(const RMatrix& r);

// R^{ji}_{kl} = delta^i_k delta^j_l [1 + (q-1) delta^{ij}] + lambda theta(i-j) delta^j_k delta^i_l
RMatrix r_gl(int n);

// Number of nonzero entries of R12 R23 R12 - R23 R12 R23 on n^3 indices.
size_t ybe_residual(const RMatrix& r);

struct Projector {
  RMatrix matrix;
  QScalar eigenvalue;
  long multiplicity = 0;
};

struct GlProjectors {
  Projector A;  // eigenvalue -1/q
  Projector S;  // eigenvalue q
};

// A = -q/(1+q^2) (R - q), S = q/(1+q^2) (R + 1/q). Throws std::domain_error
// when (R - q)(R + 1/q) != 0.
GlProjectors projectors_gl(const RMatrix& r);

// Exact trace of an idempotent as an integer; throws when not an integer.
long rank_of(const RMatrix& p);

// Generators T^i_j, index (i-1) n + (j-1). For n = 2 they are named a b c d.
Alphabet rtt_alphabet(int n);
// R^{ij}_{kl} T^k_r T^l_s - T^i_k T^j_l R^{kl}_{rs} for all (i,j,r,s) in
// lexicographic order; n^4 entries, zero ones included.
std::vector<NCPoly> rtt_relations(const RMatrix& r);
// Substitutes the matrices (t^a_c)_{bd} = R^{ab}_{cd} for T^a_c in every RTT
// relation and counts nonzero entries of the results.
size_t rtt_matrix_residual(const RMatrix& r);

enum class PlaneKind {
  XX,       // x x = (1/q) R x x
  XD,       // x, derivatives d: d x = 1 + q R x d, d d relations
  XDHat,    // x, second derivatives h via (qR)^-1
  XDDHat,   // x, d, h with the h d relations
  XXBar,    // x and conjugates xb, xb x via Gamma = q R^-1
  XDx,      // x and differentials dx, dx x = qR x dx
  XDxD,     // x, dx and d, x dx = qR dx x
  XY,       // two planes, y ordered before x, factor kappa
};

const char* to_string(PlaneKind k);

Alphabet plane_alphabet(int n, PlaneKind kind);
// Relations (each equal to zero) before interreduction.
std::vector<NCPoly> plane_relations(const RMatrix& r, PlaneKind kind, const QScalar& kappa = QScalar(1));
// interreduce + system_from_pairs; NonOrientableError when a relation does
// not orient.
RewriteSystem plane_system(const RMatrix& r, PlaneKind kind, const QScalar& kappa = QScalar(1));

// Alphabet {x, D, L, Linv} of the one-dimensional algebra D x = 1 + q x D.
// Checks, all exact:
//   scaling.*     L = q^(1/2)(1 + (q-1) x D) scales x and D inside the x,D
//                 algebra; the abstract and realized systems are confluent
//   tilde.*       the D-tilde relations, D-tilde = -q^(-1/2) L^-1 D
//   heisenberg.xp q^(1/2) x p - q^(-1/2) p x = i L^-1 for
//                 p = -(i/2)(D - D-tilde). This one fails: the left side is
//                 ((1 + 1/q)/2) i L^-1, recorded by heisenberg.xp_value.
//   heisenberg.xp_rescaled  the same identity for p = -i q/(1+q) (D - D-tilde)
//   heisenberg.L* L x = q x L and L p = q^-1 p L
// The tilde and heisenberg checks run in the system where x D is replaced
// by (q^(-1/2) L - 1)/(q - 1), which is what makes L^-1 an inverse of the
// realized L rather than a free symbol.
std::vector<Check> heisenberg_1d_check();
RewriteSystem heisenberg_1d_system(bool realized);

}  // namespace qheis
