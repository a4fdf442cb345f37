// Truncated lattice representations of x, Lambda, p on |n, sigma>^s and the
// momentum eigenstates built from cos_q / sin_q.
#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "qheis/fieldcalc.hpp"
#include "qheis/qarith.hpp"

namespace qheis {

struct Window {
  int nmin = -10;
  int nmax = 10;
  std::vector<int> sigmas{1, -1};
  mpq_class s = 1;

  void validate(double q0) const;  // throws std::invalid_argument
  int width() const { return nmax - nmin + 1; }
  int dim() const { return width() * static_cast<int>(sigmas.size()); }
  bool has_sigma(int sigma) const;
  int index(int n, int sigma) const;  // -1 when outside
  int label_n(int idx) const { return nmin + idx % width(); }
  int label_sigma(int idx) const { return sigmas[idx / width()]; }
};

enum class OpMode { Exact, Numeric };

using CVec = std::vector<std::complex<double>>;

// Sparse operator on the window basis. Exact mode keeps CQScalar entries;
// numeric mode keeps complex doubles evaluated at q0.
class LatticeOp {
 public:
  LatticeOp(const Window& w, OpMode mode, double q0) : window_(w), mode_(mode), q0_(q0) {}

  const Window& window() const { return window_; }
  OpMode mode() const { return mode_; }
  double q0() const { return q0_; }

  void set(int row, int col, const CQScalar& v);
  void set(int row, int col, std::complex<double> v);
  std::complex<double> entry(int row, int col) const;
  // exact entries, empty in numeric mode
  const std::map<int, std::map<int, CQScalar>>& exact_rows() const { return exact_; }
  const std::map<int, std::map<int, std::complex<double>>>& numeric_rows() const { return numeric_; }

  LatticeOp operator*(const LatticeOp& o) const;
  LatticeOp operator+(const LatticeOp& o) const;
  LatticeOp operator-(const LatticeOp& o) const;
  LatticeOp scaled(const CQScalar& c) const;
  LatticeOp adjoint() const;
  CVec apply(const CVec& v) const;

  // largest |entry| with both labels at least `mask` steps from the window edge;
  // exact mode reports 0 only for structurally zero entries
  double interior_max(int mask) const;

 private:
  Window window_;
  OpMode mode_;
  double q0_;
  std::map<int, std::map<int, CQScalar>> exact_;
  std::map<int, std::map<int, std::complex<double>>> numeric_;
  void check_compatible(const LatticeOp& o) const;
};

struct LatticeOps {
  LatticeOp x, lambda_op, p;
};

LatticeOps build_ops(const Window& w, OpMode mode, double q0);

// max over q^(1/2)xp - q^(-1/2)px - i Lambda, Lambda p - q p Lambda and
// Lambda x - q^-1 x Lambda on the interior
double algebra_residual(const LatticeOps& ops, int mask = 2);

enum class Family { I, II };

struct MomentumState {
  int tau = 1;
  int nu = 0;
  Family family = Family::I;
  bool reducible = true;
  int sigma = 1;  // irreducible states only
  Window window;
  double q0 = 1.1;
  CVec coeffs;
  double tail_mass = 0;  // norm^2 of the coefficients falling outside the window
  bool window_ok = true;
};

class WindowTooSmallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MomentumState momentum_state(int tau, int nu, Family family, bool reducible, const Window& w, double q0,
                             int sigma = 1, double tail_threshold = 1e-12);
// throws WindowTooSmallError when the tail exceeded the threshold
void require_window(const MomentumState& st);

// (sigma tau / (s lambda q^(1/2))) q^(2nu) for family I, q^(2nu-1) for II;
// reducible states use sigma = 1
std::complex<double> momentum_eigenvalue(const MomentumState& st);
double hamiltonian_eigenvalue(Family family, int nu, double s, double q0);

double eigen_residual(const LatticeOp& op, const CVec& v, std::complex<double> mu, int mask = 2);
double eigen_residual(const LatticeOp& op, const MomentumState& st, std::complex<double> mu, int mask = 2);
std::complex<double> inner(const CVec& a, const CVec& b);

// ||op from - to|| / ||to|| on the interior, e.g. Lambda between families
double map_residual(const LatticeOp& op, const CVec& from, const CVec& to, int mask = 2);

// max |<a|b> - delta| over reducible family I and II states, both tau, nu in nus
double momentum_gram_deviation(IntWindow nus, const Window& w, double q0);

// smallest window whose momentum-state tails stay below tail for nu in nus
Window window_for_states(IntWindow nus, double q0, double tail = 1e-13);

struct SpectrumEntry {
  Family family;
  int tau;
  int nu;
  double eigenvalue;
  double residual;
};
// H = p^2/2 against mu^2/2 for both families and both tau, reducible states
std::vector<SpectrumEntry> hamiltonian_check(const Window& w, double q0, IntWindow nus = {-3, 3});

// sum q^n |c_n|^2 over one sigma sector; proportional to <v|x|v> there
double sector_moment(const MomentumState& st, int sigma);

const char* to_string(Family f);

}  // namespace qheis
