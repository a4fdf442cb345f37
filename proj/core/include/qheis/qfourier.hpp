// Lattice q-Fourier transform on the even points x = q^(2n).
#pragma once

#include <complex>
#include <map>
#include <string>

#include "qheis/fieldcalc.hpp"
#include "qheis/qspecial.hpp"

namespace qheis {

struct LatticeFunction {
  std::map<int, std::complex<double>> samples;  // n -> g(q^(2n))
  double q0 = 1.1;

  IntWindow support() const;
  double norm2() const;  // sum q^(2n) |g|^2
};

// prod_{nu>=0} (1 - q^-2(2nu+1)) / (1 - q^-4(nu+1)), stopped once a factor is within tol of 1
double normalization_nq(double q0, double tol = 1e-16);

// Kernel values K(q^(2m)) computed once per m.
class KernelTable {
 public:
  KernelTable(TrigKind kind, double q0);
  double at(int m);
  TrigKind kind() const { return kind_; }
  double q0() const { return q0_; }

 private:
  TrigKind kind_;
  double q0_;
  std::map<int, double> cache_;
};

// nu-window whose dropped tail of N^2 q^(2(nu+n)) K(q^(2(nu+n)))^2, summed over
// n in support, stays below rel_tail.
IntWindow default_window(TrigKind kind, double q0, IntWindow support, double rel_tail = 1e-14);

LatticeFunction transform(TrigKind kind, const LatticeFunction& g, IntWindow out_window);
LatticeFunction transform(KernelTable& kernel, const LatticeFunction& g, IntWindow out_window);

struct GramReport {
  double residual = 0;   // max |N^2 sum - q^-2n delta| * q^2n
  double asymmetry = 0;  // max |G(n,m) - G(m,n)|
};
GramReport gram_check(TrigKind kind, IntWindow index_window, IntWindow sum_window, double q0);
double gram_residual(TrigKind kind, IntWindow index_window, IntWindow sum_window, double q0);

double plancherel_residual(TrigKind kind, const LatticeFunction& g, IntWindow out_window);

// max |T(T g)(n) - g(n)| / max |g| over the support of g
double double_transform_residual(TrigKind kind, const LatticeFunction& g, IntWindow out_window);

// rows "nu,q^(2nu),re,im"
std::string to_csv(const LatticeFunction& g);

}  // namespace qheis
