// Fields f(x): finite Laurent polynomials in x over QScalar, with the
// q-derivative, the scaling map L, the indefinite integral and lattice sums.
#pragma once

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qheis/qarith.hpp"

namespace qheis {

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const QScalar& c);
  FieldElem(long c) : FieldElem(QScalar(c)) {}
  static FieldElem monomial(const QScalar& c, int power);
  static FieldElem x(int power = 1) { return monomial(QScalar(1), power); }

  const std::map<int, QScalar>& coeffs() const { return c_; }
  QScalar coeff(int power) const;
  bool is_zero() const { return c_.empty(); }
  int min_degree() const;
  int max_degree() const;

  // keep only powers < cap
  FieldElem truncated_below(int cap) const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) = default;

  double eval(double x, double q0) const;

  // "c * x^k" terms joined by " + ", ascending powers
  std::string str() const;

 private:
  std::map<int, QScalar> c_;
  void add_term(int power, const QScalar& c);
};

FieldElem parse_field(std::string_view text);

class NotInImageError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

FieldElem nabla(const FieldElem& f);
// L^power: x^m -> q^(-m*power) x^m
FieldElem l_shift(const FieldElem& f, int power);
// F with nabla(F) = f and no constant term
FieldElem grad_inverse(const FieldElem& f);

// Lattice integral between labels N and M (x from q^N to q^M, same parity):
// lambda * sum over k = N+2, N+4, ..., M of q^(k-1) f(q^(k-1)).
double definite_integral(const FieldElem& f, int N, int M, double q0, bool allow_inverse_x = true);
QScalar definite_integral_exact(const FieldElem& f, int N, int M, bool allow_inverse_x = true);

struct IntWindow {
  int nmin = 0;
  int nmax = -1;
  bool empty() const { return nmax < nmin; }
};

using SampleFn = std::function<std::complex<double>(double)>;

// lambda * sum_{n in window, sigma = +-1} q^n conj(f(sigma q^n)) g(sigma q^n)
std::complex<double> jackson_product(const SampleFn& f, const SampleFn& g, double q0, IntWindow window);
double jackson_product(const FieldElem& f, const FieldElem& g, double q0, IntWindow window);

}  // namespace qheis
