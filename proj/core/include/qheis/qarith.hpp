// Exact scalars in the deformation parameter q. Everything is stored in the
// variable t = q^(1/2), so half-integer powers of q are plain monomials.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qheis {

// Laurent polynomial in t with rational coefficients.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(const mpq_class& c, int t_exp = 0);
  static HalfLaurent from_map(const std::map<int, mpq_class>& coeffs);

  std::map<int, mpq_class> coeffs() const;
  mpq_class coeff(int t_exp) const;
  bool is_zero() const { return c_.empty(); }
  int low_exp() const { return lo_; }
  int high_exp() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  size_t term_count() const;

  HalfLaurent operator-() const;
  friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) = default;

  // rendered in q, descending powers, e.g. "q^2 - 1 + 3/2*q^(-1/2)"
  std::string str() const;

 private:
  int lo_ = 0;
  std::vector<mpq_class> c_;  // c_[i] multiplies t^(lo_ + i); ends nonzero
  void trim();
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rational function in t, kept in canonical form: gcd(num, den) = 1 in
// Z[t, 1/t], den has lowest exponent 0 and a positive constant term.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long v);
  QScalar(const mpq_class& v);
  QScalar(const HalfLaurent& num, const HalfLaurent& den = HalfLaurent(1));

  static QScalar q_pow(long k);  // q^k
  static QScalar t_pow(long e);  // q^(e/2)
  static QScalar q() { return q_pow(1); }
  static QScalar lambda();       // q - 1/q

  HalfLaurent num() const;
  HalfLaurent den() const;
  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  bool is_laurent() const { return den_.size() == 1 && den_[0] == 1; }
  // (coefficient, t exponent) when the value is c*t^e
  std::optional<std::pair<mpq_class, int>> as_monomial() const;
  size_t complexity() const { return num_.size() + den_.size(); }

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) = default;

  QScalar inv() const;
  QScalar pow(long e) const;

  std::string str() const;

  // raw access for numeric evaluation
  int num_low() const { return nlo_; }
  const std::vector<mpz_class>& num_coeffs() const { return num_; }
  const std::vector<mpz_class>& den_coeffs() const { return den_; }

 private:
  int nlo_ = 0;
  std::vector<mpz_class> num_;       // num = t^nlo_ * sum num_[i] t^i
  std::vector<mpz_class> den_{1};    // den = sum den_[i] t^i, den_[0] > 0
  static QScalar make(int nlo, std::vector<mpz_class> n, int dlo, std::vector<mpz_class> d);
};

class CQScalar {
 public:
  CQScalar() = default;
  CQScalar(long v) : re_(v) {}
  CQScalar(const QScalar& re, const QScalar& im = QScalar()) : re_(re), im_(im) {}
  static CQScalar i() { return {QScalar(), QScalar(1)}; }

  const QScalar& re() const { return re_; }
  const QScalar& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  CQScalar conj() const { return {re_, -im_}; }

  CQScalar operator-() const { return {-re_, -im_}; }
  CQScalar& operator+=(const CQScalar& o);
  CQScalar& operator-=(const CQScalar& o);
  CQScalar& operator*=(const CQScalar& o);
  CQScalar& operator/=(const CQScalar& o);
  friend CQScalar operator+(CQScalar a, const CQScalar& b) { return a += b; }
  friend CQScalar operator-(CQScalar a, const CQScalar& b) { return a -= b; }
  friend CQScalar operator*(CQScalar a, const CQScalar& b) { return a *= b; }
  friend CQScalar operator/(CQScalar a, const CQScalar& b) { return a /= b; }
  friend bool operator==(const CQScalar& a, const CQScalar& b) = default;

  std::string str() const;

 private:
  QScalar re_, im_;
};

QScalar qnum(long m);
QScalar qfact(long n);

// q0 must be positive. t = sqrt(q0) is taken once in double precision and
// the polynomials are then summed in extended precision. Throws PoleError
// when the denominator vanishes at q0 (decided exactly).
double eval_at(const QScalar& s, double q0);
double eval_at(const QScalar& s, const mpq_class& q0);
double eval_at(const HalfLaurent& s, double q0);
std::complex<double> eval_at(const CQScalar& s, double q0);
std::complex<double> eval_at(const CQScalar& s, const mpq_class& q0);

// Accepts the printed form plus general +,-,*,/,^ expressions in q, integer
// literals, parentheses and (complex variant only) i. Half powers are
// written q^(k/2).
QScalar parse_qscalar(std::string_view text);
CQScalar parse_cqscalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const HalfLaurent& v);
std::ostream& operator<<(std::ostream& os, const QScalar& v);
std::ostream& operator<<(std::ostream& os, const CQScalar& v);

}  // namespace qheis
