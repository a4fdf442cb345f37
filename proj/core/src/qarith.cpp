#include "qheis/qarith.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "mpfr_util.hpp"
#include "zpoly.hpp"

namespace qheis {

using detail::ZPoly;

// ---------------------------------------------------------------- HalfLaurent

HalfLaurent::HalfLaurent(const mpq_class& c, int t_exp) : lo_(t_exp), c_{c} { trim(); }

HalfLaurent HalfLaurent::from_map(const std::map<int, mpq_class>& coeffs) {
  HalfLaurent r;
  if (coeffs.empty()) return r;
  r.lo_ = coeffs.begin()->first;
  r.c_.assign(coeffs.rbegin()->first - r.lo_ + 1, 0);
  for (const auto& [e, c] : coeffs) r.c_[e - r.lo_] = c;
  r.trim();
  return r;
}

void HalfLaurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<int>(k);
  }
  if (c_.empty()) lo_ = 0;
}

std::map<int, mpq_class> HalfLaurent::coeffs() const {
  std::map<int, mpq_class> m;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) m.emplace(lo_ + static_cast<int>(i), c_[i]);
  return m;
}

mpq_class HalfLaurent::coeff(int t_exp) const {
  if (c_.empty() || t_exp < lo_ || t_exp > high_exp()) return 0;
  return c_[t_exp - lo_];
}

size_t HalfLaurent::term_count() const {
  return static_cast<size_t>(std::count_if(c_.begin(), c_.end(), [](const mpq_class& x) { return x != 0; }));
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  HalfLaurent r;
  r.lo_ = std::min(a.lo_, b.lo_);
  int hi = std::max(a.high_exp(), b.high_exp());
  r.c_.assign(hi - r.lo_ + 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - r.lo_ + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - r.lo_ + i] += b.c_[i];
  r.trim();
  return r;
}

HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) { return a + (-b); }

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

namespace {

std::string q_power(int t_exp) {
  if (t_exp == 0) return "";
  if (t_exp % 2 == 0) {
    int k = t_exp / 2;
    return k == 1 ? "q" : "q^" + std::to_string(k);
  }
  return "q^(" + std::to_string(t_exp) + "/2)";
}

std::string render(const std::map<int, mpq_class>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    mpq_class c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    std::string mono = q_power(it->first);
    std::string body;
    if (mono.empty())
      body = c.get_str();
    else if (c == 1)
      body = mono;
    else
      body = c.get_str() + "*" + mono;
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace

std::string HalfLaurent::str() const { return render(coeffs()); }

// ---------------------------------------------------------------- QScalar

namespace {

// strip low zeros, return how many were removed
int strip_low(ZPoly& p) {
  size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  if (k) p.erase(p.begin(), p.begin() + static_cast<long>(k));
  return static_cast<int>(k);
}

void divexact_all(ZPoly& p, const mpz_class& g) {
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// align two Laurent parts and add with signs
ZPoly add_shifted(int alo, const ZPoly& a, int blo, const ZPoly& b, int& rlo, bool negate_b) {
  if (a.empty()) {
    rlo = blo;
    ZPoly r(b);
    if (negate_b)
      for (auto& x : r) x = -x;
    return r;
  }
  if (b.empty()) {
    rlo = alo;
    return a;
  }
  rlo = std::min(alo, blo);
  int hi = std::max(alo + static_cast<int>(a.size()), blo + static_cast<int>(b.size()));
  ZPoly r(hi - rlo, 0);
  for (size_t i = 0; i < a.size(); ++i) r[alo - rlo + i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) {
    if (negate_b)
      r[blo - rlo + i] -= b[i];
    else
      r[blo - rlo + i] += b[i];
  }
  detail::trim(r);
  return r;
}

void to_zpoly(const HalfLaurent& h, int& lo, ZPoly& p, mpz_class& scale) {
  // h = (1/scale) * t^lo * p
  scale = 1;
  auto m = h.coeffs();
  lo = h.low_exp();
  for (const auto& [e, c] : m) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  p.assign(h.is_zero() ? 0 : h.high_exp() - lo + 1, 0);
  for (const auto& [e, c] : m) {
    mpz_class v = scale / c.get_den();
    p[e - lo] = v * c.get_num();
  }
}

}  // namespace

QScalar QScalar::make(int nlo, ZPoly n, int dlo, ZPoly d) {
  detail::trim(d);
  if (d.empty()) throw std::domain_error("QScalar: zero denominator");
  QScalar r;
  detail::trim(n);
  if (n.empty()) return r;
  nlo += strip_low(n);
  dlo += strip_low(d);
  nlo -= dlo;

  if (d.size() == 1 || n.size() == 1) {
    mpz_class g;
    mpz_class cn = detail::content(n), cd = detail::content(d);
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g != 1) {
      divexact_all(n, g);
      divexact_all(d, g);
    }
  } else {
    ZPoly g = detail::gcd(n, d);
    if (g.size() > 1) {
      ZPoly qn, qd;
      detail::div_exact(n, g, qn);
      detail::div_exact(d, g, qd);
      n.swap(qn);
      d.swap(qd);
    } else if (g.size() == 1 && g[0] != 1) {
      divexact_all(n, g[0]);
      divexact_all(d, g[0]);
    }
  }
  if (d[0] < 0) {
    for (auto& x : n) x = -x;
    for (auto& x : d) x = -x;
  }
  r.nlo_ = nlo;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

QScalar::QScalar(long v) {
  if (v != 0) num_ = {mpz_class(v)};
}

QScalar::QScalar(const mpq_class& v) {
  if (v != 0) {
    num_ = {v.get_num()};
    den_ = {v.get_den()};
  }
}

QScalar::QScalar(const HalfLaurent& num, const HalfLaurent& den) {
  if (den.is_zero()) throw std::domain_error("QScalar: zero denominator");
  int nlo, dlo;
  ZPoly n, d;
  mpz_class sn, sd;
  to_zpoly(num, nlo, n, sn);
  to_zpoly(den, dlo, d, sd);
  // num/den = (n/sn)/(d/sd) = (n*sd)/(d*sn)
  for (auto& x : n) x *= sd;
  for (auto& x : d) x *= sn;
  *this = make(nlo, std::move(n), dlo, std::move(d));
}

QScalar QScalar::t_pow(long e) {
  QScalar r;
  r.nlo_ = static_cast<int>(e);
  r.num_ = {1};
  return r;
}

QScalar QScalar::q_pow(long k) { return t_pow(2 * k); }

QScalar QScalar::lambda() { return q_pow(1) - q_pow(-1); }

HalfLaurent QScalar::num() const {
  std::map<int, mpq_class> m;
  for (size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) m.emplace(nlo_ + static_cast<int>(i), mpq_class(num_[i]));
  return HalfLaurent::from_map(m);
}

HalfLaurent QScalar::den() const {
  std::map<int, mpq_class> m;
  for (size_t i = 0; i < den_.size(); ++i)
    if (den_[i] != 0) m.emplace(static_cast<int>(i), mpq_class(den_[i]));
  return HalfLaurent::from_map(m);
}

bool QScalar::is_one() const { return is_laurent() && nlo_ == 0 && num_.size() == 1 && num_[0] == 1; }

std::optional<std::pair<mpq_class, int>> QScalar::as_monomial() const {
  if (num_.empty()) return std::make_pair(mpq_class(0), 0);
  if (den_.size() != 1 || num_.size() != 1) return std::nullopt;
  mpq_class c(num_[0], den_[0]);
  c.canonicalize();
  return std::make_pair(c, nlo_);
}

QScalar QScalar::operator-() const {
  QScalar r(*this);
  for (auto& x : r.num_) x = -x;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    int lo;
    ZPoly n = add_shifted(nlo_, num_, o.nlo_, o.num_, lo, false);
    if (is_laurent()) {
      nlo_ = lo + strip_low(n);
      num_ = std::move(n);
      if (num_.empty()) nlo_ = 0;
      return *this;
    }
    return *this = make(lo, std::move(n), 0, den_);
  }
  int lo;
  ZPoly a = detail::mul(num_, o.den_);
  ZPoly b = detail::mul(o.num_, den_);
  ZPoly n = add_shifted(nlo_, a, o.nlo_, b, lo, false);
  return *this = make(lo, std::move(n), 0, detail::mul(den_, o.den_));
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero() || o.is_zero()) return *this = QScalar();
  if (is_laurent() && o.is_laurent()) {
    num_ = detail::mul(num_, o.num_);
    nlo_ += o.nlo_;
    return *this;
  }
  // cross-cancel first to keep the gcd work small
  ZPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  auto cancel = [](ZPoly& a, ZPoly& b) {
    if (a.size() == 1 || b.size() == 1) return;
    ZPoly g = detail::gcd(a, b);
    if (g.size() > 1) {
      ZPoly qa, qb;
      detail::div_exact(a, g, qa);
      detail::div_exact(b, g, qb);
      a.swap(qa);
      b.swap(qb);
    }
  };
  cancel(n1, d2);
  cancel(n2, d1);
  return *this = make(nlo_ + o.nlo_, detail::mul(n1, n2), 0, detail::mul(d1, d2));
}

QScalar QScalar::inv() const {
  if (is_zero()) throw std::domain_error("QScalar: division by zero");
  return make(0, den_, nlo_, num_);
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inv(); }

QScalar QScalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  QScalar r(1), b(*this);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string QScalar::str() const {
  HalfLaurent n = num(), d = den();
  std::string ns = n.str();
  if (is_laurent()) return ns;
  if (n.term_count() > 1) ns = "(" + ns + ")";
  std::string ds = d.str();
  if (d.term_count() > 1) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

// ---------------------------------------------------------------- CQScalar

CQScalar& CQScalar::operator+=(const CQScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CQScalar& CQScalar::operator-=(const CQScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CQScalar& CQScalar::operator*=(const CQScalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  QScalar r = re_ * o.re_ - im_ * o.im_;
  QScalar i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

CQScalar& CQScalar::operator/=(const CQScalar& o) {
  QScalar n2 = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= n2;
  im_ /= n2;
  return *this;
}

std::string CQScalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string is = im_.str();
  if (im_.complexity() > 2 || !im_.is_laurent() || im_.num().term_count() > 1) is = "(" + is + ")";
  std::string ims = is == "1" ? "i" : is + "*i";
  if (re_.is_zero()) return ims;
  return re_.str() + " + " + ims;
}

// ---------------------------------------------------------------- q-numbers

QScalar qnum(long m) {
  if (m == 0) return QScalar();
  if (m < 0) return -qnum(-m);
  std::map<int, mpq_class> c;
  for (long j = 0; j < m; ++j) c[static_cast<int>(2 * (m - 1 - 2 * j))] = 1;
  return QScalar(HalfLaurent::from_map(c));
}

QScalar qfact(long n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  QScalar r(1);
  for (long k = 2; k <= n; ++k) r *= qnum(k);
  return r;
}

// ---------------------------------------------------------------- evaluation

namespace {

using detail::Mpfr;

// value and absolute magnitude of t^lo * sum c_i t^i
void horner(const ZPoly& c, int lo, mpfr_srcptr t, Mpfr& val, Mpfr& mag) {
  mpfr_prec_t prec = mpfr_get_prec(val.get());
  mpfr_set_zero(val.get(), 1);
  mpfr_set_zero(mag.get(), 1);
  Mpfr tmp(prec);
  for (size_t k = c.size(); k-- > 0;) {
    mpfr_mul(val.get(), val.get(), t, MPFR_RNDN);
    mpfr_add_z(val.get(), val.get(), c[k].get_mpz_t(), MPFR_RNDN);
    mpfr_mul(mag.get(), mag.get(), t, MPFR_RNDN);
    mpfr_set_z(tmp.get(), c[k].get_mpz_t(), MPFR_RNDN);
    mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDN);
    mpfr_add(mag.get(), mag.get(), tmp.get(), MPFR_RNDN);
  }
  if (lo != 0) {
    mpfr_pow_si(tmp.get(), t, lo, MPFR_RNDN);
    mpfr_mul(val.get(), val.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(mag.get(), mag.get(), tmp.get(), MPFR_RNDN);
  }
}

bool perfect_square(const mpq_class& x, mpq_class& root) {
  if (x < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return false;
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), x.get_den_mpz_t());
  root = mpq_class(a, b);
  root.canonicalize();
  return true;
}

// den(x)^(n-1) * sum_k c[k] x^k for n = c.size(), by integer Horner
mpz_class scaled_value(const std::vector<const mpz_class*>& c, const mpq_class& x) {
  mpz_class acc = 0, bpow = 1;
  const mpz_class &a = x.get_num(), &b = x.get_den();
  for (size_t k = c.size(); k-- > 0;) {
    acc = acc * a + *c[k] * bpow;
    bpow *= b;
  }
  return acc;
}

bool vanishes_exactly(const ZPoly& c, const mpq_class& q0) {
  // c(t) = E(q0) + t*O(q0) with t^2 = q0
  std::vector<const mpz_class*> ev, od;
  for (size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? ev : od).push_back(&c[k]);
  mpq_class root;
  bool square = perfect_square(q0, root);
  mpz_class e = scaled_value(ev, q0);
  if (od.empty()) return e == 0;
  mpz_class o = scaled_value(od, q0);
  if (!square) return e == 0 && o == 0;
  // e carries den(q0)^(|ev|-1), o carries den(q0)^(|od|-1)
  if (ev.size() > od.size()) o *= q0.get_den();
  return mpq_class(e) + root * mpq_class(o) == 0;
}

constexpr long kMaxPrec = 8192;

// bits lost to cancellation: exponent of the magnitude sum minus that of the value
long lost_bits(const Mpfr& v, const Mpfr& m) {
  if (mpfr_zero_p(m.get())) return 0;
  if (mpfr_zero_p(v.get())) return kMaxPrec;
  return mpfr_get_exp(m.get()) - mpfr_get_exp(v.get());
}

double eval_impl(const QScalar& s, mpfr_srcptr t_in, const mpq_class& q0_exact) {
  if (s.is_zero()) return 0.0;
  const ZPoly& n = s.num_coeffs();
  const ZPoly& d = s.den_coeffs();
  for (mpfr_prec_t prec = 128;;) {
    Mpfr t(prec);
    mpfr_set(t.get(), t_in, MPFR_RNDN);
    Mpfr nv(prec), nm(prec), dv(prec), dm(prec);
    horner(n, s.num_low(), t.get(), nv, nm);
    horner(d, 0, t.get(), dv, dm);
    long lost = std::max(lost_bits(nv, nm), lost_bits(dv, dm));
    if (lost < static_cast<long>(prec) - 64) {
      mpfr_div(nv.get(), nv.get(), dv.get(), MPFR_RNDN);
      return nv.to_double();
    }
    // a true zero looks like unbounded cancellation; settle it exactly
    if (lost > kMaxPrec - 96 || prec >= kMaxPrec) {
      if (vanishes_exactly(d, q0_exact)) throw PoleError("eval_at: denominator vanishes at q0");
      if (vanishes_exactly(n, q0_exact)) return 0.0;
      if (prec >= kMaxPrec) {
        mpfr_div(nv.get(), nv.get(), dv.get(), MPFR_RNDN);
        return nv.to_double();
      }
      prec = kMaxPrec;
      continue;
    }
    prec = std::max<mpfr_prec_t>(2 * prec, lost + 96);
  }
}

}  // namespace

double eval_at(const QScalar& s, double q0) {
  if (!(q0 > 0)) throw std::invalid_argument("eval_at: q0 must be positive");
  double t = std::sqrt(q0);
  Mpfr tv(64, t);
  return eval_impl(s, tv.get(), mpq_class(q0));
}

double eval_at(const QScalar& s, const mpq_class& q0) {
  if (q0 <= 0) throw std::invalid_argument("eval_at: q0 must be positive");
  Mpfr tv(20000);
  mpfr_set_q(tv.get(), q0.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(tv.get(), tv.get(), MPFR_RNDN);
  return eval_impl(s, tv.get(), q0);
}

double eval_at(const HalfLaurent& s, double q0) { return eval_at(QScalar(s), q0); }

std::complex<double> eval_at(const CQScalar& s, double q0) { return {eval_at(s.re(), q0), eval_at(s.im(), q0)}; }

std::complex<double> eval_at(const CQScalar& s, const mpq_class& q0) {
  return {eval_at(s.re(), q0), eval_at(s.im(), q0)};
}

std::ostream& operator<<(std::ostream& os, const HalfLaurent& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const QScalar& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const CQScalar& v) { return os << v.str(); }

}  // namespace qheis
