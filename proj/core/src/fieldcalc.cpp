#include "qheis/fieldcalc.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace qheis {

FieldElem::FieldElem(const QScalar& c) {
  if (!c.is_zero()) c_.emplace(0, c);
}

FieldElem FieldElem::monomial(const QScalar& c, int power) {
  FieldElem f;
  if (!c.is_zero()) f.c_.emplace(power, c);
  return f;
}

QScalar FieldElem::coeff(int power) const {
  auto it = c_.find(power);
  return it == c_.end() ? QScalar() : it->second;
}

int FieldElem::min_degree() const {
  if (c_.empty()) throw std::domain_error("degree of the zero field");
  return c_.begin()->first;
}

int FieldElem::max_degree() const {
  if (c_.empty()) throw std::domain_error("degree of the zero field");
  return c_.rbegin()->first;
}

FieldElem FieldElem::truncated_below(int cap) const {
  FieldElem r;
  for (const auto& [k, c] : c_)
    if (k < cap) r.c_.emplace(k, c);
  return r;
}

void FieldElem::add_term(int power, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  for (auto& [k, c] : r.c_) c = -c;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  FieldElem r;
  for (const auto& [a, ca] : c_)
    for (const auto& [b, cb] : o.c_) r.add_term(a + b, ca * cb);
  return *this = std::move(r);
}

double FieldElem::eval(double x, double q0) const {
  double s = 0;
  for (const auto& [k, c] : c_) s += eval_at(c, q0) * std::pow(x, k);
  return s;
}

std::string FieldElem::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : c_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*x^" + std::to_string(k);
  }
  return out;
}

FieldElem parse_field(std::string_view text) {
  FieldElem f;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip();
  if (text.substr(i) == "0") return f;
  while (i < text.size()) {
    skip();
    if (i >= text.size() || text[i] != '(') throw std::invalid_argument("field term must start with '('");
    int depth = 0;
    size_t start = i;
    for (; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) break;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in field");
    QScalar c = parse_qscalar(text.substr(start + 1, i - start - 1));
    ++i;
    if (text.substr(i, 3) != "*x^") throw std::invalid_argument("expected '*x^' in field term");
    i += 3;
    size_t e0 = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (e0 == i) throw std::invalid_argument("expected exponent in field term");
    int k = std::stoi(std::string(text.substr(e0, i - e0)));
    f += FieldElem::monomial(c, k);
    skip();
    if (i < text.size()) {
      if (text[i] != '+') throw std::invalid_argument("expected '+' between field terms");
      ++i;
    }
  }
  return f;
}

FieldElem nabla(const FieldElem& f) {
  FieldElem r;
  for (const auto& [m, c] : f.coeffs())
    if (m != 0) r += FieldElem::monomial(c * qnum(m), m - 1);
  return r;
}

FieldElem l_shift(const FieldElem& f, int power) {
  if (power == 0) return f;
  FieldElem r;
  for (const auto& [m, c] : f.coeffs()) r += FieldElem::monomial(c * QScalar::q_pow(-static_cast<long>(m) * power), m);
  return r;
}

FieldElem grad_inverse(const FieldElem& f) {
  if (!f.coeff(-1).is_zero()) throw NotInImageError("grad_inverse: x^-1 is not in the image of nabla");
  FieldElem r;
  for (const auto& [n, c] : f.coeffs()) r += FieldElem::monomial(c / qnum(n + 1), n + 1);
  return r;
}

namespace {

void check_endpoints(const FieldElem& f, int N, int M, bool allow_inverse_x) {
  if (N > M) throw std::invalid_argument("definite_integral: N must not exceed M");
  if ((M - N) % 2 != 0) throw std::invalid_argument("definite_integral: endpoints must have the same parity");
  if (!allow_inverse_x && !f.coeff(-1).is_zero())
    throw NotInImageError("definite_integral: x^-1 term present and not allowed");
}

}  // namespace

double definite_integral(const FieldElem& f, int N, int M, double q0, bool allow_inverse_x) {
  check_endpoints(f, N, M, allow_inverse_x);
  std::vector<std::pair<int, double>> terms;
  for (const auto& [m, c] : f.coeffs()) terms.emplace_back(m, eval_at(c, q0));
  double lam = q0 - 1.0 / q0;
  double s = 0;
  for (int k = N + 2; k <= M; k += 2) {
    double x = std::pow(q0, k - 1);
    for (const auto& [m, c] : terms) s += c * std::pow(x, m + 1);
  }
  return lam * s;
}

QScalar definite_integral_exact(const FieldElem& f, int N, int M, bool allow_inverse_x) {
  check_endpoints(f, N, M, allow_inverse_x);
  QScalar s;
  for (const auto& [m, c] : f.coeffs()) {
    QScalar part;
    for (int k = N + 2; k <= M; k += 2) part += QScalar::q_pow(static_cast<long>(k - 1) * (m + 1));
    s += c * part;
  }
  return QScalar::lambda() * s;
}

std::complex<double> jackson_product(const SampleFn& f, const SampleFn& g, double q0, IntWindow window) {
  std::complex<double> s = 0;
  for (int n = window.nmin; n <= window.nmax; ++n) {
    double x = std::pow(q0, n);
    for (double sigma : {1.0, -1.0}) s += x * std::conj(f(sigma * x)) * g(sigma * x);
  }
  return (q0 - 1.0 / q0) * s;
}

double jackson_product(const FieldElem& f, const FieldElem& g, double q0, IntWindow window) {
  auto wrap = [q0](const FieldElem& h) {
    std::vector<std::pair<int, double>> terms;
    for (const auto& [m, c] : h.coeffs()) terms.emplace_back(m, eval_at(c, q0));
    return [terms](double x) {
      double s = 0;
      for (const auto& [m, c] : terms) s += c * std::pow(x, m);
      return std::complex<double>(s, 0);
    };
  };
  return jackson_product(SampleFn(wrap(f)), SampleFn(wrap(g)), q0, window).real();
}

}  // namespace qheis
