#include <cctype>

#include "qheis/qarith.hpp"

namespace qheis {

namespace {

class Parser {
 public:
  Parser(std::string_view s, bool allow_i) : s_(s), allow_i_(allow_i) {}

  CQScalar run() {
    CQScalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
  bool allow_i_;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CQScalar expr() {
    CQScalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  CQScalar term() {
    CQScalar v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/')) {
        CQScalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else
        return v;
    }
  }

  CQScalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  // exponent in units of t: returns 2k for q^k, e for q^(e/2)
  long exponent_t(bool& half_ok) {
    half_ok = false;
    if (eat('(')) {
      bool neg = eat('-');
      long a = integer();
      if (neg) a = -a;
      long t;
      if (eat('/')) {
        long b = integer();
        if (b == 2) {
          t = a;
        } else if (b == 1) {
          t = 2 * a;
        } else {
          fail("only halves are supported in exponents");
        }
      } else {
        t = 2 * a;
      }
      if (!eat(')')) fail("expected ')'");
      half_ok = true;
      return t;
    }
    bool neg = eat('-');
    long a = integer();
    return 2 * (neg ? -a : a);
  }

  CQScalar power() {
    skip();
    bool is_q = pos_ < s_.size() && s_[pos_] == 'q';
    CQScalar base = atom();
    if (!eat('^')) return base;
    bool half_ok;
    long et = exponent_t(half_ok);
    if (is_q) return CQScalar(QScalar::t_pow(et));
    if (et % 2 != 0) fail("half power of a non-monomial");
    if (base.im().is_zero()) return CQScalar(base.re().pow(et / 2));
    long k = et / 2;
    CQScalar r(1);
    CQScalar b = k < 0 ? CQScalar(1) / base : base;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r *= b;
    return r;
  }

  CQScalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CQScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return CQScalar(QScalar(mpq_class(z)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view w = s_.substr(start, pos_ - start);
      if (w == "q") return CQScalar(QScalar::q());
      if (w == "lambda") return CQScalar(QScalar::lambda());
      if (w == "i" && allow_i_) return CQScalar::i();
      pos_ = start;
      fail("unknown symbol '" + std::string(w) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

QScalar parse_qscalar(std::string_view text) {
  CQScalar v = Parser(text, false).run();
  return v.re();
}

CQScalar parse_cqscalar(std::string_view text) { return Parser(text, true).run(); }

}  // namespace qheis
