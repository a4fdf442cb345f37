#include "qheis/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace qheis {

Alphabet::Alphabet(std::initializer_list<std::string> names) {
  for (const auto& n : names) add(n);
}

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) add(n);
}

int Alphabet::add(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty generator name");
  if (name == "q" || name == "lambda") throw std::invalid_argument("reserved generator name: " + name);
  if (find(name)) throw std::invalid_argument("duplicate generator: " + name);
  if (names_.size() >= 128) throw std::length_error("alphabet limited to 128 generators");
  names_.push_back(name);
  return size() - 1;
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int Alphabet::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown generator: " + std::string(name));
  return *i;
}

void Alphabet::set_inverse(int g, int ginv) {
  if (g < 0 || g >= size() || ginv < 0 || ginv >= size() || g == ginv)
    throw std::invalid_argument("set_inverse: bad generator pair");
  inverse_[g] = ginv;
  inverse_[ginv] = g;
}

std::optional<int> Alphabet::inverse(int g) const {
  auto it = inverse_.find(g);
  if (it == inverse_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) {
    if (!out.empty()) out += '*';
    out += name(static_cast<unsigned char>(c));
  }
  return out;
}

// ---- NCPoly

NCPoly::NCPoly(const QScalar& c) {
  if (!c.is_zero()) t_.emplace(Word(), c);
}

NCPoly NCPoly::word(const Word& w, const QScalar& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

QScalar NCPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? QScalar() : it->second;
}

const Word& NCPoly::leading_word() const {
  if (t_.empty()) throw std::domain_error("leading word of zero");
  return t_.rbegin()->first;
}

size_t NCPoly::degree() const { return is_zero() ? 0 : leading_word().size(); }

bool NCPoly::is_homogeneous() const {
  return is_zero() || t_.begin()->first.size() == t_.rbegin()->first.size();
}

void NCPoly::add_term(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r(*this);
  for (auto& [w, c] : r.t_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const NCPoly& o) {
  NCPoly r;
  for (const auto& [a, ca] : t_)
    for (const auto& [b, cb] : o.t_) r.add_term(a + b, ca * cb);
  return *this = std::move(r);
}

NCPoly& NCPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, v] : t_) v *= c;
  return *this;
}

std::string NCPoly::str(const Alphabet& a) const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ")";
    if (!it->first.empty()) out += "*" + a.str(it->first);
  }
  return out;
}

// ---- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, const Alphabet& a) : s_(s), a_(a) {}

  NCPoly run() {
    NCPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view s_;
  const Alphabet& a_;
  size_t pos_ = 0;

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

  static std::optional<QScalar> scalar(const NCPoly& p) {
    if (p.is_zero()) return QScalar();
    if (p.size() == 1 && p.terms().begin()->first.empty()) return p.terms().begin()->second;
    return std::nullopt;
  }

  NCPoly expr() {
    NCPoly v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  NCPoly term() {
    NCPoly v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        auto d = scalar(unary());
        if (!d) fail("division by a noncommuting expression");
        if (d->is_zero()) fail("division by zero");
        v *= d->inv();
      } else {
        return v;
      }
    }
  }

  NCPoly unary() {
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

  // exponent as a fraction num/den with den 1 or 2
  std::pair<long, long> exponent() {
    if (eat('(')) {
      long sign = eat('-') ? -1 : 1;
      long n = sign * integer(), d = 1;
      if (eat('/')) d = integer();
      if (!eat(')')) fail("expected ')'");
      if (d != 1 && d != 2) fail("only integer and half-integer exponents are supported");
      if (d == 2 && n % 2 == 0) return {n / 2, 1};
      return {n, d};
    }
    long sign = eat('-') ? -1 : 1;
    return {sign * integer(), 1};
  }

  NCPoly power() {
    skip();
    size_t at = pos_;
    bool is_q = false;
    NCPoly base = atom(is_q);
    if (!eat('^')) return base;
    auto [n, d] = exponent();
    if (is_q) return NCPoly(QScalar::t_pow(d == 2 ? n : 2 * n));
    if (d != 1) fail("half-integer exponent on something other than q");
    if (auto s = scalar(base)) {
      if (n < 0 && s->is_zero()) fail("negative power of zero");
      return NCPoly(s->pow(n));
    }
    if (n < 0) {
      // g^-k for a single generator with a declared inverse
      const auto& t = base.terms();
      if (t.size() != 1 || t.begin()->first.size() != 1 || !t.begin()->second.is_one())
        fail("negative power of a noncommuting expression");
      auto inv = a_.inverse(static_cast<unsigned char>(t.begin()->first[0]));
      if (!inv) {
        pos_ = at;
        fail("generator has no declared inverse");
      }
      base = NCPoly::gen(*inv);
      n = -n;
    }
    NCPoly r(1);
    for (long k = 0; k < n; ++k) r *= base;
    return r;
  }

  NCPoly atom(bool& is_q) {
    skip();
    if (eat('(')) {
      NCPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly(QScalar(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (id == "q") {
        is_q = true;
        return NCPoly(QScalar::q());
      }
      if (id == "lambda") return NCPoly(QScalar::lambda());
      auto g = a_.find(id);
      if (!g) {
        pos_ = start;
        fail("unknown identifier '" + std::string(id) + "'");
      }
      return NCPoly::gen(*g);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const Alphabet& a) { return PolyParser(text, a).run(); }

// ---- rewrite systems

RewriteSystem::RewriteSystem(Alphabet a) : a_(std::move(a)) {
  table_.resize(static_cast<size_t>(a_.size()) * a_.size());
}

void RewriteSystem::add_rule(int g1, int g2, const NCPoly& replacement) {
  int n = a_.size();
  if (g1 < 0 || g1 >= n || g2 < 0 || g2 >= n) throw std::invalid_argument("add_rule: generator out of range");
  for (const auto& [w, c] : replacement.terms())
    for (char ch : w)
      if (static_cast<unsigned char>(ch) >= n) throw std::invalid_argument("add_rule: replacement outside alphabet");
  auto& slot = table_[static_cast<size_t>(g1) * n + g2];
  Word pair{static_cast<char>(g1), static_cast<char>(g2)};
  if (slot) throw std::invalid_argument("duplicate rule for " + a_.str(pair));
  if (!replacement.is_zero() && !DegLex{}(replacement.leading_word(), pair)) terminating_ = false;
  slot = replacement;
  ++count_;
}

void RewriteSystem::add_inverse_pair(int g, int ginv) {
  a_.set_inverse(g, ginv);
  add_rule(g, ginv, NCPoly(1));
  add_rule(ginv, g, NCPoly(1));
}

const NCPoly* RewriteSystem::rule(int g1, int g2) const {
  int n = a_.size();
  const auto& slot = table_[static_cast<size_t>(g1) * n + g2];
  return slot ? &*slot : nullptr;
}

std::map<Word, NCPoly> RewriteSystem::rules() const {
  std::map<Word, NCPoly> out;
  int n = a_.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (auto r = rule(i, j)) out.emplace(Word{static_cast<char>(i), static_cast<char>(j)}, *r);
  return out;
}

bool RewriteSystem::homogeneous() const {
  for (const auto& [w, r] : rules())
    for (const auto& [v, c] : r.terms())
      if (v.size() != 2) return false;
  return true;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (has_rule(static_cast<unsigned char>(w[i]), static_cast<unsigned char>(w[i + 1]))) return false;
  return true;
}

std::string RewriteSystem::str() const {
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : a_.names()) os << ' ' << n;
  os << '\n';
  std::set<int> seen;
  for (int g = 0; g < a_.size(); ++g) {
    auto inv = a_.inverse(g);
    if (inv && !seen.count(g)) {
      os << "inverse: " << a_.name(g) << ' ' << a_.name(*inv) << '\n';
      seen.insert(g);
      seen.insert(*inv);
    }
  }
  for (const auto& [w, r] : rules()) {
    int g1 = static_cast<unsigned char>(w[0]), g2 = static_cast<unsigned char>(w[1]);
    auto inv = a_.inverse(g1);
    if (inv && *inv == g2 && r == NCPoly(1)) continue;
    os << a_.str(w) << (terminating_ ? " = " : " -> ") << r.str(a_) << '\n';
  }
  return os.str();
}

NCPoly rewrite_at(const Word& w, size_t pos, const RewriteSystem& sys) {
  if (pos + 1 >= w.size()) throw std::out_of_range("rewrite_at: position out of range");
  const NCPoly* r = sys.rule(static_cast<unsigned char>(w[pos]), static_cast<unsigned char>(w[pos + 1]));
  if (!r) throw std::invalid_argument("rewrite_at: no rule for the pair");
  NCPoly out;
  Word pre = w.substr(0, pos), post = w.substr(pos + 2);
  for (const auto& [v, c] : r->terms()) out.add_term(pre + v + post, c);
  return out;
}

NCPoly normal_order(const NCPoly& p, const RewriteSystem& sys, long fuel) {
  if (fuel <= 0) throw std::invalid_argument("normal_order: fuel must be positive");
  NCPoly::Terms work = p.terms();
  NCPoly result;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    QScalar c = std::move(it->second);
    work.erase(it);
    size_t pos = 0;
    for (; pos + 1 < w.size(); ++pos)
      if (sys.has_rule(static_cast<unsigned char>(w[pos]), static_cast<unsigned char>(w[pos + 1]))) break;
    if (pos + 1 >= w.size()) {
      result.add_term(w, c);
      continue;
    }
    if (--fuel < 0) throw FuelExhausted("normal_order: fuel exhausted at " + sys.alphabet().str(w), w);
    const NCPoly* r = sys.rule(static_cast<unsigned char>(w[pos]), static_cast<unsigned char>(w[pos + 1]));
    Word pre = w.substr(0, pos), post = w.substr(pos + 2);
    for (const auto& [v, d] : r->terms()) {
      auto [jt, inserted] = work.emplace(pre + v + post, c * d);
      if (!inserted) {
        jt->second += c * d;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return result;
}

namespace {

// Echelon form with pivots chosen by the column order `rank` (smaller rank
// pivots first). Rows come back with pivot coefficient 1, fully reduced.
std::vector<std::pair<Word, NCPoly>> echelon(std::vector<NCPoly> rows,
                                             const std::function<bool(const Word&, const Word&)>& before) {
  std::vector<std::pair<Word, NCPoly>> basis;
  auto pivot_of = [&](const NCPoly& p) {
    const Word* best = nullptr;
    for (const auto& [w, c] : p.terms())
      if (!best || before(w, *best)) best = &w;
    return *best;
  };
  for (auto& r : rows) {
    for (const auto& [pw, pr] : basis) {
      QScalar c = r.coeff(pw);
      if (!c.is_zero()) r -= c * pr;
    }
    if (r.is_zero()) continue;
    Word pw = pivot_of(r);
    r *= r.coeff(pw).inv();
    for (auto& [bw, br] : basis) {
      QScalar c = br.coeff(pw);
      if (!c.is_zero()) br -= c * r;
    }
    basis.emplace_back(pw, std::move(r));
  }
  return basis;
}

}  // namespace

std::vector<NCPoly> interreduce(std::vector<NCPoly> relations) {
  auto basis = echelon(std::move(relations), [](const Word& a, const Word& b) { return DegLex{}(b, a); });
  std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) { return DegLex{}(x.first, y.first); });
  std::vector<NCPoly> out;
  for (auto& [w, p] : basis) out.push_back(std::move(p));
  return out;
}

RewriteSystem system_from_pairs(const Alphabet& a, const std::vector<NCPoly>& relations) {
  RewriteSystem sys(a);
  for (const auto& rel : relations) {
    if (rel.is_zero()) throw NonOrientableError("system_from_pairs: relation is identically zero");
    const Word& lead = rel.leading_word();
    if (lead.size() != 2)
      throw NonOrientableError("system_from_pairs: leading term " + a.str(lead) + " of " + rel.str(a) +
                               " is not a pair");
    int g1 = static_cast<unsigned char>(lead[0]), g2 = static_cast<unsigned char>(lead[1]);
    if (sys.has_rule(g1, g2))
      throw NonOrientableError("system_from_pairs: duplicate relation for " + a.str(lead));
    QScalar c = rel.coeff(lead);
    NCPoly rest = rel;
    rest.add_term(lead, -c);
    sys.add_rule(g1, g2, -(c.inv() * rest));
  }
  return sys;
}

std::vector<NCPoly> commutant_residual(const NCPoly& z, const RewriteSystem& sys, const std::vector<int>& gens,
                                       long fuel) {
  std::vector<NCPoly> out;
  for (int g : gens) {
    NCPoly x = NCPoly::gen(g);
    out.push_back(normal_order(z * x - x * z, sys, fuel));
  }
  return out;
}

namespace {

std::vector<OverlapFailure> diamond_check(const RewriteSystem& sys, long fuel) {
  std::vector<OverlapFailure> out;
  int n = sys.alphabet().size();
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      if (!sys.has_rule(g1, g2)) continue;
      for (int g3 = 0; g3 < n; ++g3) {
        if (!sys.has_rule(g2, g3)) continue;
        Word w{static_cast<char>(g1), static_cast<char>(g2), static_cast<char>(g3)};
        NCPoly left = normal_order(rewrite_at(w, 0, sys), sys, fuel);
        NCPoly right = normal_order(rewrite_at(w, 1, sys), sys, fuel);
        if (left != right) {
          NCPoly diff = left - right;
          out.push_back({w, std::move(left), std::move(right), std::move(diff)});
        }
      }
    }
  return out;
}

std::vector<OverlapFailure> linear_check(const RewriteSystem& sys) {
  if (!sys.homogeneous())
    throw std::invalid_argument("pbw_overlap_check: non-terminating systems must be homogeneous quadratic");
  int n = sys.alphabet().size();
  std::vector<NCPoly> rows;
  for (const auto& [w, r] : sys.rules()) {
    NCPoly rel = NCPoly::word(w) - r;
    for (int g = 0; g < n; ++g) {
      rows.push_back(NCPoly::gen(g) * rel);
      rows.push_back(rel * NCPoly::gen(g));
    }
  }
  // reducible words pivot first, so rows pivoting on a normal word lie in
  // the span of normal words
  auto before = [&sys](const Word& a, const Word& b) {
    bool na = sys.is_normal(a), nb = sys.is_normal(b);
    if (na != nb) return !na;
    return DegLex{}(b, a);
  };
  std::vector<OverlapFailure> out;
  for (auto& [pw, p] : echelon(std::move(rows), before)) {
    if (!sys.is_normal(pw)) continue;
    NCPoly wit = p;
    wit *= wit.coeff(wit.leading_word()).inv();
    out.push_back({Word(), NCPoly(), NCPoly(), std::move(wit)});
  }
  return out;
}

}  // namespace

std::vector<OverlapFailure> pbw_overlap_check(const RewriteSystem& sys, long fuel) {
  if (sys.terminating()) return diamond_check(sys, fuel);
  return linear_check(sys);
}

// ---- relation files

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

RelationFile parse_relations(std::string_view text) {
  Alphabet a;
  bool have_gens = false;
  std::vector<std::pair<int, int>> inverses;
  std::vector<std::pair<std::string, std::string>> eqs, raw;
  std::vector<int> eq_lines, raw_lines;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("relations line " + std::to_string(lineno) + ": " + what);
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string s = trim(line);
    if (s.empty()) continue;
    if (s.rfind("gens:", 0) == 0) {
      if (have_gens) fail("second gens line");
      for (const auto& g : split_ws(s.substr(5))) a.add(g);
      have_gens = true;
      continue;
    }
    if (!have_gens) fail("gens line must come first");
    if (s.rfind("inverse:", 0) == 0) {
      auto toks = split_ws(s.substr(8));
      if (toks.size() != 2) fail("inverse needs two generators");
      int g = a.index(toks[0]), gi = a.index(toks[1]);
      a.set_inverse(g, gi);
      inverses.emplace_back(g, gi);
      continue;
    }
    if (auto k = s.find("->"); k != std::string::npos) {
      raw.emplace_back(s.substr(0, k), s.substr(k + 2));
      raw_lines.push_back(lineno);
    } else if (auto e = s.find('='); e != std::string::npos) {
      eqs.emplace_back(s.substr(0, e), s.substr(e + 1));
      eq_lines.push_back(lineno);
    } else {
      fail("expected '=' or '->'");
    }
  }
  if (!have_gens) throw std::invalid_argument("relations: missing gens line");

  RelationFile rf;
  for (size_t i = 0; i < eqs.size(); ++i) {
    lineno = eq_lines[i];
    try {
      rf.relations.push_back(parse_ncpoly(eqs[i].first, a) - parse_ncpoly(eqs[i].second, a));
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
  }
  Alphabet plain(a.names());
  rf.system = system_from_pairs(plain, rf.relations);
  for (auto [g, gi] : inverses) rf.system.add_inverse_pair(g, gi);
  for (size_t i = 0; i < raw.size(); ++i) {
    lineno = raw_lines[i];
    NCPoly lhs = parse_ncpoly(raw[i].first, a);
    if (lhs.size() != 1 || lhs.leading_word().size() != 2 || !lhs.coeff(lhs.leading_word()).is_one())
      fail("left side of '->' must be a single pair of generators");
    const Word& w = lhs.leading_word();
    rf.system.add_rule(static_cast<unsigned char>(w[0]), static_cast<unsigned char>(w[1]),
                       parse_ncpoly(raw[i].second, a));
  }
  return rf;
}

RelationFile load_relations(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open relation file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_relations(ss.str());
}

}  // namespace qheis
