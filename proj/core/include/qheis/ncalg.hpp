// Noncommutative polynomials over QScalar, quadratic rewrite systems and
// degree-3 overlap (diamond) checks.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qheis/qarith.hpp"

namespace qheis {

// A word is a string of generator indices; index = position in the alphabet
// = order index.
using Word = std::string;

// degree first, then lexicographic on order indices
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string> names);
  explicit Alphabet(const std::vector<std::string>& names);

  int add(const std::string& name);
  int index(std::string_view name) const;  // throws on unknown name
  std::optional<int> find(std::string_view name) const;
  const std::string& name(int i) const { return names_.at(i); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  void set_inverse(int g, int ginv);
  std::optional<int> inverse(int g) const;

  std::string str(const Word& w) const;  // "a*b*c", "1" for the empty word
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::map<int, int> inverse_;
};

class NCPoly {
 public:
  using Terms = std::map<Word, QScalar, DegLex>;

  NCPoly() = default;
  NCPoly(const QScalar& c);
  NCPoly(long c) : NCPoly(QScalar(c)) {}
  static NCPoly word(const Word& w, const QScalar& c = QScalar(1));
  static NCPoly gen(int g) { return word(Word(1, static_cast<char>(g))); }

  const Terms& terms() const { return t_; }
  QScalar coeff(const Word& w) const;
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  // largest word in deglex order; throws on zero
  const Word& leading_word() const;
  size_t degree() const;
  bool is_homogeneous() const;

  void add_term(const Word& w, const QScalar& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const NCPoly& o);
  NCPoly& operator*=(const QScalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const NCPoly& b) { return a *= b; }
  friend NCPoly operator*(const QScalar& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(NCPoly a, const QScalar& c) { return a *= c; }
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  // "(coef)*g1*g2 + (coef)" in descending word order, "0" for zero
  std::string str(const Alphabet& a) const;

 private:
  Terms t_;
};

// Expressions over generator names, q, lambda, integers, + - * / ^ and
// parentheses. q takes half-integer powers q^(k/2); g^-1 maps to the
// declared inverse generator.
NCPoly parse_ncpoly(std::string_view text, const Alphabet& a);

class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted(const std::string& what, Word w) : std::runtime_error(what), word(std::move(w)) {}
  Word word;
};

class NonOrientableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rules rewrite an adjacent pair (g1, g2) into a polynomial. A word is in
// normal form when none of its adjacent pairs has a rule. Systems built by
// system_from_pairs only rewrite a pair into deglex-smaller words, which
// makes rewriting terminate. add_rule accepts anything and clears the
// terminating flag when the replacement is not smaller.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(Alphabet a);

  const Alphabet& alphabet() const { return a_; }
  void add_rule(int g1, int g2, const NCPoly& replacement);
  // g ginv -> 1 and ginv g -> 1; also records the inverse in the alphabet
  void add_inverse_pair(int g, int ginv);

  const NCPoly* rule(int g1, int g2) const;
  bool has_rule(int g1, int g2) const { return rule(g1, g2) != nullptr; }
  size_t rule_count() const { return count_; }
  // key: the two-letter word
  std::map<Word, NCPoly> rules() const;
  bool terminating() const { return terminating_; }
  bool homogeneous() const;
  bool is_normal(const Word& w) const;

  // one relation per line in the relation-file format
  std::string str() const;

 private:
  Alphabet a_;
  std::vector<std::optional<NCPoly>> table_;  // g1 * size + g2
  size_t count_ = 0;
  bool terminating_ = true;
};

constexpr long kDefaultFuel = 1'000'000;

// Rewrites the leftmost reducible pair of the largest pending word until
// every word is normal. Each single rewrite costs one unit of fuel.
NCPoly normal_order(const NCPoly& p, const RewriteSystem& sys, long fuel = kDefaultFuel);

// Rewrites the pair at position pos of w once.
NCPoly rewrite_at(const Word& w, size_t pos, const RewriteSystem& sys);

struct OverlapFailure {
  Word word;        // the ambiguous triple; empty for the linear-algebra path
  NCPoly left;      // normal form after rewriting the left pair first
  NCPoly right;     // normal form after rewriting the right pair first
  NCPoly witness;   // left - right, or a relation among normal words
};

// Terminating systems: every triple g1 g2 g3 with both pairs reducible is
// resolved both ways and the normal forms compared.
// Non-terminating homogeneous quadratic systems: the degree-3 part of the
// ideal is intersected with the span of normal words; every nonzero element
// of the intersection is a failure (scaled so its largest word has
// coefficient 1).
std::vector<OverlapFailure> pbw_overlap_check(const RewriteSystem& sys, long fuel = kDefaultFuel);

// normal_order(z g - g z) for each generator g
std::vector<NCPoly> commutant_residual(const NCPoly& z, const RewriteSystem& sys, const std::vector<int>& gens,
                                       long fuel = kDefaultFuel);

// Each relation (an NCPoly equal to zero) is solved for its deglex-largest
// word, which must have length two. Duplicate leading pairs and replacements
// that are not smaller are rejected.
RewriteSystem system_from_pairs(const Alphabet& a, const std::vector<NCPoly>& relations);

// Gaussian elimination over QScalar in deglex order: the result spans the
// same space, has distinct leading words with coefficient 1 and no leading
// word appears in another element.
std::vector<NCPoly> interreduce(std::vector<NCPoly> relations);

// Relation files:
//   # comment
//   gens: a b c d
//   inverse: L Linv
//   a*b = q*b*a            relation, oriented by system_from_pairs
//   y*x -> x*y + x^2       raw rule, no orientation check
struct RelationFile {
  RewriteSystem system;
  std::vector<NCPoly> relations;  // lhs - rhs of the '=' lines
};

RelationFile parse_relations(std::string_view text);
RelationFile load_relations(const std::string& path);

}  // namespace qheis
