// SPDX-License-Identifier: Apache-2.0

// Finitely presented Z2-graded algebras over Q(q) and their normal forms.
//
// A presentation lists generators in rank order together with one exchange
// rule per out-of-order pair,
//
//     h * g = lambda * g * h + C        (rank(h) > rank(g)),
//
// and the implicit rule g * g = 0 for every odd generator. Elements are kept
// as linear combinations of rank-ordered monomials; every product is reduced
// to that form by the rewriting engine.

#pragma once

#include "glq/qfield.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glq {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotQuasiUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

std::string_view to_string(Parity p);

struct GeneratorSpec {
  std::string name;
  Parity parity = Parity::even;
  bool invertible = false;
  int rank = 0;
};

/// A generator raised to an integer power. Inside the engine every letter
/// carries exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Exponent per generator, indexed by rank. The implied word is rank ordered.
using Monomial = std::vector<int>;

/// Canonically ordered linear combination; never stores a zero coefficient.
using Terms = std::map<Monomial, QRational>;

class Presentation;
using Algebra = std::shared_ptr<const Presentation>;

/// h^{left.exp} * g^{right.exp} = lambda * g^{right.exp} * h^{left.exp} + correction
struct ExchangeRule {
  Letter left;
  Letter right;
  QRational lambda;
  Terms correction;
  bool derived = false;
};

class Presentation {
 public:
  const std::string& name() const { return name_; }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const GeneratorSpec& generator(int rank) const { return gens_.at(static_cast<std::size_t>(rank)); }
  std::optional<int> find(std::string_view name) const;
  /// Rank of a named generator; throws AlgebraError for unknown names.
  int rank_of(std::string_view name) const;

  /// Rule for an adjacent out-of-order pair, or nullptr if none is stored.
  const ExchangeRule* rule(Letter left, Letter right) const;
  const std::vector<ExchangeRule>& rules() const { return rules_; }

  bool has_invertibles() const;
  /// True once derive_inverse_rules has supplied the rules for inverse letters.
  bool has_inverse_rules() const { return inverse_rules_; }
  std::size_t odd_count() const;

  Parity parity(const Monomial& m) const;

 private:
  friend class PresentationBuilder;
  friend Algebra derive_inverse_rules(const Algebra& p);
  friend struct Rewriter;

  std::string name_;
  std::vector<GeneratorSpec> gens_;
  std::vector<ExchangeRule> rules_;
  std::map<std::pair<Letter, Letter>, std::size_t> index_;
  bool inverse_rules_ = false;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Monomial, Letter>, Terms> letter_cache_;
};

/// Assembles and validates a presentation. build() checks that every
/// out-of-order pair has a rule, that every lambda is nonzero, that parity is
/// respected and that each correction term is strictly below the pair it
/// replaces in the (even degree, then rank-lexicographic) order.
class PresentationBuilder {
 public:
  explicit PresentationBuilder(std::string name) : name_(std::move(name)) {}

  PresentationBuilder& generator(std::string name, Parity parity, bool invertible = false);
  /// left * right = lambda * right * left + correction, where rank(left) > rank(right).
  PresentationBuilder& exchange(std::string_view left, std::string_view right, QRational lambda,
                                Terms correction = {});

  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  /// Monomial with the given (name, exponent) factors.
  Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> factors) const;

  Algebra build() const;

 private:
  std::string name_;
  std::vector<GeneratorSpec> gens_;
  std::vector<ExchangeRule> rules_;
};

class Element {
 public:
  explicit Element(Algebra alg);
  Element(Algebra alg, Terms terms);

  static Element zero(const Algebra& alg) { return Element(alg); }
  static Element one(const Algebra& alg) { return scalar(alg, QRational(1)); }
  static Element scalar(const Algebra& alg, const QRational& c);
  static Element generator(const Algebra& alg, std::string_view name, int exp = 1);
  static Element monomial(const Algebra& alg, Monomial m, const QRational& c = QRational(1));

  const Algebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (zero if absent).
  QRational coeff(const Monomial& m) const;

  /// Common parity of all terms; nullopt when mixed. Zero is even.
  std::optional<Parity> parity() const;

  Element operator-() const;
  Element& operator+=(const Element& y);
  Element& operator-=(const Element& y);
  Element& operator*=(const QRational& c);
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(const QRational& c, Element x) { return x *= c; }
  friend Element operator*(Element x, const QRational& c) { return x *= c; }

  /// Integer power; negative powers go through invert_quasi_unit.
  Element pow(long k) const;

  friend bool operator==(const Element& x, const Element& y);

 private:
  void require_same(const Element& y) const;
  Algebra alg_;
  Terms terms_;
};

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y);
Element scale(const Element& x, const QRational& c);

// ---------------------------------------------------------------- built-ins

/// alpha, delta (odd) and b, c (even, invertible): the entries of a dual
/// supermatrix [[alpha, b], [c, delta]].
Algebra dual_algebra();
/// beta, gamma (odd) and a, d (even): the entries of [[a, beta], [gamma, d]].
Algebra gl_algebra();
/// x even, xi odd, with x xi = q xi x.
Algebra superplane();
/// eta odd, y even, with y eta = q eta y.
Algebra dual_superplane();

/// Built-in algebras by name: dual, gl, plane, dualplane, dualxdual,
/// glxplane, glxdualplane, dualxplane, dualxdualplane. Algebras with
/// invertible generators come with their inverse-letter rules. In dualxdual
/// the second copy's generators carry the suffix 2. Throws AlgebraError for
/// unknown names.
Algebra builtin_algebra(std::string_view name);
std::vector<std::string> builtin_algebra_names();

/// Super tensor product. A's generators are ranked before B's; across the two
/// factors even generators commute with everything and odd ones anticommute.
Algebra tensor(const Algebra& a, const Algebra& b);

/// Copy with every generator name suffixed, e.g. alpha -> alpha2.
Algebra renamed(const Algebra& a, std::string_view suffix);

/// Adds the exchange rules for inverse letters implied by the stored ones:
///   h g^-1 = lambda^-1 g^-1 h - lambda^-1 g^-1 C g^-1
///   h^-1 g = lambda^-1 g h^-1 - lambda^-1 h^-1 C h^-1
Algebra derive_inverse_rules(const Algebra& p);

// ---------------------------------------------------------------- rewriting

/// Canonical form of coeff * word. Letters may carry any integer exponent;
/// negative exponents require an invertible generator.
Element normal_form(const Algebra& alg, const Word& word, const QRational& coeff = QRational(1));

/// Word with named letters, e.g. {{"c", 1}, {"b", -1}}.
Word make_word(const Algebra& alg, std::initializer_list<std::pair<std::string_view, int>> letters);

/// The rank-ordered word spelled by a monomial, one letter per unit exponent.
Word expand(const Monomial& m);

/// Reduces a word by applying applicable rules at positions chosen
/// pseudo-randomly from seed until no rule applies. Shares only the rule
/// table with normal_form, not its strategy.
Element brute_force_nf(const Algebra& alg, const Word& word, std::uint64_t seed,
                       const QRational& coeff = QRational(1));

/// Inverse of u + nu where u is a scalar multiple of a monomial in invertible
/// even generators and every term of nu contains an odd generator.
Element invert_quasi_unit(const Element& x);

/// True iff x commutes with each listed generator.
bool is_central(const Element& x, const std::vector<std::string>& against);
/// Against every generator of x's algebra.
bool is_central(const Element& x);

// ---------------------------------------------------------------- rendering

enum class Notation { ascii, unicode, latex };

std::string format_monomial(const Presentation& p, const Monomial& m,
                            Notation notation = Notation::ascii);
/// Canonical text; in ascii notation the output parses back to the same
/// element.
std::string format_element(const Element& x, Notation notation = Notation::ascii);
std::ostream& operator<<(std::ostream& os, const Element& x);

// ------------------------------------------------------------- descriptors

/// JSON presentation descriptor with the generators and the stored
/// (non-derived) exchange rules.
std::string dump_presentation(const Presentation& p);
Algebra load_presentation(std::string_view json_text);

}  // namespace glq
