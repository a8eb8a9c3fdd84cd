// SPDX-License-Identifier: Apache-2.0

#include "glq/superalgebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <utility>

namespace glq {

namespace {

// Thrown when the engine needs a rule the presentation does not carry.
class MissingRule : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

constexpr int kMaxDepth = 4096;

void add_into(Terms& out, const Monomial& m, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void add_scaled(Terms& out, const Terms& in, const QRational& c) {
  if (c.is_zero()) return;
  for (const auto& [m, x] : in) add_into(out, m, c.is_one() ? x : x * c);
}

int even_degree(const Presentation& p, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (p.generator(static_cast<int>(i)).parity == Parity::even) d += std::abs(m[i]);
  return d;
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += std::abs(e);
  return d;
}

std::string letter_text(const Presentation& p, Letter l) {
  std::string s = p.generator(l.gen).name;
  if (l.exp != 1) s += "^" + std::to_string(l.exp);
  return s;
}

bool same_algebra(const Presentation& a, const Presentation& b) {
  if (&a == &b) return true;
  if (a.name() != b.name() || a.size() != b.size()) return false;
  if (a.has_inverse_rules() != b.has_inverse_rules()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.generators()[i];
    const auto& y = b.generators()[i];
    if (x.name != y.name || x.parity != y.parity || x.invertible != y.invertible) return false;
  }
  return a.rules().size() == b.rules().size();
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

// ----------------------------------------------------------- Presentation

std::optional<int> Presentation::find(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g.rank;
  return std::nullopt;
}

int Presentation::rank_of(std::string_view name) const {
  auto r = find(name);
  if (!r) throw AlgebraError("unknown generator '" + std::string(name) + "' in algebra " + name_);
  return *r;
}

const ExchangeRule* Presentation::rule(Letter left, Letter right) const {
  auto it = index_.find({left, right});
  return it == index_.end() ? nullptr : &rules_[it->second];
}

bool Presentation::has_invertibles() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.invertible; });
}

std::size_t Presentation::odd_count() const {
  return static_cast<std::size_t>(std::count_if(
      gens_.begin(), gens_.end(), [](const auto& g) { return g.parity == Parity::odd; }));
}

Parity Presentation::parity(const Monomial& m) const {
  int odd = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (gens_[i].parity == Parity::odd) odd += std::abs(m[i]);
  return static_cast<Parity>(odd & 1);
}

// ---------------------------------------------------- PresentationBuilder

PresentationBuilder& PresentationBuilder::generator(std::string name, Parity parity,
                                                    bool invertible) {
  for (const auto& g : gens_)
    if (g.name == name) throw AlgebraError("duplicate generator name '" + name + "'");
  if (parity == Parity::odd && invertible)
    throw AlgebraError("odd generator '" + name + "' cannot be invertible");
  gens_.push_back({std::move(name), parity, invertible, static_cast<int>(gens_.size())});
  return *this;
}

PresentationBuilder& PresentationBuilder::exchange(std::string_view left, std::string_view right,
                                                   QRational lambda, Terms correction) {
  auto rank = [&](std::string_view n) {
    for (const auto& g : gens_)
      if (g.name == n) return g.rank;
    throw AlgebraError("exchange rule names unknown generator '" + std::string(n) + "'");
  };
  rules_.push_back({{rank(left), 1}, {rank(right), 1}, std::move(lambda), std::move(correction)});
  return *this;
}

Monomial PresentationBuilder::monomial(
    std::initializer_list<std::pair<std::string_view, int>> factors) const {
  Monomial m(gens_.size(), 0);
  for (auto [n, e] : factors) {
    bool found = false;
    for (const auto& g : gens_)
      if (g.name == n) {
        m[static_cast<std::size_t>(g.rank)] += e;
        found = true;
      }
    if (!found) throw AlgebraError("unknown generator '" + std::string(n) + "'");
  }
  return m;
}

Algebra PresentationBuilder::build() const {
  auto p = std::make_shared<Presentation>();
  p->name_ = name_;
  p->gens_ = gens_;
  const std::size_t n = gens_.size();
  for (const auto& r : rules_) {
    const auto& h = gens_[static_cast<std::size_t>(r.left.gen)];
    const auto& g = gens_[static_cast<std::size_t>(r.right.gen)];
    const std::string pair = h.name + "*" + g.name;
    if (r.left.gen <= r.right.gen)
      throw AlgebraError("exchange rule " + pair + " is not an out-of-order pair");
    if (p->index_.count({r.left, r.right}))
      throw AlgebraError("duplicate exchange rule for " + pair);
    if (r.lambda.is_zero()) throw AlgebraError("exchange rule " + pair + " has lambda = 0");
    Monomial lhs(n, 0);
    lhs[static_cast<std::size_t>(g.rank)] = 1;
    lhs[static_cast<std::size_t>(h.rank)] = 1;
    const Parity want = h.parity + g.parity;
    for (const auto& [m, c] : r.correction) {
      if (m.size() != n) throw AlgebraError("correction of " + pair + " has wrong arity");
      for (std::size_t i = 0; i < n; ++i) {
        if (gens_[i].parity == Parity::odd && (m[i] < 0 || m[i] > 1))
          throw AlgebraError("correction of " + pair + " repeats an odd generator");
        if (!gens_[i].invertible && m[i] < 0)
          throw AlgebraError("correction of " + pair + " inverts a non-invertible generator");
      }
      if (p->parity(m) != want)
        throw AlgebraError("correction of " + pair + " breaks the Z2 grading");
      const int ed = even_degree(*p, m), ed0 = even_degree(*p, lhs);
      const bool smaller =
          ed < ed0 || (ed == ed0 && (total_degree(m) < 2 || (total_degree(m) == 2 && m < lhs)));
      if (!smaller)
        throw AlgebraError("correction of " + pair + " is not below " + pair +
                           " in the rewriting order");
    }
    p->index_[{r.left, r.right}] = p->rules_.size();
    p->rules_.push_back(r);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!p->index_.count({Letter{static_cast<int>(j), 1}, Letter{static_cast<int>(i), 1}}))
        throw AlgebraError("missing exchange rule for " + gens_[j].name + "*" + gens_[i].name);
  p->inverse_rules_ = !p->has_invertibles();
  return p;
}

// ------------------------------------------------------------ rewriting

/// Right multiplication of rank-ordered monomials by single letters. Moving a
/// letter left past a higher-ranked one applies that pair's exchange rule and
/// recurses on both the swapped word and the correction terms.
struct Rewriter {
  static Terms times_letter(const Presentation& p, const Monomial& m, Letter l, int depth) {
    if (depth > kMaxDepth) throw AlgebraError("rewriting exceeded the recursion limit");
    const auto& spec = p.generator(l.gen);
    if (l.exp < 0 && !spec.invertible)
      throw AlgebraError("negative exponent on non-invertible generator '" + spec.name + "'");
    const auto key = std::make_pair(m, l);
    {
      std::lock_guard lock(p.cache_mutex_);
      auto it = p.letter_cache_.find(key);
      if (it != p.letter_cache_.end()) return it->second;
    }
    Terms out;
    int top = -1;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
      if (m[static_cast<std::size_t>(i)] != 0) {
        top = i;
        break;
      }
    if (top < l.gen) {
      Monomial r = m;
      r[static_cast<std::size_t>(l.gen)] = l.exp;
      out.emplace(std::move(r), QRational(1));
    } else if (top == l.gen) {
      const int e = m[static_cast<std::size_t>(top)] + l.exp;
      if (!(spec.parity == Parity::odd && e != 0)) {
        Monomial r = m;
        r[static_cast<std::size_t>(top)] = e;
        out.emplace(std::move(r), QRational(1));
      }
    } else {
      const int t = m[static_cast<std::size_t>(top)] > 0 ? 1 : -1;
      const Letter h{top, t};
      const ExchangeRule* rule = p.rule(h, l);
      if (!rule)
        throw MissingRule("no exchange rule for " + letter_text(p, h) + "*" + letter_text(p, l) +
                          " in algebra " + p.name() + " (derive_inverse_rules first?)");
      Monomial rest = m;
      rest[static_cast<std::size_t>(top)] -= t;
      for (const auto& [mx, cx] : times_letter(p, rest, l, depth + 1))
        add_scaled(out, times_letter(p, mx, h, depth + 1), rule->lambda * cx);
      for (const auto& [mc, cc] : rule->correction) {
        Terms part{{rest, cc}};
        for (Letter x : expand(mc)) part = times_letter(p, part, x, depth + 1);
        add_scaled(out, part, QRational(1));
      }
    }
    std::lock_guard lock(p.cache_mutex_);
    p.letter_cache_.emplace(key, out);
    return out;
  }

  static Terms times_letter(const Presentation& p, const Terms& in, Letter l, int depth) {
    Terms out;
    for (const auto& [m, c] : in) add_scaled(out, times_letter(p, m, l, depth), c);
    return out;
  }

  static Terms times_word(const Presentation& p, Terms in, const Word& w) {
    for (Letter l : w) {
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.size())
        throw AlgebraError("letter outside algebra " + p.name());
      const int step = l.exp > 0 ? 1 : -1;
      for (int k = 0; k != l.exp; k += step) in = times_letter(p, in, Letter{l.gen, step}, 0);
    }
    return in;
  }
};

Word expand(const Monomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int step = m[i] > 0 ? 1 : -1;
    for (int k = 0; k != m[i]; k += step) w.push_back({static_cast<int>(i), step});
  }
  return w;
}

Element normal_form(const Algebra& alg, const Word& word, const QRational& coeff) {
  Terms start;
  add_into(start, Monomial(alg->size(), 0), coeff);
  return Element(alg, Rewriter::times_word(*alg, std::move(start), word));
}

Word make_word(const Algebra& alg,
               std::initializer_list<std::pair<std::string_view, int>> letters) {
  Word w;
  for (auto [n, e] : letters) w.push_back({alg->rank_of(n), e});
  return w;
}

// --------------------------------------------------------------- Element

Element::Element(Algebra alg) : alg_(std::move(alg)) {
  if (!alg_) throw AlgebraError("element without algebra");
}

Element::Element(Algebra alg, Terms terms) : Element(std::move(alg)) {
  for (auto& [m, c] : terms) {
    if (m.size() != alg_->size()) throw AlgebraError("monomial arity does not match algebra");
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

Element Element::scalar(const Algebra& alg, const QRational& c) {
  Terms t;
  add_into(t, Monomial(alg->size(), 0), c);
  return Element(alg, std::move(t));
}

Element Element::generator(const Algebra& alg, std::string_view name, int exp) {
  return normal_form(alg, Word{{alg->rank_of(name), exp}});
}

Element Element::monomial(const Algebra& alg, Monomial m, const QRational& c) {
  return normal_form(alg, expand(m), c);
}

QRational Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QRational() : it->second;
}

std::optional<Parity> Element::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    Parity pm = alg_->parity(m);
    if (p && *p != pm) return std::nullopt;
    p = pm;
  }
  return p.value_or(Parity::even);
}

void Element::require_same(const Element& y) const {
  if (!same_algebra(*alg_, *y.alg_))
    throw AlgebraError("algebra mismatch: " + alg_->name() + " vs " + y.alg_->name());
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& y) {
  require_same(y);
  add_scaled(terms_, y.terms_, QRational(1));
  return *this;
}

Element& Element::operator-=(const Element& y) {
  require_same(y);
  add_scaled(terms_, y.terms_, QRational(-1));
  return *this;
}

Element& Element::operator*=(const QRational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [m, x] : terms_) x *= c;
  }
  return *this;
}

Element operator*(const Element& x, const Element& y) {
  x.require_same(y);
  Terms out;
  for (const auto& [m, c] : y.terms_)
    add_scaled(out, Rewriter::times_word(*x.alg_, x.terms_, expand(m)), c);
  return Element(x.alg_, std::move(out));
}

bool operator==(const Element& x, const Element& y) {
  return same_algebra(*x.alg_, *y.alg_) && x.terms_ == y.terms_;
}

Element Element::pow(long k) const {
  if (k < 0) return invert_quasi_unit(*this).pow(-k);
  Element result = one(alg_);
  Element base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Element add(const Element& x, const Element& y) { return x + y; }
Element sub(const Element& x, const Element& y) { return x - y; }
Element mul(const Element& x, const Element& y) { return x * y; }
Element scale(const Element& x, const QRational& c) { return x * c; }

// ------------------------------------------------------------- built-ins

Algebra dual_algebra() {
  static const Algebra alg = [] {
    PresentationBuilder b("dual");
    b.generator("alpha", Parity::odd)
        .generator("delta", Parity::odd)
        .generator("b", Parity::even, true)
        .generator("c", Parity::even, true);
    const QRational q = QRational::q();
    // alpha b = q^-1 b alpha and friends, read right to left.
    b.exchange("delta", "alpha", -1)
        .exchange("b", "alpha", q)
        .exchange("b", "delta", q)
        .exchange("c", "alpha", q)
        .exchange("c", "delta", q);
    // c b = b c - (q - q^-1) delta alpha = b c + (q - q^-1) alpha delta
    b.exchange("c", "b", 1, {{b.monomial({{"alpha", 1}, {"delta", 1}}), q - q.inv()}});
    return b.build();
  }();
  return alg;
}

Algebra gl_algebra() {
  static const Algebra alg = [] {
    PresentationBuilder b("gl");
    b.generator("beta", Parity::odd)
        .generator("gamma", Parity::odd)
        .generator("a", Parity::even)
        .generator("d", Parity::even);
    const QRational q = QRational::q();
    b.exchange("gamma", "beta", -1)
        .exchange("a", "beta", q)
        .exchange("a", "gamma", q)
        .exchange("d", "beta", q)
        .exchange("d", "gamma", q);
    // d a = a d - (q - q^-1) gamma beta = a d + (q - q^-1) beta gamma
    b.exchange("d", "a", 1, {{b.monomial({{"beta", 1}, {"gamma", 1}}), q - q.inv()}});
    return b.build();
  }();
  return alg;
}

Algebra superplane() {
  static const Algebra alg = [] {
    PresentationBuilder b("plane");
    b.generator("x", Parity::even).generator("xi", Parity::odd);
    b.exchange("xi", "x", QRational::q_pow(-1));
    return b.build();
  }();
  return alg;
}

Algebra dual_superplane() {
  static const Algebra alg = [] {
    PresentationBuilder b("dualplane");
    b.generator("eta", Parity::odd).generator("y", Parity::even);
    b.exchange("y", "eta", QRational::q());
    return b.build();
  }();
  return alg;
}

namespace {

Terms embed(const Terms& t, std::size_t offset, std::size_t n) {
  Terms out;
  for (const auto& [m, c] : t) {
    Monomial r(n, 0);
    std::copy(m.begin(), m.end(), r.begin() + static_cast<std::ptrdiff_t>(offset));
    out.emplace(std::move(r), c);
  }
  return out;
}

void copy_base_rules(PresentationBuilder& b, const Presentation& p, std::size_t offset,
                     std::size_t n, std::string_view suffix) {
  for (const auto& r : p.rules()) {
    if (r.derived) continue;
    b.exchange(p.generator(r.left.gen).name + std::string(suffix),
               p.generator(r.right.gen).name + std::string(suffix), r.lambda,
               embed(r.correction, offset, n));
  }
}

}  // namespace

Algebra tensor(const Algebra& a, const Algebra& b) {
  for (const auto& g : b->generators())
    if (a->find(g.name))
      throw AlgebraError("tensor: generator name '" + g.name + "' occurs in both factors");
  PresentationBuilder builder(a->name() + "x" + b->name());
  for (const auto& g : a->generators()) builder.generator(g.name, g.parity, g.invertible);
  for (const auto& g : b->generators()) builder.generator(g.name, g.parity, g.invertible);
  const std::size_t n = a->size() + b->size();
  copy_base_rules(builder, *a, 0, n, "");
  copy_base_rules(builder, *b, a->size(), n, "");
  for (const auto& gb : b->generators())
    for (const auto& ga : a->generators()) {
      const bool both_odd = ga.parity == Parity::odd && gb.parity == Parity::odd;
      builder.exchange(gb.name, ga.name, both_odd ? -1 : 1);
    }
  Algebra out = builder.build();
  if ((a->has_invertibles() && a->has_inverse_rules()) ||
      (b->has_invertibles() && b->has_inverse_rules()))
    out = derive_inverse_rules(out);
  return out;
}

Algebra renamed(const Algebra& a, std::string_view suffix) {
  PresentationBuilder builder(a->name() + std::string(suffix));
  for (const auto& g : a->generators())
    builder.generator(g.name + std::string(suffix), g.parity, g.invertible);
  copy_base_rules(builder, *a, 0, a->size(), suffix);
  Algebra out = builder.build();
  if (a->has_invertibles() && a->has_inverse_rules()) out = derive_inverse_rules(out);
  return out;
}

Algebra derive_inverse_rules(const Algebra& p) {
  auto make = [&](const std::vector<ExchangeRule>& rules, bool complete) {
    auto out = std::make_shared<Presentation>();
    out->name_ = p->name_;
    out->gens_ = p->gens_;
    out->rules_ = rules;
    for (std::size_t i = 0; i < rules.size(); ++i)
      out->index_[{rules[i].left, rules[i].right}] = i;
    out->inverse_rules_ = complete;
    return out;
  };

  // Each missing rule comes from a source rule by inverting one letter: the
  // right one when it carries exponent -1, else the left one. Lambda inverts
  // exactly; the correction sandwiches the source correction between two
  // copies of the inverted letter. A correction may need the rule being
  // derived, but only on terms of higher odd degree, so iterating from empty
  // corrections reaches the fixed point after at most (odd count + 1) sweeps.
  std::vector<ExchangeRule> rules = p->rules_;
  std::vector<std::size_t> derived;
  for (const auto& h : p->gens_)
    for (const auto& g : p->gens_) {
      if (h.rank <= g.rank) continue;
      for (int t : {1, -1})
        for (int s : {1, -1}) {
          if ((t < 0 && !h.invertible) || (s < 0 && !g.invertible)) continue;
          if (p->rule({h.rank, t}, {g.rank, s})) continue;
          const ExchangeRule* base = p->rule({h.rank, 1}, {g.rank, 1});
          if (!base)
            throw AlgebraError("missing exchange rule for " + h.name + "*" + g.name);
          derived.push_back(rules.size());
          rules.push_back({{h.rank, t}, {g.rank, s}, base->lambda.pow(t * s), {}, true});
        }
    }

  auto source_of = [&](const std::vector<ExchangeRule>& table, const ExchangeRule& r) {
    const bool flip_right = r.right.exp < 0;
    const Letter h = flip_right ? r.left : Letter{r.left.gen, -r.left.exp};
    const Letter g = flip_right ? Letter{r.right.gen, -r.right.exp} : r.right;
    for (const auto& x : table)
      if (x.left == h && x.right == g) return std::make_pair(&x, flip_right ? r.right : r.left);
    throw AlgebraError("no source rule for derived rule in algebra " + p->name_);
  };

  const std::size_t max_sweeps = p->odd_count() + 2;
  for (std::size_t sweep = 0;; ++sweep) {
    if (sweep > max_sweeps)
      throw AlgebraError("inverse-letter rules of algebra " + p->name_ + " do not stabilize");
    auto current = make(rules, false);
    bool changed = false;
    std::vector<ExchangeRule> next = rules;
    for (std::size_t idx : derived) {
      auto [src, sandwich] = source_of(rules, rules[idx]);
      const QRational lambda_inv = src->lambda.inv();
      Terms corr;
      for (const auto& [mc, cc] : src->correction) {
        Word w{sandwich};
        for (Letter x : expand(mc)) w.push_back(x);
        w.push_back(sandwich);
        add_scaled(corr, normal_form(current, w, -lambda_inv * cc).terms(), QRational(1));
      }
      if (corr != rules[idx].correction) changed = true;
      next[idx].correction = std::move(corr);
    }
    rules = std::move(next);
    if (!changed) break;
  }
  return make(rules, true);
}

// ------------------------------------------------------- confluence oracle

Element brute_force_nf(const Algebra& alg, const Word& word, std::uint64_t seed,
                       const QRational& coeff) {
  const Presentation& p = *alg;
  Word start;
  for (Letter l : word) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.size())
      throw AlgebraError("letter outside algebra " + p.name());
    const auto& spec = p.generator(l.gen);
    if (l.exp < 0 && !spec.invertible)
      throw AlgebraError("negative exponent on non-invertible generator '" + spec.name + "'");
    const int step = l.exp > 0 ? 1 : -1;
    for (int k = 0; k != l.exp; k += step) start.push_back({l.gen, step});
  }

  auto reducible_at = [&](const Word& w, std::size_t i) {
    const Letter x = w[i], y = w[i + 1];
    if (x.gen > y.gen) return true;
    if (x.gen < y.gen) return false;
    return x.exp != y.exp || p.generator(x.gen).parity == Parity::odd;
  };

  auto reducible = [&](const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (reducible_at(w, i)) return true;
    return false;
  };

  // Irreducible words never become reducible again, so they move to `state`
  // and only `pending` is scanned.
  std::mt19937_64 rng(seed);
  std::map<Word, QRational> state, pending;
  auto add_word = [&](Word w, const QRational& c) {
    if (c.is_zero()) return;
    auto& target = reducible(w) ? pending : state;
    auto [it, inserted] = target.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) target.erase(it);
    }
  };
  if (!coeff.is_zero()) add_word(start, coeff);

  for (std::size_t steps = 0; !pending.empty(); ++steps) {
    if (steps > 10'000'000) throw AlgebraError("brute-force reduction did not terminate");
    auto node = pending.extract(std::next(pending.begin(),
                                          static_cast<std::ptrdiff_t>(rng() % std::min<std::size_t>(pending.size(), 4))));
    const Word& w = node.key();
    const QRational& c = node.mapped();
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (reducible_at(w, i)) positions.push_back(i);
    const std::size_t i = positions[rng() % positions.size()];

    const Letter x = w[i], y = w[i + 1];
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    if (x.gen == y.gen) {
      if (x.exp == -y.exp) {
        Word r = prefix;
        r.insert(r.end(), suffix.begin(), suffix.end());
        add_word(std::move(r), c);
      }
      continue;  // odd square: the word vanishes
    }
    const ExchangeRule* rule = p.rule(x, y);
    if (!rule)
      throw MissingRule("no exchange rule for " + letter_text(p, x) + "*" + letter_text(p, y) +
                        " in algebra " + p.name());
    Word swapped = prefix;
    swapped.push_back(y);
    swapped.push_back(x);
    swapped.insert(swapped.end(), suffix.begin(), suffix.end());
    add_word(std::move(swapped), c * rule->lambda);
    for (const auto& [mc, cc] : rule->correction) {
      Word r = prefix;
      for (Letter l : expand(mc)) r.push_back(l);
      r.insert(r.end(), suffix.begin(), suffix.end());
      add_word(std::move(r), c * cc);
    }
  }

  Terms out;
  for (const auto& [w, c] : state) {
    Monomial m(p.size(), 0);
    for (Letter l : w) m[static_cast<std::size_t>(l.gen)] += l.exp;
    add_into(out, m, c);
  }
  return Element(alg, std::move(out));
}

// -------------------------------------------------------------- inverses

Element invert_quasi_unit(const Element& x) {
  const Algebra& alg = x.algebra();
  const Presentation& p = *alg;
  std::optional<std::pair<Monomial, QRational>> unit;
  Terms nil;
  for (const auto& [m, c] : x.terms()) {
    bool has_odd = false;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0 && p.generators()[i].parity == Parity::odd) has_odd = true;
    if (has_odd) {
      nil.emplace(m, c);
      continue;
    }
    if (unit) throw NotQuasiUnit("even part of " + format_element(x) + " is not a single monomial");
    unit.emplace(m, c);
  }
  if (!unit) throw NotQuasiUnit(format_element(x) + " has no even unit part");
  for (std::size_t i = 0; i < unit->first.size(); ++i)
    if (unit->first[i] != 0 && !p.generators()[i].invertible)
      throw NotQuasiUnit("even part of " + format_element(x) + " contains non-invertible '" +
                         p.generators()[i].name + "'");

  Word reversed = expand(unit->first);
  std::reverse(reversed.begin(), reversed.end());
  for (auto& l : reversed) l.exp = -l.exp;
  const Element u_inv = normal_form(alg, reversed, unit->second.inv());
  const Element step = -(u_inv * Element(alg, nil));

  Element result = u_inv;
  Element term = u_inv;
  for (std::size_t k = 0; k <= p.odd_count(); ++k) {
    term = step * term;
    if (term.is_zero()) break;
    result += term;
  }
  if (!term.is_zero()) throw NotQuasiUnit("nilpotent part of " + format_element(x) + " does not vanish");
  return result;
}

bool is_central(const Element& x, const std::vector<std::string>& against) {
  for (const auto& name : against) {
    const Element g = Element::generator(x.algebra(), name);
    if (!(x * g == g * x)) return false;
  }
  return true;
}

bool is_central(const Element& x) {
  std::vector<std::string> names;
  for (const auto& g : x.algebra()->generators()) names.push_back(g.name);
  return is_central(x, names);
}

}  // namespace glq
