// SPDX-License-Identifier: Apache-2.0

#include "glq/expr.hpp"

#include <cctype>
#include <climits>

namespace glq {

namespace {

using Kind = ExprNode::Kind;

class Parser {
 public:
  Parser(std::string_view text, const Algebra& alg) : s_(text), alg_(alg) {}

  ExprNode run() {
    ExprNode e = expr();
    skip();
    if (i_ < s_.size()) error(std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  static bool scalar(const ExprNode& n) { return n.kind == Kind::scalar; }

  static ExprNode scalar_node(QRational v, std::size_t pos) {
    ExprNode n;
    n.kind = Kind::scalar;
    n.value = std::move(v);
    n.pos = pos;
    return n;
  }

  static ExprNode binary(Kind k, ExprNode l, ExprNode r, std::size_t pos) {
    ExprNode n;
    n.kind = k;
    n.pos = pos;
    n.kids.push_back(std::move(l));
    n.kids.push_back(std::move(r));
    return n;
  }

  ExprNode expr() {
    ExprNode l = term();
    for (;;) {
      const std::size_t pos = (skip(), i_);
      const bool plus = accept('+');
      if (!plus && !accept('-')) return l;
      ExprNode r = term();
      if (scalar(l) && scalar(r))
        l = scalar_node(plus ? l.value + r.value : l.value - r.value, l.pos);
      else
        l = binary(plus ? Kind::add : Kind::subtract, std::move(l), std::move(r), pos);
    }
  }

  ExprNode term() {
    ExprNode l = unary();
    for (;;) {
      const std::size_t pos = (skip(), i_);
      if (accept('*')) {
        ExprNode r = unary();
        if (scalar(l) && scalar(r))
          l = scalar_node(l.value * r.value, l.pos);
        else
          l = binary(Kind::multiply, std::move(l), std::move(r), pos);
      } else if (accept('/')) {
        skip();
        const std::size_t rpos = i_;
        ExprNode r = unary();
        if (!scalar(r)) throw ParseError("division by a non-scalar", rpos);
        if (r.value.is_zero()) throw ParseError("division by zero", rpos);
        if (scalar(l))
          l = scalar_node(l.value / r.value, l.pos);
        else
          l = binary(Kind::multiply, std::move(l), scalar_node(r.value.inv(), rpos), pos);
      } else {
        return l;
      }
    }
  }

  ExprNode unary() {
    skip();
    const std::size_t pos = i_;
    if (accept('-')) {
      ExprNode e = unary();
      if (scalar(e)) return scalar_node(-e.value, pos);
      ExprNode n;
      n.kind = Kind::negate;
      n.pos = pos;
      n.kids.push_back(std::move(e));
      return n;
    }
    return factor();
  }

  long integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected an integer");
    if (i_ - start > 9) throw ParseError("exponent too large", start);
    return std::stol(std::string(s_.substr(start, i_ - start)));
  }

  ExprNode factor() {
    ExprNode b = base();
    skip();
    const std::size_t pos = i_;
    if (!accept('^')) return b;
    bool negative = accept('-');
    if (!negative && accept('(')) {
      negative = accept('-');
      const long k = integer();
      if (!accept(')')) error("expected ')'");
      return power(std::move(b), negative ? -k : k, pos);
    }
    const long k = integer();
    return power(std::move(b), negative ? -k : k, pos);
  }

  ExprNode power(ExprNode b, long k, std::size_t pos) {
    if (scalar(b)) {
      if (k < 0 && b.value.is_zero()) throw ParseError("negative power of zero", pos);
      return scalar_node(b.value.pow(k), b.pos);
    }
    if (k < 0 && b.kind == Kind::generator && !alg_->generator(b.gen).invertible)
      throw NegativePowerError(
          "negative power of non-invertible generator '" + alg_->generator(b.gen).name + "'", pos);
    if (k > INT_MAX || k < -INT_MAX) throw ParseError("exponent too large", pos);
    ExprNode n;
    n.kind = Kind::power;
    n.pos = pos;
    n.exponent = static_cast<int>(k);
    n.kids.push_back(std::move(b));
    return n;
  }

  ExprNode base() {
    skip();
    const std::size_t pos = i_;
    if (i_ >= s_.size()) error("unexpected end of input");
    const char ch = s_[i_];
    if (ch == '(') {
      ++i_;
      ExprNode e = expr();
      if (!accept(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return scalar_node(QRational(mpq_class(mpz_class(std::string(s_.substr(pos, i_ - pos))))), pos);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      const std::string name(s_.substr(pos, i_ - pos));
      if (auto r = alg_->find(name)) {
        ExprNode n;
        n.kind = Kind::generator;
        n.gen = *r;
        n.pos = pos;
        return n;
      }
      if (name == "q") return scalar_node(QRational::q(), pos);
      throw UnknownIdentifier("unknown identifier '" + name + "' in algebra " + alg_->name(), pos);
    }
    error(std::string("unexpected '") + ch + "'");
  }

  std::string_view s_;
  const Algebra& alg_;
  std::size_t i_ = 0;
};

Element lower(const Algebra& alg, const ExprNode& n) {
  switch (n.kind) {
    case Kind::scalar: return Element::scalar(alg, n.value);
    case Kind::generator: return Element::generator(alg, alg->generator(n.gen).name);
    case Kind::negate: return -lower(alg, n.kids[0]);
    case Kind::add: return lower(alg, n.kids[0]) + lower(alg, n.kids[1]);
    case Kind::subtract: return lower(alg, n.kids[0]) - lower(alg, n.kids[1]);
    case Kind::multiply: return lower(alg, n.kids[0]) * lower(alg, n.kids[1]);
    case Kind::power:
      if (n.kids[0].kind == Kind::generator)
        return Element::generator(alg, alg->generator(n.kids[0].gen).name, n.exponent);
      return lower(alg, n.kids[0]).pow(n.exponent);
  }
  return Element::zero(alg);
}

}  // namespace

Expr parse(std::string_view text, const Algebra& alg) { return {alg, Parser(text, alg).run()}; }

Element eval(const Expr& e) { return lower(e.algebra, e.root); }

std::string print(const Element& x, Notation notation) { return format_element(x, notation); }

Element parse_element(std::string_view text, const Algebra& alg) { return eval(parse(text, alg)); }

}  // namespace glq
