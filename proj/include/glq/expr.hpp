// SPDX-License-Identifier: Apache-2.0

// Text syntax for algebra elements:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' ['-'] integer)?
//   base   := identifier | integer | '(' expr ')'
//
// `q` is the deformation parameter; every other identifier names a generator
// of the selected algebra. Subtrees without generators are folded to Q(q)
// scalars while parsing, and only scalars may appear after '/'.

#pragma once

#include "glq/superalgebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error("at column " + std::to_string(pos + 1) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class UnknownIdentifier : public ParseError {
 public:
  using ParseError::ParseError;
};

class NegativePowerError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct ExprNode {
  enum class Kind { scalar, generator, negate, add, subtract, multiply, power };
  Kind kind = Kind::scalar;
  std::size_t pos = 0;
  QRational value;  // scalar
  int gen = 0;      // generator rank
  int exponent = 0; // power
  std::vector<ExprNode> kids;
};

struct Expr {
  Algebra algebra;
  ExprNode root;
};

Expr parse(std::string_view text, const Algebra& alg);
Element eval(const Expr& e);
/// Canonical text; parse(print(x)) evaluates back to x.
std::string print(const Element& x, Notation notation = Notation::ascii);

/// Convenience: eval(parse(text, alg)).
Element parse_element(std::string_view text, const Algebra& alg);

}  // namespace glq
