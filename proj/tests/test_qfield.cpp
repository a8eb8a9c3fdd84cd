// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glq/qfield.hpp"

#include <functional>
#include <optional>
#include <random>

using namespace glq;

namespace {

const QRational q = QRational::q();

QRational P(const char* text) { return parse_qrational(text); }

/// Random polynomial with small integer and half-integer coefficients.
QPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-4, 4), den(1, 2);
  std::vector<mpq_class> coeffs;
  for (int i = deg(rng); i >= 0; --i) {
    mpq_class v(c(rng), den(rng));
    v.canonicalize();
    coeffs.push_back(v);
  }
  return QPoly(coeffs);
}

QRational random_rational(std::mt19937_64& rng) {
  QPoly den;
  while (den.is_zero()) den = random_poly(rng, 2);
  return QRational(random_poly(rng, 3), den);
}

/// A random expression tree evaluated two ways: symbolically in Q(q) and
/// numerically at a fixed point. nullopt means a division by zero at the point.
struct Tree {
  QRational symbolic;
  std::optional<mpq_class> numeric;
};

Tree random_tree(std::mt19937_64& rng, const mpq_class& v, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  std::uniform_int_distribution<int> small(-5, 5);
  const int k = pick(rng);
  if (k == 0) return {q, v};
  if (k == 1 || k == 2) {
    const int n = small(rng);
    return {QRational(n), mpq_class(n)};
  }
  Tree a = random_tree(rng, v, depth - 1), b = random_tree(rng, v, depth - 1);
  auto both = [&](auto f) -> std::optional<mpq_class> {
    if (!a.numeric || !b.numeric) return std::nullopt;
    return f(*a.numeric, *b.numeric);
  };
  switch (k) {
    case 3: return {a.symbolic + b.symbolic, both([](auto x, auto y) { return mpq_class(x + y); })};
    case 4: return {a.symbolic - b.symbolic, both([](auto x, auto y) { return mpq_class(x - y); })};
    case 5:
    case 6: return {a.symbolic * b.symbolic, both([](auto x, auto y) { return mpq_class(x * y); })};
    default:
      if (b.symbolic.is_zero()) return a;
      return {a.symbolic / b.symbolic, both([](auto x, auto y) -> std::optional<mpq_class> {
                if (y == 0) return std::nullopt;
                return mpq_class(x / y);
              })};
  }
}

}  // namespace

TEST_CASE("add: identities and common denominators") {
  const QRational r = QRational(1) / (1 - q * q);
  CHECK(add(r, QRational(0)) == r);
  CHECK(add(q, q.inv()) == (q * q + 1) / q);
  CHECK(QRational(1) / (1 - q) + QRational(1) / (1 + q) == QRational(2) / (1 - q * q));
  CHECK((QRational(1) / (1 - q) + QRational(1) / (1 + q)).eval_at(mpq_class(3, 2)) ==
        mpq_class(-8, 5));
}

TEST_CASE("mul and inv") {
  CHECK(mul(q - q.inv(), q) == q * q - 1);
  CHECK((1 - q * q) / (1 + q * q) * (1 + q * q) == 1 - q * q);
  CHECK(inv(q) == QRational::q_pow(-1));
  CHECK(inv(1 - q * q) == QRational(1) / (1 - q * q));
  CHECK(inv((q * q + 1) / q) == q / (q * q + 1));
  CHECK_THROWS_AS(QRational(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(q / QRational(0), DivisionByZero);
}

TEST_CASE("canonical form") {
  CHECK(QRational(0).str() == "(0)/(1)");
  CHECK(((q * q - 1) / q).str() == "(q^2 - 1)/(q)");
  // Denominator is made monic; the constant moves to the numerator.
  CHECK((QRational(1) / (2 * q + 2)).str() == "(1/2)/(q + 1)");
  // Common factors cancel.
  CHECK((q * q - 1) / (q - 1) == q + 1);
  CHECK(((q * q - 1) / (q - 1)).is_polynomial());
  CHECK(QRational::q_pow(-3) * QRational::q_pow(3) == 1);
  CHECK(QRational::q_pow(0).is_one());
}

TEST_CASE("qnum") {
  CHECK(qnum(0) == 0);
  CHECK(qnum(1) == 1);
  CHECK(qnum(2) == 1 + q * q);
  CHECK(qnum(2, 2) == 1 + q.pow(4));
  for (long n = 0; n <= 12; ++n) {
    CHECK(qnum(n + 1) == 1 + q * q * qnum(n));
    for (long k = 1; k <= 3; ++k)
      CHECK(qnum(n, k) == (1 - q.pow(2 * k * n)) / (1 - q.pow(2 * k)));
  }
}

TEST_CASE("eval_at") {
  CHECK(eval_at(q * q, mpq_class(3, 2)) == mpq_class(9, 4));
  CHECK(eval_at(qnum(2), mpq_class(2)) == 5);
  CHECK_THROWS_AS(eval_at(QRational(1) / (1 - q * q), mpq_class(1)), PoleError);
  CHECK(eval_at(q.inv(), mpq_class(-4)) == mpq_class(-1, 4));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const QRational x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == 0);
    if (!x.is_zero()) CHECK(x * x.inv() == 1);
  }
}

TEST_CASE("random expression trees agree with exact evaluation") {
  for (const mpq_class& v : {mpq_class(3, 2), mpq_class(2)}) {
    std::mt19937_64 rng(v == 2 ? 11 : 13);
    int compared = 0;
    while (compared < 600) {
      const Tree t = random_tree(rng, v, 5);
      if (!t.numeric) continue;
      CHECK(eval_at(t.symbolic, v) == *t.numeric);
      ++compared;
    }
  }
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const QPoly a = random_poly(rng, 6);
    QPoly b;
    while (b.is_zero()) b = random_poly(rng, 3);
    QPoly quot, rem;
    QPoly::divmod(a, b, quot, rem);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
    const QPoly g = QPoly::gcd(a, b);
    if (!g.is_zero()) {
      CHECK(g.leading() == 1);
      QPoly q1, r1, q2, r2;
      QPoly::divmod(a, g, q1, r1);
      QPoly::divmod(b, g, q2, r2);
      CHECK(r1.is_zero());
      CHECK(r2.is_zero());
    }
  }
  const QPoly x = QPoly::monomial(1, 1);
  const QPoly one(mpq_class(1));
  CHECK(QPoly::gcd((x - one) * (x + one.scaled(2)), (x - one) * (x - one.scaled(3))) == x - one);
  QPoly quot, rem;
  CHECK_THROWS_AS(QPoly::divmod(x, QPoly(), quot, rem), DivisionByZero);
}

TEST_CASE("parsing scalars") {
  CHECK(P("q - q^-1") == q - q.inv());
  CHECK(P("(1-q^2)/(1+q^2)") == (1 - q * q) / (1 + q * q));
  CHECK(P("-3/2*q^2") == mpq_class(-3, 2) * q * q);
  CHECK(P("-(q^3 - q^2 - q + 1)/(q^3)") == -(q - 1) * (q - 1) * (q + 1) / q.pow(3));
  CHECK_THROWS_AS(P("q +"), ScalarParseError);
  CHECK_THROWS_AS(P("x"), ScalarParseError);
  CHECK_THROWS_AS(P("1/(q - q)"), ScalarParseError);
  CHECK(parse_rational("-7/21") == mpq_class(-1, 3));
  CHECK_THROWS(parse_rational("1/0"));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const QRational x = random_rational(rng);
    CHECK(parse_qrational(x.str()) == x);
  }
}
