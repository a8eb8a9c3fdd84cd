// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glq/checks.hpp"
#include "glq/superalgebra.hpp"
#include "glq/supermatrix.hpp"

#include <random>

using namespace glq;

namespace {

const QRational q = QRational::q();

Element nf(const Algebra& alg, std::initializer_list<std::pair<std::string_view, int>> letters) {
  return normal_form(alg, make_word(alg, letters));
}

Element gen(const Algebra& alg, std::string_view name, int exp = 1) {
  return Element::generator(alg, name, exp);
}

Element random_element(const Algebra& alg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3);
  Element x = Element::zero(alg);
  for (int t = terms(rng); t > 0; --t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    x += normal_form(alg, random_word(*alg, rng, 4), QRational(c) * q.pow(coeff(rng) % 2));
  }
  return x;
}

}  // namespace

TEST_CASE("dual algebra relations") {
  const Algebra d = builtin_algebra("dual");
  const Element alpha = gen(d, "alpha"), delta = gen(d, "delta"), b = gen(d, "b"), c = gen(d, "c");
  CHECK(nf(d, {{"alpha", 1}, {"b", 1}}) == q.inv() * (b * alpha));
  CHECK(nf(d, {{"b", 1}, {"alpha", 1}}) == q * nf(d, {{"alpha", 1}, {"b", 1}}));
  CHECK(format_element(b * alpha) == "q*alpha*b");
  CHECK(nf(d, {{"c", 1}, {"b", 1}}) == b * c - (q - q.inv()) * (delta * alpha));
  CHECK(nf(d, {{"alpha", 2}}).is_zero());
  CHECK(nf(d, {{"delta", 1}, {"alpha", 1}}) == -(alpha * delta));
  CHECK(nf(d, {{"b", 1}, {"b", -1}}) == Element::one(d));
  // c*b*alpha: both c and b pass alpha with a factor q each.
  CHECK(nf(d, {{"c", 1}, {"b", 1}, {"alpha", 1}}) == q * q * nf(d, {{"alpha", 1}, {"b", 1}, {"c", 1}}));
  CHECK((alpha * delta) * (alpha * delta) == Element::zero(d));
  CHECK(Element::one(d) * b == b);
  CHECK((alpha + q * delta) * b == q.inv() * (b * alpha) + b * delta);
}

TEST_CASE("gl algebra and superplanes") {
  const Algebra g = builtin_algebra("gl");
  const Element beta = gen(g, "beta"), gamma = gen(g, "gamma"), a = gen(g, "a"), d = gen(g, "d");
  CHECK(a * beta == q * (beta * a));
  CHECK(d * a == a * d - (q - q.inv()) * (gamma * beta));
  CHECK(beta * gamma == -(gamma * beta));

  const Algebra plane = builtin_algebra("plane");
  const Element x = gen(plane, "x"), xi = gen(plane, "xi");
  CHECK(xi * x == q.inv() * (x * xi));
  CHECK((xi * xi).is_zero());
  CHECK(format_element(x * xi) == "x*xi");

  const Algebra dplane = builtin_algebra("dualplane");
  const Element eta = gen(dplane, "eta"), y = gen(dplane, "y");
  CHECK(y * eta == q * (eta * y));
  CHECK((eta * eta).is_zero());
  CHECK(format_element(eta * y) == "eta*y");
}

TEST_CASE("tensor products") {
  const Algebra t = builtin_algebra("dualxdualplane");
  CHECK(gen(t, "eta") * gen(t, "alpha") == -(gen(t, "alpha") * gen(t, "eta")));
  CHECK(gen(t, "y") * gen(t, "b") == gen(t, "b") * gen(t, "y"));
  CHECK((gen(t, "alpha") * gen(t, "eta")).parity() == Parity::even);
  CHECK_THROWS_AS(tensor(dual_algebra(), dual_algebra()), AlgebraError);
  const Algebra dd = builtin_algebra("dualxdual");
  CHECK(dd->find("alpha2").has_value());
  CHECK(gen(dd, "c2", -1) * gen(dd, "b") == gen(dd, "b") * gen(dd, "c2", -1));
}

TEST_CASE("inverse-letter rules") {
  const Algebra d = builtin_algebra("dual");
  const Element alpha = gen(d, "alpha"), delta = gen(d, "delta");
  const Element b = gen(d, "b"), c = gen(d, "c"), bi = gen(d, "b", -1), ci = gen(d, "c", -1);
  CHECK(alpha * bi == q * (bi * alpha));
  CHECK(delta * ci == q * (ci * delta));
  CHECK(c * ci == Element::one(d));
  for (const auto& r : d->rules())
    if (r.left.exp < 0 || r.right.exp < 0) CHECK(r.derived);
  // Multiplying b*c - c*b = (q - q^-1)*delta*alpha by c^-1 on both sides.
  CHECK(b * ci - ci * b == (q - q.inv()) * (ci * alpha * delta * ci));
  // The same identity with alpha*c^-1*delta*c^-1 on the right does not hold.
  CHECK_FALSE(b * ci - ci * b == (q - q.inv()) * (alpha * ci * delta * ci));
  CHECK_THROWS_AS(normal_form(dual_algebra(), make_word(dual_algebra(), {{"c", 1}, {"b", -1}})),
                  AlgebraError);
}

TEST_CASE("quasi-unit inverses") {
  const Algebra d = builtin_algebra("dual");
  const SuperMatrix m = dual_matrix(d);
  const Element one = Element::one(d);
  for (const Element& x : {gen(d, "b") * gen(d, "c"), delta1(m), delta2(m),
                           gen(d, "b", 2) + q * (gen(d, "alpha") * gen(d, "delta")),
                           Element::scalar(d, q + 1)}) {
    const Element xi = invert_quasi_unit(x);
    CHECK(x * xi == one);
    CHECK(xi * x == one);
  }
  CHECK(invert_quasi_unit(gen(d, "b") * gen(d, "c")) == nf(d, {{"c", -1}, {"b", -1}}));
  CHECK_THROWS_AS(invert_quasi_unit(gen(d, "alpha") * gen(d, "delta")), NotQuasiUnit);
  CHECK_THROWS_AS(invert_quasi_unit(Element::zero(d)), NotQuasiUnit);
  CHECK_THROWS_AS(invert_quasi_unit(gen(d, "b") + gen(d, "c")), NotQuasiUnit);
  const Algebra g = builtin_algebra("gl");
  CHECK_THROWS_AS(invert_quasi_unit(gen(g, "a")), NotQuasiUnit);
  CHECK(gen(d, "b").pow(-2) == gen(d, "b", -2));
}

TEST_CASE("centrality") {
  const Algebra d = builtin_algebra("dual");
  CHECK(is_central(Element::one(d)));
  CHECK_FALSE(is_central(gen(d, "alpha"), {"b"}));
  CHECK(is_central(sdet(dual_matrix(d)), {"alpha", "b", "c", "delta"}));
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(101);
  for (const Algebra& alg : fuzz_algebras()) {
    CAPTURE(alg->name());
    for (int i = 0; i < 300; ++i) {
      const Element x = random_element(alg, rng), y = random_element(alg, rng),
                    z = random_element(alg, rng);
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("normal form agrees with the brute-force reducer") {
  std::mt19937_64 rng(202);
  for (const Algebra& alg : fuzz_algebras()) {
    CAPTURE(alg->name());
    for (int i = 0; i < 500; ++i) {
      const Word w = random_word(*alg, rng);
      const Element expected = normal_form(alg, w);
      for (std::uint64_t s = 0; s < 5; ++s) CHECK(brute_force_nf(alg, w, 1000 * s + 7) == expected);
    }
  }
}

TEST_CASE("normal forms are idempotent and graded") {
  std::mt19937_64 rng(303);
  for (const Algebra& alg : fuzz_algebras()) {
    CAPTURE(alg->name());
    for (int i = 0; i < 200; ++i) {
      const Word u = random_word(*alg, rng, 5), v = random_word(*alg, rng, 5);
      const Element x = normal_form(alg, u);
      for (const auto& [m, c] : x.terms()) {
        const Element again = normal_form(alg, expand(m), c);
        REQUIRE(again.size() == 1);
        CHECK(again.coeff(m) == c);
      }
      const Element y = normal_form(alg, v);
      const Element xy = x * y;
      if (!x.is_zero() && !y.is_zero() && !xy.is_zero()) {
        REQUIRE(x.parity().has_value());
        REQUIRE(y.parity().has_value());
        CHECK(xy.parity() == *x.parity() + *y.parity());
      }
    }
    for (const auto& g : alg->generators())
      if (g.parity == Parity::odd) CHECK((gen(alg, g.name) * gen(alg, g.name)).is_zero());
  }
}

TEST_CASE("presentation validation") {
  auto base = [] {
    PresentationBuilder b("t");
    b.generator("u", Parity::odd).generator("v", Parity::even);
    return b;
  };
  CHECK_THROWS_AS(base().build(), AlgebraError);  // missing v*u
  CHECK_NOTHROW(base().exchange("v", "u", q).build());
  CHECK_THROWS_AS(base().exchange("u", "v", q).build(), AlgebraError);
  CHECK_THROWS_AS(base().exchange("v", "u", QRational(0)).build(), AlgebraError);
  CHECK_THROWS_AS(base().exchange("v", "u", q).exchange("v", "u", q).build(), AlgebraError);
  {
    auto b = base();
    Terms corr{{b.monomial({{"u", 1}}), QRational(1)}};  // odd and of lower degree
    b.exchange("v", "u", q, corr);
    CHECK_NOTHROW(b.build());
  }
  {
    auto b = base();
    Terms corr{{b.monomial({{"v", 1}}), QRational(1)}};  // even term for an odd pair
    b.exchange("v", "u", q, corr);
    CHECK_THROWS_AS(b.build(), AlgebraError);
  }
  {
    auto b = base();
    Terms corr{{b.monomial({{"u", 1}, {"v", 2}}), QRational(1)}};  // larger than v*u
    b.exchange("v", "u", q, corr);
    CHECK_THROWS_AS(b.build(), AlgebraError);
  }
  CHECK_THROWS_AS(Element::generator(builtin_algebra("gl"), "a", -1), AlgebraError);
  CHECK_THROWS_AS(Element::generator(builtin_algebra("gl"), "zeta"), AlgebraError);
  CHECK_THROWS_AS(gen(builtin_algebra("gl"), "a") + gen(builtin_algebra("dual"), "b"), AlgebraError);
  CHECK_THROWS_AS(builtin_algebra("nope"), AlgebraError);
}

TEST_CASE("presentation descriptors round trip") {
  for (const std::string name : {"dual", "gl", "plane", "dualplane", "glxplane"}) {
    CAPTURE(name);
    const Algebra alg = builtin_algebra(name);
    const std::string text = dump_presentation(*alg);
    Algebra back = load_presentation(text);
    CHECK(dump_presentation(*back) == text);
    if (back->has_invertibles()) back = derive_inverse_rules(back);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
      const Word w = random_word(*alg, rng, 5);
      CHECK(format_element(normal_form(back, w)) == format_element(normal_form(alg, w)));
    }
  }
  CHECK_THROWS_AS(load_presentation("{"), AlgebraError);
  CHECK_THROWS_AS(load_presentation(R"({"generators": [{"name": "u", "parity": "weird"}],
                                        "exchange_rules": []})"),
                  AlgebraError);
}

TEST_CASE("rendering") {
  const Algebra d = builtin_algebra("dual");
  const Element x = gen(d, "c") * gen(d, "b");
  CHECK(format_element(x) == "b*c + (q^2 - 1)/(q)*alpha*delta");
  CHECK(format_element(x, Notation::unicode) == "b·c + (q^2 - 1)/(q)·α·δ");
  CHECK(format_element(Element::zero(d)) == "0");
  CHECK(format_element(Element::one(d)) == "1");
  CHECK(format_element(-gen(d, "b", -1)) == "-b^-1");
}
