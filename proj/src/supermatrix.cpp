// SPDX-License-Identifier: Apache-2.0

#include "glq/supermatrix.hpp"

#include <stdexcept>

namespace glq {

namespace {

void check_parity(const Element& e, Parity want, const char* where) {
  if (e.is_zero()) return;
  auto p = e.parity();
  if (p && *p != want)
    throw AlgebraError(std::string("supermatrix entry ") + where + " has parity " +
                       std::string(to_string(*p)) + ", format requires " +
                       std::string(to_string(want)));
}

Element gen(const Algebra& alg, const std::string& name, int exp = 1) {
  return Element::generator(alg, name, exp);
}

}  // namespace

SuperMatrix::SuperMatrix(Element e11, Element e12, Element e21, Element e22, Format format)
    : e_{std::move(e11), std::move(e12), std::move(e21), std::move(e22)}, format_(format) {
  // Adding zero is the cheapest way to run the shared-algebra check.
  for (std::size_t i = 1; i < 4; ++i) (void)(e_[0] + Element::zero(e_[i].algebra()));
  if (format_ != Format::untagged) {
    const Parity diag = format_ == Format::gl ? Parity::even : Parity::odd;
    const Parity off = format_ == Format::gl ? Parity::odd : Parity::even;
    check_parity(e_[0], diag, "11");
    check_parity(e_[1], off, "12");
    check_parity(e_[2], off, "21");
    check_parity(e_[3], diag, "22");
  }
}

SuperMatrix SuperMatrix::identity(const Algebra& alg) {
  return {Element::one(alg), Element::zero(alg), Element::zero(alg), Element::one(alg), Format::gl};
}

bool operator==(const SuperMatrix& x, const SuperMatrix& y) { return x.e_ == y.e_; }

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  return {x.e11() * y.e11() + x.e12() * y.e21(), x.e11() * y.e12() + x.e12() * y.e22(),
          x.e21() * y.e11() + x.e22() * y.e21(), x.e21() * y.e12() + x.e22() * y.e22()};
}

SuperMatrix matmul(const SuperMatrix& lhs, const SuperMatrix& rhs) { return lhs * rhs; }

SuperMatrix power(const SuperMatrix& m, int n) {
  if (n < 1) throw std::invalid_argument("matrix power requires n >= 1");
  SuperMatrix r = m;
  for (int k = 1; k < n; ++k) r = r * m;
  return r;
}

SuperMatrix dual_matrix(const Algebra& alg, std::string_view suffix) {
  const std::string s(suffix);
  return {gen(alg, "alpha" + s), gen(alg, "b" + s), gen(alg, "c" + s), gen(alg, "delta" + s),
          Format::dual};
}

SuperMatrix gl_matrix(const Algebra& alg, std::string_view suffix) {
  const std::string s(suffix);
  return {gen(alg, "a" + s), gen(alg, "beta" + s), gen(alg, "gamma" + s), gen(alg, "d" + s),
          Format::gl};
}

SuperMatrix closed_form_odd(const Algebra& alg, int n) {
  if (n < 1) throw std::invalid_argument("closed_form_odd requires n >= 1");
  const QRational q = QRational::q();
  const Element alpha = gen(alg, "alpha"), delta = gen(alg, "delta");
  const Element b = gen(alg, "b"), c = gen(alg, "c");
  const Element bc = b * c, cb = c * b;
  const QRational qn = qnum(n), qn1 = qnum(n - 1), qn1sq = qnum(n - 1, 2);
  return {(qn * alpha + q * qn1 * delta) * bc.pow(n - 1),
          (bc + q * qn1sq * (alpha * delta)) * bc.pow(n - 2) * b,
          (cb + q * qn1sq * (delta * alpha)) * cb.pow(n - 2) * c,
          (qn * delta + q * qn1 * alpha) * cb.pow(n - 1), Format::dual};
}

namespace {

SuperMatrix even_form(const Algebra& alg, int n, bool amended) {
  if (n < 1) throw std::invalid_argument("closed_form_even requires n >= 1");
  const QRational q = QRational::q();
  const Element alpha = gen(alg, "alpha"), delta = gen(alg, "delta");
  const Element b = gen(alg, "b"), c = gen(alg, "c");
  const Element bc = b * c, cb = c * b;
  const QRational qn = qnum(n);
  const QRational k = q * (1 - q * q) / (1 + q * q) * qn * qnum(n - 1);
  const Element& d_lead = amended ? cb : bc;
  return {(bc + k * (alpha * delta)) * bc.pow(n - 1), qn * ((alpha + q * delta) * b * cb.pow(n - 1)),
          qn * ((delta + q * alpha) * c * bc.pow(n - 1)), (d_lead + k * (delta * alpha)) * cb.pow(n - 1),
          Format::gl};
}

}  // namespace

SuperMatrix closed_form_even(const Algebra& alg, int n) { return even_form(alg, n, false); }

SuperMatrix closed_form_even_amended(const Algebra& alg, int n) { return even_form(alg, n, true); }

Element delta1(const SuperMatrix& m) {
  return m.e12() * m.e21() - QRational::q() * (m.e22() * m.e11());
}

Element delta2(const SuperMatrix& m) {
  return m.e21() * m.e12() - QRational::q() * (m.e11() * m.e22());
}

SuperMatrix left_inverse(const SuperMatrix& m) {
  const QRational q = QRational::q();
  const Element d1i = invert_quasi_unit(delta1(m));
  const Element d2i = invert_quasi_unit(delta2(m));
  return {-q * (d1i * m.e22()), d1i * m.e12(), d2i * m.e21(), -q * (d2i * m.e11()), Format::dual};
}

FactoredInverse factored_inverse(const SuperMatrix& m) {
  const Algebra& alg = m.algebra();
  const Element bi = invert_quasi_unit(m.e12());
  const Element ci = invert_quasi_unit(m.e21());
  const Element zero = Element::zero(alg);
  SuperMatrix left{-(ci * m.e22() * ci), bi, ci, -(bi * m.e11() * bi), Format::dual};
  SuperMatrix diag{sdet_companion(m), zero, zero, sdet(m), Format::gl};
  return {std::move(left), std::move(diag)};
}

Decomposition decompose(const SuperMatrix& m) {
  const Algebra& alg = m.algebra();
  const Element ci = invert_quasi_unit(m.e21());
  const Element zero = Element::zero(alg), one = Element::one(alg);
  return {SuperMatrix{m.e11(), m.e12() - m.e11() * ci * m.e22(), m.e21(), zero},
          SuperMatrix{one, ci * m.e22(), zero, one}};
}

SuperMatrix inverse_via_decomposition(const SuperMatrix& m) {
  const auto [lower, upper] = decompose(m);
  const Algebra& alg = m.algebra();
  const Element zero = Element::zero(alg), one = Element::one(alg);
  // [[1, u], [0, 1]]^-1 = [[1, -u], [0, 1]]
  const SuperMatrix upper_inv{one, -upper.e12(), zero, one};
  // [[x, y], [z, 0]]^-1 = [[0, z^-1], [y^-1, -y^-1 x z^-1]]
  const Element zi = invert_quasi_unit(lower.e21());
  const Element yi = invert_quasi_unit(lower.e12());
  const SuperMatrix lower_inv{zero, zi, yi, -(yi * lower.e11() * zi)};
  return upper_inv * lower_inv;
}

Element sdet(const SuperMatrix& m) { return m.e12() * m.e12() * invert_quasi_unit(delta1(m)); }

Element sdet_companion(const SuperMatrix& m) {
  return m.e21() * m.e21() * invert_quasi_unit(delta2(m));
}

// ------------------------------------------------------------ relation checks

std::string_view to_string(BracketOrdering o) { return o == BracketOrdering::da ? "DA" : "AD"; }

const RelationCheck* CheckOutcome::first_failure() const {
  for (const auto& r : relations)
    if (!r.holds()) return &r;
  return nullptr;
}

CheckOutcome check_dual_pattern(const SuperMatrix& m, const QRational& p) {
  const Element &A = m.e11(), &B = m.e12(), &C = m.e21(), &D = m.e22();
  const QRational pi = p.inv();
  const QRational bracket = p - pi;
  CheckOutcome out;
  out.relations = {
      {"AB = p^-1 BA", A * B - pi * (B * A)},
      {"AC = p^-1 CA", A * C - pi * (C * A)},
      {"DB = p^-1 BD", D * B - pi * (B * D)},
      {"DC = p^-1 CD", D * C - pi * (C * D)},
      {"AD + DA = 0", A * D + D * A},
      {"A^2 = 0", A * A},
      {"D^2 = 0", D * D},
  };
  const Element commutator = B * C - C * B;
  RelationCheck da{"BC - CB = (p - p^-1) DA", commutator - bracket * (D * A)};
  RelationCheck ad{"BC - CB = (p - p^-1) AD", commutator - bracket * (A * D)};
  bool rest = true;
  for (const auto& r : out.relations) rest = rest && r.holds();
  if (da.holds()) {
    out.ordering = BracketOrdering::da;
    out.relations.push_back(std::move(da));
  } else if (ad.holds()) {
    out.ordering = BracketOrdering::ad;
    out.relations.push_back(std::move(ad));
  } else {
    out.relations.push_back(std::move(da));
    out.relations.push_back(std::move(ad));
  }
  out.pass = rest && out.ordering.has_value();
  return out;
}

CheckOutcome check_gl_pattern(const SuperMatrix& m, const QRational& p) {
  const Element &A = m.e11(), &B = m.e12(), &C = m.e21(), &D = m.e22();
  CheckOutcome out;
  out.relations = {
      {"AB = p BA", A * B - p * (B * A)},
      {"AC = p CA", A * C - p * (C * A)},
      {"DB = p BD", D * B - p * (B * D)},
      {"DC = p CD", D * C - p * (C * D)},
      {"BC + CB = 0", B * C + C * B},
      {"B^2 = 0", B * B},
      {"C^2 = 0", C * C},
      {"AD - DA = (p - p^-1) CB", A * D - D * A - (p - p.inv()) * (C * B)},
  };
  out.pass = out.first_failure() == nullptr;
  return out;
}

CheckOutcome transform_plane(const SuperMatrix& m, const Element& u, const Element& v,
                             PlaneKind target, const QRational& p) {
  const Element u2 = m.e11() * u + m.e12() * v;
  const Element v2 = m.e21() * u + m.e22() * v;
  CheckOutcome out;
  if (target == PlaneKind::plane) {
    out.relations = {{"u'v' = p v'u'", u2 * v2 - p * (v2 * u2)}, {"v'^2 = 0", v2 * v2}};
  } else {
    out.relations = {{"u'^2 = 0", u2 * u2}, {"v'u' = p u'v'", v2 * u2 - p * (u2 * v2)}};
  }
  out.pass = out.first_failure() == nullptr;
  return out;
}

}  // namespace glq
