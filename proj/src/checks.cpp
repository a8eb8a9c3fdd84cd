// SPDX-License-Identifier: Apache-2.0

#include "glq/checks.hpp"

#include "glq/supermatrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

namespace glq {

namespace {

using Relations = std::vector<RelationCheck>;

struct Ctx {
  const SuiteOptions& opt;
  CheckReport& report;
};

Element g(const Algebra& alg, std::string_view name, int exp = 1) {
  return Element::generator(alg, name, exp);
}

Element word(const Algebra& alg, std::initializer_list<std::pair<std::string_view, int>> letters) {
  return normal_form(alg, make_word(alg, letters));
}

std::string residual_text(const RelationCheck& r) {
  return r.name + ": residual " + format_element(r.residual);
}

std::string prefixed(int n, const std::string& text) {
  return "n=" + std::to_string(n) + ": " + text;
}

/// Marks the report failed on the first relation that does not hold.
bool require_all(CheckReport& report, const Relations& rels, const std::string& prefix = "") {
  for (const auto& r : rels)
    if (!r.holds()) {
      report.status = Status::fail;
      report.witness = prefix + residual_text(r);
      return false;
    }
  return true;
}

void fail(CheckReport& report, std::string witness) {
  report.status = Status::fail;
  report.witness = std::move(witness);
}

std::string range(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

const char* entry_name(int i) {
  static const char* names[] = {"A", "B", "C", "D"};
  return names[i];
}

/// Index of the first differing entry, or -1.
int first_mismatch(const SuperMatrix& x, const SuperMatrix& y) {
  for (int i = 0; i < 4; ++i)
    if (!(x(i / 2, i % 2) == y(i / 2, i % 2))) return i;
  return -1;
}

std::string entry_residual(const SuperMatrix& x, const SuperMatrix& y, int i) {
  return std::string(entry_name(i)) + ": power - formula = " +
         format_element(x(i / 2, i % 2) - y(i / 2, i % 2));
}

std::vector<SuperMatrix> powers(const SuperMatrix& m, int count) {
  std::vector<SuperMatrix> out{m};
  for (int k = 1; k < count; ++k) out.push_back(out.back() * m);
  return out;
}

std::string word_text(const Presentation& p, const Word& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += '*';
    s += p.generator(l.gen).name;
    if (l.exp != 1) s += '^' + std::to_string(l.exp);
  }
  return s.empty() ? "1" : s;
}

// ------------------------------------------------------------------ checks

void c01(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const Element alpha = g(alg, "alpha"), delta = g(alg, "delta"), b = g(alg, "b"), cc = g(alg, "c");
  const QRational q = QRational::q(), qi = q.inv();
  require_all(c.report, {
                            {"alpha*b = q^-1*b*alpha", alpha * b - qi * (b * alpha)},
                            {"alpha*c = q^-1*c*alpha", alpha * cc - qi * (cc * alpha)},
                            {"delta*b = q^-1*b*delta", delta * b - qi * (b * delta)},
                            {"delta*c = q^-1*c*delta", delta * cc - qi * (cc * delta)},
                            {"alpha*delta + delta*alpha = 0", alpha * delta + delta * alpha},
                            {"alpha^2 = 0", alpha * alpha},
                            {"delta^2 = 0", delta * delta},
                            {"b*c - c*b = (q - q^-1)*delta*alpha",
                             b * cc - cc * b - (q - qi) * (delta * alpha)},
                        });
}

void c02(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const Element alpha = g(alg, "alpha"), delta = g(alg, "delta");
  const Element b = g(alg, "b"), cc = g(alg, "c"), bi = g(alg, "b", -1), ci = g(alg, "c", -1);
  const QRational q = QRational::q();
  for (const auto& r : alg->rules())
    if ((r.left.exp < 0 || r.right.exp < 0) && !r.derived) {
      fail(c.report, "inverse-letter rule " + alg->generator(r.left.gen).name + "^" +
                         std::to_string(r.left.exp) + " " + alg->generator(r.right.gen).name +
                         "^" + std::to_string(r.right.exp) + " is stored, not derived");
      return;
    }
  if (!require_all(c.report, {
                                 {"b*b^-1 = 1", b * bi - Element::one(alg)},
                                 {"c^-1*c = 1", ci * cc - Element::one(alg)},
                                 {"alpha*b^-1 = q*b^-1*alpha", alpha * bi - q * (bi * alpha)},
                                 {"alpha*c^-1 = q*c^-1*alpha", alpha * ci - q * (ci * alpha)},
                                 {"delta*b^-1 = q*b^-1*delta", delta * bi - q * (bi * delta)},
                                 {"delta*c^-1 = q*c^-1*delta", delta * ci - q * (ci * delta)},
                             }))
    return;
  const Element lhs = b * ci - ci * b;
  const RelationCheck stated{"b*c^-1 - c^-1*b = (q - q^-1)*alpha*c^-1*delta*c^-1",
                             lhs - (q - q.inv()) * (alpha * ci * delta * ci)};
  const RelationCheck derived{"b*c^-1 - c^-1*b = (q - q^-1)*c^-1*alpha*delta*c^-1",
                              lhs - (q - q.inv()) * (ci * alpha * delta * ci)};
  if (stated.holds()) return;
  if (!derived.holds()) {
    fail(c.report, residual_text(stated) + "; " + residual_text(derived));
    return;
  }
  c.report.status = Status::anomaly;
  c.report.description =
      "the stated form of the b*c^-1 - c^-1*b identity does not hold; multiplying "
      "b*c - c*b = (q - q^-1)*delta*alpha by c^-1 on both sides gives "
      "(q - q^-1)*c^-1*alpha*delta*c^-1, which holds exactly";
  c.report.witness = residual_text(stated);
}

void c03(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const SuperMatrix m = dual_matrix(alg);
  const Element d1 = delta1(m), d2 = delta2(m);
  const Element &alpha = m.e11(), &b = m.e12(), &cc = m.e21(), &delta = m.e22();
  const QRational q2 = QRational::q_pow(2);
  require_all(c.report, {
                            {"D1*b = b*D1", d1 * b - b * d1},
                            {"D2*c = c*D2", d2 * cc - cc * d2},
                            {"D1*alpha = q^2*alpha*D1", d1 * alpha - q2 * (alpha * d1)},
                            {"D2*alpha = q^2*alpha*D2", d2 * alpha - q2 * (alpha * d2)},
                            {"D1*delta = q^2*delta*D1", d1 * delta - q2 * (delta * d1)},
                            {"D2*delta = q^2*delta*D2", d2 * delta - q2 * (delta * d2)},
                        });
}

void c04(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const SuperMatrix m = dual_matrix(alg);
  const Element s1 = word(alg, {{"b", 1}, {"c", -1}}) -
                     word(alg, {{"alpha", 1}, {"c", -1}, {"delta", 1}, {"c", -1}});
  const Element s2 = word(alg, {{"c", 1}, {"b", -1}}) -
                     word(alg, {{"delta", 1}, {"b", -1}, {"alpha", 1}, {"b", -1}});
  require_all(c.report, {
                            {"b^2*D1^-1 = b*c^-1 - alpha*c^-1*delta*c^-1", sdet(m) - s1},
                            {"c^2*D2^-1 = c*b^-1 - delta*b^-1*alpha*b^-1", sdet_companion(m) - s2},
                        });
}

void c05(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const SuperMatrix m = dual_matrix(alg);
  Relations rels;
  for (const auto& [label, x] : {std::pair{"b^2*D1^-1", sdet(m)}, {"c^2*D2^-1", sdet_companion(m)}})
    for (const auto& gen : alg->generators()) {
      const Element y = g(alg, gen.name);
      rels.push_back({std::string(label) + " commutes with " + gen.name, x * y - y * x});
    }
  require_all(c.report, rels);
}

Relations matrix_equal(const std::string& label, const SuperMatrix& x, const SuperMatrix& y) {
  Relations rels;
  for (int i = 0; i < 4; ++i)
    rels.push_back({label + " entry " + std::to_string(i / 2 + 1) + std::to_string(i % 2 + 1),
                    x(i / 2, i % 2) - y(i / 2, i % 2)});
  return rels;
}

void c06(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const SuperMatrix m = dual_matrix(alg);
  const SuperMatrix l = left_inverse(m), id = SuperMatrix::identity(alg);
  const FactoredInverse f = factored_inverse(m);
  Relations rels = matrix_equal("L*M = 1", l * m, id);
  for (auto& r : matrix_equal("M*L = 1", m * l, id)) rels.push_back(std::move(r));
  for (auto& r : matrix_equal("L = factored form", l, f.left * f.diagonal)) rels.push_back(std::move(r));
  require_all(c.report, rels);
}

void c07(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const SuperMatrix m = dual_matrix(alg);
  const Decomposition d = decompose(m);
  Relations rels = matrix_equal("lower*upper = M", d.lower * d.upper, m);
  for (auto& r : matrix_equal("inverse via factors = L", inverse_via_decomposition(m), left_inverse(m)))
    rels.push_back(std::move(r));
  require_all(c.report, rels);
}

void c08(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const auto pw = powers(dual_matrix(alg), 2 * c.opt.max_n - 1);
  for (int n = 1; n <= c.opt.max_n; ++n) {
    const SuperMatrix& direct = pw[static_cast<std::size_t>(2 * n - 2)];
    const SuperMatrix formula = closed_form_odd(alg, n);
    if (int i = first_mismatch(direct, formula); i >= 0) {
      fail(c.report, prefixed(n, entry_residual(direct, formula, i)));
      return;
    }
  }
}

void c09(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const auto pw = powers(dual_matrix(alg), 2 * c.opt.max_n);
  std::optional<std::string> first_d;
  std::vector<int> d_ns;
  for (int n = 1; n <= c.opt.max_n; ++n) {
    const SuperMatrix& direct = pw[static_cast<std::size_t>(2 * n - 1)];
    const SuperMatrix formula = closed_form_even(alg, n);
    for (int i = 0; i < 4; ++i) {
      if (direct(i / 2, i % 2) == formula(i / 2, i % 2)) continue;
      if (i != 3) {
        fail(c.report, prefixed(n, entry_residual(direct, formula, i)));
        return;
      }
      if (!first_d) first_d = prefixed(n, entry_residual(direct, formula, i));
      d_ns.push_back(n);
    }
  }
  if (!first_d) return;
  for (int n = 1; n <= c.opt.max_n; ++n) {
    const SuperMatrix& direct = pw[static_cast<std::size_t>(2 * n - 1)];
    if (!(direct.e22() == closed_form_even_amended(alg, n).e22())) {
      fail(c.report, *first_d);
      return;
    }
  }
  c.report.status = Status::anomaly;
  c.report.description =
      "A, B and C match the direct power; the stated D = (b*c + k*delta*alpha)*(c*b)^(n-1) "
      "differs for n = " + range(d_ns.front(), d_ns.back()) +
      ", while D = (c*b + k*delta*alpha)*(c*b)^(n-1) matches for every n";
  c.report.witness = *first_d;
}

void c10(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const auto pw = powers(dual_matrix(alg), 2 * c.opt.max_n - 1);
  for (int n = 1; n <= c.opt.max_n; ++n) {
    const CheckOutcome out =
        check_dual_pattern(pw[static_cast<std::size_t>(2 * n - 2)], QRational::q_pow(2 * n - 1));
    if (!out.pass) {
      fail(c.report, prefixed(n, residual_text(*out.first_failure())));
      return;
    }
  }
}

void c11(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const auto pw = powers(dual_matrix(alg), 2 * c.opt.max_n);
  for (int n = 1; n <= c.opt.max_n; ++n) {
    const CheckOutcome out =
        check_gl_pattern(pw[static_cast<std::size_t>(2 * n - 1)], QRational::q_pow(2 * n));
    if (!out.pass) {
      fail(c.report, prefixed(n, residual_text(*out.first_failure())));
      return;
    }
  }
}

void c12(Ctx c) {
  const Algebra alg = builtin_algebra("dualxdual");
  const SuperMatrix product = dual_matrix(alg) * dual_matrix(alg, "2");
  const QRational q = QRational::q();
  const CheckOutcome gl = check_gl_pattern(product, q);
  if (!gl.pass) {
    fail(c.report, "gl pattern: " + residual_text(*gl.first_failure()));
    return;
  }
  const CheckOutcome dual = check_dual_pattern(product, q);
  if (dual.pass) fail(c.report, "the product also satisfies the dual pattern at q");
}

void c13(Ctx c) {
  const Algebra alg = builtin_algebra("gl");
  const auto pw = powers(gl_matrix(alg), 4);
  for (int n = 2; n <= 4; ++n) {
    const CheckOutcome out =
        check_gl_pattern(pw[static_cast<std::size_t>(n - 1)], QRational::q_pow(n));
    if (!out.pass) {
      fail(c.report, prefixed(n, residual_text(*out.first_failure())));
      return;
    }
  }
}

struct Covariance {
  std::string label;
  std::string algebra;
  bool dual_matrix_entries;
  std::string u, v;
  PlaneKind target;
};

void covariance(Ctx c, const std::vector<Covariance>& cases) {
  std::vector<std::string> failures;
  for (const auto& k : cases) {
    const Algebra alg = builtin_algebra(k.algebra);
    const SuperMatrix m = k.dual_matrix_entries ? dual_matrix(alg) : gl_matrix(alg);
    const CheckOutcome out = transform_plane(m, g(alg, k.u), g(alg, k.v), k.target, QRational::q());
    if (!out.pass) failures.push_back(k.label + ": " + residual_text(*out.first_failure()));
  }
  if (failures.empty()) return;
  c.report.status = Status::anomaly;
  c.report.description = std::to_string(failures.size()) + " of " + std::to_string(cases.size()) +
                         " transformed pairs violate the target relations";
  std::string w;
  for (const auto& f : failures) w += (w.empty() ? "" : "; ") + f;
  c.report.witness = w;
}

void c14(Ctx c) {
  covariance(c, {{"M(x, xi)", "glxplane", false, "x", "xi", PlaneKind::plane},
                 {"M(eta, y)", "glxdualplane", false, "eta", "y", PlaneKind::dual_plane}});
}

void c15(Ctx c) {
  covariance(c, {{"M^(x, xi)", "dualxplane", true, "x", "xi", PlaneKind::dual_plane},
                 {"M^(eta, y)", "dualxdualplane", true, "eta", "y", PlaneKind::plane}});
}

void c16(Ctx c) {
  const auto algs = fuzz_algebras();
  std::mt19937_64 rng(c.opt.seed);
  for (int i = 0; i < c.opt.fuzz_words; ++i) {
    const Algebra& alg = algs[static_cast<std::size_t>(i) % algs.size()];
    const Word w = random_word(*alg, rng);
    const Element nf = normal_form(alg, w);
    for (int s = 0; s < c.opt.fuzz_seeds; ++s) {
      const std::uint64_t seed = c.opt.seed * 1000003u + static_cast<std::uint64_t>(i) * 131u +
                                 static_cast<std::uint64_t>(s);
      const Element bf = brute_force_nf(alg, w, seed);
      if (!(bf == nf)) {
        fail(c.report, alg->name() + " word " + word_text(*alg, w) + ": normal_form " +
                           format_element(nf) + ", brute force (seed " + std::to_string(seed) +
                           ") " + format_element(bf));
        return;
      }
    }
  }
}

void c17(Ctx c) {
  const Algebra alg = builtin_algebra("dual");
  const auto pw = powers(dual_matrix(alg), 2 * c.opt.max_n - 1);
  std::vector<int> da, ad;
  std::optional<std::string> witness;
  for (int n = 1; n <= c.opt.max_n; ++n) {
    const SuperMatrix& m = pw[static_cast<std::size_t>(2 * n - 2)];
    const Element &A = m.e11(), &B = m.e12(), &C = m.e21(), &D = m.e22();
    const QRational p = QRational::q_pow(2 * n - 1);
    const Element commutator = B * C - C * B;
    const RelationCheck with_ad{"BC - CB = (p - p^-1) AD", commutator - (p - p.inv()) * (A * D)};
    const RelationCheck with_da{"BC - CB = (p - p^-1) DA", commutator - (p - p.inv()) * (D * A)};
    if (with_da.holds()) da.push_back(n);
    if (with_ad.holds()) ad.push_back(n);
    if (!witness && !with_ad.holds()) witness = prefixed(n, residual_text(with_ad));
    if (!witness && !with_da.holds()) witness = prefixed(n, residual_text(with_da));
  }
  const auto all = [&](const std::vector<int>& v) { return static_cast<int>(v.size()) == c.opt.max_n; };
  const std::string ns = "n = " + range(1, c.opt.max_n);
  if (all(da) && ad.empty()) {
    c.report.status = Status::anomaly;
    c.report.description = "bracket holds with the DA ordering for " + ns +
                           " and fails with the stated AD ordering for every n";
  } else if (all(ad) && da.empty()) {
    c.report.status = Status::anomaly;
    c.report.description = "bracket holds with the stated AD ordering for " + ns +
                           " and fails with DA for every n";
  } else {
    c.report.status = Status::fail;
    c.report.description = "no single ordering makes the bracket hold for " + ns;
  }
  c.report.witness = witness.value_or("both orderings hold");
}

struct Registered {
  const char* id;
  const char* title;
  const char* formula;
  void (*run)(Ctx);
  /// Which parameters the check reports.
  enum { none, max_n, fixed_n, fuzz } params;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = {
      {"C01", "dual-relations-axioms",
       "alpha*b = q^-1*b*alpha, alpha*c = q^-1*c*alpha, delta*b = q^-1*b*delta, "
       "delta*c = q^-1*c*delta, alpha*delta + delta*alpha = 0, alpha^2 = 0 = delta^2, "
       "b*c - c*b = (q - q^-1)*delta*alpha",
       c01, Registered::none},
      {"C02", "inverse-relations",
       "alpha*b^-1 = q*b^-1*alpha, alpha*c^-1 = q*c^-1*alpha, delta*b^-1 = q*b^-1*delta, "
       "delta*c^-1 = q*c^-1*delta, b*c^-1 - c^-1*b = (q - q^-1)*alpha*c^-1*delta*c^-1",
       c02, Registered::none},
      {"C03", "delta-commutation",
       "D1*b = b*D1, D2*c = c*D2, Dk*alpha = q^2*alpha*Dk, Dk*delta = q^2*delta*Dk "
       "with D1 = b*c - q*delta*alpha, D2 = c*b - q*alpha*delta",
       c03, Registered::none},
      {"C04", "delta-sdet-forms",
       "b^2*D1^-1 = b*c^-1 - alpha*c^-1*delta*c^-1, c^2*D2^-1 = c*b^-1 - delta*b^-1*alpha*b^-1",
       c04, Registered::none},
      {"C05", "sdet-central", "b^2*D1^-1 and c^2*D2^-1 commute with alpha, b, c, delta", c05,
       Registered::none},
      {"C06", "left-inverse-two-sided",
       "L = [[-q*D1^-1*delta, D1^-1*b], [D2^-1*c, -q*D2^-1*alpha]] satisfies L*M = M*L = 1 and "
       "L = [[-c^-1*delta*c^-1, b^-1], [c^-1, -b^-1*alpha*b^-1]]*diag(c^2*D2^-1, b^2*D1^-1)",
       c06, Registered::none},
      {"C07", "decomposition",
       "M = [[alpha, b - alpha*c^-1*delta], [c, 0]]*[[1, c^-1*delta], [0, 1]]; inverting the "
       "factors gives L",
       c07, Registered::none},
      {"C08", "odd-power-closed-form",
       "M^(2n-1) = [[([n]*alpha + q*[n-1]*delta)*(b*c)^(n-1), "
       "(b*c + q*[n-1]_{q^2}*alpha*delta)*(b*c)^(n-2)*b], "
       "[(c*b + q*[n-1]_{q^2}*delta*alpha)*(c*b)^(n-2)*c, ([n]*delta + q*[n-1]*alpha)*(c*b)^(n-1)]]",
       c08, Registered::max_n},
      {"C09", "even-power-closed-form",
       "M^(2n) = [[(b*c + k*alpha*delta)*(b*c)^(n-1), [n]*(alpha + q*delta)*b*(c*b)^(n-1)], "
       "[[n]*(delta + q*alpha)*c*(b*c)^(n-1), (b*c + k*delta*alpha)*(c*b)^(n-1)]] "
       "with k = q*(1 - q^2)/(1 + q^2)*[n]*[n-1]",
       c09, Registered::max_n},
      {"C10", "odd-power-relations", "M^(2n-1) satisfies the dual pattern with parameter q^(2n-1)",
       c10, Registered::max_n},
      {"C11", "even-power-relations", "M^(2n) satisfies the gl pattern with parameter q^(2n)", c11,
       Registered::max_n},
      {"C12", "product-of-duals",
       "M*M' for commuting copies satisfies the gl pattern at q and not the dual pattern", c12,
       Registered::none},
      {"C13", "gl-power-parameter", "N^n satisfies the gl pattern with parameter q^n for n = 2..4",
       c13, Registered::fixed_n},
      {"C14", "covariance-gl",
       "N*(x, xi) satisfies x*xi = q*xi*x, xi^2 = 0; N*(eta, y) satisfies eta^2 = 0, y*eta = q*eta*y",
       c14, Registered::none},
      {"C15", "covariance-dual",
       "M*(x, xi) satisfies eta^2 = 0, y*eta = q*eta*y; M*(eta, y) satisfies x*xi = q*xi*x, xi^2 = 0",
       c15, Registered::none},
      {"C16", "confluence-fuzz", "normal_form(w) = brute_force_nf(w, s) on random words", c16,
       Registered::fuzz},
      {"C17", "sign-audit",
       "for M^(2n-1): B*C - C*B = (p - p^-1)*A*D with p = q^(2n-1), audited against D*A", c17,
       Registered::max_n},
  };
  return r;
}

CheckReport run_one(const Registered& r, const SuiteOptions& opt) {
  CheckReport report;
  report.check_id = r.id;
  report.title = r.title;
  report.paper_ref = r.formula;
  switch (r.params) {
    case Registered::max_n: report.params = {{"n", range(1, opt.max_n)}}; break;
    case Registered::fixed_n: report.params = {{"n", "2..4"}}; break;
    case Registered::fuzz:
      report.params = {{"seed", std::to_string(opt.seed)},
                       {"words", std::to_string(opt.fuzz_words)},
                       {"seeds", std::to_string(opt.fuzz_seeds)}};
      break;
    case Registered::none: break;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    r.run(Ctx{opt, report});
  } catch (const std::exception& e) {
    report.status = Status::fail;
    report.witness = std::string("exception: ") + e.what();
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string status_text(const CheckReport& r) {
  if (r.status == Status::anomaly) return "anomaly(" + r.description + ")";
  return std::string(to_string(r.status));
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::anomaly: return "anomaly";
  }
  return "?";
}

std::vector<std::string> registered_check_ids() {
  std::vector<std::string> ids;
  for (const auto& r : registry()) ids.push_back(r.id);
  return ids;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
  if (options.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  const auto& reg = registry();
  for (const auto& id : options.only)
    if (std::none_of(reg.begin(), reg.end(), [&](const Registered& r) { return id == r.id; }))
      throw std::invalid_argument("unknown check id '" + id + "'");
  std::vector<const Registered*> selected;
  for (const auto& r : reg)
    if (options.only.empty() ||
        std::find(options.only.begin(), options.only.end(), r.id) != options.only.end())
      selected.push_back(&r);

  std::vector<CheckReport> reports;
  if (options.parallel) {
    std::vector<std::future<CheckReport>> futures;
    for (const auto* r : selected)
      futures.push_back(std::async(std::launch::async, run_one, std::cref(*r), std::cref(options)));
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (const auto* r : selected) reports.push_back(run_one(*r, options));
  }
  return reports;
}

std::string format_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.check_id << ' ' << r.title << ": " << to_string(r.status) << '\n';
    os << "  identity: " << r.paper_ref << '\n';
    for (const auto& [k, v] : r.params) os << "  " << k << ": " << v << '\n';
    if (!r.description.empty()) os << "  finding: " << r.description << '\n';
    if (r.witness) os << "  witness: " << *r.witness << '\n';
  }
  int pass = 0, fail = 0, anomaly = 0;
  for (const auto& r : reports)
    (r.status == Status::pass ? pass : r.status == Status::fail ? fail : anomaly)++;
  os << reports.size() << " checks: " << pass << " pass, " << fail << " fail, " << anomaly
     << " anomaly\n";
  return os.str();
}

std::string format_machine(const std::vector<CheckReport>& reports, bool with_timing) {
  std::string out;
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["paper_ref"] = r.paper_ref;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["status"] = status_text(r);
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json();
    if (with_timing)
      j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    else
      j["elapsed_ms"] = nullptr;
    out += j.dump() + '\n';
  }
  return out;
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.status == Status::fail; });
}

Word random_word(const Presentation& p, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(p.size()) - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  const bool inverses = p.has_inverse_rules();
  Word w;
  for (int n = len(rng); n > 0;) {
    const int r = gen(rng);
    const auto& spec = p.generator(r);
    const int pick = coin(rng);
    int e = 1;
    if (spec.parity == Parity::even) {
      if (spec.invertible && inverses)
        e = pick < 2 ? pick - 2 : pick - 1;  // -2, -1, 1, 2
      else
        e = pick % 2 + 1;
    }
    if (std::abs(e) > n) e = e > 0 ? n : -n;
    n -= std::abs(e);
    w.push_back({r, e});
  }
  return w;
}

std::vector<Algebra> fuzz_algebras() {
  std::vector<Algebra> out;
  for (const auto& name : builtin_algebra_names()) out.push_back(builtin_algebra(name));
  return out;
}

}  // namespace glq
