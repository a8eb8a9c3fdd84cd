// SPDX-License-Identifier: Apache-2.0

// 2x2 supermatrices whose entries live in one presented algebra.
//
// Products are plain row-by-column with every entry product taken left to
// right; all signs come from the entry algebra.

#pragma once

#include "glq/superalgebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glq {

/// gl: even diagonal, odd off-diagonal. dual: odd diagonal, even off-diagonal.
enum class Format { untagged, gl, dual };

class SuperMatrix {
 public:
  SuperMatrix(Element e11, Element e12, Element e21, Element e22,
              Format format = Format::untagged);

  static SuperMatrix identity(const Algebra& alg);

  const Element& e11() const { return e_[0]; }
  const Element& e12() const { return e_[1]; }
  const Element& e21() const { return e_[2]; }
  const Element& e22() const { return e_[3]; }
  /// Zero-based (row, column) access.
  const Element& operator()(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }

  Format format() const { return format_; }
  const Algebra& algebra() const { return e_[0].algebra(); }

  /// Entrywise equality; the format tag is not compared.
  friend bool operator==(const SuperMatrix& x, const SuperMatrix& y);
  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);

 private:
  std::vector<Element> e_;
  Format format_;
};

SuperMatrix matmul(const SuperMatrix& lhs, const SuperMatrix& rhs);
/// lhs^n for n >= 1 by repeated right multiplication.
SuperMatrix power(const SuperMatrix& m, int n);

/// [[alpha, b], [c, delta]] with generator names carrying the given suffix.
SuperMatrix dual_matrix(const Algebra& alg, std::string_view suffix = "");
/// [[a, beta], [gamma, d]].
SuperMatrix gl_matrix(const Algebra& alg, std::string_view suffix = "");

/// Predicted dual^(2n-1):
///   A = ([n] alpha + q [n-1] delta) (bc)^(n-1)
///   B = (bc + q [n-1]_{q^2} alpha delta) (bc)^(n-2) b
///   C = (cb + q [n-1]_{q^2} delta alpha) (cb)^(n-2) c
///   D = ([n] delta + q [n-1] alpha) (cb)^(n-1)
/// (bc)^-1 at n = 1 comes from invert_quasi_unit, so the algebra needs its
/// inverse-letter rules.
SuperMatrix closed_form_odd(const Algebra& dual, int n);

/// Predicted dual^(2n), with k = q (1 - q^2)/(1 + q^2) [n][n-1]:
///   A = (bc + k alpha delta) (bc)^(n-1)
///   B = [n] (alpha + q delta) b (cb)^(n-1)
///   C = [n] (delta + q alpha) c (bc)^(n-1)
///   D = (bc + k delta alpha) (cb)^(n-1)
SuperMatrix closed_form_even(const Algebra& dual, int n);

/// closed_form_even with D = (cb + k delta alpha) (cb)^(n-1). This is the
/// form that agrees with the direct power; the leading bc of D above does not
/// (at n = 1 it drops the (q - q^-1) alpha delta term of cb).
SuperMatrix closed_form_even_amended(const Algebra& dual, int n);

/// b c - q delta alpha, read off a dual-format matrix.
Element delta1(const SuperMatrix& m);
/// c b - q alpha delta.
Element delta2(const SuperMatrix& m);

/// [[-q D1^-1 delta, D1^-1 b], [D2^-1 c, -q D2^-1 alpha]]
SuperMatrix left_inverse(const SuperMatrix& m);

/// The factorization of the inverse into
/// [[-c^-1 delta c^-1, b^-1], [c^-1, -b^-1 alpha b^-1]] * diag(c^2 D2^-1, b^2 D1^-1).
struct FactoredInverse {
  SuperMatrix left;
  SuperMatrix diagonal;
};
FactoredInverse factored_inverse(const SuperMatrix& m);

/// m = [[alpha, b - alpha c^-1 delta], [c, 0]] * [[1, c^-1 delta], [0, 1]].
struct Decomposition {
  SuperMatrix lower;
  SuperMatrix upper;
};
Decomposition decompose(const SuperMatrix& m);
/// Inverts both factors of decompose(m) and multiplies them in reverse order.
SuperMatrix inverse_via_decomposition(const SuperMatrix& m);

/// Dual superdeterminant b^2 D1^-1.
Element sdet(const SuperMatrix& m);
/// The companion central element c^2 D2^-1.
Element sdet_companion(const SuperMatrix& m);

// ------------------------------------------------------------ relation checks

struct RelationCheck {
  std::string name;
  Element residual;
  bool holds() const { return residual.is_zero(); }
};

enum class BracketOrdering { da, ad };
std::string_view to_string(BracketOrdering o);

/// Failures are data: a check never throws for an identity that does not hold.
struct CheckOutcome {
  bool pass = false;
  std::vector<RelationCheck> relations;
  /// Which product ordering makes the dual-pattern bracket relation hold.
  std::optional<BracketOrdering> ordering;

  /// First relation that does not hold, if any.
  const RelationCheck* first_failure() const;
};

/// AB = p^-1 BA, AC = p^-1 CA, DB = p^-1 BD, DC = p^-1 CD, AD + DA = 0,
/// A^2 = D^2 = 0, and BC - CB = (p - p^-1) DA, also tried as (p - p^-1) AD.
/// The bracket passes under either ordering; `ordering` records which.
CheckOutcome check_dual_pattern(const SuperMatrix& m, const QRational& p);

/// AB = p BA, AC = p CA, DB = p BD, DC = p CD, BC + CB = 0, B^2 = C^2 = 0,
/// AD - DA = (p - p^-1) CB.
CheckOutcome check_gl_pattern(const SuperMatrix& m, const QRational& p);

/// Target relations for a transformed coordinate pair (u, v).
///   plane:      u v = p v u, v^2 = 0      (u even, v odd)
///   dual_plane: u^2 = 0, v u = p u v      (u odd, v even)
enum class PlaneKind { plane, dual_plane };

/// Forms (u', v') = m (u, v) and checks the target relations.
CheckOutcome transform_plane(const SuperMatrix& m, const Element& u, const Element& v,
                             PlaneKind target, const QRational& p);

}  // namespace glq
