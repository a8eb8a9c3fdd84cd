// SPDX-License-Identifier: Apache-2.0

#include "glq/superalgebra.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <sstream>

namespace glq {

namespace {

struct Greek {
  std::string_view ascii, unicode, latex;
};

constexpr std::array<Greek, 6> kGreek{{{"alpha", "α", "\\alpha"},
                                       {"beta", "β", "\\beta"},
                                       {"gamma", "γ", "\\gamma"},
                                       {"delta", "δ", "\\delta"},
                                       {"xi", "ξ", "\\xi"},
                                       {"eta", "η", "\\eta"}}};

std::string generator_text(std::string_view name, Notation notation) {
  if (notation == Notation::ascii) return std::string(name);
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  std::string_view stem = name.substr(0, cut);
  std::string_view tail = name.substr(cut);
  std::string out(stem);
  for (const auto& g : kGreek)
    if (g.ascii == stem) out = notation == Notation::unicode ? g.unicode : g.latex;
  if (tail.empty()) return out;
  if (notation == Notation::latex) return out + "_{" + std::string(tail) + "}";
  return out + std::string(tail);
}

std::string latex_poly(const QPoly& p) {
  std::string s = p.str();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '*') continue;
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '-')) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
      continue;
    }
    out += s[i];
  }
  return out;
}

// Magnitude of a coefficient; the caller handles the sign.
std::string coeff_text(const QRational& c, Notation notation) {
  if (notation == Notation::latex) {
    if (c.is_polynomial()) {
      std::string s = latex_poly(c.numerator());
      return c.numerator().term_count() == 1 ? s : "(" + s + ")";
    }
    return "\\frac{" + latex_poly(c.numerator()) + "}{" + latex_poly(c.denominator()) + "}";
  }
  if (c.is_polynomial()) {
    if (c.numerator().term_count() == 1) return c.numerator().str();
    return "(" + c.numerator().str() + ")";
  }
  return c.str();
}

}  // namespace

std::string format_monomial(const Presentation& p, const Monomial& m, Notation notation) {
  std::string out;
  const std::string_view sep = notation == Notation::ascii     ? "*"
                               : notation == Notation::unicode ? "·"
                                                               : " ";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += sep;
    out += generator_text(p.generator(static_cast<int>(i)).name, notation);
    if (m[i] != 1) {
      if (notation == Notation::latex)
        out += "^{" + std::to_string(m[i]) + "}";
      else
        out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

std::string format_element(const Element& x, Notation notation) {
  if (x.is_zero()) return "0";
  const std::string_view mul = notation == Notation::ascii     ? "*"
                               : notation == Notation::unicode ? "·"
                                                               : " ";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool neg = c.leading_sign() < 0;
    const QRational mag = neg ? -c : c;
    const std::string mono = format_monomial(*x.algebra(), m, notation);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mag.is_one()) {
      os << (mono.empty() ? "1" : mono);
    } else {
      os << coeff_text(mag, notation);
      if (!mono.empty()) os << mul << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << format_element(x); }

}  // namespace glq
