// SPDX-License-Identifier: Apache-2.0

// Exact arithmetic in Q(q): polynomials in q with arbitrary-precision rational
// coefficients, and reduced quotients of them.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glq {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ScalarParseError : public std::invalid_argument {
 public:
  ScalarParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(mpq_class constant);
  explicit QPoly(std::vector<mpq_class> coeffs);

  /// c * q^k
  static QPoly monomial(mpq_class c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Index of the lowest nonzero coefficient (0 for zero).
  std::size_t valuation() const;
  std::size_t term_count() const;

  const mpq_class& coeff(std::size_t k) const;
  const mpq_class& leading() const { return coeffs_.back(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const mpq_class& c) const;
  /// Multiplication by q^k.
  QPoly shifted(std::size_t k) const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static QPoly gcd(const QPoly& a, const QPoly& b);
  QPoly monic() const;

  mpq_class eval(const mpq_class& v) const;

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Terms in decreasing degree, e.g. "q^2 - 3/2*q + 1"; zero renders as "0".
  std::string str(std::string_view var = "q") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// A reduced rational function of q. The denominator is monic and coprime to
/// the numerator, and zero is stored as 0/1, so equal functions have equal
/// representations.
class QRational {
 public:
  QRational() : den_(mpq_class(1)) {}
  QRational(long n) : QRational(mpq_class(n)) {}  // NOLINT: implicit by intent
  QRational(mpq_class c);                          // NOLINT
  QRational(QPoly num, QPoly den);

  static QRational q() { return q_pow(1); }
  /// q^k for any integer k.
  static QRational q_pow(long k);

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value is a polynomial (denominator 1).
  bool is_polynomial() const { return den_.is_one(); }
  /// Sign of the numerator's leading coefficient (0 for zero).
  int leading_sign() const { return is_zero() ? 0 : sgn(num_.leading()); }

  QRational operator-() const;
  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  QRational& operator+=(const QRational& b) { return *this = *this + b; }
  QRational& operator-=(const QRational& b) { return *this = *this - b; }
  QRational& operator*=(const QRational& b) { return *this = *this * b; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  QRational inv() const;
  /// Integer power, negative exponents allowed for nonzero values.
  QRational pow(long k) const;

  /// Exact value at q = v; throws PoleError when the denominator vanishes.
  mpq_class eval_at(const mpq_class& v) const;

  friend bool operator==(const QRational& a, const QRational& b) = default;

  /// Canonical rendering "(<numerator>)/(<denominator>)".
  std::string str() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QRational& x);

QRational add(const QRational& a, const QRational& b);
QRational mul(const QRational& a, const QRational& b);
QRational inv(const QRational& a);
mpq_class eval_at(const QRational& a, const mpq_class& v);

/// The q-number [n]_{q^k} = (1 - q^{2kn}) / (1 - q^{2k}) = sum_{i<n} q^{2ki}.
QRational qnum(long n, long k = 1);

/// Parses a scalar expression in q built from integers, q, + - * / ^ and
/// parentheses, e.g. "(q^2 - 1)/(q)" or "q - q^-1". Accepts every string
/// produced by QRational::str().
QRational parse_qrational(std::string_view text);

/// Parses "a", "-a" or "a/b".
mpq_class parse_rational(std::string_view text);

}  // namespace glq
