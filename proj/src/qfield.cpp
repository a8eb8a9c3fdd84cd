// SPDX-License-Identifier: Apache-2.0

#include "glq/qfield.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace glq {

namespace {

const mpq_class& zero_q() {
  static const mpq_class z(0);
  return z;
}

std::string rational_text(const mpq_class& c) {
  // mpq_class::get_str already renders "a" or "a/b" in lowest terms.
  return c.get_str();
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(mpq_class constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPoly QPoly::monomial(mpq_class c, std::size_t k) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(k + 1, mpq_class(0));
  p.coeffs_[k] = std::move(c);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::size_t QPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return k;
  return 0;
}

std::size_t QPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

const mpq_class& QPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_q();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  const QPoly& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const QPoly& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  QPoly r = big;
  for (std::size_t k = 0; k < small.coeffs_.size(); ++k)
    r.coeffs_[k] += small.coeffs_[k];
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(k, mpq_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  quot = QPoly();
  rem = a;
  if (a.degree() < b.degree()) return;
  quot.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                      mpq_class(0));
  const mpq_class lead_inv = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    mpq_class factor = rem.leading() * lead_inv;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      rem.coeffs_[shift + j] -= factor * b.coeffs_[j];
    quot.coeffs_[shift] = std::move(factor);
    rem.trim();
  }
  quot.trim();
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.monic();
  QPoly y = b.monic();
  QPoly quot, rem;
  while (!y.is_zero()) {
    divmod(x, y, quot, rem);
    x = std::move(y);
    y = rem.monic();
  }
  return x;
}

mpq_class QPoly::eval(const mpq_class& v) const {
  mpq_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string QPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rational_text(mag);
      continue;
    }
    if (mag != 1) os << rational_text(mag) << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ------------------------------------------------------------- QRational

QRational::QRational(mpq_class c) : num_(std::move(c)), den_(mpq_class(1)) {}

QRational::QRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

QRational QRational::q_pow(long k) {
  QRational r;
  if (k >= 0) {
    r.num_ = QPoly::monomial(1, static_cast<std::size_t>(k));
  } else {
    r.num_ = QPoly(mpq_class(1));
    r.den_ = QPoly::monomial(1, static_cast<std::size_t>(-k));
  }
  return r;
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(mpq_class(1));
    return;
  }
  if (den_.degree() == 0) {
    num_ = num_.scaled(1 / den_.leading());
    den_ = QPoly(mpq_class(1));
    return;
  }
  QPoly g;
  if (den_.term_count() == 1) {
    // Denominator c*q^k: the common factor is a power of q.
    std::size_t k = std::min(num_.valuation(), den_.valuation());
    g = QPoly::monomial(1, k);
  } else {
    g = QPoly::gcd(num_, den_);
  }
  if (!g.is_one()) {
    QPoly rem;
    QPoly::divmod(QPoly(num_), g, num_, rem);
    QPoly::divmod(QPoly(den_), g, den_, rem);
  }
  const mpq_class lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(1 / lead);
    den_ = den_.scaled(1 / lead);
  }
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational operator+(const QRational& a, const QRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) {
    QRational r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) { return a * b.inv(); }

QRational QRational::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
  return QRational(den_, num_);
}

QRational QRational::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  QRational result(1);
  QRational base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

mpq_class QRational::eval_at(const mpq_class& v) const {
  mpq_class d = den_.eval(v);
  if (d == 0) throw PoleError("pole of " + str() + " at q = " + v.get_str());
  mpq_class r = num_.eval(v) / d;
  r.canonicalize();
  return r;
}

std::string QRational::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QRational& x) { return os << x.str(); }

QRational add(const QRational& a, const QRational& b) { return a + b; }
QRational mul(const QRational& a, const QRational& b) { return a * b; }
QRational inv(const QRational& a) { return a.inv(); }
mpq_class eval_at(const QRational& a, const mpq_class& v) { return a.eval_at(v); }

QRational qnum(long n, long k) {
  if (n < 0 || k < 1) throw std::invalid_argument("qnum requires n >= 0 and k >= 1");
  std::vector<mpq_class> c(n == 0 ? 0 : static_cast<std::size_t>(2 * k * (n - 1) + 1),
                           mpq_class(0));
  for (long i = 0; i < n; ++i) c[static_cast<std::size_t>(2 * k * i)] = 1;
  return QRational(QPoly(std::move(c)), QPoly(mpq_class(1)));
}

// ---------------------------------------------------------- scalar parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  QRational parse_all() {
    QRational v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ScalarParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QRational expr() {
    QRational v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  QRational term() {
    QRational v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) {
        QRational d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  QRational unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  QRational power() {
    QRational b = atom();
    if (eat('^')) {
      long e = integer(true);
      if (e < 0 && b.is_zero()) fail("negative power of zero");
      b = b.pow(e);
    }
    return b;
  }

  long integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  QRational atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QRational v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return QRational::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QRational(mpq_class(std::string(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QRational parse_qrational(std::string_view text) { return ScalarParser(text).parse_all(); }

mpq_class parse_rational(std::string_view text) {
  try {
    mpq_class v(std::string(text), 10);
    if (v.get_den() == 0) throw DivisionByZero("zero denominator in rational literal");
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw ScalarParseError("invalid rational literal '" + std::string(text) + "'", 0);
  }
}

}  // namespace glq
