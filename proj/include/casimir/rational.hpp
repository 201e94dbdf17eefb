#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace casimir {

/// Arbitrary-precision rational number, kept in lowest terms with a
/// positive denominator.  All engine arithmetic is exact; there is no
/// floating point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign.
  static Rational parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");
    try {
      mpq_class q(s, 10);
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: malformed literal '" + text + "'");
    }
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(1) / v_);
  }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : base.inverse();
  long n = e > 0 ? e : -e;
  Rational out(1);
  while (n > 0) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

}  // namespace casimir
