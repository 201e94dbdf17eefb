#pragma once

#include <map>
#include <string>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

/// Laurent polynomial over the rationals: finitely many terms c * t^k
/// with integer exponents of either sign.  Zero coefficients are never
/// stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, Rational(1)); }
  static LaurentPoly monomial(long exponent, const Rational& coeff);

  /// Canonical text form: terms "c*t^k" joined by "+", exponents
  /// descending, coefficients "p/q" (or "p" when integral).  The zero
  /// polynomial prints as "0".
  std::string str() const;
  /// Accepts the canonical form plus common shorthands: "t", "t^-2",
  /// "3*t", "1/2", "2-t".
  static LaurentPoly parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Rational>& terms() const { return terms_; }
  Rational coeff(long exponent) const;

  /// Exact evaluation at a point.  Evaluating a negative power at zero
  /// is an error.
  Rational evaluate(const Rational& a) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void set(long exponent, const Rational& coeff);
  std::map<long, Rational> terms_;  // exponent -> nonzero coefficient
};

/// Nonzero, pairwise distinct rational evaluation points; both
/// invariants are enforced at construction.
class EvaluationPoints {
 public:
  explicit EvaluationPoints(std::vector<Rational> points);
  std::size_t size() const { return pts_.size(); }
  const Rational& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Rational>& values() const { return pts_; }

 private:
  std::vector<Rational> pts_;
};

/// Lagrange interpolation idempotents P_1..P_n for a point set:
/// P_i(a_j) = delta_ij and sum P_i = 1.
struct IdempotentBasis {
  EvaluationPoints points;
  std::vector<LaurentPoly> idempotents;
};

IdempotentBasis lagrange_idempotents(const EvaluationPoints& pts);

/// Coordinates of p in the quotient by the ideal of functions vanishing
/// at every point: the tuple (p(a_1), ..., p(a_n)).
std::vector<Rational> reduce_mod_ideal(const LaurentPoly& p, const IdempotentBasis& basis);

}  // namespace casimir
