#include "casimir/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace casimir {

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& coeff) {
  LaurentPoly p;
  p.set(exponent, coeff);
  return p;
}

void LaurentPoly::set(long exponent, const Rational& coeff) {
  if (coeff.is_zero())
    terms_.erase(exponent);
  else
    terms_[exponent] = coeff;
}

Rational LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate(const Rational& a) const {
  Rational out;
  for (const auto& [k, c] : terms_) {
    if (k < 0 && a.is_zero())
      throw std::domain_error("LaurentPoly: negative power evaluated at 0");
    out += c * pow(a, k);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) set(k, coeff(k) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) set(k, coeff(k) - c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [k, c] : terms_) p.terms_[k] = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) p.set(ka + kb, p.coeff(ka + kb) + ca * cb);
  return p;
}

LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
  LaurentPoly out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : p.terms_) out.terms_[k] = s * c;
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << "+";
    os << it->second.str() << "*t^" << it->first;
    first = false;
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
};

Rational parse_number(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
    ++c.i;
  if (c.i == start) throw std::invalid_argument("LaurentPoly: expected number");
  return Rational::parse(c.s.substr(start, c.i - start));
}

long parse_exponent(Cursor& c) {
  c.skip_ws();
  bool neg = false;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) {
    neg = c.s[c.i] == '-';
    ++c.i;
  }
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw std::invalid_argument("LaurentPoly: expected exponent");
  long e = std::stol(c.s.substr(start, c.i - start));
  return neg ? -e : e;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly out;
  Cursor c{text};
  bool any = false;
  while (!c.done()) {
    int sign = 1;
    while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      if (c.peek() == '-') sign = -sign;
      ++c.i;
    }
    if (c.done()) {
      if (any) throw std::invalid_argument("LaurentPoly: dangling sign in '" + text + "'");
      break;
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_number(c);
      have_coeff = true;
    }
    long exponent = 0;
    c.skip_ws();
    if (c.i < c.s.size() && (c.s[c.i] == '*' || c.s[c.i] == 't')) {
      if (c.s[c.i] == '*') {
        ++c.i;
        c.skip_ws();
        if (c.i >= c.s.size() || c.s[c.i] != 't')
          throw std::invalid_argument("LaurentPoly: expected 't' in '" + text + "'");
      }
      ++c.i;  // consume 't'
      exponent = 1;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        exponent = parse_exponent(c);
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("LaurentPoly: malformed term in '" + text + "'");
    }
    out.set(exponent, out.coeff(exponent) + Rational(sign) * coeff);
    any = true;
  }
  if (!any) throw std::invalid_argument("LaurentPoly: empty input");
  return out;
}

EvaluationPoints::EvaluationPoints(std::vector<Rational> points) : pts_(std::move(points)) {
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (pts_[i].is_zero())
      throw std::invalid_argument("EvaluationPoints: point " + std::to_string(i + 1) + " is zero");
    for (std::size_t j = i + 1; j < pts_.size(); ++j)
      if (pts_[i] == pts_[j])
        throw std::invalid_argument("EvaluationPoints: duplicate point " + pts_[i].str());
  }
}

IdempotentBasis lagrange_idempotents(const EvaluationPoints& pts) {
  std::vector<LaurentPoly> idem;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    LaurentPoly p = LaurentPoly::one();
    Rational denom(1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      p = p * (LaurentPoly::monomial(1, Rational(1)) - LaurentPoly::monomial(0, pts[j]));
      denom *= pts[i] - pts[j];
    }
    idem.push_back(denom.inverse() * p);
  }
  return IdempotentBasis{pts, std::move(idem)};
}

std::vector<Rational> reduce_mod_ideal(const LaurentPoly& p, const IdempotentBasis& basis) {
  std::vector<Rational> coords;
  coords.reserve(basis.points.size());
  for (std::size_t i = 0; i < basis.points.size(); ++i)
    coords.push_back(p.evaluate(basis.points[i]));
  return coords;
}

}  // namespace casimir
