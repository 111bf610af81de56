#include "g2zeta/qpoly.hpp"

#include <cmath>
#include <sstream>

namespace g2zeta {

QPoly QPoly::monomial(long p, const Rational& c, long m) {
  QPoly q(p);
  q.add_term(m, c);
  return q;
}

QPoly QPoly::p_power_s(long p, long a, long b) {
  return monomial(p, rational_pow(p, b), -a);
}

bool QPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == Rational(1);
}

long QPoly::lowest_exponent() const {
  if (terms_.empty()) throw ArithmeticError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

long QPoly::highest_exponent() const {
  if (terms_.empty()) throw ArithmeticError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Rational QPoly::coeff(long m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QPoly::add_term(long m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly QPoly::operator-() const {
  QPoly r(prime_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r(prime_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

QPoly QPoly::operator*(const Rational& c) const {
  QPoly r(prime_);
  if (c.is_zero()) return r;
  for (const auto& [m, cm] : terms_) r.terms_.emplace(m, cm * c);
  return r;
}

long double QPoly::eval(double s) const {
  long double q = std::pow(static_cast<long double>(prime_), static_cast<long double>(-s));
  long double sum = 0;
  for (const auto& [m, c] : terms_) sum += c.to_long_double() * std::pow(q, static_cast<long double>(m));
  return sum;
}

long double QPoly::eval_magnitude(double s) const {
  long double q = std::pow(static_cast<long double>(prime_), static_cast<long double>(-s));
  long double mx = 0;
  for (const auto& [m, c] : terms_) {
    long double t = std::fabs(c.to_long_double()) * std::pow(q, static_cast<long double>(m));
    if (t > mx) mx = t;
  }
  return mx;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool unit_coeff = (a == Rational(1)) && m != 0;
    if (!unit_coeff) os << a.str();
    if (m != 0) {
      if (!unit_coeff) os << "*";
      os << "q";
      if (m != 1) os << "^" << m;
    }
  }
  return os.str();
}

namespace {

// Ordinary (nonnegative-exponent) polynomial remainder over Q. Inputs must
// have lowest exponent >= 0.
QPoly poly_mod(QPoly a, const QPoly& b) {
  long db = b.highest_exponent();
  const Rational lb = b.coeff(db);
  while (!a.is_zero() && a.highest_exponent() >= db) {
    long da = a.highest_exponent();
    Rational f = a.coeff(da) / lb;
    QPoly shift = QPoly::monomial(a.prime(), -f, da - db) * b;
    a += shift;
  }
  return a;
}

QPoly strip_laurent(const QPoly& a) {
  if (a.is_zero()) return a;
  long lo = a.lowest_exponent();
  if (lo == 0) return a;
  QPoly r(a.prime());
  for (const auto& [m, c] : a.terms()) r.add_term(m - lo, c);
  return r;
}

}  // namespace

QPoly qpoly_gcd(const QPoly& a0, const QPoly& b0) {
  QPoly a = strip_laurent(a0), b = strip_laurent(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  while (!b.is_zero()) {
    QPoly r = poly_mod(a, b);
    a = b;
    b = strip_laurent(r);  // roots at q=0 are units in the Laurent ring
  }
  // monic
  return a * (Rational(1) / a.coeff(a.highest_exponent()));
}

QPoly qpoly_divexact(const QPoly& a0, const QPoly& b0) {
  if (b0.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (a0.is_zero()) return a0;
  // b | a in the Laurent ring iff strip(b) | strip(a) in Q[q].
  long shift = a0.lowest_exponent() - b0.lowest_exponent();
  QPoly a = strip_laurent(a0);
  QPoly b = strip_laurent(b0);
  long db = b.highest_exponent();
  const Rational lb = b.coeff(db);
  QPoly quot(a0.prime());
  while (!a.is_zero() && a.highest_exponent() >= db) {
    long da = a.highest_exponent();
    Rational f = a.coeff(da) / lb;
    quot.add_term(da - db, f);
    a -= QPoly::monomial(a.prime(), f, da - db) * b;
  }
  if (!a.is_zero()) throw ArithmeticError("polynomial division is not exact");
  return quot * QPoly::monomial(a0.prime(), Rational(1), shift);
}

}  // namespace g2zeta
