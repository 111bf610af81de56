#pragma once

#include <map>
#include <string>

#include "g2zeta/errors.hpp"
#include "g2zeta/rational.hpp"

namespace g2zeta {

/// Laurent polynomial in the formal variable q = p^(-s), with exact rational
/// coefficients. The prime is fixed per value; powers of p appearing in
/// exponent expressions like p^(-3s+1) are folded into coefficients
/// (p^(a s + b) becomes p^b * q^(-a)).
class QPoly {
 public:
  explicit QPoly(long prime) : prime_(prime) {}

  static QPoly zero(long p) { return QPoly(p); }
  static QPoly constant(long p, const Rational& c) { return monomial(p, c, 0); }
  static QPoly one(long p) { return constant(p, Rational(1)); }
  static QPoly monomial(long p, const Rational& c, long m);
  /// p^(a*s + b) as a q-monomial: p^b * q^(-a).
  static QPoly p_power_s(long p, long a, long b);

  long prime() const { return prime_; }
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  long lowest_exponent() const;   // throws on zero
  long highest_exponent() const;  // throws on zero
  Rational coeff(long m) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rational& c) const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.prime_ == b.prime_ && a.terms_ == b.terms_;
  }

  void add_term(long m, const Rational& c);

  /// Substitute q = p^(-s).
  long double eval(double s) const;
  /// Largest |coefficient| * q0^m over terms; scale reference for pole tests.
  long double eval_magnitude(double s) const;

  std::string str() const;

 private:
  long prime_;
  std::map<long, Rational> terms_;  // exponent -> nonzero coefficient
};

/// Polynomial gcd over Q (Laurent parts stripped by the caller); monic.
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);

/// Exact division; throws ArithmeticError if not divisible.
QPoly qpoly_divexact(const QPoly& a, const QPoly& b);

}  // namespace g2zeta
