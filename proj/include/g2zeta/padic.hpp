#pragma once

#include <limits>
#include <vector>

#include "g2zeta/errors.hpp"
#include "g2zeta/rational.hpp"

namespace g2zeta {

/// Sentinel for ord(0).
inline constexpr long kOrdInfinity = std::numeric_limits<long>::max();

/// ord_p(x): the unique n with x = p^n * a/b and p dividing neither a nor b;
/// kOrdInfinity for x = 0. Throws InvalidInput if p is not prime.
long ord(const Rational& x, long p);

/// |x|_p = p^(-ord_p x), and 0 for x = 0.
Rational abs_p(const Rational& x, long p);

/// ord without the primality check, for hot loops that already validated p.
long ord_unchecked(const Rational& x, long p);

/// Element of Q/Z with p-power denominator; the exact argument of a root of
/// unity: the character value is exp(2*pi*i*fraction). fraction == 0 means
/// the character value is 1.
class CharValue {
 public:
  CharValue() : frac_(0) {}
  /// Reduces f mod 1 into [0,1). Does not check the denominator; use
  /// validated() where the p-power invariant should be asserted.
  static CharValue from_fraction(const Rational& f);
  static CharValue validated(const Rational& f, long p);

  const Rational& fraction() const { return frac_; }
  bool is_one() const { return frac_.is_zero(); }

  CharValue operator+(const CharValue& o) const { return from_fraction(frac_ + o.frac_); }
  CharValue operator-(const CharValue& o) const { return from_fraction(frac_ - o.frac_); }
  CharValue operator-() const { return from_fraction(-frac_); }
  CharValue scaled(const Int& n) const { return from_fraction(frac_ * Rational(n)); }

  friend bool operator==(const CharValue& a, const CharValue& b) { return a.frac_ == b.frac_; }
  friend bool operator!=(const CharValue& a, const CharValue& b) { return a.frac_ != b.frac_; }
  friend bool operator<(const CharValue& a, const CharValue& b) { return a.frac_ < b.frac_; }

 private:
  Rational frac_;  // in [0,1), denominator a power of p
};

/// The standard additive character e_p(x) = exp(-2*pi*i * (negative-order
/// digit part of x)), returned as the exact exponent fraction in [0,1).
/// e_p(x).is_one() exactly when x is p-integral.
CharValue e_p(const Rational& x, long p);

/// Truncated p-adic digit expansion. Zero is the empty digit list.
struct PadicExpansion {
  long start_order = 0;
  std::vector<long> digits;  // in [0, p-1], leading digit nonzero

  /// sum of digits[i] * p^(start_order+i); equals the expanded value mod
  /// p^(start_order + digits.size()).
  Rational reconstruct(long p) const;
};

/// First k digits of x from its leading order.
PadicExpansion expand(const Rational& x, long p, long k);

/// A rational viewed at a fixed prime. The prime is primality-tested at
/// construction.
class PadicScalar {
 public:
  PadicScalar(Rational value, long prime);

  const Rational& value() const { return value_; }
  long prime() const { return prime_; }
  long valuation() const { return ord_unchecked(value_, prime_); }
  Rational abs() const { return abs_p(value_, prime_); }
  CharValue character() const { return e_p(value_, prime_); }
  PadicExpansion expansion(long k) const { return expand(value_, prime_, k); }

 private:
  Rational value_;
  long prime_;
};

/// Validates primality once and throws InvalidInput otherwise.
void require_prime(long p);

}  // namespace g2zeta
