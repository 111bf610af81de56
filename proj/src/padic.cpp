#include "g2zeta/padic.hpp"

#include <boost/integer/mod_inverse.hpp>

namespace g2zeta {

void require_prime(long p) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
}

namespace {

long ord_int(Int n, long p) {
  // n != 0
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

long ord_unchecked(const Rational& x, long p) {
  if (x.is_zero()) return kOrdInfinity;
  return ord_int(x.numerator(), p) - ord_int(x.denominator(), p);
}

long ord(const Rational& x, long p) {
  require_prime(p);
  return ord_unchecked(x, p);
}

Rational abs_p(const Rational& x, long p) {
  require_prime(p);
  if (x.is_zero()) return Rational(0);
  return rational_pow(p, -ord_unchecked(x, p));
}

CharValue CharValue::from_fraction(const Rational& f) {
  CharValue c;
  Int n = f.numerator(), d = f.denominator();
  Int r = n % d;
  if (r < 0) r += d;
  c.frac_ = Rational(r, d);
  return c;
}

CharValue CharValue::validated(const Rational& f, long p) {
  CharValue c = from_fraction(f);
  Int d = c.frac_.denominator();
  while (d % p == 0) d /= p;
  if (d != 1)
    throw InvalidInput("character fraction " + c.frac_.str() + " has non-p-power denominator at p=" +
                       std::to_string(p));
  return c;
}

CharValue e_p(const Rational& x, long p) {
  require_prime(p);
  if (x.is_zero()) return CharValue();
  Int num = x.numerator();
  Int den = x.denominator();
  long m = ord_int(den, p);
  if (m == 0) return CharValue();  // x is p-integral
  Int pm = int_pow(Int(p), static_cast<unsigned long>(m));
  Int den_unit = den / pm;
  // Principal part of x mod Z_p is (num/den_unit mod p^m) / p^m; the
  // character carries minus that, reduced into [0,1).
  Int inv = boost::integer::mod_inverse(Int(den_unit % pm), pm);
  Int t = Int(num % pm) * inv % pm;
  if (t < 0) t += pm;
  Int neg = (pm - t) % pm;
  return CharValue::from_fraction(Rational(neg, pm));
}

Rational PadicExpansion::reconstruct(long p) const {
  Rational sum(0);
  for (size_t i = 0; i < digits.size(); ++i)
    sum += Rational(digits[i]) * rational_pow(p, start_order + static_cast<long>(i));
  return sum;
}

PadicExpansion expand(const Rational& x, long p, long k) {
  require_prime(p);
  if (k < 1) throw InvalidInput("expansion depth must be >= 1");
  PadicExpansion e;
  if (x.is_zero()) return e;
  e.start_order = ord_unchecked(x, p);
  // unit = x / p^N has ord 0; peel digits by repeated reduction mod p.
  Rational unit = x / rational_pow(p, e.start_order);
  Int pk = int_pow(Int(p), static_cast<unsigned long>(k));
  Int num = unit.numerator() % pk;
  if (num < 0) num += pk;
  Int den = unit.denominator() % pk;
  Int residue = num * boost::integer::mod_inverse(den, pk) % pk;
  residue = Int(residue);
  for (long i = 0; i < k; ++i) {
    e.digits.push_back(static_cast<long>(residue % p));
    residue /= p;
  }
  return e;
}

PadicScalar::PadicScalar(Rational value, long prime) : value_(std::move(value)), prime_(prime) {
  require_prime(prime_);
}

}  // namespace g2zeta
