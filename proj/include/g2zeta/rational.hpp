#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <string>
#include <utility>

namespace g2zeta {

using Int = boost::multiprecision::cpp_int;
using BoostRational = boost::multiprecision::cpp_rational;

/// Exact rational scalar. Thin wrapper around boost::multiprecision so the
/// operator set stays closed (Eigen's scalar-promotion machinery chokes on
/// boost's fully templated operators) and so construction from int literals
/// stays cheap and unambiguous.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& n, const Int& d) : v_(BoostRational(n, d)) {}
  Rational(long n, long d) : v_(BoostRational(n, d)) {}
  explicit Rational(BoostRational v) : v_(std::move(v)) {}

  const BoostRational& raw() const { return v_; }
  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  double to_double() const { return v_.convert_to<double>(); }
  long double to_long_double() const { return v_.convert_to<long double>(); }

  std::string str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return a.v_.sign() < 0 ? Rational(-a.v_) : a; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  BoostRational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& a);

/// p^e for e of either sign.
Rational rational_pow(long p, long e);

/// Integer power with nonnegative exponent.
Int int_pow(const Int& base, unsigned long e);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(long n);

}  // namespace g2zeta
