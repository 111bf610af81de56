#pragma once

#include <string>

#include "g2zeta/qpoly.hpp"

namespace g2zeta {

/// Exact rational function in q = p^(-s). Always held in canonical form:
/// numerator and denominator coprime over Q[q], denominator an ordinary
/// polynomial (lowest exponent 0) with coprime integer coefficients and
/// positive lowest-order coefficient.
class ZetaExpr {
 public:
  explicit ZetaExpr(long prime) : num_(QPoly::zero(prime)), den_(QPoly::one(prime)) {}
  explicit ZetaExpr(QPoly num) : num_(std::move(num)), den_(QPoly::one(num_.prime())) { canonicalize(); }
  ZetaExpr(QPoly num, QPoly den);

  static ZetaExpr zero(long p) { return ZetaExpr(p); }
  static ZetaExpr one(long p) { return ZetaExpr(QPoly::one(p)); }
  static ZetaExpr constant(long p, const Rational& c) { return ZetaExpr(QPoly::constant(p, c)); }
  static ZetaExpr monomial(long p, const Rational& c, long m) { return ZetaExpr(QPoly::monomial(p, c, m)); }
  /// p^(a*s + b) as an expression in q.
  static ZetaExpr p_power_s(long p, long a, long b) { return ZetaExpr(QPoly::p_power_s(p, a, b)); }

  long prime() const { return num_.prime(); }
  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  ZetaExpr operator-() const;
  ZetaExpr& operator+=(const ZetaExpr& o) { return *this = *this + o; }
  ZetaExpr& operator-=(const ZetaExpr& o) { return *this = *this - o; }
  ZetaExpr& operator*=(const ZetaExpr& o) { return *this = *this * o; }
  friend ZetaExpr operator+(const ZetaExpr& a, const ZetaExpr& b);
  friend ZetaExpr operator-(const ZetaExpr& a, const ZetaExpr& b);
  friend ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b);
  friend ZetaExpr operator/(const ZetaExpr& a, const ZetaExpr& b);  // ArithmeticError on b == 0
  ZetaExpr operator*(const Rational& c) const { return ZetaExpr(num_ * c, den_); }

  /// Exact equality as rational functions (cross multiplication).
  bool equals(const ZetaExpr& o) const;
  friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) { return a.equals(b); }

  /// Substitute q = p^(-s). Throws EvalError naming the vanishing
  /// denominator when evaluated at a pole.
  double eval(double s) const;

  /// Canonical string, e.g. "(1 - 5*q^3)/(1 - 25*q^6)"; plain numerator when
  /// the denominator is 1.
  std::string str() const;

 private:
  void canonicalize();
  QPoly num_, den_;
};

enum class ZeOp { Add, Sub, Mul, Div };

/// Operation-code entry point mirroring the module contract; the overloaded
/// operators above are the ergonomic form.
ZetaExpr ze_arith(const ZetaExpr& a, const ZetaExpr& b, ZeOp op);
bool ze_equals(const ZetaExpr& a, const ZetaExpr& b);
double ze_eval(const ZetaExpr& a, double s);

}  // namespace g2zeta
