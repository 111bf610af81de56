#include "g2zeta/zeta_expr.hpp"

#include <cmath>

namespace g2zeta {

ZetaExpr::ZetaExpr(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("zero denominator");
  canonicalize();
}

void ZetaExpr::canonicalize() {
  const long p = num_.prime();
  if (num_.is_zero()) {
    den_ = QPoly::one(p);
    return;
  }
  QPoly g = qpoly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = qpoly_divexact(num_, g);
    den_ = qpoly_divexact(den_, g);
  }
  // Shift all q-powers out of the denominator, then scale so its
  // coefficients are coprime integers with positive lowest coefficient.
  long lo = den_.lowest_exponent();
  if (lo != 0) {
    QPoly shift = QPoly::monomial(p, Rational(1), -lo);
    num_ = num_ * shift;
    den_ = den_ * shift;
  }
  Int lcm = 1;
  for (const auto& [m, c] : den_.terms()) lcm = boost::multiprecision::lcm(lcm, c.denominator());
  Int gcd = 0;
  for (const auto& [m, c] : den_.terms()) gcd = boost::multiprecision::gcd(gcd, c.numerator() * (lcm / c.denominator()));
  Rational scale(lcm, gcd);
  if (den_.coeff(den_.lowest_exponent()).sign() < 0) scale = -scale;
  num_ = num_ * scale;
  den_ = den_ * scale;
}

ZetaExpr ZetaExpr::operator-() const {
  ZetaExpr r(prime());
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

ZetaExpr operator+(const ZetaExpr& a, const ZetaExpr& b) {
  return ZetaExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ZetaExpr operator-(const ZetaExpr& a, const ZetaExpr& b) {
  return ZetaExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b) {
  return ZetaExpr(a.num_ * b.num_, a.den_ * b.den_);
}

ZetaExpr operator/(const ZetaExpr& a, const ZetaExpr& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero expression");
  return ZetaExpr(a.num_ * b.den_, a.den_ * b.num_);
}

bool ZetaExpr::equals(const ZetaExpr& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

double ZetaExpr::eval(double s) const {
  long double den = den_.eval(s);
  long double scale = den_.eval_magnitude(s);
  if (scale == 0 || std::fabs(den) < 1e-12L * scale)
    throw EvalError("denominator " + den_.str() + " vanishes at s = " + std::to_string(s));
  return static_cast<double>(num_.eval(s) / den);
}

std::string ZetaExpr::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

ZetaExpr ze_arith(const ZetaExpr& a, const ZetaExpr& b, ZeOp op) {
  switch (op) {
    case ZeOp::Add: return a + b;
    case ZeOp::Sub: return a - b;
    case ZeOp::Mul: return a * b;
    case ZeOp::Div: return a / b;
  }
  throw InvalidInput("unknown ZeOp");
}

bool ze_equals(const ZetaExpr& a, const ZetaExpr& b) { return a.equals(b); }

double ze_eval(const ZetaExpr& a, double s) { return a.eval(s); }

}  // namespace g2zeta
