#include <doctest.h>

#include <cmath>
#include <random>

#include "g2zeta/zeta_expr.hpp"

using namespace g2zeta;

namespace {

ZetaExpr q_pow(long p, long m) { return ZetaExpr::monomial(p, Rational(1), m); }

ZetaExpr rand_expr(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> nterms(1, 3);
  QPoly num(p), den(p);
  long n = nterms(rng);
  for (long i = 0; i < n; ++i) num.add_term(i, Rational(coeff(rng)));
  den.add_term(0, Rational(1));
  if (nterms(rng) > 1) den.add_term(3, Rational(coeff(rng)));
  if (num.is_zero()) num.add_term(0, Rational(1));
  return ZetaExpr(num, den);
}

}  // namespace

TEST_CASE("arithmetic on expressions in q") {
  long p = 5;
  ZetaExpr one = ZetaExpr::one(p);
  ZetaExpr a = one - q_pow(p, 3);                                 // 1 - q^3
  ZetaExpr b = one + ZetaExpr::monomial(p, Rational(5), 3);       // 1 + 5 q^3
  ZetaExpr prod = a * b;
  // (1-q^3)(1+5q^3) = 1 + 4 q^3 - 5 q^6
  ZetaExpr expected = one + ZetaExpr::monomial(p, Rational(4), 3) - ZetaExpr::monomial(p, Rational(5), 6);
  CHECK(ze_equals(prod, expected));
  CHECK(prod.str() == "1 + 4*q^3 - 5*q^6");

  CHECK(ze_equals(a / a, one));
  // difference of squares: (1 - p^2 q^6)/(1 - p q^3) = 1 + p q^3
  ZetaExpr num = one - ZetaExpr::monomial(p, Rational(25), 6);
  ZetaExpr den = one - ZetaExpr::monomial(p, Rational(5), 3);
  CHECK(ze_equals(num / den, b));

  CHECK(ze_arith(a, b, ZeOp::Mul) == prod);
  CHECK_THROWS_AS(ze_arith(a, ZetaExpr::zero(p), ZeOp::Div), ArithmeticError);
}

TEST_CASE("equality by cross multiplication") {
  long p = 5;
  ZetaExpr one = ZetaExpr::one(p);
  ZetaExpr lhs = one - ZetaExpr::monomial(p, Rational(5), 3);  // 1 - p q^3
  ZetaExpr rhs = (one - ZetaExpr::monomial(p, Rational(25), 6)) /
                 (one + ZetaExpr::monomial(p, Rational(5), 3));
  CHECK(ze_equals(lhs, rhs));
  CHECK_FALSE(ze_equals(one - q_pow(p, 3), one - q_pow(p, 2)));
  ZetaExpr placeholder = ZetaExpr::monomial(p, rational_pow(p, 2), 0);
  CHECK(ze_equals(placeholder, placeholder));  // reflexivity
}

TEST_CASE("evaluation at q = p^-s") {
  long p = 5;
  ZetaExpr one = ZetaExpr::one(p);
  ZetaExpr a = one - q_pow(p, 3);
  CHECK(a.eval(1.0) == doctest::Approx(124.0 / 125.0).epsilon(1e-14));
  CHECK(one.eval(2.7) == doctest::Approx(1.0));
  ZetaExpr c = one / (one - ZetaExpr::monomial(p, Rational(5), 3));
  CHECK(c.eval(1.0) == doctest::Approx(25.0 / 24.0).epsilon(1e-14));
  // pole: 1 - 5^(1-3s) vanishes at s = 1/3
  CHECK_THROWS_AS(c.eval(1.0 / 3.0), EvalError);
}

TEST_CASE("field axioms on random expressions") {
  std::mt19937_64 rng(21);
  long p = 5;
  for (int i = 0; i < 60; ++i) {
    ZetaExpr a = rand_expr(rng, p), b = rand_expr(rng, p), c = rand_expr(rng, p);
    CHECK(ze_equals((a + b) + c, a + (b + c)));
    CHECK(ze_equals((a * b) * c, a * (b * c)));
    CHECK(ze_equals(a * (b + c), a * b + a * c));
    CHECK(ze_equals(a + b, b + a));
    if (!b.is_zero()) CHECK(ze_equals((a / b) * b, a));
  }
}

TEST_CASE("eval is multiplicative away from poles") {
  std::mt19937_64 rng(22);
  long p = 5;
  for (int i = 0; i < 60; ++i) {
    ZetaExpr a = rand_expr(rng, p), b = rand_expr(rng, p);
    double s = 1.1 + 0.1 * (i % 7);
    double lhs, ra, rb;
    try {
      lhs = (a * b).eval(s);
      ra = a.eval(s);
      rb = b.eval(s);
    } catch (const EvalError&) {
      continue;
    }
    CHECK(std::fabs(lhs - ra * rb) <= 1e-12 * std::max(1.0, std::fabs(ra * rb)));
  }
}

TEST_CASE("canonical form is stable") {
  long p = 5;
  ZetaExpr one = ZetaExpr::one(p);
  ZetaExpr a = (one - ZetaExpr::monomial(p, Rational(25), 6)) /
               (one - ZetaExpr::monomial(p, Rational(5), 3));
  // canonicalization happens on construction and is idempotent
  CHECK(a.str() == "1 + 5*q^3");
  ZetaExpr again(a.numerator(), a.denominator());
  CHECK(again.str() == a.str());
  // denominator normalized: integer coprime coefficients, lowest exponent 0,
  // positive lowest coefficient
  ZetaExpr b(QPoly::monomial(p, Rational(1, 3), -2), QPoly::monomial(p, Rational(-2, 7), 1));
  CHECK(b.denominator().coeff(b.denominator().lowest_exponent()) > Rational(0));
  CHECK(b.denominator().lowest_exponent() == 0);
  for (const auto& [m, c] : b.denominator().terms()) CHECK(c.is_integer());
}

TEST_CASE("Laurent exponents are supported") {
  long p = 5;
  ZetaExpr a = ZetaExpr::monomial(p, Rational(3), -4);
  ZetaExpr b = ZetaExpr::monomial(p, Rational(1, 3), 4);
  CHECK(ze_equals(a * b, ZetaExpr::one(p)));
  CHECK(a.str() == "3*q^-4");
}

TEST_CASE("p_power_s folds p powers into coefficients") {
  long p = 5;
  // p^(-3s+1) = p q^3
  CHECK(ZetaExpr::p_power_s(p, -3, 1).str() == "5*q^3");
  CHECK(ZetaExpr::p_power_s(p, -6, 2).str() == "25*q^6");
  CHECK(ZetaExpr::p_power_s(p, 9, -3).str() == "1/125*q^-9");
}
