#include <doctest.h>

#include <random>

#include "g2zeta/padic.hpp"

using namespace g2zeta;

namespace {

Rational rand_rational(std::mt19937_64& rng, long span = 40) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("ord basics") {
  CHECK(ord(Rational(50), 5) == 2);  // 50 = 2 * 5^2
  CHECK(ord(Rational(0), 7) == kOrdInfinity);
  CHECK(ord(Rational(3, 10), 5) == -1);
  CHECK(ord(Rational(7), 5) == 0);
  CHECK_THROWS_AS(ord(Rational(1), 6), InvalidInput);
  CHECK_THROWS_AS(ord(Rational(1), 1), InvalidInput);
}

TEST_CASE("ord is a valuation") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    for (long p : {2L, 5L, 11L}) {
      Rational a = rand_rational(rng), b = rand_rational(rng);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(ord(a * b, p) == ord(a, p) + ord(b, p));
      if (!(a + b).is_zero()) {
        long oa = ord(a, p), ob = ord(b, p);
        CHECK(ord(a + b, p) >= std::min(oa, ob));
        if (oa != ob) CHECK(ord(a + b, p) == std::min(oa, ob));
      }
    }
  }
}

TEST_CASE("abs_p basics and multiplicativity") {
  CHECK(abs_p(Rational(50), 5) == Rational(1, 25));
  CHECK(abs_p(Rational(1, 5), 5) == Rational(5));
  CHECK(abs_p(Rational(7), 5) == Rational(1));
  CHECK(abs_p(Rational(0), 5) == Rational(0));

  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng);
    CHECK(abs_p(a * b, 5) == abs_p(a, 5) * abs_p(b, 5));
    // ultrametric, with equality when the absolute values differ
    Rational m = std::max(abs_p(a, 5), abs_p(b, 5));
    CHECK(abs_p(a + b, 5) <= m);
    if (abs_p(a, 5) != abs_p(b, 5)) CHECK(abs_p(a + b, 5) == m);
  }
}

TEST_CASE("product formula over the finite support") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Rational x = rand_rational(rng, 30);
    if (x.is_zero()) continue;
    Rational prod = abs(x);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L})
      prod *= abs_p(x, p);
    CHECK(prod == Rational(1));
  }
}

TEST_CASE("e_p values") {
  CHECK(e_p(Rational(3), 5).is_one());
  CHECK(e_p(Rational(1, 5), 5).fraction() == Rational(4, 5));
  CHECK(e_p(Rational(7, 25), 5).fraction() == Rational(18, 25));
  CHECK(e_p(Rational(0), 5).is_one());
  // only the p-part of the denominator contributes: 1/15 = (1/3)/5, 1/3 = 2 mod 5
  CHECK(e_p(Rational(1, 15), 5) == e_p(Rational(2, 5), 5));
  CHECK_THROWS_AS(e_p(Rational(1), 4), InvalidInput);
}

TEST_CASE("e_p is a homomorphism mod 1") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    Rational x = rand_rational(rng), y = rand_rational(rng);
    for (long p : {5L, 11L}) {
      CHECK(e_p(x + y, p) == e_p(x, p) + e_p(y, p));
    }
  }
}

TEST_CASE("e_p vanishes exactly on p-integral rationals") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    Rational x = rand_rational(rng);
    CHECK(e_p(x, 5).is_one() == (x.is_zero() || ord(x, 5) >= 0));
  }
}

TEST_CASE("CharValue arithmetic stays in [0,1)") {
  CharValue a = CharValue::from_fraction(Rational(4, 5));
  CharValue b = CharValue::from_fraction(Rational(3, 5));
  CHECK((a + b).fraction() == Rational(2, 5));
  CHECK((-a).fraction() == Rational(1, 5));
  CHECK((a - a).is_one());
  CHECK(a.scaled(Int(10)).is_one());
  CHECK_THROWS_AS(CharValue::validated(Rational(1, 6), 5), InvalidInput);
  CHECK_NOTHROW(CharValue::validated(Rational(3, 125), 5));
}

TEST_CASE("expand digit expansions") {
  PadicExpansion e = expand(Rational(1, 3), 5, 3);
  CHECK(e.start_order == 0);
  CHECK(e.digits == std::vector<long>{2, 3, 1});

  CHECK(expand(Rational(0), 5, 3).digits.empty());

  PadicExpansion f = expand(Rational(25), 5, 2);
  CHECK(f.start_order == 2);
  CHECK(f.digits == std::vector<long>{1, 0});

  CHECK_THROWS_AS(expand(Rational(1), 5, 0), InvalidInput);
}

TEST_CASE("expansion round-trips to the declared depth") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    Rational x = rand_rational(rng);
    if (x.is_zero()) continue;
    for (long p : {5L, 7L}) {
      long k = 1 + static_cast<long>(i % 4);
      PadicExpansion e = expand(x, p, k);
      CHECK(e.digits.front() != 0);  // leading digit
      Rational diff = x - e.reconstruct(p);
      if (!diff.is_zero()) CHECK(ord(diff, p) >= e.start_order + k);
    }
  }
}

TEST_CASE("PadicScalar validates its prime") {
  CHECK_THROWS_AS(PadicScalar(Rational(1), 15), InvalidInput);
  PadicScalar x(Rational(50), 5);
  CHECK(x.valuation() == 2);
  CHECK(x.abs() == Rational(1, 25));
  CHECK(x.character().is_one());
}
