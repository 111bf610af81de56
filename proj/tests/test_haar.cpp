#include <doctest.h>

#include <cmath>
#include <random>

#include "g2zeta/haar.hpp"

using namespace g2zeta;
using namespace g2zeta::haar;

namespace {

// random step function: finite combination of ball indicators
struct StepFn {
  struct Piece {
    Rational coeff;
    Rational center;
    long k;
  };
  std::vector<Piece> pieces;

  Rational eval(const Rational& x, long p) const {
    Rational v(0);
    for (const auto& pc : pieces) {
      Rational d = x - pc.center;
      if (d.is_zero() || ord_unchecked(d, p) >= pc.k) v += pc.coeff;
    }
    return v;
  }
};

StepFn rand_step(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<long> center(0, 24);
  std::uniform_int_distribution<long> kdist(0, 2);
  StepFn f;
  int n = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) f.pieces.push_back({Rational(coeff(rng)), Rational(center(rng)), kdist(rng)});
  (void)p;
  return f;
}

}  // namespace

TEST_CASE("measures of the basic domains") {
  CHECK(measure(Domain::ball(Rational(0), 2), 5) == Rational(1, 25));
  CHECK(measure(Domain::units(), 5) == Rational(4, 5));
  CHECK(measure(Domain::ball(Rational(3), 0), 7) == Rational(1));
  CHECK(measure(Domain::integers_minus_units(), 5) == Rational(1, 5));
  CHECK(measure(Domain::annulus(-2, -1), 5) == Rational(4, 5) * Rational(30));  // 4/5*(5+25) = 24
  CHECK(measure(Domain::non_integers(-3), 5) ==
        Rational(4, 5) * (Rational(5) + Rational(25) + Rational(125)));
  CHECK_THROWS_AS(measure(Domain::non_integers(), 5), UnsupportedDomain);
}

TEST_CASE("char integral over Z_p") {
  CHECK(char_integral_Zp(Rational(3), 5) == Rational(1));
  CHECK(char_integral_Zp(Rational(1, 5), 5) == Rational(0));
  CHECK(char_integral_Zp(Rational(0), 5) == Rational(1));
}

TEST_CASE("unit-group character integral") {
  CHECK(unit_char_integral(Rational(1), 5) == Rational(4, 5));
  CHECK(unit_char_integral(Rational(1, 5), 5) == Rational(-1, 5));
  CHECK(unit_char_integral(Rational(1, 25), 5) == Rational(0));
  CHECK(unit_char_integral(Rational(0), 5) == Rational(4, 5));
}

TEST_CASE("tail_sum closed forms") {
  long p = 5;
  CHECK(tail_sum(Rational(-3), Rational(0), Rational(1, 5), p).is_zero());
  CHECK_THROWS_AS(tail_sum(Rational(1, 2), Rational(0), Rational(1), p), InvalidInput);

  // independent oracle: truncate the shell sum at depth 30 and compare
  // numerically where the series converges
  auto oracle = [&](long a, long b, const Rational& c, double s) {
    long double sum = 0;
    for (long U = -30; U <= -1; ++U) {
      long double mag = std::pow((long double)p, (long double)(-U) * (a * s + b + 1));
      sum += mag * unit_char_integral(c * rational_pow(p, U), p).to_long_double();
    }
    return static_cast<double>(sum);
  };
  for (double s : {1.1, 1.4}) {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-3, 0}, {-9, 4}, {-6, 2}}) {
      for (Rational c : {Rational(1), Rational(5), Rational(25), Rational(0), Rational(7)}) {
        double closed = tail_sum(Rational(a), Rational(b), c, p).eval(s);
        double brute = oracle(a, b, c, s);
        CHECK(std::fabs(closed - brute) <= 1e-12 * std::max(1.0, std::fabs(closed)));
      }
    }
  }
}

TEST_CASE("lemma 1 closed form") {
  long p = 5;
  ZetaExpr one = ZetaExpr::one(p);
  CHECK(ze_equals(lemma1_integral(Rational(1), p), one - ZetaExpr::p_power_s(p, -3, 0)));
  CHECK(lemma1_integral(Rational(1, 5), p).is_zero());
  CHECK(ze_equals(lemma1_integral(Rational(0), p),
                  (one - ZetaExpr::p_power_s(p, -3, 0)) / (one - ZetaExpr::p_power_s(p, -3, 1))));
  // Lemma 1 is the Z_p char integral plus the Corollary-1 tail with
  // |x|^(-3s)
  for (Rational a : {Rational(1), Rational(5), Rational(25), Rational(125), Rational(0)}) {
    ZetaExpr combined = ZetaExpr::constant(p, char_integral_Zp(a, p)) +
                        tail_sum(Rational(-3), Rational(0), a, p);
    CHECK(ze_equals(lemma1_integral(a, p), combined));
  }
}

TEST_CASE("integrate_numeric on the stated examples") {
  long p = 5;
  // constant 1 over Z_p
  LocallyConstantFn one_fn;
  one_fn.depth = 3;
  one_fn.eval = [p](std::span<const Rational>) {
    return std::make_pair(ZetaExpr::one(p), CharValue());
  };
  auto v = integrate_numeric(one_fn, {Domain::full_integers()}, p, 1.0, 3, -1);
  CHECK(std::abs(v - std::complex<double>(1, 0)) < 1e-15);

  // psi(x/p) over Z_p cancels exactly
  LocallyConstantFn chi;
  chi.depth = 2;
  chi.eval = [p](std::span<const Rational> x) {
    return std::make_pair(ZetaExpr::one(p), e_p(x[0] / Rational(p), p));
  };
  PhaseSum sum = integrate_exact(chi, {Domain::full_integers()}, p, 2, -1);
  CHECK(sum.is_zero());

  // |x|^(-3s) over the annulus -6 <= V <= -1 at s = 1
  LocallyConstantFn mag;
  mag.depth = 1;
  mag.eval = [p](std::span<const Rational> x) {
    long V = ord_unchecked(x[0], p);
    return std::make_pair(ZetaExpr(QPoly::p_power_s(p, -(-3) * V, 0)), CharValue());
  };
  double got = integrate_numeric(mag, {Domain::annulus(-6, -1)}, p, 1.0, 1, -6).real();
  long double expect = 0;
  for (long V = -6; V <= -1; ++V)
    expect += std::pow(5.0L, (long double)(3 * V)) * std::pow(5.0L, (long double)(-V)) * (4.0L / 5);
  CHECK(got == doctest::Approx((double)expect).epsilon(1e-12));
}

TEST_CASE("integrate agrees with the closed-form lemmas") {
  long p = 5;
  // char integral: exact at depth >= -ord(a)
  for (Rational a : {Rational(3), Rational(1, 5), Rational(1, 25), Rational(0)}) {
    LocallyConstantFn f;
    f.depth = 3;
    f.eval = [p, a](std::span<const Rational> x) {
      return std::make_pair(ZetaExpr::one(p), e_p(a * x[0], p));
    };
    PhaseSum s = integrate_exact(f, {Domain::full_integers()}, p, 3, -1);
    PhaseSum closed(p);
    closed.add(CharValue(), ZetaExpr::constant(p, char_integral_Zp(a, p)));
    CHECK((s - closed).is_zero());
  }
  // unit char integral, exact
  for (Rational t : {Rational(1), Rational(1, 5), Rational(1, 25)}) {
    LocallyConstantFn f;
    f.depth = 3;
    f.eval = [p, t](std::span<const Rational> x) {
      return std::make_pair(ZetaExpr::one(p), e_p(t * x[0], p));
    };
    PhaseSum s = integrate_exact(f, {Domain::units()}, p, 3, -1);
    PhaseSum closed(p);
    closed.add(CharValue(), ZetaExpr::constant(p, unit_char_integral(t, p)));
    CHECK((s - closed).is_zero());
  }
  // tail_sum and lemma1 through the unit-collapse engine at the stated
  // depth/truncation budget
  for (Rational c : {Rational(1), Rational(25), Rational(0)}) {
    LocallyConstantFn f;
    f.depth = 15;
    f.eval = [p](std::span<const Rational>) { return std::make_pair(ZetaExpr::one(p), CharValue()); };
    UnitCollapse uc;
    uc.var = 0;
    uc.mag_a = -3;
    uc.mag_b = 0;
    uc.coeff = [c](std::span<const Rational>) { return c; };
    f.collapse = uc;
    double got = integrate_numeric(f, {Domain::non_integers(-14)}, p, 1.1, 15, -14).real();
    double want = tail_sum(Rational(-3), Rational(0), c, p).eval(1.1);
    CHECK(std::fabs(got - want) <= 1e-9 * std::max(1.0, std::fabs(want)));

    double lemma_got = got + char_integral_Zp(c, p).to_double();
    double lemma_want = lemma1_integral(c, p).eval(1.1);
    CHECK(std::fabs(lemma_got - lemma_want) <= 1e-9 * std::max(1.0, std::fabs(lemma_want)));
  }
}

TEST_CASE("change of variables and translation invariance") {
  long p = 5;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    StepFn f = rand_step(rng, p);
    std::uniform_int_distribution<long> vpick(1, 30);
    Rational v(vpick(rng));
    Rational shift(vpick(rng), 1 + (trial % 3));
    if (ord_unchecked(v, p) == kOrdInfinity) continue;

    long depth = 4;  // pieces live at k <= 2, scaling by v with |ord| <= 2
    Domain box = Domain::ball(Rational(0), -2);  // p^-2 Z_p covers the scaled supports

    auto integrate_fn = [&](auto&& g) {
      LocallyConstantFn lf;
      lf.depth = depth;
      lf.eval = [&g, p](std::span<const Rational> x) {
        return std::make_pair(ZetaExpr::constant(p, g(x[0])), CharValue());
      };
      return integrate_exact(lf, {box}, p, depth + 2, -1);
    };

    PhaseSum base = integrate_fn([&](const Rational& x) { return f.eval(x, p); });
    PhaseSum scaled = integrate_fn([&](const Rational& x) { return f.eval(v * x, p); });
    PhaseSum shifted = integrate_fn([&](const Rational& x) { return f.eval(x + shift, p); });

    // dz = |v| dx
    PhaseSum expect = PhaseSum(p);
    for (const auto& [frac, coeff] : base.terms())
      expect.add(CharValue::from_fraction(frac),
                 coeff * ZetaExpr::constant(p, Rational(1) / abs_p(v, p)));
    CHECK((scaled - expect).is_zero());
    CHECK((shifted - base).is_zero());
  }
}

TEST_CASE("character orthogonality over full residue systems") {
  for (long p : {5L, 11L}) {
    for (long k = 1; k <= 3; ++k) {
      Int pk = int_pow(Int(p), static_cast<unsigned long>(k));
      for (long j = 0; j <= k; ++j) {
        // a of order -j; canonical representatives x in [0, p^k)
        Rational a = rational_pow(p, -j) * Rational(3 % p == 0 ? 1 : 3);
        PhaseSum sum(p);
        for (Int x = 0; x < pk; ++x) sum.add(e_p(a * Rational(x), p), ZetaExpr::one(p));
        bool vanishes = sum.is_zero();
        CHECK(vanishes == (j >= 1));
      }
    }
  }
}

TEST_CASE("locally constant functions are representative independent") {
  long p = 5;
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    StepFn f = rand_step(rng, p);
    LocallyConstantFn lf;
    lf.depth = 3;
    lf.eval = [&f, p](std::span<const Rational> x) {
      return std::make_pair(ZetaExpr::constant(p, f.eval(x[0], p)), CharValue());
    };
    // refining the grid does not change the integral of a depth-3 function
    PhaseSum coarse = integrate_exact(lf, {Domain::full_integers()}, p, 3, -1);
    PhaseSum fine = integrate_exact(lf, {Domain::full_integers()}, p, 5, -1);
    CHECK((coarse - fine).is_zero());
  }
}

TEST_CASE("work limit reports the required budget") {
  long p = 11;
  LocallyConstantFn f;
  f.depth = 6;
  f.eval = [p](std::span<const Rational>) { return std::make_pair(ZetaExpr::one(p), CharValue()); };
  CHECK_THROWS_AS(
      integrate_exact(f, {Domain::full_integers(), Domain::full_integers(), Domain::full_integers()},
                      p, 6, -1, 1000),
      ResourceLimit);
}
