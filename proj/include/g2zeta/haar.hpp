#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "g2zeta/phase_sum.hpp"

namespace g2zeta {
namespace haar {

/// Integration domain on one Q_p line. Balls are a + p^k Z_p; scaled units
/// are p^j Z_p^*; annuli and the truncated complement of Z_p are finite
/// unions of scaled-unit shells.
struct Domain {
  enum class Kind { Ball, ScaledUnits, Annulus, FullIntegers, IntegersMinusUnits, NonIntegers };

  Kind kind = Kind::FullIntegers;
  Rational center;          // Ball
  long k = 0;               // Ball radius order / ScaledUnits scale
  long vlo = 0, vhi = 0;    // Annulus: vlo <= valuation <= vhi
  bool truncated = false;   // NonIntegers
  long vmin = 0;            // NonIntegers truncation (valuations >= vmin)

  static Domain ball(Rational center, long k) {
    Domain d;
    d.kind = Kind::Ball;
    d.center = std::move(center);
    d.k = k;
    return d;
  }
  static Domain scaled_units(long j) {
    Domain d;
    d.kind = Kind::ScaledUnits;
    d.k = j;
    return d;
  }
  static Domain units() { return scaled_units(0); }
  static Domain annulus(long vlo, long vhi) {
    Domain d;
    d.kind = Kind::Annulus;
    d.vlo = vlo;
    d.vhi = vhi;
    return d;
  }
  static Domain full_integers() {
    Domain d;
    d.kind = Kind::FullIntegers;
    return d;
  }
  static Domain integers_minus_units() {
    Domain d;
    d.kind = Kind::IntegersMinusUnits;
    return d;
  }
  static Domain non_integers(std::optional<long> vmin = std::nullopt) {
    Domain d;
    d.kind = Kind::NonIntegers;
    d.truncated = vmin.has_value();
    d.vmin = vmin.value_or(0);
    return d;
  }
};

/// Exact Haar measure; UnsupportedDomain for the untruncated complement of
/// Z_p.
Rational measure(const Domain& d, long p);

/// Lemma "char integral": the integral of psi(a x) over Z_p, which is
/// 1_{Z_p}(a).
Rational char_integral_Zp(const Rational& a, long p);

/// Lemma 3: the integral of psi(t x) over Z_p^*:
/// 1 - 1/p if ord t >= 0, -1/p at ord t = -1, 0 below.
Rational unit_char_integral(const Rational& t, long p);
/// Same, keyed by ord(t) (kOrdInfinity allowed).
Rational unit_char_integral_ord(long e, long p);

/// Corollary 1 closed form: the integral of |u|^(a s + b) psi(c u) over
/// Q_p - Z_p, as an exact rational function of q. Zero when c is not
/// p-integral. Slope and intercept must be integers (they come from the
/// displayed exponents); rationals are accepted and validated.
ZetaExpr tail_sum(const Rational& a, const Rational& b, const Rational& c, long p);

/// Lemma 1 closed form: the integral of f_s(n^-(-x)) psi(a x) over Q_p.
/// Vanishes for a outside Z_p.
ZetaExpr lemma1_integral(const Rational& a, long p);
/// Same, keyed by ord(a).
ZetaExpr lemma1_by_ord(long m, long p);

/// Declares that the integrand's character part is psi(coeff(others) * x_i)
/// for variable `var`, with magnitude |x_i|^(mag_a * s + mag_b), so the
/// engine can integrate that variable's shells exactly (Lemma 3 /
/// char-integral collapse) instead of enumerating unit residues.
/// shell_factor, when set, multiplies an extra per-shell expression (used
/// for Lemma-1 style factors that depend on the shell only).
struct UnitCollapse {
  size_t var = 0;
  long mag_a = 0, mag_b = 0;
  std::function<Rational(std::span<const Rational>)> coeff;
  std::function<ZetaExpr(long)> shell_factor;
};

/// A function constant on cosets of p^depth Z_p in each variable. The
/// evaluator maps a tuple of exact representatives to a magnitude (an exact
/// expression in q, often just a rational) and a phase.
struct LocallyConstantFn {
  long depth = 1;
  std::function<std::pair<ZetaExpr, CharValue>(std::span<const Rational>)> eval;
  std::optional<UnitCollapse> collapse;
};

inline constexpr unsigned long long kDefaultWorkLimit = 40'000'000ULL;

/// Sum over residue cells of value * measure with exact phases; shells of
/// unbounded domains truncated at vmin. Deterministic given (depth, vmin).
/// Throws ResourceLimit when the cell count exceeds the work limit.
PhaseSum integrate_exact(const LocallyConstantFn& f, const std::vector<Domain>& domains, long p,
                         long depth, long vmin, unsigned long long work_limit = kDefaultWorkLimit);

std::complex<double> integrate_numeric(const LocallyConstantFn& f, const std::vector<Domain>& domains,
                                       long p, double s, long depth, long vmin,
                                       unsigned long long work_limit = kDefaultWorkLimit);

}  // namespace haar
}  // namespace g2zeta
