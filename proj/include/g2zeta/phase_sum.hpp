#pragma once

#include <complex>
#include <map>

#include "g2zeta/padic.hpp"
#include "g2zeta/zeta_expr.hpp"

namespace g2zeta {

/// Exact linear combination of p-power roots of unity with ZetaExpr
/// coefficients: sum over entries of coeff * exp(2*pi*i*phase). Phases stay
/// exact until eval(), so a sum that cancels is certified zero, not merely
/// small.
class PhaseSum {
 public:
  explicit PhaseSum(long prime) : prime_(prime) {}

  long prime() const { return prime_; }
  const std::map<Rational, ZetaExpr>& terms() const { return terms_; }

  void add(const CharValue& phase, const ZetaExpr& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(phase.fraction(), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const PhaseSum& o) {
    for (const auto& [f, c] : o.terms_) add(CharValue::from_fraction(f), c);
  }

  PhaseSum operator-(const PhaseSum& o) const {
    PhaseSum r = *this;
    for (const auto& [f, c] : o.terms_) r.add(CharValue::from_fraction(f), -c);
    return r;
  }

  /// Exact test of vanishing in Q(zeta_{p^M})(q). Uses the tower
  /// Q(zeta_{p^m}) / Q(zeta_{p^(m-1)}): for m >= 2 the powers
  /// 1..zeta^(p-1) are a basis, and at m = 1 the only relation is
  /// 1 + zeta + ... + zeta^(p-1) = 0.
  bool is_zero() const { return zero_rec(indexed(), max_level()); }

  /// True when the whole sum collapses to the trivial phase with an exact
  /// rational-function value (used to report exact results).
  bool is_phase_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
  }

  std::complex<double> eval(double s) const {
    std::complex<double> sum = 0;
    for (const auto& [f, c] : terms_) {
      double arg = 2.0 * 3.14159265358979323846 * f.to_double();
      sum += c.eval(s) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return sum;
  }

 private:
  long max_level() const {
    long m = 0;
    for (const auto& [f, c] : terms_) {
      long v = 0;
      Int d = f.denominator();
      while (d % prime_ == 0) {
        d /= prime_;
        ++v;
      }
      if (v > m) m = v;
    }
    return m;
  }

  std::map<Int, ZetaExpr> indexed() const {
    long M = max_level();
    Int pm = int_pow(Int(prime_), static_cast<unsigned long>(M));
    std::map<Int, ZetaExpr> ix;
    for (const auto& [f, c] : terms_) ix.emplace(Int(Rational(f * Rational(pm)).numerator()), c);
    return ix;
  }

  bool zero_rec(const std::map<Int, ZetaExpr>& ix, long level) const {
    if (ix.empty()) return true;
    if (level == 0) {
      for (const auto& [j, c] : ix)
        if (!c.is_zero()) return false;
      return true;
    }
    if (level == 1) {
      // all residue coefficients mod p must agree
      const ZetaExpr* ref = nullptr;
      ZetaExpr zero = ZetaExpr::zero(prime_);
      for (long a = 0; a < prime_; ++a) {
        auto it = ix.find(Int(a));
        const ZetaExpr& c = it == ix.end() ? zero : it->second;
        if (!ref)
          ref = &c;
        else if (!(c == *ref))
          return false;
      }
      return true;
    }
    std::map<long, std::map<Int, ZetaExpr>> groups;
    for (const auto& [j, c] : ix) groups[static_cast<long>(j % prime_)].emplace(j / prime_, c);
    for (auto& [a, g] : groups)
      if (!zero_rec(g, level - 1)) return false;
    return true;
  }

  long prime_;
  std::map<Rational, ZetaExpr> terms_;
};

}  // namespace g2zeta
