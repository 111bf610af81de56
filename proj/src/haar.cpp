#include "g2zeta/haar.hpp"

namespace g2zeta {
namespace haar {

Rational measure(const Domain& d, long p) {
  require_prime(p);
  const Rational unit_mass = Rational(p - 1, p);
  switch (d.kind) {
    case Domain::Kind::Ball:
      return rational_pow(p, -d.k);
    case Domain::Kind::ScaledUnits:
      return rational_pow(p, -d.k) * unit_mass;
    case Domain::Kind::Annulus: {
      if (d.vlo > d.vhi) return Rational(0);
      Rational m(0);
      for (long v = d.vlo; v <= d.vhi; ++v) m += rational_pow(p, -v) * unit_mass;
      return m;
    }
    case Domain::Kind::FullIntegers:
      return Rational(1);
    case Domain::Kind::IntegersMinusUnits:
      return Rational(1, p);
    case Domain::Kind::NonIntegers: {
      if (!d.truncated) throw UnsupportedDomain("Q_p - Z_p has infinite measure; truncate first");
      Rational m(0);
      for (long v = d.vmin; v <= -1; ++v) m += rational_pow(p, -v) * unit_mass;
      return m;
    }
  }
  throw InvalidInput("bad domain kind");
}

Rational char_integral_Zp(const Rational& a, long p) {
  require_prime(p);
  return ord_unchecked(a, p) >= 0 ? Rational(1) : Rational(0);
}

Rational unit_char_integral_ord(long e, long p) {
  if (e >= 0) return Rational(p - 1, p);
  if (e == -1) return Rational(-1, p);
  return Rational(0);
}

Rational unit_char_integral(const Rational& t, long p) {
  require_prime(p);
  return unit_char_integral_ord(ord_unchecked(t, p), p);
}

ZetaExpr tail_sum(const Rational& a, const Rational& b, const Rational& c, long p) {
  require_prime(p);
  if (!a.is_integer() || !b.is_integer())
    throw InvalidInput("tail_sum: exponent slope/intercept must be integers");
  const long ai = static_cast<long>(a.numerator());
  const long bi = static_cast<long>(b.numerator());
  const long m = ord_unchecked(c, p);
  if (m == kOrdInfinity) {
    // sum over all shells of p^(-U(as+b+1)) (1 - 1/p); geometric with ratio
    // T = p^(as+b+1)
    QPoly T = QPoly::p_power_s(p, ai, bi + 1);
    return ZetaExpr(T * Rational(p - 1, p), QPoly::one(p) - T);
  }
  if (m < 0) return ZetaExpr::zero(p);
  // finite sums from Lemma 3: sum_{j=1..m} T^j - (1/p) sum_{j=1..m+1} T^j
  QPoly T = QPoly::p_power_s(p, ai, bi + 1);
  QPoly Tm1 = QPoly::one(p);
  for (long j = 0; j < m; ++j) Tm1 = Tm1 * T;  // T^m
  QPoly num = T - T * Tm1;                     // T - T^(m+1)
  QPoly num2 = T - T * Tm1 * T;                // T - T^(m+2)
  return ZetaExpr(num - num2 * Rational(1, p), QPoly::one(p) - T);
}

ZetaExpr lemma1_by_ord(long m, long p) {
  if (m == kOrdInfinity) {
    // |a| = 0 kills the second factor
    return ZetaExpr(QPoly::one(p) - QPoly::p_power_s(p, -3, 0), QPoly::one(p) - QPoly::p_power_s(p, -3, 1));
  }
  if (m < 0) return ZetaExpr::zero(p);
  QPoly one = QPoly::one(p);
  QPoly num = one - QPoly::p_power_s(p, -3, 0);           // 1 - q^3
  QPoly den = one - QPoly::p_power_s(p, -3, 1);           // 1 - p q^3
  QPoly fac = one - QPoly::p_power_s(p, -3 * (m + 1), m + 1);  // 1 - p^(m+1) q^(3m+3)
  return ZetaExpr(num * fac, den);
}

ZetaExpr lemma1_integral(const Rational& a, long p) {
  require_prime(p);
  return lemma1_by_ord(ord_unchecked(a, p), p);
}

namespace {

struct Component {
  bool is_shell = false;
  long shell = 0;        // valuation for shell components
  Rational base;         // Ball base
  long scale_order = 0;  // Ball: cells base + p^scale_order * t
};

std::vector<Component> components(const Domain& d, long vmin) {
  std::vector<Component> cs;
  auto shell = [&](long v) {
    Component c;
    c.is_shell = true;
    c.shell = v;
    return c;
  };
  switch (d.kind) {
    case Domain::Kind::Ball: {
      Component c;
      c.base = d.center;
      c.scale_order = d.k;
      cs.push_back(c);
      break;
    }
    case Domain::Kind::FullIntegers: {
      Component c;
      c.scale_order = 0;
      cs.push_back(c);
      break;
    }
    case Domain::Kind::IntegersMinusUnits: {
      Component c;
      c.scale_order = 1;
      cs.push_back(c);
      break;
    }
    case Domain::Kind::ScaledUnits:
      cs.push_back(shell(d.k));
      break;
    case Domain::Kind::Annulus:
      for (long v = d.vlo; v <= d.vhi; ++v) cs.push_back(shell(v));
      break;
    case Domain::Kind::NonIntegers: {
      long lo = d.truncated ? std::max(d.vmin, vmin) : vmin;
      for (long v = lo; v <= -1; ++v) cs.push_back(shell(v));
      break;
    }
  }
  return cs;
}

struct Cell {
  Rational rep;
  Rational measure;
};

std::vector<Cell> cells_of(const Component& c, long p, long depth) {
  std::vector<Cell> out;
  Int pd = int_pow(Int(p), static_cast<unsigned long>(depth));
  if (c.is_shell) {
    Rational scale = rational_pow(p, c.shell);
    Rational meas = rational_pow(p, -c.shell - depth);
    for (Int t = 1; t < pd; ++t) {
      if (t % p == 0) continue;
      out.push_back({scale * Rational(t), meas});
    }
  } else {
    Rational scale = rational_pow(p, c.scale_order);
    Rational meas = rational_pow(p, -c.scale_order - depth);
    for (Int t = 0; t < pd; ++t) out.push_back({c.base + scale * Rational(t), meas});
  }
  return out;
}

unsigned long long cell_count(const Component& c, long p, long depth) {
  unsigned long long pd = 1;
  for (long i = 0; i < depth; ++i) pd *= static_cast<unsigned long long>(p);
  return c.is_shell ? pd - pd / static_cast<unsigned long long>(p) : pd;
}

}  // namespace

PhaseSum integrate_exact(const LocallyConstantFn& f, const std::vector<Domain>& domains, long p,
                         long depth, long vmin, unsigned long long work_limit) {
  require_prime(p);
  if (depth < 1) throw InvalidInput("depth must be >= 1");
  const size_t nv = domains.size();
  std::vector<std::vector<Component>> comp(nv);
  for (size_t i = 0; i < nv; ++i) comp[i] = components(domains[i], vmin);

  const size_t collapse_var = f.collapse ? f.collapse->var : nv;
  if (f.collapse && collapse_var >= nv) throw InvalidInput("collapse variable out of range");

  // budget check
  unsigned long long total = 1;
  for (size_t i = 0; i < nv; ++i) {
    if (i == collapse_var) continue;
    unsigned long long per = 0;
    for (const auto& c : comp[i]) per += cell_count(c, p, depth);
    if (per == 0) return PhaseSum(p);
    if (total > work_limit / per) throw ResourceLimit("integration grid too large", work_limit + 1);
    total *= per;
  }

  PhaseSum sum(p);
  std::vector<Rational> reps(nv, Rational(0));

  // Exact integral of the collapsed variable against psi(coeff * x) over its
  // whole domain, including per-shell magnitude and shell factors.
  auto collapsed_factor = [&](const Rational& coeff) -> ZetaExpr {
    const UnitCollapse& uc = *f.collapse;
    ZetaExpr acc = ZetaExpr::zero(p);
    for (const auto& c : comp[collapse_var]) {
      if (c.is_shell) {
        long v = c.shell;
        ZetaExpr mag = ZetaExpr(QPoly::p_power_s(p, -v * uc.mag_a, -v * uc.mag_b));
        ZetaExpr term = mag * ZetaExpr::constant(p, rational_pow(p, -v) * unit_char_integral(coeff * rational_pow(p, v), p));
        if (uc.shell_factor) term = term * uc.shell_factor(v);
        acc += term;
      } else {
        // ball component: exact only for scaled balls centred at 0 with no
        // magnitude weight (psi(coeff*x) over p^k Z_p is a char integral)
        if (!c.base.is_zero() || uc.mag_a != 0 || uc.mag_b != 0 || uc.shell_factor)
          throw UnsupportedDomain("unit collapse on a ball supports only plain psi(c*x) over p^k Z_p");
        Rational scaled = coeff * rational_pow(p, c.scale_order);
        acc += ZetaExpr::constant(p, rational_pow(p, -c.scale_order) * char_integral_Zp(scaled, p));
      }
    }
    return acc;
  };

  // Recursive enumeration over the non-collapsed variables.
  std::function<void(size_t, ZetaExpr)> rec = [&](size_t i, ZetaExpr meas) {
    if (i == nv) {
      auto [mag, phase] = f.eval(std::span<const Rational>(reps));
      if (f.collapse) {
        ZetaExpr cf = collapsed_factor(f.collapse->coeff(std::span<const Rational>(reps)));
        sum.add(phase, mag * meas * cf);
      } else {
        sum.add(phase, mag * meas);
      }
      return;
    }
    if (i == collapse_var) {
      rec(i + 1, std::move(meas));
      return;
    }
    for (const auto& c : comp[i])
      for (const auto& cell : cells_of(c, p, depth)) {
        reps[i] = cell.rep;
        rec(i + 1, meas * ZetaExpr::constant(p, cell.measure));
      }
  };
  rec(0, ZetaExpr::one(p));
  return sum;
}

std::complex<double> integrate_numeric(const LocallyConstantFn& f, const std::vector<Domain>& domains,
                                       long p, double s, long depth, long vmin,
                                       unsigned long long work_limit) {
  return integrate_exact(f, domains, p, depth, vmin, work_limit).eval(s);
}

}  // namespace haar
}  // namespace g2zeta
