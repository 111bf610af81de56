#include "g2zeta/integrals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "g2zeta/counting.hpp"

namespace g2zeta {
namespace integrals {

// ---------------------------------------------------------------------------
// CaseId

CaseId CaseId::parse(const std::string& signs) {
  if (signs.size() != 4) throw InvalidInput("case id must be four signs over (v,u,z,y), e.g. +-++");
  CaseId id;
  for (size_t i = 0; i < 4; ++i) {
    if (signs[i] == '+')
      id.signs_[i] = true;
    else if (signs[i] == '-')
      id.signs_[i] = false;
    else
      throw InvalidInput("case id characters must be '+' or '-'");
  }
  return id;
}

CaseId CaseId::from_index(int idx) {
  if (idx < 0 || idx > 15) throw InvalidInput("case index out of range");
  CaseId id;
  for (int i = 0; i < 4; ++i) id.signs_[static_cast<size_t>(i)] = !((idx >> (3 - i)) & 1);
  return id;
}

int CaseId::index() const {
  int idx = 0;
  for (int i = 0; i < 4; ++i) idx = (idx << 1) | (signs_[static_cast<size_t>(i)] ? 0 : 1);
  return idx;
}

std::string CaseId::str() const {
  std::string s;
  for (bool b : signs_) s += b ? '+' : '-';
  return s;
}

// ---------------------------------------------------------------------------
// Parameter validation

void validate_theorem_params(const LocalParams& params) {
  require_prime(params.p);
  if (params.p == 2 || params.p == 3)
    throw UnsupportedRegime("[p-small] p = 2 and p = 3 are outside the computed regime");
  if (params.p % 6 == 1)
    throw UnsupportedRegime(
        "[p-1mod6] p = 1 (mod 6) has three cube roots of 1; use the Jiang-Rallis reference values");
  if (params.b % params.p == 0 || params.c % params.p == 0)
    throw PreconditionError("b and c must be units mod p");
  if (!counting::is_irreducible_cubic(params.b, params.c, params.p))
    throw PreconditionError("g(u) = -u^3 + b u + c must be irreducible mod p for theorem mode");
}

namespace {

void require_units(const LocalParams& params) {
  require_prime(params.p);
  if (params.p <= 3) throw UnsupportedRegime("[p-small] cases 5-16 need p > 3");
  if (params.b % params.p == 0 || params.c % params.p == 0)
    throw PreconditionError("b and c must be units mod p");
}

void require_5mod6(const LocalParams& params, const char* what) {
  if (params.p % 6 != 5)
    throw UnsupportedRegime(std::string("[p-1mod6] ") + what + " needs p = 5 (mod 6)");
}

void require_irreducible(const LocalParams& params, const char* what) {
  if (!counting::is_irreducible_cubic(params.b, params.c, params.p))
    throw PreconditionError(std::string(what) + " needs g irreducible mod p");
}

ZetaExpr q3(long p) { return ZetaExpr::p_power_s(p, -3, 0); }
ZetaExpr one_minus_q3(long p) { return ZetaExpr::one(p) - q3(p); }

}  // namespace

// ---------------------------------------------------------------------------
// Closed forms (section 4 of the computation)

ZetaExpr closed_form(const CaseId& id, const LocalParams& params) {
  const long p = params.p;
  require_prime(p);
  const int n = id.case_number();
  if (n == 15 && params.b % p == 0)
    throw UnsupportedRegime(
        "[b-zero] case 15 is nonzero when b = 0; that regime is Jiang-Rallis, not handled here");
  if (n >= 5) require_units(params);
  switch (n) {
    case 1:
      return one_minus_q3(p);
    case 2:
    case 3:
    case 4:
      return ZetaExpr::zero(p);
    case 5:
      require_5mod6(params, "case 5 (the norm-form count)");
      return one_minus_q3(p) * ZetaExpr::p_power_s(p, -9, 2);
    case 6:
    case 7:
    case 8:
      return ZetaExpr::zero(p);
    case 9: {
      if (counting::cubic_disc_vanishes(params.b, params.c, p))
        throw PreconditionError(
            "case 9 closed form needs distinct roots (discriminant of g vanishes mod p)");
      int nb = counting::cubic_root_count(params.b, params.c, p);
      ZetaExpr factor = ZetaExpr::p_power_s(p, -3, 1) + ZetaExpr::p_power_s(p, -6, 2);
      return one_minus_q3(p) * factor * Rational(nb - 1);
    }
    case 10:
      require_irreducible(params, "case 10");
      return ZetaExpr::zero(p);
    case 11: {
      require_5mod6(params, "case 11");
      require_irreducible(params, "case 11");
      if (params.assume_conjecture) {
        // (1-q^3)(p^3 - p^2) q^9
        return one_minus_q3(p) *
               ZetaExpr::monomial(p, rational_pow(p, 3) - rational_pow(p, 2), 9);
      }
      if (!params.n_minus1)
        throw PreconditionError(
            "case 11 without the conjecture needs the measured N(-1) from the counting module");
      // (1-q^3) p^(-9s+3) (1 - p + N(-1)/p)
      Rational scale = Rational(1) - Rational(p) + Rational(Int(*params.n_minus1), Int(p));
      return one_minus_q3(p) * ZetaExpr::p_power_s(p, -9, 3) * scale;
    }
    case 12:
      require_irreducible(params, "case 12");
      return ZetaExpr::zero(p);
    case 13:
    case 14:
      return ZetaExpr::zero(p);
    case 15:
      require_5mod6(params, "case 15");
      require_irreducible(params, "case 15");
      if (params.b % p == 0)
        throw UnsupportedRegime(
            "[b-zero] case 15 is nonzero when b = 0; that regime is Jiang-Rallis, not handled here");
      return ZetaExpr::zero(p);
    case 16:
      return ZetaExpr::zero(p);
  }
  throw InvalidInput("bad case id");
}

// ---------------------------------------------------------------------------
// Multivariate Laurent polynomials over the case variables (exact rational
// coefficients; negative exponents only on shell variables, used for 1/v).

namespace {

struct MultiPoly {
  struct Term {
    Rational c;
    std::vector<int> e;
  };
  size_t nvars = 0;
  std::vector<Term> terms;

  explicit MultiPoly(size_t n) : nvars(n) {}

  MultiPoly& add(Rational c, std::vector<int> e) {
    if (!c.is_zero()) terms.push_back({std::move(c), std::move(e)});
    return *this;
  }

  Rational eval(std::span<const Rational> x) const {
    Rational sum(0);
    for (const Term& t : terms) {
      Rational v = t.c;
      for (size_t i = 0; i < nvars; ++i) {
        int e = t.e[i];
        if (e == 0) continue;
        Rational base = x[i];
        if (e < 0) {
          base = Rational(1) / base;
          e = -e;
        }
        for (int k = 0; k < e; ++k) v *= base;
      }
      sum += v;
    }
    return sum;
  }

  MultiPoly partial(size_t i) const {
    MultiPoly d(nvars);
    for (const Term& t : terms) {
      if (t.e[i] == 0) continue;
      std::vector<int> e = t.e;
      Rational c = t.c * Rational(e[i]);
      e[i] -= 1;
      d.add(std::move(c), std::move(e));
    }
    return d;
  }
};

Rational T_of(long e, long p) {
  if (e == kOrdInfinity) return Rational(p - 1, p);
  return haar::unit_char_integral_ord(e, p);
}

long add_ord(long a, long b) { return (a == kOrdInfinity || b == kOrdInfinity) ? kOrdInfinity : a + b; }

// |var|^(a s + b) at shell V, as an expression in q.
ZetaExpr shell_mag(long p, long a, long b, long V) {
  return ZetaExpr(QPoly::p_power_s(p, -V * a, -V * b));
}

ZetaExpr p_pow(long p, long e) { return ZetaExpr::constant(p, rational_pow(p, e)); }

// ---------------------------------------------------------------------------
// Certified ord profiles: sum over residue cells of
// measure * prod_i T(base_i + ord(F_i)), subdividing cells until every
// factor's Lemma-3 class is certain. Polynomials here have nonnegative
// exponents. Variables take values p^scale * t with t a full residue or a
// unit.

struct ProfVar {
  long scale = 0;
  bool units = false;
  Rational offset;          // values offset + p^scale * t
  bool fixed = false;       // start from a single prescribed cell
  Rational fixed_t;         // residue representative of that cell
  long fixed_depth = 0;

  // lower bound for ord of any value the variable takes
  long value_ord_lb(long p) const {
    if (offset.is_zero()) return scale;
    return std::min(scale, ord_unchecked(offset, p));
  }
};

struct ProfFactor {
  const MultiPoly* poly;
  long base;
};

class OrdProfiler {
 public:
  OrdProfiler(std::vector<ProfFactor> fs, std::vector<ProfVar> vars, long p,
              unsigned long long work_limit)
      : fs_(std::move(fs)), vars_(std::move(vars)), p_(p), limit_(work_limit) {}

  Rational run() {
    std::vector<Rational> reps(vars_.size());
    std::vector<long> depth(vars_.size());
    Rational measure(1);
    for (size_t i = 0; i < vars_.size(); ++i) {
      depth[i] = vars_[i].fixed ? vars_[i].fixed_depth : (vars_[i].units ? 1 : 0);
      measure *= rational_pow(p_, -vars_[i].scale - depth[i]);
    }
    Rational total(0);
    enumerate_initial(0, reps, depth, measure, total);
    return total;
  }

 private:
  void enumerate_initial(size_t i, std::vector<Rational>& reps, const std::vector<long>& depth,
                         const Rational& measure, Rational& total) {
    if (i == vars_.size()) {
      total += cell(reps, depth, measure);
      return;
    }
    const ProfVar& v = vars_[i];
    if (v.fixed) {
      reps[i] = v.offset + rational_pow(p_, v.scale) * v.fixed_t;
      enumerate_initial(i + 1, reps, depth, measure, total);
      return;
    }
    if (v.units) {
      for (long t = 1; t < p_; ++t) {
        reps[i] = v.offset + rational_pow(p_, v.scale) * Rational(t);
        enumerate_initial(i + 1, reps, depth, measure, total);
      }
    } else {
      reps[i] = v.offset;
      enumerate_initial(i + 1, reps, depth, measure, total);
    }
  }

  // Variation bound of F on the cell: min over terms and slots in the term
  // of (term order lower bound) + depth_slot. Conservative for variables
  // with an offset.
  long variation_bound(const MultiPoly& f, const std::vector<long>& depth) const {
    long best = kOrdInfinity;
    for (const auto& t : f.terms) {
      long lb = ord_unchecked(t.c, p_);
      for (size_t j = 0; j < f.nvars; ++j) lb += t.e[j] * vars_[j].value_ord_lb(p_);
      for (size_t j = 0; j < f.nvars; ++j) {
        if (t.e[j] == 0) continue;
        long u = lb + depth[j];
        if (u < best) best = u;
      }
    }
    return best;
  }

  // T-class of one factor on the cell, or nullopt when uncertain.
  std::optional<Rational> classify(const ProfFactor& f, std::span<const Rational> reps,
                                   const std::vector<long>& depth, size_t& split_var) const {
    long unc = variation_bound(*f.poly, depth);
    Rational val = f.poly->eval(reps);
    long o = ord_unchecked(val, p_);
    if (o < unc) return T_of(add_ord(f.base, o), p_);
    // every value on the cell has ord >= unc
    if (unc != kOrdInfinity && f.base + unc >= 0) return Rational(p_ - 1, p_);
    if (unc == kOrdInfinity) return T_of(add_ord(f.base, o), p_);  // constant polynomial
    // pick the split variable achieving the binding bound
    long best = kOrdInfinity;
    for (const auto& t : f.poly->terms) {
      long lb = ord_unchecked(t.c, p_);
      for (size_t j = 0; j < f.poly->nvars; ++j) lb += t.e[j] * vars_[j].value_ord_lb(p_);
      for (size_t j = 0; j < f.poly->nvars; ++j) {
        if (t.e[j] == 0) continue;
        if (lb + depth[j] < best) {
          best = lb + depth[j];
          split_var = j;
        }
      }
    }
    return std::nullopt;
  }

  Rational cell(std::vector<Rational>& reps, std::vector<long> depth, Rational measure) {
    if (++cells_ > limit_) throw ResourceLimit("ord profile subdivision over budget", cells_);
    Rational product(1);
    for (const auto& f : fs_) {
      size_t split_var = 0;
      auto cls = classify(f, reps, depth, split_var);
      if (!cls) {
        // subdivide split_var
        Rational base_rep = reps[split_var];
        Rational step = rational_pow(p_, vars_[split_var].scale + depth[split_var]);
        depth[split_var] += 1;
        Rational child_measure = measure / Rational(p_);
        Rational total(0);
        for (long t = 0; t < p_; ++t) {
          reps[split_var] = base_rep + step * Rational(t);
          total += cell(reps, depth, child_measure);
        }
        reps[split_var] = base_rep;
        return total;
      }
      product *= *cls;
      if (product.is_zero()) return Rational(0);
    }
    return product * measure;
  }

  std::vector<ProfFactor> fs_;
  std::vector<ProfVar> vars_;
  long p_;
  unsigned long long limit_;
  unsigned long long cells_ = 0;
};

Rational profile_T_product(const std::vector<ProfFactor>& fs, const std::vector<ProfVar>& vars,
                           long p, unsigned long long work_limit) {
  return OrdProfiler(fs, vars, p, work_limit).run();
}

// ---------------------------------------------------------------------------
// Counting-backed Lemma-3 combination: integral over the domain of
// T(base + ord F) equals M_J - (1/p) M_{J-1} with J = -base and
// M_j = measure{ord F >= j}, computed from solution counts (brute force to
// brute_cap, certified Hensel lifting beyond).

class CountingProfile {
 public:
  CountingProfile(const counting::Polynomial& poly, std::vector<counting::VarDomain> doms, long p,
                  long jmax, long brute_cap, unsigned long long work_limit)
      : doms_(std::move(doms)), p_(p) {
    counting::CongruenceProblem prob{poly, p, 1, doms_};
    counts_ = counting::solution_count_profile(prob, std::max(jmax, 1L), brute_cap, work_limit);
  }

  // measure{ord F >= j}
  Rational M(long j) const {
    if (j <= 0) {
      Rational m(1);
      for (auto d : doms_)
        if (d == counting::VarDomain::UnitsOnly) m *= Rational(p_ - 1, p_);
      return m;
    }
    return Rational(counts_.at(static_cast<size_t>(j))) *
           rational_pow(p_, -static_cast<long>(doms_.size()) * j);
  }

  // integral of T(base + ord F) over the domain: M_J - (1/p) M_{J-1}
  Rational T_sum(long base) const {
    const long J = -base;
    if (J < 1) throw InvalidInput("counting T_sum needs base <= -1");
    return M(J) - M(J - 1) * Rational(1, p_);
  }

 private:
  std::vector<counting::VarDomain> doms_;
  long p_;
  std::vector<Int> counts_;
};

// ---------------------------------------------------------------------------
// The shell-reduced exact evaluators (the displayed reductions of section 4,
// with Lemma 3 applied to the linear unit integral and Lemma 1 to the inner
// x-integral). Every term is exact in q; shell sums are truncated by the
// windows.

struct CaseContext {
  long p, b, c;
  long depth;  // brute-count and refinement budget
  ShellWindows w;
  unsigned long long work_limit;

  ZetaExpr L1(long m) const { return haar::lemma1_by_ord(m, p); }
};

// g(u) = c + b u - u^3 as a one-variable MultiPoly.
MultiPoly g_poly(const CaseContext& cc) {
  MultiPoly g(1);
  g.add(Rational(cc.c), {0}).add(Rational(cc.b), {1}).add(Rational(-1), {3});
  return g;
}

ZetaExpr case1_reduced(const CaseContext& cc) {
  const long p = cc.p;
  // Z_p part: psi(x) is trivial there; shells collapse by Lemma 3.
  ZetaExpr acc = ZetaExpr::constant(p, haar::char_integral_Zp(Rational(1), p));
  for (long V = cc.w.v; V <= -1; ++V)
    acc += shell_mag(p, -3, 0, V) * p_pow(p, -V) * ZetaExpr::constant(p, T_of(V, p));
  return acc;
}

// For the cases killed outright by Lemma 1, the multiplier of x in the inner
// character is a monomial of negative order on every shell tuple.
ZetaExpr vanish_when_l1_dies(const CaseContext& cc, char what,
                             const std::function<long(long, long)>& aord, long lo1, long lo2) {
  for (long s1 = lo1; s1 <= -1; ++s1)
    for (long s2 = lo2; s2 <= -1; ++s2)
      if (!cc.L1(aord(s1, s2)).is_zero())
        throw ArithmeticError(std::string("unexpected nonvanishing Lemma-1 factor in case ") + what);
  return ZetaExpr::zero(cc.p);
}

ZetaExpr case5_reduced(const CaseContext& cc) {
  const long p = cc.p;
  // psi1 norm form: F = b - (w^2 + 3wy + 3y^2)
  counting::Polynomial psi1 =
      counting::Polynomial::parse("(" + std::to_string(cc.b) + ") - w^2 - 3*w*y - 3*y^2", {"w", "y"});
  MultiPoly f(2);
  f.add(Rational(cc.b), {0, 0}).add(Rational(-1), {2, 0}).add(Rational(-3), {1, 1}).add(Rational(-3), {0, 2});
  CountingProfile prof(psi1, {counting::VarDomain::FullResidues, counting::VarDomain::FullResidues}, p,
                       -cc.w.u, cc.depth, cc.work_limit);

  ZetaExpr acc = ZetaExpr::zero(p);
  for (long U = cc.w.u; U <= -1; ++U) {
    // the w in p^U Z_p splits into Z_p and the shells p^W Z_p^* (W in [U,-1]);
    // the shell part is certified zero (ord(b - psi1) = 2W there)
    Rational inner = prof.T_sum(U);
    for (long W = U; W <= -1; ++W) {
      inner += profile_T_product({{&f, U}}, {{W, true}, {0, false}}, p, cc.work_limit);
    }
    acc += shell_mag(p, -9, 4, U) * ZetaExpr::constant(p, inner);
  }
  return (ZetaExpr::one(p) - q3(p)) * acc;
}

ZetaExpr case9_reduced(const CaseContext& cc) {
  const long p = cc.p;
  MultiPoly g = g_poly(cc);
  ZetaExpr acc = ZetaExpr::zero(p);
  for (long V = cc.w.v; V <= -1; ++V) {
    Rational inner = profile_T_product({{&g, V}}, {{0, false}}, p, cc.work_limit);
    acc += shell_mag(p, -3, 1, V) * cc.L1(-V) * p_pow(p, -V) * ZetaExpr::constant(p, inner);
  }
  return acc;
}

ZetaExpr case10_reduced(const CaseContext& cc) {
  const long p = cc.p;
  MultiPoly g = g_poly(cc);
  MultiPoly three_u(1);
  three_u.add(Rational(3), {1});
  ZetaExpr acc = ZetaExpr::zero(p);
  for (long Y = cc.w.y; Y <= -1; ++Y)
    for (long V = cc.w.v; V <= -1; ++V) {
      ZetaExpr l1 = cc.L1(3 * Y - V);
      if (l1.is_zero()) continue;  // the x-integral forces |y^3| <= |v|
      Rational inner = profile_T_product({{&g, V}, {&three_u, Y}}, {{0, false}}, p, cc.work_limit);
      acc += shell_mag(p, -3, 1, V) * shell_mag(p, -9, 3, Y) * l1 * p_pow(p, -V - Y) *
             ZetaExpr::constant(p, inner);
    }
  return acc;
}

ZetaExpr case11_reduced(const CaseContext& cc) {
  const long p = cc.p;
  counting::CongruenceProblem conj = counting::conjecture_problem(p, cc.b, cc.c);
  CountingProfile prof(conj.poly, conj.domains, p, -cc.w.v, cc.depth, cc.work_limit);
  ZetaExpr acc = ZetaExpr::zero(p);
  for (long V = cc.w.v; V <= -1; ++V) {
    for (long R = std::max(0L, cc.w.z - V); R <= -V - 1; ++R) {
      ZetaExpr l1 = cc.L1(R);
      Rational inner;
      if (R == 0) {
        inner = prof.T_sum(V);
      } else {
        // A_R(rho,y,u) = g(u) + p^R rho - 3 p^R u y rho - p^(2R) y^3 rho^2
        MultiPoly a(3);
        a.add(Rational(cc.c), {0, 0, 0})
            .add(Rational(cc.b), {0, 0, 1})
            .add(Rational(-1), {0, 0, 3})
            .add(rational_pow(p, R), {1, 0, 0})
            .add(rational_pow(p, R) * Rational(-3), {1, 1, 1})
            .add(rational_pow(p, 2 * R) * Rational(-1), {2, 3, 0});
        inner = profile_T_product({{&a, V}}, {{0, true}, {0, false}, {0, false}}, p, cc.work_limit);
      }
      acc += shell_mag(p, -9, 4, V) * shell_mag(p, -6, 2, R) * l1 * p_pow(p, -V - R) *
             ZetaExpr::constant(p, inner);
    }
  }
  return acc;
}

ZetaExpr case12_reduced(const CaseContext& cc) {
  const long p = cc.p;
  ZetaExpr acc = ZetaExpr::zero(p);
  for (long Y = cc.w.y; Y <= -1; ++Y)
    for (long V = cc.w.v; V <= -1; ++V)
      for (long R = std::max(1L, cc.w.z - V); R <= -V - 1; ++R) {
        ZetaExpr l1 = cc.L1(3 * Y + R);
        if (l1.is_zero()) continue;
        // B = p^R rho + g(u) - 3 p^(Y+R) u gamma rho - p^(3Y+2R) gamma^3 rho^2
        MultiPoly bpoly(3);  // vars (rho, gamma, u)
        bpoly.add(rational_pow(p, R), {1, 0, 0})
            .add(Rational(cc.c), {0, 0, 0})
            .add(Rational(cc.b), {0, 0, 1})
            .add(Rational(-1), {0, 0, 3})
            .add(rational_pow(p, Y + R) * Rational(-3), {1, 1, 1})
            .add(rational_pow(p, 3 * Y + 2 * R) * Rational(-1), {2, 3, 0});
        Rational inner =
            profile_T_product({{&bpoly, V}}, {{0, true}, {0, true}, {0, false}}, p, cc.work_limit);
        acc += shell_mag(p, -9, 4, V) * shell_mag(p, -6, 2, R) * shell_mag(p, -9, 3, Y) * l1 *
               p_pow(p, -V - Y - R) * ZetaExpr::constant(p, inner);
      }
  return acc;
}

// W(u, y1, z1) = g(u) - (2 u z1 + 3 y1) u^2 - ((u z1)^2 + 3 y1^2 + 3 u y1 z1) u,
// the common integrand of cases 13 and 14 after y = v y1, z = v z1.
MultiPoly w_poly(const CaseContext& cc) {
  MultiPoly w(3);  // vars (u, y1, z1)
  w.add(Rational(cc.c), {0, 0, 0})
      .add(Rational(cc.b), {1, 0, 0})
      .add(Rational(-1), {3, 0, 0})
      .add(Rational(-2), {3, 0, 1})
      .add(Rational(-3), {2, 1, 0})
      .add(Rational(-1), {3, 0, 2})
      .add(Rational(-3), {1, 2, 0})
      .add(Rational(-3), {2, 1, 1});
  return w;
}

ZetaExpr case13_reduced(const CaseContext& cc) {
  const long p = cc.p;
  MultiPoly w = w_poly(cc);
  ZetaExpr acc = ZetaExpr::zero(p);
  for (long V = cc.w.v; V <= -1; ++V)
    for (long U = cc.w.u; U <= -1; ++U) {
      Rational inner = profile_T_product({{&w, V}}, {{U, true}, {-V, false}, {-V, false}}, p, cc.work_limit);
      acc += shell_mag(p, -3, 3, V) * shell_mag(p, -9, 4, U) * cc.L1(-V) * p_pow(p, -V - U) *
             ZetaExpr::constant(p, inner);
    }
  return acc;
}

ZetaExpr case14_reduced(const CaseContext& cc) {
  const long p = cc.p;
  MultiPoly w = w_poly(cc);
  ZetaExpr acc = ZetaExpr::zero(p);
  for (long V = cc.w.v; V <= -1; ++V)
    for (long U = cc.w.u; U <= -1; ++U)
      for (long Y1 = cc.w.y - V; Y1 <= -V - 1; ++Y1) {
        ZetaExpr l1 = cc.L1(2 * V + 3 * Y1);  // ord(v^-1 y^3) with y = v y1
        if (l1.is_zero()) continue;
        Rational inner =
            profile_T_product({{&w, V}}, {{U, true}, {Y1, true}, {-V, false}}, p, cc.work_limit);
        acc += shell_mag(p, -12, 6, V) * shell_mag(p, -9, 3, Y1) * shell_mag(p, -9, 4, U) * l1 *
               p_pow(p, -V - U - Y1) * ZetaExpr::constant(p, inner);
      }
  return acc;
}

ZetaExpr case15_reduced(const CaseContext& cc) {
  const long p = cc.p;
  ZetaExpr acc = ZetaExpr::zero(p);

  // Branch A: after z = r v, the region ord(u(r+1)) < 0, where the phase
  // multiplier W' = -u^3(r+1)^2 - 3u^2 y r(r+1) + u(b - 3y^2 r^2) + (c - r^2 y^3)
  // has order 3 ord(u) + 2 ord(r+1) and the unit integral dies. Written in
  // r1 = r + 1 so the profiler sees the cancellation:
  MultiPoly wp1(3);  // vars (u, r1, y)
  wp1.add(Rational(-1), {3, 2, 0})
      .add(Rational(-3), {2, 2, 1})
      .add(Rational(3), {2, 1, 1})
      .add(Rational(cc.b), {1, 0, 0})
      .add(Rational(-3), {1, 2, 2})
      .add(Rational(6), {1, 1, 2})
      .add(Rational(-3), {1, 0, 2})
      .add(Rational(cc.c), {0, 0, 0})
      .add(Rational(-1), {0, 2, 3})
      .add(Rational(2), {0, 1, 3})
      .add(Rational(-1), {0, 0, 3});
  // the same multiplier in plain (u, r, y), for the ord(r) >= 1 shells where
  // r + 1 is a unit
  MultiPoly wp(3);
  wp.add(Rational(-1), {3, 2, 0})
      .add(Rational(-2), {3, 1, 0})
      .add(Rational(-1), {3, 0, 0})
      .add(Rational(-3), {2, 2, 1})
      .add(Rational(-3), {2, 1, 1})
      .add(Rational(cc.b), {1, 0, 0})
      .add(Rational(-3), {1, 2, 2})
      .add(Rational(cc.c), {0, 0, 0})
      .add(Rational(-1), {0, 2, 3});
  for (long V = cc.w.v; V <= -1; ++V)
    for (long Up = cc.w.u; Up <= -1; ++Up) {
      const long U = -Up;  // ord u = Up = -U
      for (long R = std::max(0L, cc.w.z - V); R <= -V - 1; ++R) {
        ZetaExpr l1 = cc.L1(R);
        if (l1.is_zero()) continue;
        Rational inner(0);
        if (R >= 1) {
          inner = profile_T_product({{&wp, V}}, {{Up, true}, {R, true}, {0, false}}, p, cc.work_limit);
        } else {
          // r a unit: stratify by j = ord(r+1). Cells with j >= U are branch
          // B below; at j = 0 both r = 0 and r = -1 residues are excluded.
          for (long j = 0; j < U; ++j) {
            if (j == 0) {
              for (long t = 2; t < p; ++t) {  // r1 = r+1 a unit, r1 != 1
                ProfVar rvar;
                rvar.units = true;
                rvar.fixed = true;
                rvar.fixed_t = Rational(t);
                rvar.fixed_depth = 1;
                inner += profile_T_product({{&wp1, V}}, {{Up, true}, rvar, {0, false}}, p, cc.work_limit);
              }
            } else {
              inner += profile_T_product({{&wp1, V}}, {{Up, true}, {j, true}, {0, false}}, p, cc.work_limit);
            }
          }
        }
        acc += shell_mag(p, -9, 4, V) * shell_mag(p, -9, 4, Up) * shell_mag(p, -6, 2, R) * l1 *
               p_pow(p, -V - Up - R) * ZetaExpr::constant(p, inner);
      }
    }

  // Branch B: r = -1 + p^U t, y = u y1 with y1 = p^U w, v1 = v u^3, u2 the
  // unit of 1/u. The remaining unit integral has multiplier
  // G = p^(2U) Gtilde with
  // Gtilde = b u2^2 + p^U c u2^3 - psi1(t,-w) - p^U(w^3 - 6tw^2 + 3t^2 w)
  //          - p^(2U)(3t^2 w^2 - 2 t w^3) - p^(3U) t^2 w^3.
  for (long U = 1; U <= -cc.w.u; ++U) {
    counting::Polynomial gt(std::vector<std::string>{"u2", "t", "w"});
    long long pU = 1, p2U, p3U;
    for (long i = 0; i < U; ++i) pU *= p;
    p2U = pU * pU;
    p3U = p2U * pU;
    gt.add_term(cc.b, {2, 0, 0});
    gt.add_term(cc.c * pU, {3, 0, 0});
    gt.add_term(-1, {0, 2, 0});
    gt.add_term(3, {0, 1, 1});
    gt.add_term(-3, {0, 0, 2});
    gt.add_term(-pU, {0, 0, 3});
    gt.add_term(6 * pU, {0, 1, 2});
    gt.add_term(-3 * pU, {0, 2, 1});
    gt.add_term(-3 * p2U, {0, 2, 2});
    gt.add_term(2 * p2U, {0, 1, 3});
    gt.add_term(-p3U, {0, 2, 3});
    // the display's p^(U(18s-9)) collects the u-magnitudes and Jacobians
    ZetaExpr ufactor = (ZetaExpr::one(p) - q3(p)) * ZetaExpr(QPoly::p_power_s(p, 18 * U, -9 * U));
    CountingProfile prof(
        gt, {counting::VarDomain::UnitsOnly, counting::VarDomain::FullResidues, counting::VarDomain::FullResidues},
        p, -(cc.w.v - 3 * U) - 2 * U, cc.depth, cc.work_limit);
    for (long V1 = cc.w.v - 3 * U; V1 <= -3 * U - 1; ++V1) {
      Rational inner = prof.T_sum(V1 + 2 * U);
      acc += ufactor * shell_mag(p, -9, 4, V1) * p_pow(p, -V1 - 2 * U) * ZetaExpr::constant(p, inner);
    }
  }
  return acc;
}

ZetaExpr case16_reduced(const CaseContext& cc) {
  const long p = cc.p;
  // M(u,y,r) = g(u) - (2u+3y)u^2 r - (u+y)^3 r^2
  MultiPoly m(3);
  m.add(Rational(cc.c), {0, 0, 0})
      .add(Rational(cc.b), {1, 0, 0})
      .add(Rational(-1), {3, 0, 0})
      .add(Rational(-2), {3, 0, 1})
      .add(Rational(-3), {2, 1, 1})
      .add(Rational(-1), {3, 0, 2})
      .add(Rational(-3), {2, 1, 2})
      .add(Rational(-3), {1, 2, 2})
      .add(Rational(-1), {0, 3, 2});
  ZetaExpr acc = ZetaExpr::zero(p);
  for (long U = cc.w.u; U <= -1; ++U)
    for (long Y = cc.w.y; Y <= -1; ++Y)
      for (long V = cc.w.v; V <= 3 * Y - 1; ++V)
        for (long R = std::max(-3 * Y, cc.w.z - V); R <= -V - 1; ++R) {
          ZetaExpr l1 = cc.L1(3 * Y + R);
          if (l1.is_zero()) continue;
          Rational inner =
              profile_T_product({{&m, V}}, {{U, true}, {Y, true}, {R, true}}, p, cc.work_limit);
          acc += shell_mag(p, -9, 4, V) * shell_mag(p, -9, 4, U) * shell_mag(p, -9, 3, Y) *
                 shell_mag(p, -6, 2, R) * l1 * p_pow(p, -V - U - Y - R) *
                 ZetaExpr::constant(p, inner);
        }
  return acc;
}

ZetaExpr shell_reduced(const CaseId& id, const CaseContext& cc) {
  auto three_y = [](long y, long) { return 3 * y; };
  auto just_z = [](long z, long) { return z; };
  auto y3z = [](long z, long y) { return 3 * y + z; };
  switch (id.case_number()) {
    case 1: return case1_reduced(cc);
    case 2: return vanish_when_l1_dies(cc, '2', three_y, cc.w.y, -1);
    case 3: return vanish_when_l1_dies(cc, '3', just_z, cc.w.z, -1);
    case 4: return vanish_when_l1_dies(cc, '4', y3z, cc.w.z, cc.w.y);
    case 5: return case5_reduced(cc);
    case 6: return vanish_when_l1_dies(cc, '6', three_y, cc.w.y, -1);
    case 7: return vanish_when_l1_dies(cc, '7', just_z, cc.w.z, -1);
    case 8: return vanish_when_l1_dies(cc, '8', y3z, cc.w.z, cc.w.y);
    case 9: return case9_reduced(cc);
    case 10: return case10_reduced(cc);
    case 11: return case11_reduced(cc);
    case 12: return case12_reduced(cc);
    case 13: return case13_reduced(cc);
    case 14: return case14_reduced(cc);
    case 15: return case15_reduced(cc);
    case 16: return case16_reduced(cc);
  }
  throw InvalidInput("bad case id");
}

// ---------------------------------------------------------------------------
// Brute path: direct cell enumeration of the first displayed integrand with
// exact phases. The only analytic inputs are the Lemma-1 closed form for the
// folded x-integral and exact coset averages of characters; everything else
// is enumeration.

struct BruteVar {
  char name;
  bool outside;      // Q_p - Z_p shells vs Z_p ball
  long mag_a = 0, mag_b = 0;
};

struct BruteSpec {
  std::vector<BruteVar> vars;
  MultiPoly phase{0};
  std::vector<int> a_exps;  // Lemma-1 multiplier monomial exponents
};

BruteSpec brute_spec(const CaseId& id, const LocalParams& params) {
  const Rational b(params.b), c(params.c);
  // variable order per case: the subset of (v,u,z,y) present in the display
  auto V = [&](std::initializer_list<BruteVar> vars, const std::vector<int>& a_exps) {
    BruteSpec s;
    s.vars = vars;
    s.phase = MultiPoly(s.vars.size());
    s.a_exps = a_exps;
    return s;
  };
  switch (id.case_number()) {
    case 1:
      return V({}, {});
    case 2: {
      auto s = V({{'y', true, -9, 3}}, {3});
      return s;
    }
    case 3: {
      auto s = V({{'z', true, -6, 2}, {'y', false}}, {1, 0});
      s.phase.add(Rational(-1), {2, 3});  // -z^2 y^3
      return s;
    }
    case 4: {
      auto s = V({{'z', true, -6, 2}, {'y', true, -9, 3}}, {1, 3});
      s.phase.add(Rational(-1), {2, 3});
      return s;
    }
    case 5: {
      auto s = V({{'u', true, -9, 4}, {'z', false}, {'y', false}}, {0, 0, 0});
      s.phase.add(b, {1, 0, 0}).add(Rational(-1), {3, 2, 0}).add(Rational(-3), {1, 0, 2}).add(Rational(-3), {2, 1, 1});
      return s;
    }
    case 6: {
      auto s = V({{'u', true, -9, 4}, {'z', false}, {'y', true, -9, 3}}, {0, 0, 3});
      s.phase.add(Rational(-3), {1, 0, 2}).add(Rational(-3), {2, 1, 1}).add(Rational(-1), {3, 2, 0});
      return s;
    }
    case 7: {
      auto s = V({{'u', true, -9, 4}, {'z', true, -6, 2}, {'y', false}}, {0, 1, 0});
      s.phase.add(Rational(-1), {3, 2, 0}).add(Rational(-1), {0, 2, 3}).add(Rational(-3), {2, 2, 1}).add(Rational(-3), {1, 2, 2});
      return s;
    }
    case 8: {
      auto s = V({{'u', true, -9, 4}, {'z', true, -6, 2}, {'y', true, -3, 1}}, {0, 1, 3});
      s.phase.add(Rational(-1), {3, 2, 0}).add(Rational(-1), {0, 2, 3}).add(Rational(-3), {2, 2, 1}).add(Rational(-3), {1, 2, 2});
      return s;
    }
    case 9: {
      auto s = V({{'v', true, -3, 1}, {'u', false}}, {-1, 0});
      s.phase.add(c, {1, 0}).add(Rational(-1), {1, 3}).add(b, {1, 1});
      return s;
    }
    case 10: {
      auto s = V({{'v', true, -3, 1}, {'u', false}, {'y', true, -9, 3}}, {-1, 0, 3});
      s.phase.add(c, {1, 0, 0}).add(Rational(-1), {1, 3, 0}).add(b, {1, 1, 0}).add(Rational(-3), {0, 1, 1});
      return s;
    }
    case 11: {
      auto s = V({{'v', true, -3, 1}, {'u', false}, {'z', true, -6, 2}, {'y', false}}, {-1, 0, 1, 0});
      s.phase.add(Rational(1), {0, 0, 1, 0})
          .add(c, {1, 0, 0, 0})
          .add(Rational(-1), {1, 3, 0, 0})
          .add(b, {1, 1, 0, 0})
          .add(Rational(-3), {0, 1, 1, 1})
          .add(Rational(-1), {-1, 0, 2, 3});
      return s;
    }
    case 12: {
      auto s = V({{'v', true, -3, 1}, {'u', false}, {'z', true, -6, 2}, {'y', true, -9, 3}}, {-1, 0, 1, 3});
      s.phase.add(Rational(1), {0, 0, 1, 0})
          .add(c, {1, 0, 0, 0})
          .add(Rational(-1), {1, 3, 0, 0})
          .add(b, {1, 1, 0, 0})
          .add(Rational(-3), {0, 1, 1, 1})
          .add(Rational(-1), {-1, 0, 2, 3});
      return s;
    }
    case 13: {
      auto s = V({{'v', true, -3, 1}, {'u', true, -9, 4}, {'z', false}, {'y', false}}, {-1, 0, 0, 0});
      s.phase.add(c, {1, 0, 0, 0})
          .add(b, {1, 1, 0, 0})
          .add(Rational(-1), {1, 3, 0, 0})
          .add(Rational(-2), {0, 3, 1, 0})
          .add(Rational(-3), {0, 2, 0, 1})
          .add(Rational(-1), {-1, 3, 2, 0})
          .add(Rational(-3), {-1, 1, 0, 2})
          .add(Rational(-3), {-1, 2, 1, 1});
      return s;
    }
    case 14: {
      auto s = V({{'v', true, -3, 1}, {'u', true, -9, 4}, {'z', false}, {'y', true, -9, 3}}, {-1, 0, 0, 3});
      s.phase.add(c, {1, 0, 0, 0})
          .add(b, {1, 1, 0, 0})
          .add(Rational(-1), {1, 3, 0, 0})
          .add(Rational(-2), {0, 3, 1, 0})
          .add(Rational(-3), {0, 2, 0, 1})
          .add(Rational(-1), {-1, 3, 2, 0})
          .add(Rational(-3), {-1, 1, 0, 2})
          .add(Rational(-3), {-1, 2, 1, 1});
      return s;
    }
    case 15: {
      auto s = V({{'v', true, -3, 1}, {'u', true, -9, 4}, {'z', true, -6, 2}, {'y', false}}, {-1, 0, 1, 0});
      s.phase.add(c, {1, 0, 0, 0})
          .add(Rational(-1), {1, 3, 0, 0})
          .add(Rational(-2), {0, 3, 1, 0})
          .add(b, {1, 1, 0, 0})
          .add(Rational(-1), {-1, 3, 2, 0})
          .add(Rational(-3), {0, 2, 1, 1})
          .add(Rational(-1), {-1, 0, 2, 3})
          .add(Rational(-3), {-1, 2, 2, 1})
          .add(Rational(-3), {-1, 1, 2, 2});
      return s;
    }
    case 16: {
      auto s = V({{'v', true, -3, 1}, {'u', true, -9, 4}, {'z', true, -6, 2}, {'y', true, -9, 3}}, {-1, 0, 1, 3});
      s.phase.add(c, {1, 0, 0, 0})
          .add(b, {1, 1, 0, 0})
          .add(Rational(-1), {1, 3, 0, 0})
          .add(Rational(-2), {0, 3, 1, 0})
          .add(Rational(-3), {0, 2, 1, 1})
          .add(Rational(-1), {-1, 3, 2, 0})
          .add(Rational(-3), {-1, 2, 2, 1})
          .add(Rational(-3), {-1, 1, 2, 2})
          .add(Rational(-1), {-1, 0, 2, 3});
      return s;
    }
  }
  throw InvalidInput("bad case id");
}

long window_of(char name, const ShellWindows& w) {
  switch (name) {
    case 'v': return w.v;
    case 'u': return w.u;
    case 'z': return w.z;
    case 'y': return w.y;
  }
  throw InvalidInput("bad variable");
}

PhaseSum brute_case(const CaseId& id, const LocalParams& params, const NumericOptions& opts) {
  const long p = params.p;
  const ShellWindows w = opts.windows.value_or(ShellWindows::uniform(opts.vmin));
  BruteSpec spec = brute_spec(id, params);
  const size_t nv = spec.vars.size();

  PhaseSum sum(p);
  std::vector<MultiPoly> partials;
  for (size_t i = 0; i < nv; ++i) partials.push_back(spec.phase.partial(i));

  // enumerate shell assignments for outside variables
  std::vector<long> shells(nv, 0);
  std::function<void(size_t)> shell_loop = [&](size_t i) {
    if (i < nv && !spec.vars[i].outside) {
      shells[i] = 0;
      shell_loop(i + 1);
      return;
    }
    if (i < nv) {
      for (long V = window_of(spec.vars[i].name, w); V <= -1; ++V) {
        shells[i] = V;
        shell_loop(i + 1);
      }
      return;
    }

    // Lemma-1 multiplier order; the A-monomial lives on the shell variables
    // (for case 1 the multiplier is 1, of order 0)
    long aord = 0;
    for (size_t j = 0; j < nv; ++j) aord += spec.a_exps[j] * shells[j];
    ZetaExpr l1 = haar::lemma1_by_ord(aord, p);
    if (l1.is_zero()) return;

    // per-variable depths: every phase monomial of negative shell-order must
    // have second-order variation in Z_p (pairs of depths cover its order)
    struct PairNeed {
      size_t i, j;
      long need;
    };
    std::vector<PairNeed> constraints;
    for (const auto& t : spec.phase.terms) {
      long lb = ord_unchecked(t.c, p);
      for (size_t j = 0; j < nv; ++j) lb += t.e[j] * shells[j];
      if (lb >= 0) continue;
      // all slot pairs (i,j); i == j only when the monomial is nonlinear in
      // that variable
      for (size_t i1 = 0; i1 < nv; ++i1) {
        if (t.e[i1] == 0) continue;
        for (size_t i2 = i1; i2 < nv; ++i2) {
          if (t.e[i2] == 0) continue;
          if (i1 == i2 && t.e[i1] == 1) continue;
          constraints.push_back({i1, i2, -lb});
        }
      }
    }
    std::vector<long> depth(nv);
    std::vector<long> floor_depth(nv);
    for (size_t j = 0; j < nv; ++j) depth[j] = floor_depth[j] = spec.vars[j].outside ? 1 : 0;
    auto satisfied = [&]() {
      for (const auto& c : constraints)
        if (depth[c.i] + depth[c.j] < c.need) return false;
      return true;
    };
    while (!satisfied()) {
      for (const auto& c : constraints)
        while (depth[c.i] + depth[c.j] < c.need) (depth[c.i] <= depth[c.j] ? depth[c.i] : depth[c.j]) += 1;
    }
    // drop order-dependent overshoot: shrink any depth that is not needed
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (size_t j = 0; j < nv; ++j) {
        while (depth[j] > floor_depth[j]) {
          depth[j] -= 1;
          if (satisfied()) {
            shrunk = true;
          } else {
            depth[j] += 1;
            break;
          }
        }
      }
    }

    // cell grid budget
    unsigned long long cells = 1;
    for (size_t j = 0; j < nv; ++j) {
      unsigned long long per = 1;
      for (long d = 0; d < depth[j]; ++d) per *= static_cast<unsigned long long>(p);
      if (spec.vars[j].outside) per -= per / static_cast<unsigned long long>(p);
      if (per == 0) per = 1;
      if (cells > opts.work_limit / per)
        throw ResourceLimit("brute case grid over budget", opts.work_limit + 1);
      cells *= per;
    }

    // magnitude prefactor for this shell assignment
    ZetaExpr block = l1;
    for (size_t j = 0; j < nv; ++j)
      if (spec.vars[j].outside) block = block * shell_mag(p, spec.vars[j].mag_a, spec.vars[j].mag_b, shells[j]);

    // the first-order coset average kills a cell unless every partial
    // derivative is integral against the cell radius; partials whose
    // monomial bound already clears the radius need no per-cell check
    std::vector<char> check_partial(nv, 0);
    for (size_t j = 0; j < nv; ++j) {
      long minlb = kOrdInfinity;
      for (const auto& t : partials[j].terms) {
        long lb = ord_unchecked(t.c, p);
        for (size_t i2 = 0; i2 < nv; ++i2) lb += t.e[i2] * shells[i2];
        minlb = std::min(minlb, lb);
      }
      check_partial[j] = (minlb != kOrdInfinity && minlb + shells[j] + depth[j] < 0) ? 1 : 0;
    }

    Rational cell_measure(1);
    for (size_t j = 0; j < nv; ++j) cell_measure *= rational_pow(p, -shells[j] - depth[j]);

    // cells of each variable
    std::vector<std::vector<Rational>> var_cells(nv);
    for (size_t j = 0; j < nv; ++j) {
      Int pd = int_pow(Int(p), static_cast<unsigned long>(depth[j]));
      Rational scale = rational_pow(p, shells[j]);
      for (Int t = 0; t < pd; ++t) {
        if (spec.vars[j].outside && (t % p == 0)) continue;
        var_cells[j].push_back(scale * Rational(t));
      }
    }

    auto sweep = [&](size_t begin, size_t stride, std::map<Rational, Rational>& acc) {
      std::vector<Rational> reps(nv);
      std::function<void(size_t)> cell_loop = [&](size_t j) {
        if (j == nv) {
          for (size_t i2 = 0; i2 < nv; ++i2) {
            if (!check_partial[i2]) continue;
            long o = ord_unchecked(partials[i2].eval(reps), p);
            if (add_ord(o, shells[i2] + depth[i2]) < 0) return;
          }
          Rational value = spec.phase.eval(reps);
          acc[e_p(value, p).fraction()] += cell_measure;
          return;
        }
        if (j == 0) {
          for (size_t i = begin; i < var_cells[0].size(); i += stride) {
            reps[0] = var_cells[0][i];
            cell_loop(1);
          }
          return;
        }
        for (const Rational& r : var_cells[j]) {
          reps[j] = r;
          cell_loop(j + 1);
        }
      };
      cell_loop(nv == 0 ? nv : 0);
    };

    std::map<Rational, Rational> acc;
    int workers = counting::default_workers();
    if (nv == 0 || var_cells[0].size() < 2 * static_cast<size_t>(workers) || workers == 1) {
      sweep(0, 1, acc);
    } else {
      std::vector<std::map<Rational, Rational>> partial_acc(static_cast<size_t>(workers));
      std::vector<std::thread> threads;
      for (int w = 0; w < workers; ++w)
        threads.emplace_back(sweep, static_cast<size_t>(w), static_cast<size_t>(workers),
                             std::ref(partial_acc[static_cast<size_t>(w)]));
      for (auto& t : threads) t.join();
      for (const auto& m : partial_acc)
        for (const auto& [frac, meas] : m) acc[frac] += meas;
    }

    for (const auto& [frac, m] : acc)
      sum.add(CharValue::from_fraction(frac), block * ZetaExpr::constant(p, m));
  };
  shell_loop(0);
  return sum;
}

}  // namespace

// ---------------------------------------------------------------------------

NumericResult numeric_case(const CaseId& id, const LocalParams& params, const NumericOptions& opts) {
  const long p = params.p;
  require_prime(p);
  const int n = id.case_number();
  if (n == 15 && params.b % p == 0)
    throw UnsupportedRegime("[b-zero] case 15 numeric needs b a unit");
  if (n >= 5) require_units(params);
  if (n == 10 || n == 11 || n == 12) require_irreducible(params, "this case's numeric reduction");

  NumericResult res;
  if (opts.mode == NumericMode::ShellReduced) {
    CaseContext cc{p, params.b, params.c, opts.depth,
                   opts.windows.value_or(ShellWindows::uniform(opts.vmin)), opts.work_limit};
    ZetaExpr exact = shell_reduced(id, cc);
    res.exact_expr = exact;
    res.exact_zero = exact.is_zero();
    res.value = std::complex<double>(exact.is_zero() ? 0.0 : exact.eval(opts.s), 0.0);
    return res;
  }
  PhaseSum sum = brute_case(id, params, opts);
  res.exact_zero = sum.is_zero();
  res.value = res.exact_zero ? std::complex<double>(0, 0) : sum.eval(opts.s);
  if (sum.is_phase_free()) {
    res.exact_expr = sum.terms().empty() ? ZetaExpr::zero(p) : sum.terms().begin()->second;
  }
  return res;
}

Aggregate aggregate(const LocalParams& params) {
  validate_theorem_params(params);
  Aggregate agg(params.p);
  for (int idx = 0; idx < 16; ++idx) {
    CaseId id = CaseId::from_index(idx);
    ZetaExpr cf = closed_form(id, params);
    if (id.v_in())
      agg.iplus += cf;
    else
      agg.iminus += cf;
  }
  agg.total = agg.iplus + agg.iminus;
  return agg;
}

ZetaExpr main_theorem_target(long p) {
  ZetaExpr one = ZetaExpr::one(p);
  return (one - ZetaExpr::p_power_s(p, -3, 0)) * (one - ZetaExpr::p_power_s(p, -3, 1)) *
         (one - ZetaExpr::p_power_s(p, -6, 2));
}

ZetaExpr jr_reference_value(JrOrbit kind, long p) {
  require_prime(p);
  ZetaExpr one = ZetaExpr::one(p);
  ZetaExpr numerator = (one - ZetaExpr::p_power_s(p, -3, 0)) * (one - ZetaExpr::p_power_s(p, -3, 1)) *
                       (one - ZetaExpr::p_power_s(p, -6, 2)) * (one - ZetaExpr::p_power_s(p, -9, 3));
  switch (kind) {
    case JrOrbit::Split: {
      ZetaExpr d = one - ZetaExpr::p_power_s(p, -3, 1);
      return numerator / (d * d * d);
    }
    case JrOrbit::Quadratic:
      return numerator /
             ((one - ZetaExpr::p_power_s(p, -3, 1)) * (one - ZetaExpr::p_power_s(p, -6, 2)));
    case JrOrbit::CubeRootCubic:
      return numerator / (one - ZetaExpr::p_power_s(p, -9, 3));
  }
  throw InvalidInput("unknown orbit kind");
}

TheoremReport theorem_check(const LocalParams& params) {
  Aggregate agg = aggregate(params);
  TheoremReport rep(params.p);
  rep.total = agg.total;
  rep.target = main_theorem_target(params.p);
  rep.holds = ze_equals(rep.total, rep.target);
  rep.conjecture_assumed = params.assume_conjecture;
  rep.euler_quotient_consistent = ze_equals(jr_reference_value(JrOrbit::CubeRootCubic, params.p), rep.target);
  return rep;
}

CaseResult evaluate_case(const CaseId& id, const LocalParams& params,
                         const std::optional<NumericOptions>& numeric_opts) {
  CaseResult res(id, params.p);
  res.b = params.b;
  res.c = params.c;
  res.conjecture_assumed = params.assume_conjecture;
  res.closed = closed_form(id, params);
  if (numeric_opts) {
    res.numeric = numeric_case(id, params, *numeric_opts);
    res.s = numeric_opts->s;
    res.depth = numeric_opts->depth;
    res.vmin = numeric_opts->vmin;
    double closed_at_s = res.closed.is_zero() ? 0.0 : res.closed.eval(numeric_opts->s);
    double err = std::abs(res.numeric->value - std::complex<double>(closed_at_s, 0));
    res.agreement = err / std::max(1.0, std::abs(closed_at_s));
  }
  return res;
}

}  // namespace integrals
}  // namespace g2zeta
