#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "g2zeta/haar.hpp"

namespace g2zeta {
namespace integrals {

/// One of the sixteen sub-integrals, indexed by whether each of (v,u,z,y)
/// lies in Z_p (+) or Q_p - Z_p (-).
class CaseId {
 public:
  static CaseId parse(const std::string& signs);  // e.g. "+-++"
  static CaseId from_index(int idx);               // 0 = ++++, 15 = ----

  /// true = the variable stays in Z_p.
  bool v_in() const { return signs_[0]; }
  bool u_in() const { return signs_[1]; }
  bool z_in() const { return signs_[2]; }
  bool y_in() const { return signs_[3]; }
  bool inside(int i) const { return signs_[static_cast<size_t>(i)]; }

  int index() const;       // 0..15
  int case_number() const { return index() + 1; }  // 1..16 in display order
  std::string str() const;

  friend bool operator==(const CaseId& a, const CaseId& b) { return a.signs_ == b.signs_; }

 private:
  std::array<bool, 4> signs_{};  // (v,u,z,y), true = '+'
};

/// Local data at the prime: sigma = (1,0,b,c) with b,c units.
struct LocalParams {
  long p = 5;
  long b = 1;
  long c = 2;
  bool assume_conjecture = true;
  /// Measured N(-1) for the conjecture-free Case 11 form; when set and
  /// assume_conjecture is false, Case 11 uses
  /// (1-q^3) p^(9s-3)... the general N(-1)-parameterized value.
  std::optional<unsigned long long> n_minus1;
};

/// Distinct theorem-mode rejections: p = 2 or 3, p = 1 (mod 6), non-unit
/// b or c, reducible g. Throws the matching error type.
void validate_theorem_params(const LocalParams& params);

/// The paper's closed form for one case, as an exact rational function of q.
ZetaExpr closed_form(const CaseId& id, const LocalParams& params);

/// Per-variable truncation windows for the shell sums: each variable outside
/// Z_p ranges over valuations [lo, -1]. Defaults come from the global vmin.
struct ShellWindows {
  long v = -10, u = -10, z = -10, y = -10;
  static ShellWindows uniform(long vmin) { return {vmin, vmin, vmin, vmin}; }
};

enum class NumericMode {
  /// The paper's reduced shell sums: unit integrals collapsed by Lemma 3,
  /// inner x-integral by Lemma 1, residual solution measures by certified
  /// ord profiles and counted congruences. Exact output.
  ShellReduced,
  /// Direct cell enumeration of the case's first displayed integrand with
  /// exact phases (no reduction steps); feasible only at shallow windows.
  Brute,
};

struct NumericResult {
  std::complex<double> value{0, 0};
  bool exact_zero = false;
  /// Set when the truncated sum collapses to a phase-free rational function
  /// of q (always the case in ShellReduced mode); value is its substitution
  /// at s.
  std::optional<ZetaExpr> exact_expr;
};

struct NumericOptions {
  double s = 1.1;
  long depth = 4;    // brute-count / refinement budget per level
  long vmin = -10;   // global shell truncation
  std::optional<ShellWindows> windows;  // overrides vmin when set
  NumericMode mode = NumericMode::ShellReduced;
  unsigned long long work_limit = haar::kDefaultWorkLimit;
};

/// Truncated numeric evaluation of the case's displayed integrand; exact in
/// phases and coefficients, deterministic in (depth, windows).
NumericResult numeric_case(const CaseId& id, const LocalParams& params, const NumericOptions& opts);

struct Aggregate {
  ZetaExpr iplus, iminus, total;
  Aggregate(long p) : iplus(ZetaExpr::zero(p)), iminus(ZetaExpr::zero(p)), total(ZetaExpr::zero(p)) {}
};

/// Sums of the eight +*** and eight -*** closed forms, plus their total.
Aggregate aggregate(const LocalParams& params);

struct TheoremReport {
  bool holds = false;
  bool euler_quotient_consistent = false;
  bool conjecture_assumed = true;
  ZetaExpr total, target;
  TheoremReport(long p) : total(ZetaExpr::zero(p)), target(ZetaExpr::zero(p)) {}
};

/// Main Theorem: total == (1-q^3)(1-pq^3)(1-p^2 q^6), checked exactly, plus
/// the Euler-factor consistency with the Jiang-Rallis cube-root quotient.
TheoremReport theorem_check(const LocalParams& params);

enum class JrOrbit { Split, Quadratic, CubeRootCubic };

/// The three Jiang-Rallis Theorem-2 quotients.
ZetaExpr jr_reference_value(JrOrbit kind, long p);

/// Main Theorem right-hand side (1-q^3)(1-pq^3)(1-p^2 q^6).
ZetaExpr main_theorem_target(long p);

struct CaseResult {
  CaseId id;
  long p, b, c;
  ZetaExpr closed;
  std::optional<NumericResult> numeric;
  std::optional<double> agreement;  // |numeric - closed(s)| / max(1, |closed(s)|)
  bool conjecture_assumed = true;
  double s = 0;
  long depth = 0, vmin = 0;
  CaseResult(CaseId i, long prime) : id(i), p(prime), b(0), c(0), closed(ZetaExpr::zero(prime)) {}
};

/// closed_form + numeric_case + agreement in one report.
CaseResult evaluate_case(const CaseId& id, const LocalParams& params,
                         const std::optional<NumericOptions>& numeric_opts);

}  // namespace integrals
}  // namespace g2zeta
