#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g2zeta/errors.hpp"
#include "g2zeta/rational.hpp"

namespace g2zeta {
namespace counting {

/// Sparse multivariate polynomial with integer coefficients, in canonical
/// form: named ordered variables, monomials sorted by exponent vector, no
/// zero coefficients, no duplicate monomials.
class Polynomial {
 public:
  struct Term {
    long long coeff;
    std::vector<unsigned> exps;  // one per variable
  };

  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  /// Parses sums of products of integer constants and powers of named
  /// variables, e.g. "-u^3 + b*u + c" after substituting numbers for b, c.
  static Polynomial parse(const std::string& text, const std::vector<std::string>& vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t nvars() const { return vars_.size(); }

  void add_term(long long coeff, std::vector<unsigned> exps);

  uint64_t eval_mod(std::span<const uint64_t> point, uint64_t mod) const;
  /// Substitutes a value for the first variable, reducing coefficients mod m.
  Polynomial substitute_first(uint64_t value, uint64_t mod) const;
  Polynomial derivative(size_t var) const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

enum class VarDomain { FullResidues, UnitsOnly };

struct CongruenceProblem {
  Polynomial poly;
  long prime;
  long exponent;  // k >= 1, modulus p^k
  std::vector<VarDomain> domains;

  void validate() const;
  uint64_t modulus() const;
  /// Number of tuples a brute-force sweep enumerates.
  unsigned long long tuple_count() const;
};

struct CountReport {
  explicit CountReport(CongruenceProblem prob) : problem(std::move(prob)) {}
  CongruenceProblem problem;
  unsigned long long count = 0;
  std::string method;  // "bruteForce" or "henselLift"
  std::optional<unsigned long long> predicted;
  std::string predicted_label;
  double elapsed_ms = 0;
};

inline constexpr unsigned long long kDefaultCountLimit = 600'000'000ULL;

/// Exact number of solutions of poly == 0 mod p^k over the stated domains.
/// Parallel across the first variable. Throws ResourceLimit beyond the work
/// limit.
unsigned long long count_brute(const CongruenceProblem& prob,
                               unsigned long long work_limit = kDefaultCountLimit, int workers = 0);

/// Certificate that every base solution (k = 1) has nonvanishing gradient
/// mod p, so one congruence in n variables lifts with factor p^(n-1) per
/// level.
struct LiftCertificate {
  long prime = 0;
  unsigned long long base_solutions = 0;
  bool checked = false;
};

/// Enumerates all k = 1 solutions and checks the gradient at each; throws
/// SingularPoint listing the first offending tuple.
LiftCertificate make_certificate(const CongruenceProblem& base_problem);

/// Corollary-2 lifted count for the three-variable setting: count at level k
/// equals baseCount * p^(2(k-1)). Rejects arities other than 3.
unsigned long long hensel_count(const CongruenceProblem& prob, unsigned long long base_count,
                                const LiftCertificate& cert);

/// Solution counts C_j of poly == 0 mod p^j for j = 0..jmax (C_0 = 1), brute
/// force up to brute_cap and certified p^(n-1)-lifting beyond. Lifting
/// requires the certificate to hold; brute levels cross-check the lift
/// factor where both are available.
std::vector<Int> solution_count_profile(const CongruenceProblem& prob, long jmax, long brute_cap,
                                        unsigned long long work_limit = kDefaultCountLimit);

/// N(b,c): distinct roots of g(u) = -u^3 + b u + c mod p. {0,1,3} away from
/// vanishing discriminant; a double root shows up as 2 and is flagged by
/// cubic_disc_vanishes.
int cubic_root_count(long b, long c, long p);

/// disc(g) = 4 b^3 - 27 c^2 == 0 mod p (the P-invariant of the associated
/// quadruple).
bool cubic_disc_vanishes(long b, long c, long p);

/// A cubic over F_p is irreducible iff it has no root.
bool is_irreducible_cubic(long b, long c, long p);

/// Count of w^2 + 3wy + 3y^2 == b mod p^k against the norm-form prediction
/// (p+1) p^(k-1). Requires p == 5 (mod 6) and b a unit.
CountReport psi1_count(long b, long p, long k,
                       unsigned long long work_limit = kDefaultCountLimit);

/// One pass over (w,y) mod p^k giving the count for every residue b.
std::vector<unsigned long long> psi1_histogram(long p, long k,
                                               unsigned long long work_limit = kDefaultCountLimit);

/// The Conjecture-1 congruence g(u) == 3uyr + y^3 r^2 - r as a polynomial in
/// (r, y, u), with domains (units, full, full).
CongruenceProblem conjecture_problem(long p, long b, long c, long k = 1);

struct ConjecturePairResult {
  long b, c;
  unsigned long long count;
};

struct ConjectureReport {
  long prime = 0;
  bool sampled = false;
  unsigned long long seed = 0;
  unsigned long long pairs_tested = 0;
  unsigned long long expected = 0;  // p^2 - 1
  std::vector<ConjecturePairResult> counterexamples;
  bool all_match() const { return pairs_tested > 0 && counterexamples.empty(); }
};

struct ConjectureOptions {
  bool sample = false;
  unsigned long long sample_size = 50;
  unsigned long long seed = 1;
  int workers = 0;
};

/// Checks Conjecture 1 for every (or a seeded sample of) unit pair (b,c)
/// with g irreducible mod p. p must be 5 mod 6.
ConjectureReport verify_conjecture(long p, const ConjectureOptions& opts = {});

/// Fast exact count of Conjecture-1 tuples mod p^k (brute force with an
/// incremental inner loop; used by the sweeps and by the deep-shell
/// integrators).
unsigned long long count_conjecture_tuples(long p, long k, long b, long c);

int default_workers();

}  // namespace counting
}  // namespace g2zeta
