#include <doctest.h>

#include "g2zeta/counting.hpp"

using namespace g2zeta;
using namespace g2zeta::counting;

TEST_CASE("polynomial parsing and canonical form") {
  Polynomial p = Polynomial::parse("-u^3 + 1*u + 2 - 3*u*y*r - y^3*r^2 + r", {"r", "y", "u"});
  CHECK(p.terms().size() == 6);
  CHECK(p.str() == "2 + u - u^3 + r - 3*r*y*u - r^2*y^3");
  // duplicate monomials merge, zero coefficients drop
  Polynomial q = Polynomial::parse("u + u - 2*u", {"u"});
  CHECK(q.terms().empty());
  CHECK_THROWS_AS(Polynomial::parse("u + w", {"u"}), InvalidInput);
  CHECK_THROWS_AS(Polynomial::parse("u +", {"u"}), InvalidInput);
  // substitution reduces arity
  Polynomial g = Polynomial::parse("r^2*u + 3*r + 1", {"r", "u"});
  Polynomial g2 = g.substitute_first(2, 25);
  CHECK(g2.vars().size() == 1);
  CHECK(g2.eval_mod(std::vector<uint64_t>{3}, 25) == (4 * 3 + 6 + 1) % 25);
}

TEST_CASE("count_brute basics") {
  Polynomial sq = Polynomial::parse("u^2 - 1", {"u"});
  CongruenceProblem prob{sq, 5, 1, {VarDomain::FullResidues}};
  CHECK(count_brute(prob) == 2);  // +-1

  CongruenceProblem conj = conjecture_problem(5, 1, 2);
  CHECK(count_brute(conj) == 24);  // p^2 - 1, g irreducible

  Polynomial psi1 = Polynomial::parse("w^2 + 3*w*y + 3*y^2 - 1", {"w", "y"});
  CongruenceProblem nprob{psi1, 5, 1, {VarDomain::FullResidues, VarDomain::FullResidues}};
  CHECK(count_brute(nprob) == 6);  // (p+1) p^(k-1)

  CongruenceProblem big{sq, 5, 1, {VarDomain::FullResidues}};
  CHECK_THROWS_AS(count_brute(big, 2), ResourceLimit);
}

TEST_CASE("count_brute respects unit constraints") {
  Polynomial f = Polynomial::parse("r*u - 1", {"r", "u"});
  CongruenceProblem prob{f, 5, 1, {VarDomain::UnitsOnly, VarDomain::FullResidues}};
  CHECK(count_brute(prob) == 4);  // r unit, u = r^-1
}

TEST_CASE("hensel lifting") {
  CongruenceProblem conj2 = conjecture_problem(5, 1, 2, 2);
  LiftCertificate cert = make_certificate(conj2);
  CHECK(cert.checked);
  CHECK(cert.base_solutions == 24);
  CHECK(hensel_count(conj2, 24, cert) == 600);
  CHECK(count_brute(conj2) == 600);  // brute force agrees

  CongruenceProblem conj3 = conjecture_problem(5, 1, 2, 3);
  CHECK(hensel_count(conj3, 24, cert) == 15000);
  CHECK(count_brute(conj3) == 15000);

  // zero base count lifts to zero
  CHECK(hensel_count(conj3, 0, cert) == 0);

  // two-variable problems are rejected (the psi1 analogue has its own op)
  Polynomial psi1 = Polynomial::parse("w^2 + 3*w*y + 3*y^2 - 1", {"w", "y"});
  CongruenceProblem nprob{psi1, 5, 2, {VarDomain::FullResidues, VarDomain::FullResidues}};
  LiftCertificate c2;
  c2.checked = true;
  c2.prime = 5;
  CHECK_THROWS_AS(hensel_count(nprob, 6, c2), InvalidInput);
}

TEST_CASE("certificate fails at a singular base solution") {
  // h = u^2: every solution has u = 0 mod p and the gradient vanishes there
  Polynomial h = Polynomial::parse("u^2", {"r", "y", "u"});
  CongruenceProblem prob{h, 5, 2, {VarDomain::FullResidues, VarDomain::FullResidues, VarDomain::FullResidues}};
  CHECK_THROWS_AS(make_certificate(prob), SingularPoint);
  try {
    make_certificate(prob);
  } catch (const SingularPoint& e) {
    CHECK(e.offending_tuple.find("(0,0,0)") != std::string::npos);
  }
}

TEST_CASE("solution_count_profile: brute levels then certified lift") {
  CongruenceProblem conj = conjecture_problem(5, 1, 2);
  auto counts = solution_count_profile(conj, 4, 2);
  REQUIRE(counts.size() == 5);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 24);
  CHECK(counts[2] == 600);
  CHECK(counts[3] == 15000);   // lifted
  CHECK(counts[4] == 375000);  // lifted
}

TEST_CASE("cubic root counts") {
  CHECK(cubic_root_count(1, 0, 5) == 3);  // roots 0, 1, 4
  CHECK(cubic_root_count(1, 2, 5) == 0);
  CHECK(cubic_root_count(1, 1, 5) == 1);  // u = 2
  CHECK(is_irreducible_cubic(1, 2, 5));
  CHECK_FALSE(is_irreducible_cubic(1, 0, 5));
  CHECK(is_irreducible_cubic(1, 3, 11));  // exhaustive root search mod 11

  // the double-root case is reported as 2, never folded into {0,1,3}
  CHECK(cubic_disc_vanishes(2, 1, 5));  // 4*8 - 27 = 5
  CHECK(cubic_root_count(2, 1, 5) == 2);
  for (long b = 1; b < 5; ++b)
    for (long c = 1; c < 5; ++c)
      if (!cubic_disc_vanishes(b, c, 5)) CHECK(cubic_root_count(b, c, 5) != 2);
}

TEST_CASE("irreducible g is a unit everywhere") {
  for (long p : {5L, 11L, 17L, 23L}) {
    for (long b = 1; b < p; ++b)
      for (long c = 1; c < p; ++c) {
        if (!is_irreducible_cubic(b, c, p)) continue;
        for (long u = 0; u < p; ++u) {
          long long g = ((-(long long)u * u % p * u + b * u + c) % p + p) % p;
          CHECK(g != 0);
        }
      }
  }
}

TEST_CASE("psi1 counts match the norm-form prediction") {
  CountReport r1 = psi1_count(1, 5, 1);
  CHECK(r1.count == 6);
  CHECK(*r1.predicted == 6);

  CountReport r2 = psi1_count(2, 5, 2);
  CHECK(r2.count == 30);

  CountReport r3 = psi1_count(1, 11, 1);
  CHECK(r3.count == 12);

  CHECK_THROWS_AS(psi1_count(1, 7, 1), PreconditionError);  // 7 = 1 mod 6
  CHECK_THROWS_AS(psi1_count(5, 5, 1), PreconditionError);  // b not a unit

  // all unit b at once, p in {5, 11}, k <= 2 (k = 3 runs in the acceptance suite)
  for (long p : {5L, 11L}) {
    for (long k = 1; k <= 2; ++k) {
      auto hist = psi1_histogram(p, k);
      unsigned long long predicted = static_cast<unsigned long long>(p + 1);
      for (long i = 1; i < k; ++i) predicted *= static_cast<unsigned long long>(p);
      for (uint64_t b = 0; b < hist.size(); ++b) {
        if (b % static_cast<uint64_t>(p) == 0) continue;
        CHECK(hist[b] == predicted);
      }
    }
  }
}

TEST_CASE("verify_conjecture sweeps") {
  ConjectureReport rep = verify_conjecture(5);
  CHECK(rep.pairs_tested == 8);
  CHECK(rep.all_match());
  CHECK(rep.expected == 24);

  ConjectureReport rep11 = verify_conjecture(11);
  CHECK(rep11.expected == 120);
  CHECK(rep11.all_match());

  CHECK_THROWS_AS(verify_conjecture(7), PreconditionError);

  // sampling is deterministic in the seed
  ConjectureOptions opts;
  opts.sample = true;
  opts.sample_size = 5;
  opts.seed = 42;
  ConjectureReport s1 = verify_conjecture(17, opts);
  ConjectureReport s2 = verify_conjecture(17, opts);
  CHECK(s1.pairs_tested == 5);
  CHECK(s1.sampled);
  CHECK(s1.seed == 42);
  CHECK(s1.all_match());
  CHECK(s2.all_match());
}

TEST_CASE("optimized conjecture counter matches the generic one") {
  for (long p : {5L, 11L}) {
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c) {
        CHECK(count_conjecture_tuples(p, 1, b, c) ==
              count_brute(conjecture_problem(p, b, c, 1)));
      }
  }
  CHECK(count_conjecture_tuples(5, 2, 1, 2) == count_brute(conjecture_problem(5, 1, 2, 2)));
}

TEST_CASE("congruence problem validation") {
  Polynomial f = Polynomial::parse("u", {"u"});
  CongruenceProblem bad_k{f, 5, 0, {VarDomain::FullResidues}};
  CHECK_THROWS_AS(bad_k.validate(), InvalidInput);
  CongruenceProblem bad_p{f, 6, 1, {VarDomain::FullResidues}};
  CHECK_THROWS_AS(bad_p.validate(), InvalidInput);
  CongruenceProblem bad_arity{f, 5, 1, {}};
  CHECK_THROWS_AS(bad_arity.validate(), InvalidInput);
}
