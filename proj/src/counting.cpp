#include "g2zeta/counting.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "g2zeta/padic.hpp"

namespace g2zeta {
namespace counting {

namespace {

uint64_t pow_mod(uint64_t base, unsigned e, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

uint64_t coeff_mod(long long c, uint64_t m) {
  long long r = c % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<uint64_t>(r);
}

}  // namespace

void Polynomial::add_term(long long coeff, std::vector<unsigned> exps) {
  if (exps.size() != vars_.size()) throw InvalidInput("exponent vector arity mismatch");
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const std::vector<unsigned>& e) { return t.exps < e; });
  if (it != terms_.end() && it->exps == exps) {
    it->coeff += coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{coeff, std::move(exps)});
  }
}

uint64_t Polynomial::eval_mod(std::span<const uint64_t> point, uint64_t mod) const {
  uint64_t sum = 0;
  for (const Term& t : terms_) {
    uint64_t v = coeff_mod(t.coeff, mod);
    for (size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) v = v * pow_mod(point[i], t.exps[i], mod) % mod;
    sum = (sum + v) % mod;
  }
  return sum;
}

Polynomial Polynomial::substitute_first(uint64_t value, uint64_t mod) const {
  Polynomial out(std::vector<std::string>(vars_.begin() + 1, vars_.end()));
  for (const Term& t : terms_) {
    uint64_t c = coeff_mod(t.coeff, mod);
    if (t.exps[0]) c = c * pow_mod(value, t.exps[0], mod) % mod;
    out.add_term(static_cast<long long>(c), std::vector<unsigned>(t.exps.begin() + 1, t.exps.end()));
  }
  return out;
}

Polynomial Polynomial::derivative(size_t var) const {
  Polynomial out(vars_);
  for (const Term& t : terms_) {
    if (t.exps[var] == 0) continue;
    std::vector<unsigned> e = t.exps;
    long long c = t.coeff * static_cast<long long>(e[var]);
    e[var] -= 1;
    out.add_term(c, std::move(e));
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    long long c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool printed = false;
    if (c != 1 || std::all_of(t.exps.begin(), t.exps.end(), [](unsigned e) { return e == 0; })) {
      os << c;
      printed = true;
    }
    for (size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (printed) os << "*";
      os << vars_[i];
      if (t.exps[i] > 1) os << "^" << t.exps[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

// Minimal recursive-descent parser for integer polynomials.
class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw InvalidInput("unexpected trailing input in polynomial: '" + s_.substr(pos_) + "'");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = zero();
    bool neg = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    add_in(acc, term(), neg);
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      add_in(acc, term(), c == '-');
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc = mul(acc, factor());
    }
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial p = expr();
      skip_ws();
      if (get() != ')') throw InvalidInput("missing ')' in polynomial");
      return maybe_pow(p);
    }
    if (c == '-') {
      get();
      Polynomial p = factor();
      return mul(constant(-1), p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
      return maybe_pow(constant(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw InvalidInput("unknown variable '" + name + "' in polynomial");
      std::vector<unsigned> e(vars_.size(), 0);
      e[static_cast<size_t>(it - vars_.begin())] = 1;
      Polynomial p = zero();
      p.add_term(1, std::move(e));
      return maybe_pow(p);
    }
    throw InvalidInput(std::string("unexpected character '") + c + "' in polynomial");
  }

  Polynomial maybe_pow(Polynomial base) {
    skip_ws();
    if (peek() != '^') return base;
    get();
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw InvalidInput("exponent must be a nonnegative integer");
    unsigned e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) e = e * 10 + static_cast<unsigned>(get() - '0');
    Polynomial acc = constant(1);
    for (unsigned i = 0; i < e; ++i) acc = mul(acc, base);
    return acc;
  }

  Polynomial zero() const { return Polynomial(vars_); }
  Polynomial constant(long long v) const {
    Polynomial p(vars_);
    p.add_term(v, std::vector<unsigned>(vars_.size(), 0));
    return p;
  }
  static void add_in(Polynomial& acc, const Polynomial& p, bool neg) {
    for (const auto& t : p.terms()) acc.add_term(neg ? -t.coeff : t.coeff, t.exps);
  }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const {
    Polynomial out(vars_);
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms()) {
        std::vector<unsigned> e(vars_.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ta.exps[i] + tb.exps[i];
        out.add_term(ta.coeff * tb.coeff, std::move(e));
      }
    return out;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

void CongruenceProblem::validate() const {
  require_prime(prime);
  if (exponent < 1) throw InvalidInput("congruence exponent must be >= 1");
  if (domains.size() != poly.nvars()) throw InvalidInput("domain list arity mismatch");
}

uint64_t CongruenceProblem::modulus() const {
  uint64_t m = 1;
  for (long i = 0; i < exponent; ++i) m *= static_cast<uint64_t>(prime);
  return m;
}

unsigned long long CongruenceProblem::tuple_count() const {
  unsigned long long total = 1;
  const unsigned long long m = modulus();
  const unsigned long long units = m - m / static_cast<unsigned long long>(prime);
  for (VarDomain d : domains) {
    unsigned long long per = d == VarDomain::UnitsOnly ? units : m;
    if (total > ~0ULL / per) return ~0ULL;
    total *= per;
  }
  return total;
}

namespace {

unsigned long long count_rec(const Polynomial& poly, std::span<const VarDomain> domains, uint64_t m,
                             long p) {
  if (domains.size() == 1) {
    unsigned long long cnt = 0;
    const bool units = domains[0] == VarDomain::UnitsOnly;
    // Horner on the single remaining variable.
    unsigned deg = 0;
    for (const auto& t : poly.terms()) deg = std::max(deg, t.exps[0]);
    std::vector<uint64_t> coef(deg + 1, 0);
    for (const auto& t : poly.terms()) coef[t.exps[0]] = (coef[t.exps[0]] + coeff_mod(t.coeff, m)) % m;
    for (uint64_t v = 0; v < m; ++v) {
      if (units && v % static_cast<uint64_t>(p) == 0) continue;
      uint64_t acc = 0;
      for (size_t i = coef.size(); i-- > 0;) acc = (acc * v + coef[i]) % m;
      if (acc == 0) ++cnt;
    }
    return cnt;
  }
  unsigned long long cnt = 0;
  const bool units = domains[0] == VarDomain::UnitsOnly;
  for (uint64_t v = 0; v < m; ++v) {
    if (units && v % static_cast<uint64_t>(p) == 0) continue;
    cnt += count_rec(poly.substitute_first(v, m), domains.subspan(1), m, p);
  }
  return cnt;
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("G2ZETA_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

unsigned long long count_brute(const CongruenceProblem& prob, unsigned long long work_limit,
                               int workers) {
  prob.validate();
  const unsigned long long work = prob.tuple_count();
  if (work > work_limit) throw ResourceLimit("brute-force count over budget", work);
  const uint64_t m = prob.modulus();
  const long p = prob.prime;
  if (prob.poly.nvars() == 0) throw InvalidInput("polynomial must have at least one variable");

  if (workers <= 0) workers = default_workers();
  if (prob.poly.nvars() == 1 || workers == 1 || m < 64) {
    std::vector<VarDomain> doms = prob.domains;
    return count_rec(prob.poly, doms, m, p);
  }

  // Partition the first variable across workers; the partial counts sum
  // exactly regardless of the partition.
  std::vector<uint64_t> firsts;
  const bool units = prob.domains[0] == VarDomain::UnitsOnly;
  for (uint64_t v = 0; v < m; ++v)
    if (!units || v % static_cast<uint64_t>(p) != 0) firsts.push_back(v);
  std::vector<unsigned long long> partial(static_cast<size_t>(workers), 0);
  std::vector<std::thread> threads;
  std::span<const VarDomain> rest(prob.domains.data() + 1, prob.domains.size() - 1);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      unsigned long long local = 0;
      for (size_t i = static_cast<size_t>(w); i < firsts.size(); i += static_cast<size_t>(workers))
        local += count_rec(prob.poly.substitute_first(firsts[i], m), rest, m, p);
      partial[static_cast<size_t>(w)] = local;
    });
  }
  for (auto& t : threads) t.join();
  unsigned long long total = 0;
  for (auto c : partial) total += c;
  return total;
}

LiftCertificate make_certificate(const CongruenceProblem& base_problem) {
  CongruenceProblem base = base_problem;
  base.exponent = 1;
  base.validate();
  const uint64_t p = static_cast<uint64_t>(base.prime);
  const size_t n = base.poly.nvars();
  std::vector<Polynomial> grads;
  for (size_t i = 0; i < n; ++i) grads.push_back(base.poly.derivative(i));

  LiftCertificate cert;
  cert.prime = base.prime;
  std::vector<uint64_t> point(n, 0);
  // Enumerate base solutions.
  std::vector<size_t> radix(n);
  unsigned long long total = 1;
  for (size_t i = 0; i < n; ++i) total *= p;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    unsigned long long t = idx;
    bool skip = false;
    for (size_t i = 0; i < n; ++i) {
      point[i] = t % p;
      t /= p;
      if (base.domains[i] == VarDomain::UnitsOnly && point[i] == 0) skip = true;
    }
    if (skip) continue;
    if (base.poly.eval_mod(point, p) != 0) continue;
    ++cert.base_solutions;
    bool nonzero = false;
    for (size_t i = 0; i < n && !nonzero; ++i)
      if (grads[i].eval_mod(point, p) != 0) nonzero = true;
    if (!nonzero) {
      std::ostringstream os;
      os << "(";
      for (size_t i = 0; i < n; ++i) os << (i ? "," : "") << point[i];
      os << ") mod " << p;
      throw SingularPoint("gradient vanishes at base solution", os.str());
    }
  }
  cert.checked = true;
  return cert;
}

unsigned long long hensel_count(const CongruenceProblem& prob, unsigned long long base_count,
                                const LiftCertificate& cert) {
  prob.validate();
  if (prob.poly.nvars() != 3)
    throw InvalidInput("hensel_count lifts the three-variable setting only (arity " +
                       std::to_string(prob.poly.nvars()) + ")");
  if (!cert.checked || cert.prime != prob.prime)
    throw PreconditionError("lift certificate missing or for the wrong prime");
  unsigned long long c = base_count;
  for (long j = 1; j < prob.exponent; ++j)
    c *= static_cast<unsigned long long>(prob.prime) * static_cast<unsigned long long>(prob.prime);
  return c;
}

std::vector<Int> solution_count_profile(const CongruenceProblem& prob, long jmax, long brute_cap,
                                        unsigned long long work_limit) {
  prob.validate();
  std::vector<Int> counts;
  counts.push_back(Int(1));  // C_0
  const size_t n = prob.poly.nvars();
  long last_brute = 0;
  for (long j = 1; j <= jmax && j <= brute_cap; ++j) {
    CongruenceProblem level = prob;
    level.exponent = j;
    if (level.tuple_count() > work_limit) break;
    counts.push_back(Int(count_brute(level, work_limit)));
    last_brute = j;
  }
  if (last_brute < jmax) {
    make_certificate(prob);  // throws SingularPoint when not liftable
    Int step = int_pow(Int(prob.prime), static_cast<unsigned long>(n - 1));
    // Consistency of the lift factor across the brute levels.
    for (long j = 1; j < last_brute; ++j) {
      if (counts[static_cast<size_t>(j + 1)] != counts[static_cast<size_t>(j)] * step)
        throw ArithmeticError("lift factor disagrees with brute-force counts at level " +
                              std::to_string(j + 1));
    }
    if (last_brute == 0)
      throw ResourceLimit("no brute-force level fits the budget", prob.tuple_count());
    for (long j = last_brute; j < jmax; ++j) counts.push_back(counts.back() * step);
  }
  return counts;
}

int cubic_root_count(long b, long c, long p) {
  require_prime(p);
  int roots = 0;
  for (long u = 0; u < p; ++u) {
    long long v = ((-(long long)u * u % p * u + (long long)b * u + c) % p + p) % p;
    if (v == 0) ++roots;
  }
  return roots;
}

bool cubic_disc_vanishes(long b, long c, long p) {
  require_prime(p);
  long long d = ((4 * (long long)b % p * b % p * b - 27 * (long long)c % p * c) % p + p) % p;
  return d == 0;
}

bool is_irreducible_cubic(long b, long c, long p) { return cubic_root_count(b, c, p) == 0; }

std::vector<unsigned long long> psi1_histogram(long p, long k, unsigned long long work_limit) {
  require_prime(p);
  if (k < 1) throw InvalidInput("exponent must be >= 1");
  uint64_t m = 1;
  for (long i = 0; i < k; ++i) m *= static_cast<uint64_t>(p);
  if (m * m > work_limit) throw ResourceLimit("psi1 histogram over budget", m * m);
  std::vector<unsigned long long> hist(m, 0);
  for (uint64_t w = 0; w < m; ++w) {
    uint64_t w2 = w * w % m;
    uint64_t w3 = 3 * w % m;
    for (uint64_t y = 0; y < m; ++y) {
      uint64_t v = (w2 + w3 * y + 3 * y % m * y) % m;
      ++hist[v];
    }
  }
  return hist;
}

CountReport psi1_count(long b, long p, long k, unsigned long long work_limit) {
  require_prime(p);
  if (p % 6 != 5)
    throw PreconditionError("psi1_count needs p = 5 (mod 6) so x^2+x+1 is irreducible mod p; got p = " +
                            std::to_string(p));
  if (b % p == 0) throw PreconditionError("b must be a unit mod p");
  Polynomial poly = Polynomial::parse("w^2 + 3*w*y + 3*y^2 - (" + std::to_string(b) + ")", {"w", "y"});
  CongruenceProblem prob{poly, p, k, {VarDomain::FullResidues, VarDomain::FullResidues}};
  CountReport rep{prob};
  rep.method = "bruteForce";
  rep.count = count_brute(prob, work_limit);
  unsigned long long pred = static_cast<unsigned long long>(p + 1);
  for (long i = 1; i < k; ++i) pred *= static_cast<unsigned long long>(p);
  rep.predicted = pred;
  rep.predicted_label = "(p+1)p^(k-1)";
  return rep;
}

CongruenceProblem conjecture_problem(long p, long b, long c, long k) {
  Polynomial poly({"r", "y", "u"});
  poly.add_term(-1, {0, 0, 3});
  poly.add_term(b, {0, 0, 1});
  poly.add_term(c, {0, 0, 0});
  poly.add_term(-3, {1, 1, 1});
  poly.add_term(-1, {2, 3, 0});
  poly.add_term(1, {1, 0, 0});
  return CongruenceProblem{poly, p, k, {VarDomain::UnitsOnly, VarDomain::FullResidues, VarDomain::FullResidues}};
}

unsigned long long count_conjecture_tuples(long p, long k, long b, long c) {
  uint64_t m = 1;
  for (long i = 0; i < k; ++i) m *= static_cast<uint64_t>(p);
  std::vector<uint64_t> g(m);
  for (uint64_t u = 0; u < m; ++u) {
    uint64_t u3 = u * u % m * u % m;
    g[u] = ((m - u3) + coeff_mod(b, m) * u + coeff_mod(c, m)) % m;
  }
  unsigned long long count = 0;
  for (uint64_t r = 0; r < m; ++r) {
    if (r % static_cast<uint64_t>(p) == 0) continue;
    uint64_t r2 = r * r % m;
    for (uint64_t y = 0; y < m; ++y) {
      uint64_t a = 3 * y % m * r % m;                      // coefficient of u
      uint64_t y3 = y * y % m * y % m;
      uint64_t t = (y3 * r2 % m + m - r) % m;              // constant term
      // count u with g[u] == a*u + t, incrementally
      for (uint64_t u = 0; u < m; ++u) {
        if (g[u] == t) ++count;
        t += a;
        if (t >= m) t -= m;
      }
    }
  }
  return count;
}

ConjectureReport verify_conjecture(long p, const ConjectureOptions& opts) {
  require_prime(p);
  if (p % 6 != 5)
    throw PreconditionError("Conjecture 1 is stated for p = 5 (mod 6); got p = " + std::to_string(p) +
                            " = " + std::to_string(p % 6) + " (mod 6)");
  ConjectureReport rep;
  rep.prime = p;
  rep.expected = static_cast<unsigned long long>(p) * p - 1;

  std::vector<std::pair<long, long>> pairs;
  for (long b = 1; b < p; ++b)
    for (long c = 1; c < p; ++c)
      if (is_irreducible_cubic(b, c, p)) pairs.emplace_back(b, c);
  if (pairs.empty()) return rep;  // cannot happen for p >= 5; empty report as a guard

  if (opts.sample && opts.sample_size < pairs.size()) {
    rep.sampled = true;
    rep.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::vector<std::pair<long, long>> chosen;
    std::vector<char> used(pairs.size(), 0);
    std::uniform_int_distribution<size_t> dist(0, pairs.size() - 1);
    while (chosen.size() < opts.sample_size) {
      size_t i = dist(rng);
      if (used[i]) continue;
      used[i] = 1;
      chosen.push_back(pairs[i]);
    }
    std::sort(chosen.begin(), chosen.end());
    pairs = std::move(chosen);
  }

  int workers = opts.workers > 0 ? opts.workers : default_workers();
  std::vector<unsigned long long> counts(pairs.size(), 0);
  auto run = [&](size_t from) {
    for (size_t i = from; i < pairs.size(); i += static_cast<size_t>(workers))
      counts[i] = count_conjecture_tuples(p, 1, pairs[i].first, pairs[i].second);
  };
  if (workers == 1 || pairs.size() < 2) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, static_cast<size_t>(w));
    for (auto& t : threads) t.join();
  }

  rep.pairs_tested = pairs.size();
  for (size_t i = 0; i < pairs.size(); ++i)
    if (counts[i] != rep.expected)
      rep.counterexamples.push_back({pairs[i].first, pairs[i].second, counts[i]});
  return rep;
}

}  // namespace counting
}  // namespace g2zeta
