#include "g2zeta/rational.hpp"

#include <ostream>

namespace g2zeta {

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.raw(); }

Rational rational_pow(long p, long e) {
  Int num = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) num *= p;
  if (e >= 0) return Rational(num);
  return Rational(Int(1), num);
}

Int int_pow(const Int& base, unsigned long e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

namespace {

using u128 = unsigned __int128;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((u128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = static_cast<uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic below 3.3 * 10^24.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, static_cast<uint64_t>(n));
    if (x == 1 || x == static_cast<uint64_t>(n - 1)) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, static_cast<uint64_t>(n));
      if (x == static_cast<uint64_t>(n - 1)) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace g2zeta
