#pragma once

#include <cstdint>
#include <vector>

namespace metasum {

using i64 = std::int64_t;

/// Non-negative residue of `a` modulo `m` (m >= 1).
i64 mod(i64 a, i64 m);

/// gcd on absolute values; gcd(0, n) = |n|.
i64 gcd(i64 a, i64 b);

i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 base, i64 exp, i64 m);

struct Bezout {
  i64 g;
  i64 x;
  i64 y;
};

/// Extended Euclid: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
Bezout extended_gcd(i64 a, i64 b);

/// Least n >= 1 with r^n = 1 (mod m). Requires gcd(r, m) = 1; for m = 1 returns 1.
i64 multiplicative_order(i64 r, i64 m);

struct PrimePower {
  i64 prime;
  int exponent;
};

std::vector<PrimePower> factorize(i64 n);
std::vector<i64> prime_divisors(i64 n);

/// Largest divisor of n whose prime factors all lie in `primes`.
i64 part_over(i64 n, const std::vector<i64>& primes);

i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

}  // namespace metasum
