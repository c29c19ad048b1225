#include "metasum/numtheory.hpp"

#include <algorithm>

#include "metasum/errors.hpp"

namespace metasum {

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

i64 powmod(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Bezout extended_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_x = 1, x = 0;
  i64 old_y = 0, y = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

i64 multiplicative_order(i64 r, i64 m) {
  if (m == 1) return 1;
  if (gcd(r, m) != 1) throw ConstraintViolation("multiplicative_order: r is not a unit modulo m");
  // Order divides phi(m); strip prime factors of phi(m) while r^n stays 1.
  i64 phi = m;
  for (const auto& [p, e] : factorize(m)) phi = phi / p * (p - 1);
  i64 n = phi;
  for (const auto& [p, e] : factorize(phi)) {
    for (int i = 0; i < e && n % p == 0 && powmod(r, n / p, m) == 1; ++i) n /= p;
  }
  return n;
}

std::vector<PrimePower> factorize(i64 n) {
  std::vector<PrimePower> out;
  if (n < 0) n = -n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

i64 part_over(i64 n, const std::vector<i64>& primes) {
  i64 part = 1;
  for (i64 p : primes) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowDetected("integer addition overflow");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowDetected("integer subtraction overflow");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowDetected("integer multiplication overflow");
  return r;
}

}  // namespace metasum
