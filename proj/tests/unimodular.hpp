#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "metasum/lattice.hpp"

namespace metasum::test_support {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t det_mod(const IntMatrix& m, std::uint64_t p) {
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
      a[i * n + j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = p - det;
    }
    det = mulmod(det, a[k * n + k], p);
    const std::uint64_t inv = powmod(a[k * n + k], p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t f = mulmod(a[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j)
        a[i * n + j] = (a[i * n + j] + p - mulmod(f, a[k * n + j], p)) % p;
    }
  }
  return det % p;
}

}  // namespace detail

// Exact test for det(m) = ±1: the determinant is computed modulo enough large
// primes that their product exceeds twice the Hadamard bound, so agreement
// with +1 (or -1) modulo every prime pins the integer value down.
inline bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = m.rows();
  long double bound_bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long double norm2 = 0;
    for (std::size_t j = 0; j < n; ++j) norm2 += static_cast<long double>(m(i, j)) * m(i, j);
    if (norm2 > 0) bound_bits += std::log2(norm2) / 2;
  }
  bool plus = true, minus = true;
  long double covered = 0;
  for (std::uint64_t p = (std::uint64_t{1} << 61) - 1; covered <= bound_bits + 3; p -= 2) {
    if (!detail::is_prime(p)) continue;
    const std::uint64_t d = detail::det_mod(m, p);
    plus = plus && d == 1;
    minus = minus && d == p - 1;
    if (!plus && !minus) return false;
    covered += 60;
  }
  return plus || minus;
}

}  // namespace metasum::test_support
