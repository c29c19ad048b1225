#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "metasum/families.hpp"
#include "metasum/metacyclic.hpp"

namespace metasum {

/// Cyclic-by-cyclic factorization H_p = B_p A_p of a Sylow subgroup of H.
struct SylowFactorization {
  i64 prime = 0;
  Subgroup sylow;  // H_p
  Subgroup a_part;  // A_p, normal and cyclic in H_p; trivial when H_p is cyclic
  Subgroup b_part;  // B_p
  // Parameters of H_p read off the factorization: a'^m = 1, b'^s = a'^t, b'^-1 a' b' = a'^r.
  i64 m = 1, s = 1, t = 0, r = 1;
};

/**
 * G = N ⋊ H with N a normal Hall subgroup, H a nilpotent Hall complement,
 * and N = V U split with V = <a> ∩ N, U = <b> ∩ N. Inside N, v^u = v^eta.
 */
struct HallDecomposition {
  std::vector<i64> pi;  // primes dividing |H|
  Subgroup N, H, U, V;
  Element u, v;
  i64 zeta = 1;     // |V|
  i64 epsilon = 1;  // |U|
  i64 eta = 1;
  std::vector<SylowFactorization> sylows;  // ascending prime
};

/// Search over prime sets for a decomposition meeting every invariant.
/// Throws SearchFailed if none exists.
HallDecomposition hall_decomposition(const MetacyclicParams& p, std::size_t cap = kDefaultElementCap);

/// Invariants of `d` that fail, as human-readable strings; empty when valid.
std::vector<std::string> decomposition_violations(const MetacyclicParams& p, const HallDecomposition& d);

/// Factorization of each Sylow subgroup of H meeting (m_p, r_p - 1) | t_p.
std::vector<SylowFactorization> sylow_factorizations(const MetacyclicParams& p, const HallDecomposition& d);

struct HallFamily {
  Family family;
  Transversal transversal;  // {U, V} ∪ {A_p, B_p}, trivial members dropped
};

HallFamily build_hall_family(const MetacyclicParams& p, const HallDecomposition& d);

}  // namespace metasum
