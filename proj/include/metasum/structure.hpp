#pragma once

#include "metasum/metacyclic.hpp"

namespace metasum {

struct StructureReport {
  i64 k = 1;
  i64 s_prime = 1;
  Subgroup center;
  Subgroup derived;
  i64 q = 1;
  i64 schur_order_central_quotient = 1;
  i64 order_derived_cap_center = 1;
};

/// <a^k, b^s'>.
Subgroup center_closed_form(const MetacyclicParams& p);
/// <a^(r-1)>.
Subgroup derived_closed_form(const MetacyclicParams& p);

/// gcd(1 + r + ... + r^(s'-1), k), with the sum reduced modulo k so no big
/// integers appear. For r = 1 the sum is s'.
i64 geometric_sum_gcd(const MetacyclicParams& p);

/// q = gcd(r-1, k) * geometric_sum_gcd(p).
i64 schur_q(const MetacyclicParams& p);

/// Order q / k of the Schur multiplier of G/Z(G) = <c, d | c^k, d^s', d^-1 c d = c^r>.
i64 schur_order_of_central_quotient(const MetacyclicParams& p);

/// |G' ∩ Z(G)| = gcd(r - 1, k).
i64 derived_cap_center_order(const MetacyclicParams& p);

struct GaneaCheck {
  i64 h2_order = 1;
  i64 cap_order = 1;
  bool surjective = true;
};

/// Ganea's map H1(G) ⊗ Z(G) -> H2(G) is onto iff |H2(G/Z)| <= |G' ∩ Z|.
GaneaCheck ganea_check(const MetacyclicParams& p);

StructureReport structure_report(const MetacyclicParams& p);

}  // namespace metasum
