#include "metasum/structure.hpp"

#include "metasum/errors.hpp"

namespace metasum {

Subgroup center_closed_form(const MetacyclicParams& p) {
  const Element ak{mod(p.k(), p.m()), 0};
  const Element bs = power(p, gen_b(p), p.s_prime());
  Subgroup z = generate_subgroup(p, {ak, bs});
  z.generator.reset();
  return z;
}

Subgroup derived_closed_form(const MetacyclicParams& p) {
  return cyclic_subgroup(p, Element{mod(p.r() - 1, p.m()), 0});
}

i64 geometric_sum_gcd(const MetacyclicParams& p) {
  const i64 k = p.k();
  i64 sum = 0;
  i64 term = mod(1, k);
  for (i64 i = 0; i < p.s_prime(); ++i) {
    sum = mod(sum + term, k);
    term = mulmod(term, p.r(), k);
  }
  return gcd(sum, k);
}

i64 schur_q(const MetacyclicParams& p) {
  return gcd(p.r() - 1, p.k()) * geometric_sum_gcd(p);
}

i64 schur_order_of_central_quotient(const MetacyclicParams& p) {
  const i64 q = schur_q(p);
  if (q % p.k() != 0) {
    throw InvariantViolation("q = " + std::to_string(q) + " is not a multiple of k = " +
                             std::to_string(p.k()) + " for " + p.to_string());
  }
  return q / p.k();
}

i64 derived_cap_center_order(const MetacyclicParams& p) { return gcd(p.r() - 1, p.k()); }

GaneaCheck ganea_check(const MetacyclicParams& p) {
  GaneaCheck out;
  out.h2_order = schur_order_of_central_quotient(p);
  out.cap_order = derived_cap_center_order(p);
  out.surjective = out.h2_order <= out.cap_order;
  return out;
}

StructureReport structure_report(const MetacyclicParams& p) {
  StructureReport out;
  out.k = p.k();
  out.s_prime = p.s_prime();
  out.center = center_closed_form(p);
  out.derived = derived_closed_form(p);
  out.q = schur_q(p);
  out.schur_order_central_quotient = schur_order_of_central_quotient(p);
  out.order_derived_cap_center = derived_cap_center_order(p);
  return out;
}

}  // namespace metasum
