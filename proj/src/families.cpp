#include "metasum/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "metasum/errors.hpp"
#include "metasum/structure.hpp"

namespace metasum {

std::size_t Family::find(const Subgroup& f) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), f);
  if (it != subgroups.end() && *it == f) return static_cast<std::size_t>(it - subgroups.begin());
  return subgroups.size();
}

Family conjugacy_closure(const MetacyclicParams& p, const std::vector<Subgroup>& seeds) {
  // Orbits under G are orbits under conjugation by a and b.
  const Element conjugators[] = {gen_a(p), gen_b(p)};
  std::map<std::vector<Element>, Subgroup> members;
  std::vector<Subgroup> queue;
  for (const auto& seed : seeds) {
    if (!seed.generator) throw std::invalid_argument("conjugacy_closure: seed without a generator");
    if (seed.is_trivial()) continue;
    if (members.emplace(seed.elements, seed).second) queue.push_back(seed);
  }
  while (!queue.empty()) {
    Subgroup f = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : conjugators) {
      Subgroup h = conjugate(p, f, g);
      if (members.emplace(h.elements, h).second) queue.push_back(std::move(h));
    }
  }
  Family out{p, {}};
  out.subgroups.reserve(members.size());
  for (auto& [key, f] : members) out.subgroups.push_back(std::move(f));
  return out;
}

Family build_theorem3_family(const MetacyclicParams& p) {
  return conjugacy_closure(p, {cyclic_subgroup(p, gen_a(p)), cyclic_subgroup(p, gen_b(p))});
}

std::vector<std::size_t> orbit_labels(const Family& family) {
  const auto& p = family.params;
  const std::size_t n = family.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Element conjugators[] = {gen_a(p), gen_b(p)};
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : conjugators) {
      const std::size_t j = family.find(conjugate(p, family.subgroups[i], g));
      if (j == n) throw InvariantViolation("family is not closed under conjugation");
      // Union towards the smaller index so the root is the least member of its orbit.
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = find(i);
  return out;
}

Transversal transversal(const Family& family) {
  const auto labels = orbit_labels(family);
  Transversal out;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = slot.emplace(labels[i], out.representatives.size());
    if (fresh) {
      out.representatives.push_back(family.subgroups[labels[i]]);
      out.orbit_sizes.push_back(0);
    }
    ++out.orbit_sizes[it->second];
  }
  return out;
}

bool is_generating(const Family& family) {
  std::vector<Element> gens;
  for (const auto& f : family.subgroups) gens.push_back(*f.generator);
  return generate_subgroup(family.params, gens).order() == static_cast<std::size_t>(family.params.order());
}

RegularityWitness regularity_data(const MetacyclicParams& p, const Subgroup& f, std::size_t cap) {
  RegularityWitness w;
  w.representative = f;
  w.normalizer = normalizer(p, f, cap);
  w.commutators = commutator_span(p, f, w.normalizer);
  w.cap_with_derived = intersect(f, derived_closed_form(p));
  w.holds = w.commutators == w.cap_with_derived;
  return w;
}

RegularityReport is_regular(const Family& family, std::size_t cap) {
  RegularityReport out;
  for (const auto& f : transversal(family).representatives) {
    out.witnesses.push_back(regularity_data(family.params, f, cap));
    out.regular = out.regular && out.witnesses.back().holds;
  }
  return out;
}

IntMatrix abelianization_relations(const MetacyclicParams& p) {
  return IntMatrix{{p.m(), 0}, {-p.t(), p.s()}, {p.r() - 1, 0}};
}

std::vector<i64> abelian_exponents(const Element& x) { return {x.i, x.j}; }

IndependenceReport is_independent(const Family& family, std::size_t cap) {
  const auto& p = family.params;
  check_cap(p, cap);
  IndependenceReport out;
  const Subgroup derived = derived_closed_form(p);
  const AbelianQuotient quotient(abelianization_relations(p));
  out.abelianization = quotient.structure();
  out.abelianization_order = *out.abelianization.order();

  std::vector<std::vector<i64>> images;
  for (const auto& f : transversal(family).representatives) {
    const i64 q = static_cast<i64>(f.order() / intersect(f, derived).order());
    out.quotient_orders.push_back(q);
    out.product = checked_mul(out.product, q);
    images.push_back(abelian_exponents(*f.generator));
  }
  out.images_generate = quotient.generated_by(images);
  out.independent = out.images_generate && out.product == out.abelianization_order;
  return out;
}

bool divisibility_condition(const MetacyclicParams& p) {
  return p.t() % gcd(p.m(), p.r() - 1) == 0;
}

ConjugationWitness regularity_witness(const MetacyclicParams& p) {
  const Bezout bz = extended_gcd(p.m(), p.r() - 1);
  if (p.t() % bz.g != 0) {
    throw ConditionFails("(m, r-1) = " + std::to_string(bz.g) + " does not divide t = " +
                         std::to_string(p.t()));
  }
  ConjugationWitness w;
  w.alpha = bz.x;
  w.beta = bz.y;
  w.q = p.t() / bz.g;
  w.z = mod(-mulmod(w.q, w.beta, p.m()), p.m());
  const Element b = gen_b(p);
  const Element az{w.z, 0};
  w.verified = conjugate(p, b, az) == power(p, b, p.s() + 1);
  if (!w.verified) throw InvariantViolation("regularity witness failed to verify for " + p.to_string());
  return w;
}

FamilyReport family_report(const Family& family, std::size_t cap) {
  FamilyReport out;
  out.generating = is_generating(family);
  out.regularity = is_regular(family, cap);
  out.independence = is_independent(family, cap);
  return out;
}

}  // namespace metasum
