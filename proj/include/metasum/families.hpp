#pragma once

#include <cstddef>
#include <vector>

#include "metasum/lattice.hpp"
#include "metasum/metacyclic.hpp"

namespace metasum {

/**
 * A conjugation-closed set of distinct, nontrivial cyclic subgroups of G.
 * Members are kept sorted by their element sets and always carry a generator.
 */
struct Family {
  MetacyclicParams params;
  std::vector<Subgroup> subgroups;

  std::size_t size() const { return subgroups.size(); }
  /// Position of a member with the given element set, or size() if absent.
  std::size_t find(const Subgroup& f) const;
};

struct Transversal {
  std::vector<Subgroup> representatives;
  /// Orbit size of each representative under conjugation.
  std::vector<std::size_t> orbit_sizes;
};

/// Smallest conjugation-closed family containing the nontrivial seeds.
/// Seeds must be cyclic subgroups with a generator set.
Family conjugacy_closure(const MetacyclicParams& p, const std::vector<Subgroup>& seeds);

/// <a>, <b> and the conjugates of <b>.
Family build_theorem3_family(const MetacyclicParams& p);

/// One representative per conjugacy orbit, the least element set of the orbit.
Transversal transversal(const Family& family);

/// Orbit index of every member (parallel to family.subgroups).
std::vector<std::size_t> orbit_labels(const Family& family);

bool is_generating(const Family& family);

struct RegularityWitness {
  Subgroup representative;
  Subgroup normalizer;
  Subgroup commutators;       // [F, N_G(F)]
  Subgroup cap_with_derived;  // F ∩ G'
  bool holds = false;
};

struct RegularityReport {
  bool regular = true;
  std::vector<RegularityWitness> witnesses;
};

/// Checks [F, N_G(F)] = F ∩ G' on each transversal representative.
RegularityReport is_regular(const Family& family, std::size_t cap = kDefaultElementCap);

/// Regularity data for a single member.
RegularityWitness regularity_data(const MetacyclicParams& p, const Subgroup& f,
                                  std::size_t cap = kDefaultElementCap);

struct IndependenceReport {
  bool independent = false;
  std::vector<i64> quotient_orders;  // |F / (F ∩ G')| per representative
  i64 product = 1;
  AbelianStructure abelianization;   // G/G'
  i64 abelianization_order = 1;
  bool images_generate = false;
};

/// Relation rows {(m,0), (-t,s), (r-1,0)} presenting G/G' on the images of a, b.
IntMatrix abelianization_relations(const MetacyclicParams& p);

/// Exponent vector (i, j) of a^i b^j in the abelianization.
std::vector<i64> abelian_exponents(const Element& x);

IndependenceReport is_independent(const Family& family, std::size_t cap = kDefaultElementCap);

/// (m, r - 1) | t.
bool divisibility_condition(const MetacyclicParams& p);

struct ConjugationWitness {
  i64 z = 0;
  i64 q = 0;
  i64 alpha = 0;
  i64 beta = 0;
  bool verified = false;
};

/// z with b^(a^z) = b^(s+1); throws ConditionFails when (m, r-1) does not divide t.
ConjugationWitness regularity_witness(const MetacyclicParams& p);

struct FamilyReport {
  bool generating = false;
  RegularityReport regularity;
  IndependenceReport independence;
};

FamilyReport family_report(const Family& family, std::size_t cap = kDefaultElementCap);

}  // namespace metasum
