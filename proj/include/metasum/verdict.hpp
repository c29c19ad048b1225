#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "metasum/coset_enum.hpp"
#include "metasum/families.hpp"
#include "metasum/lattice.hpp"
#include "metasum/metacyclic.hpp"

namespace metasum {

enum class FamilyMode { Auto, Theorem3, Hall };

std::string to_string(FamilyMode mode);
FamilyMode parse_family_mode(const std::string& text);

struct Verdict {
  MetacyclicParams params;
  FamilyMode mode = FamilyMode::Theorem3;  // never Auto once resolved
  Family family;
  Transversal transversal;

  bool divisibility = false;
  bool family_generating = false;
  bool regular = false;
  bool independent = false;
  bool ganea_surjective = false;

  std::optional<i64> active_sum_order;  // nullopt when the coset limit was hit
  i64 group_order = 0;
  AbelianStructure abelianized_S;
  AbelianStructure abelianized_G;
  i64 abelianized_order_S = 0;  // 0 if S^ab is infinite
  i64 abelianized_order_G = 0;
  bool isomorphic = false;

  bool enumeration_completed() const { return active_sum_order.has_value(); }
};

struct VerdictOptions {
  FamilyMode mode = FamilyMode::Auto;
  i64 max_cosets = 0;  // 0 selects 10 * |G|
  Strategy strategy = Strategy::Hlt;
  std::size_t cap = kDefaultElementCap;
};

/// Theorem3 when (m, r-1) | t, Hall otherwise.
FamilyMode resolve_mode(const MetacyclicParams& p, FamilyMode mode);

/**
 * Runs every check on a family and enumerates its active sum. A coset-limit
 * hit leaves active_sum_order empty. Throws InvariantViolation if the
 * regular + independent + Ganea implication or its converse on H1 is broken.
 */
Verdict verdict(const Family& family, const Transversal& transversal, i64 max_cosets,
                Strategy strategy = Strategy::Hlt, std::size_t cap = kDefaultElementCap);

/// Builds the family named by options.mode and returns its verdict.
Verdict verify_group(const MetacyclicParams& p, const VerdictOptions& options = {});

}  // namespace metasum
