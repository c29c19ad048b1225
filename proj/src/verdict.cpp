#include "metasum/verdict.hpp"

#include <stdexcept>

#include "metasum/errors.hpp"
#include "metasum/hall.hpp"
#include "metasum/presentation.hpp"
#include "metasum/structure.hpp"

namespace metasum {

std::string to_string(FamilyMode mode) {
  switch (mode) {
    case FamilyMode::Auto: return "auto";
    case FamilyMode::Theorem3: return "theorem3";
    case FamilyMode::Hall: return "hall";
  }
  return "?";
}

FamilyMode parse_family_mode(const std::string& text) {
  if (text == "auto") return FamilyMode::Auto;
  if (text == "theorem3") return FamilyMode::Theorem3;
  if (text == "hall") return FamilyMode::Hall;
  throw std::invalid_argument("unknown family mode '" + text + "'");
}

FamilyMode resolve_mode(const MetacyclicParams& p, FamilyMode mode) {
  if (mode != FamilyMode::Auto) return mode;
  return divisibility_condition(p) ? FamilyMode::Theorem3 : FamilyMode::Hall;
}

Verdict verdict(const Family& family, const Transversal& transversal, i64 max_cosets, Strategy strategy,
                std::size_t cap) {
  const auto& p = family.params;
  Verdict v;
  v.params = p;
  v.family = family;
  v.transversal = transversal;
  v.divisibility = divisibility_condition(p);
  v.family_generating = is_generating(family);
  v.regular = is_regular(family, cap).regular;
  v.independent = is_independent(family, cap).independent;
  v.ganea_surjective = ganea_check(p).surjective;
  v.group_order = p.order();

  const FpPresentation pres = build_active_sum_presentation(family);
  v.abelianized_S = abelianized_order(pres);
  v.abelianized_G = abelian_quotient(abelianization_relations(p));
  v.abelianized_order_S = v.abelianized_S.order().value_or(0);
  v.abelianized_order_G = *v.abelianized_G.order();

  EnumerationOptions options;
  options.max_cosets = max_cosets > 0 ? max_cosets : 10 * p.order();
  options.strategy = strategy;
  try {
    v.active_sum_order = enumerate_cosets(pres, options).index;
  } catch (const CosetLimitExceeded&) {
    v.active_sum_order.reset();
  }
  v.isomorphic = v.active_sum_order == v.group_order;

  if (v.family_generating && v.regular && v.independent && v.ganea_surjective && v.enumeration_completed() &&
      !v.isomorphic) {
    throw InvariantViolation("regular, independent family with surjective Ganea map has |S| = " +
                             std::to_string(*v.active_sum_order) + " != |G| = " + std::to_string(v.group_order) +
                             " for " + p.to_string());
  }
  if (!(v.regular && v.independent)) {
    const bool ab_differs = v.abelianized_order_S != v.abelianized_order_G;
    const bool order_differs = v.enumeration_completed() && !v.isomorphic;
    if (!ab_differs && !order_differs)
      throw InvariantViolation("family fails regularity or independence yet S^ab matches G^ab for " + p.to_string());
  }
  return v;
}

Verdict verify_group(const MetacyclicParams& p, const VerdictOptions& options) {
  check_cap(p, options.cap);
  const FamilyMode mode = resolve_mode(p, options.mode);
  Verdict v;
  if (mode == FamilyMode::Theorem3) {
    Family f = build_theorem3_family(p);
    Transversal t = transversal(f);
    v = verdict(f, t, options.max_cosets, options.strategy, options.cap);
  } else {
    const HallDecomposition d = hall_decomposition(p, options.cap);
    HallFamily hf = build_hall_family(p, d);
    v = verdict(hf.family, hf.transversal, options.max_cosets, options.strategy, options.cap);
  }
  v.mode = mode;
  return v;
}

}  // namespace metasum
