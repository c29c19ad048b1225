#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "metasum/families.hpp"
#include "metasum/lattice.hpp"
#include "metasum/metacyclic.hpp"

namespace metasum {

/// Letter 2g is generator g, letter 2g+1 its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter gen_letter(std::size_t g) { return static_cast<Letter>(2 * g); }
inline Letter inv_letter(std::size_t g) { return static_cast<Letter>(2 * g + 1); }
inline Letter invert(Letter l) { return l ^ 1; }
inline std::size_t generator_of(Letter l) { return static_cast<std::size_t>(l) >> 1; }

/// Cancel adjacent x X and X x pairs.
Word free_reduce(const Word& w);
/// x_g^e with e taken literally (negative e gives inverse letters).
Word power_word(std::size_t g, i64 e);

struct PresentationGenerator {
  std::string name;  // "x3"; the inverse prints as "X3"
  i64 order = 1;     // |F|
  Element element;   // chosen generator g_F in G
};

/**
 * Finite presentation of the active sum: one generator per family member,
 * relators x_F^|F| and one conjugation relator per ordered pair of members.
 */
struct FpPresentation {
  std::vector<PresentationGenerator> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generators.size(); }

  /// `gen x3 order 4` lines followed by one relator per line, e.g. `X0 x1 x0 X1`.
  std::string dump() const;
  static FpPresentation parse(const std::string& text);

  std::string word_to_string(const Word& w) const;
};

/// Least e >= 0 with base^e = target.
i64 discrete_log(const MetacyclicParams& p, const Element& target, const Element& base);

enum class RelatorMode {
  GeneratorLevel,  // h = g_F1, g = g_F2 only
  Exhaustive,      // every h in F1, g in F2
};

FpPresentation build_active_sum_presentation(const Family& family,
                                             RelatorMode mode = RelatorMode::GeneratorLevel);

/// Exponent-sum matrix of the relators, one column per generator.
IntMatrix exponent_sum_matrix(const FpPresentation& pres);

/// Abelianization of the presented group.
AbelianStructure abelianized_order(const FpPresentation& pres);

}  // namespace metasum
