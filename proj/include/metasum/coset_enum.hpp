#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "metasum/presentation.hpp"

namespace metasum {

enum class Strategy {
  Hlt,     // scan-and-fill relators coset by coset, lookahead when full
  Felsch,  // define first gap, then process every deduction
};

struct EnumerationOptions {
  i64 max_cosets = 1000;  // bound on simultaneously live cosets
  Strategy strategy = Strategy::Hlt;
  bool process_deductions = true;  // HLT only; Felsch always processes them
};

/// Closed coset table for the trivial subgroup; row 0 is the subgroup's coset.
struct CosetTable {
  std::size_t columns = 0;  // column 2g is generator g, 2g+1 its inverse
  std::vector<std::int32_t> entries;

  std::size_t rows() const { return columns == 0 ? 1 : entries.size() / columns; }
  std::int32_t operator()(std::size_t row, std::size_t col) const { return entries[row * columns + col]; }
};

struct EnumerationResult {
  i64 index = 0;  // number of cosets = |group| for the trivial subgroup
  CosetTable table;
  i64 total_defined = 0;
  i64 max_live = 0;
  i64 lookaheads = 0;
};

/// Enumerates the cosets of the trivial subgroup. Throws CosetLimitExceeded
/// when the table cannot be closed within options.max_cosets live cosets.
EnumerationResult enumerate_cosets(const FpPresentation& pres, const EnumerationOptions& options);

/// Order of the presented group; shorthand for enumerate_cosets(...).index.
i64 todd_coxeter(const FpPresentation& pres, i64 max_cosets, Strategy strategy = Strategy::Hlt);

/// Every entry defined, inverse columns consistent, and every relator traces a loop from every coset.
bool table_is_valid(const CosetTable& table, const FpPresentation& pres);

}  // namespace metasum
