#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "metasum/verdict.hpp"

namespace metasum {

/// Top-level keys: params, mode, family, transversal, checks, orders, isomorphic.
nlohmann::json verdict_to_json(const Verdict& v);
std::string verdict_to_text(const Verdict& v);

struct ScanRow {
  MetacyclicParams params;
  FamilyMode mode = FamilyMode::Theorem3;
  bool divisibility = false;
  bool regular = false;
  bool independent = false;
  bool ganea = false;
  std::optional<i64> active_sum;  // empty on coset-limit hit
  i64 group = 0;
  bool isomorphic = false;
  std::string error;  // nonempty if the row could not be computed
};

ScanRow scan_row(const Verdict& v);

/// One row per valid tuple with m*s <= max_order, in valid_params_up_to order.
std::vector<ScanRow> scan(i64 max_order, const VerdictOptions& options, unsigned threads = 0);

std::string scan_csv_header();
std::string scan_row_csv(const ScanRow& row);
nlohmann::json scan_row_json(const ScanRow& row);

}  // namespace metasum
