#include "metasum/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "metasum/errors.hpp"

namespace metasum {

namespace {

nlohmann::json element_json(const Element& x) { return nlohmann::json::array({x.i, x.j}); }

nlohmann::json subgroup_list(const std::vector<Subgroup>& subgroups) {
  auto out = nlohmann::json::array();
  for (const auto& f : subgroups) out.push_back(element_json(*f.generator));
  return out;
}

nlohmann::json optional_json(const std::optional<i64>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  const auto& p = v.params;
  j["params"] = {{"m", p.m()}, {"s", p.s()}, {"t", p.t()}, {"r", p.r()}};
  j["mode"] = to_string(v.mode);
  j["family"] = subgroup_list(v.family.subgroups);
  j["transversal"] = subgroup_list(v.transversal.representatives);
  j["checks"] = {{"generating", v.family_generating},
                 {"regular", v.regular},
                 {"independent", v.independent},
                 {"ganea", v.ganea_surjective},
                 {"divisibility", v.divisibility}};
  j["orders"] = {{"group", v.group_order},
                 {"active_sum", optional_json(v.active_sum_order)},
                 {"ab_S", v.abelianized_order_S},
                 {"ab_G", v.abelianized_order_G}};
  j["isomorphic"] = v.isomorphic;
  return j;
}

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream os;
  os << "group " << v.params.to_string() << " of order " << v.group_order << "\n";
  os << "family mode: " << to_string(v.mode) << " (" << v.family.size() << " subgroups, "
     << v.transversal.representatives.size() << " classes)\n";
  for (const auto& f : v.transversal.representatives)
    os << "  class of <" << to_string(*f.generator) << "> order " << f.order() << "\n";
  os << "(m, r-1) | t: " << yes_no(v.divisibility) << "\n";
  os << "generating: " << yes_no(v.family_generating) << "\n";
  os << "regular: " << yes_no(v.regular) << "\n";
  os << "independent: " << yes_no(v.independent) << "\n";
  os << "ganea surjective: " << yes_no(v.ganea_surjective) << "\n";
  os << "|S^ab| = " << v.abelianized_order_S << " (" << v.abelianized_S.to_string() << "), |G^ab| = "
     << v.abelianized_order_G << " (" << v.abelianized_G.to_string() << ")\n";
  os << "|S| = " << (v.active_sum_order ? std::to_string(*v.active_sum_order) : "exceeded") << ", |G| = "
     << v.group_order << "\n";
  os << "isomorphic: " << yes_no(v.isomorphic) << "\n";
  return os.str();
}

ScanRow scan_row(const Verdict& v) {
  ScanRow row;
  row.params = v.params;
  row.mode = v.mode;
  row.divisibility = v.divisibility;
  row.regular = v.regular;
  row.independent = v.independent;
  row.ganea = v.ganea_surjective;
  row.active_sum = v.active_sum_order;
  row.group = v.group_order;
  row.isomorphic = v.isomorphic;
  return row;
}

std::vector<ScanRow> scan(i64 max_order, const VerdictOptions& options, unsigned threads) {
  const auto params = valid_params_up_to(max_order);
  std::vector<ScanRow> rows(params.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      try {
        rows[i] = scan_row(verify_group(params[i], options));
      } catch (const Error& e) {
        rows[i] = ScanRow{};
        rows[i].params = params[i];
        rows[i].group = params[i].order();
        rows[i].error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, params.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string scan_csv_header() {
  return "m,s,t,r,order,mode,divisibility,regular,independent,ganea,active_sum,group,isomorphic,status";
}

std::string scan_row_csv(const ScanRow& row) {
  const auto& p = row.params;
  std::ostringstream os;
  os << p.m() << ',' << p.s() << ',' << p.t() << ',' << p.r() << ',' << p.order() << ',' << to_string(row.mode)
     << ',' << row.divisibility << ',' << row.regular << ',' << row.independent << ',' << row.ganea << ','
     << (row.active_sum ? std::to_string(*row.active_sum) : "exceeded") << ',' << row.group << ','
     << row.isomorphic << ',';
  if (!row.error.empty())
    os << "error";
  else
    os << (row.active_sum ? "ok" : "coset_limit");
  return os.str();
}

nlohmann::json scan_row_json(const ScanRow& row) {
  const auto& p = row.params;
  nlohmann::json j;
  j["params"] = {{"m", p.m()}, {"s", p.s()}, {"t", p.t()}, {"r", p.r()}};
  j["mode"] = to_string(row.mode);
  j["checks"] = {{"divisibility", row.divisibility},
                 {"regular", row.regular},
                 {"independent", row.independent},
                 {"ganea", row.ganea}};
  j["orders"] = {{"group", row.group}, {"active_sum", optional_json(row.active_sum)}};
  j["isomorphic"] = row.isomorphic;
  j["status"] = !row.error.empty() ? "error" : (row.active_sum ? "ok" : "coset_limit");
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

}  // namespace metasum
