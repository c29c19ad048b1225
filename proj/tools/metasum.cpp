// metasum: verify that a finite metacyclic group is the active sum of a
// family of cyclic subgroups, scan parameter ranges, dump presentations and
// cross-check closed-form invariants against brute force.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "metasum/errors.hpp"
#include "metasum/families.hpp"
#include "metasum/hall.hpp"
#include "metasum/presentation.hpp"
#include "metasum/report.hpp"
#include "metasum/structure.hpp"
#include "metasum/verdict.hpp"

namespace {

using namespace metasum;

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kResourceLimit = 2,
  kOracleMismatch = 3,
  kNotIsomorphic = 4,
};

struct RunConfig {
  i64 m = 1, s = 1, t = 0, r = 1;
  i64 max_order = 16;
  std::string family = "auto";
  i64 max_cosets = 0;
  std::string output = "text";
  std::string strategy = "hlt";
  unsigned threads = 0;
  std::size_t cap = kDefaultElementCap;
};

void add_group_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-m", cfg.m, "order of <a>")->required();
  cmd->add_option("-s", cfg.s, "order of G/<a>")->required();
  cmd->add_option("-t", cfg.t, "b^s = a^t")->required();
  cmd->add_option("-r", cfg.r, "b^-1 a b = a^r")->required();
}

void add_family_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--family", cfg.family, "family construction")
      ->check(CLI::IsMember({"auto", "theorem3", "hall"}));
  cmd->add_option("--max-cosets", cfg.max_cosets, "live coset bound (default 10*|G|)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--strategy", cfg.strategy, "coset enumeration strategy")->check(CLI::IsMember({"hlt", "felsch"}));
}

VerdictOptions verdict_options(const RunConfig& cfg) {
  VerdictOptions o;
  o.mode = parse_family_mode(cfg.family);
  o.max_cosets = cfg.max_cosets;
  o.strategy = cfg.strategy == "felsch" ? Strategy::Felsch : Strategy::Hlt;
  o.cap = cfg.cap;
  return o;
}

int run_verify(const RunConfig& cfg) {
  const auto p = MetacyclicParams::validate(cfg.m, cfg.s, cfg.t, cfg.r);
  const Verdict v = verify_group(p, verdict_options(cfg));
  if (cfg.output == "json") {
    std::cout << verdict_to_json(v).dump(2) << "\n";
  } else if (cfg.output == "csv") {
    std::cout << scan_csv_header() << "\n" << scan_row_csv(scan_row(v)) << "\n";
  } else {
    std::cout << verdict_to_text(v);
  }
  if (!v.enumeration_completed()) return kResourceLimit;
  return v.isomorphic ? kOk : kNotIsomorphic;
}

int run_scan(const RunConfig& cfg) {
  if (cfg.max_order < 1) throw ConstraintViolation("--max-order must be >= 1");
  if (static_cast<std::size_t>(cfg.max_order) > cfg.cap)
    throw CapExceeded("--max-order exceeds the element cap");
  const auto rows = scan(cfg.max_order, verdict_options(cfg), cfg.threads);
  int code = kOk;
  if (cfg.output == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(scan_row_json(row));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << scan_csv_header() << "\n";
    for (const auto& row : rows) std::cout << scan_row_csv(row) << "\n";
  }
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      std::cerr << "error at " << row.params.to_string() << ": " << row.error << "\n";
      code = kOracleMismatch;
    } else if (!row.active_sum && code == kOk) {
      code = kResourceLimit;
    }
  }
  return code;
}

int run_present(const RunConfig& cfg) {
  const auto p = MetacyclicParams::validate(cfg.m, cfg.s, cfg.t, cfg.r);
  check_cap(p, cfg.cap);
  const FamilyMode mode = resolve_mode(p, parse_family_mode(cfg.family));
  const Family family = mode == FamilyMode::Theorem3 ? build_theorem3_family(p)
                                                     : build_hall_family(p, hall_decomposition(p, cfg.cap)).family;
  const FpPresentation pres = build_active_sum_presentation(family);
  if (cfg.output == "json") {
    nlohmann::json j;
    j["params"] = {{"m", p.m()}, {"s", p.s()}, {"t", p.t()}, {"r", p.r()}};
    j["mode"] = to_string(mode);
    auto gens = nlohmann::json::array();
    for (const auto& g : pres.generators)
      gens.push_back({{"name", g.name}, {"order", g.order}, {"element", {g.element.i, g.element.j}}});
    j["generators"] = gens;
    auto rels = nlohmann::json::array();
    for (const auto& w : pres.relators) rels.push_back(pres.word_to_string(w));
    j["relators"] = rels;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << pres.dump();
  }
  return kOk;
}

int run_oracle(const RunConfig& cfg) {
  const auto p = MetacyclicParams::validate(cfg.m, cfg.s, cfg.t, cfg.r);
  const Subgroup z_closed = center_closed_form(p);
  const Subgroup z_brute = bruteforce_center(p, cfg.cap);
  const Subgroup d_closed = derived_closed_form(p);
  const Subgroup d_brute = bruteforce_derived(p, cfg.cap);
  const GaneaCheck ganea = ganea_check(p);
  const i64 cap_brute = static_cast<i64>(intersect(z_brute, d_brute).order());
  const i64 quotient_brute = p.order() / static_cast<i64>(z_brute.order());

  const bool center_ok = z_closed == z_brute;
  const bool derived_ok = d_closed == d_brute;
  const bool cap_ok = cap_brute == ganea.cap_order;
  const bool quotient_ok = quotient_brute == p.k() * p.s_prime();
  const bool agree = center_ok && derived_ok && cap_ok && quotient_ok;

  if (cfg.output == "json") {
    nlohmann::json j;
    j["params"] = {{"m", p.m()}, {"s", p.s()}, {"t", p.t()}, {"r", p.r()}};
    j["k"] = p.k();
    j["s_prime"] = p.s_prime();
    j["center"] = {{"closed", z_closed.order()}, {"brute", z_brute.order()}, {"agree", center_ok}};
    j["derived"] = {{"closed", d_closed.order()}, {"brute", d_brute.order()}, {"agree", derived_ok}};
    j["derived_cap_center"] = {{"closed", ganea.cap_order}, {"brute", cap_brute}, {"agree", cap_ok}};
    j["central_quotient"] = {{"closed", p.k() * p.s_prime()}, {"brute", quotient_brute}, {"agree", quotient_ok}};
    j["schur_order_central_quotient"] = ganea.h2_order;
    j["ganea"] = {{"h2_order", ganea.h2_order}, {"cap_order", ganea.cap_order}, {"surjective", ganea.surjective}};
    j["agree"] = agree;
    std::cout << j.dump(2) << "\n";
  } else {
    auto line = [](const char* what, i64 closed, i64 brute, bool ok) {
      std::cout << what << ": closed " << closed << ", brute force " << brute << (ok ? "  ok" : "  MISMATCH") << "\n";
    };
    std::cout << "group " << p.to_string() << ", k = " << p.k() << ", s' = " << p.s_prime() << "\n";
    line("|Z(G)|", static_cast<i64>(z_closed.order()), static_cast<i64>(z_brute.order()), center_ok);
    line("|G'|", static_cast<i64>(d_closed.order()), static_cast<i64>(d_brute.order()), derived_ok);
    line("|G' ∩ Z(G)|", ganea.cap_order, cap_brute, cap_ok);
    line("|G/Z(G)|", p.k() * p.s_prime(), quotient_brute, quotient_ok);
    std::cout << "|H2(G/Z(G))| = " << ganea.h2_order << ", Ganea surjective: " << (ganea.surjective ? "yes" : "no")
              << "\n";
  }
  return agree ? kOk : kOracleMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active sums of cyclic subgroups in finite metacyclic groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  if (const char* env = std::getenv("METASUM_CAP")) {
    try {
      cfg.cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "METASUM_CAP must be a positive integer\n";
      return kInvalidInput;
    }
  }

  auto* verify = app.add_subcommand("verify", "certify one group");
  add_group_flags(verify, cfg);
  add_family_flags(verify, cfg);

  auto* scan_cmd = app.add_subcommand("scan", "check every valid tuple up to an order");
  scan_cmd->add_option("--max-order", cfg.max_order, "largest m*s")->required();
  scan_cmd->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  add_family_flags(scan_cmd, cfg);

  auto* present = app.add_subcommand("present", "print the active-sum presentation");
  add_group_flags(present, cfg);
  present->add_option("--family", cfg.family, "family construction")
      ->check(CLI::IsMember({"auto", "theorem3", "hall"}));

  auto* oracle = app.add_subcommand("oracle", "closed-form invariants against brute force");
  add_group_flags(oracle, cfg);

  for (auto* cmd : {verify, scan_cmd, present, oracle})
    cmd->add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*scan_cmd) return run_scan(cfg);
    if (*present) return run_present(cfg);
    return run_oracle(cfg);
  } catch (const ConstraintViolation& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const CosetLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kOracleMismatch;
  }
}
