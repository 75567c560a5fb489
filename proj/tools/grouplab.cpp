// grouplab: describe groups given as DSL expressions, dump subgroup
// lattices, and run the structural-claim suite over the group catalog.
//
// Exit codes: 0 success, 1 claim or regression failures, 2 parse errors
// (expression or catalog), 3 budget exceeded, 4 internal errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <grouplab/grouplab.hpp>

using namespace grouplab;

namespace {

struct CliConfig {
  uint64_t element_budget = kDefaultElementBudget;
  int lattice_budget = 512;
  std::string format = "text";
  int parallelism = 1;
  std::string catalog_path;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_report_text(const PropertyReport& r, std::ostream& os) {
  os << "group:        " << r.group_name << "\n";
  os << "order:        " << r.order;
  for (size_t i = 0; i < r.factorization.size(); ++i) {
    os << (i ? " * " : " = ");
    os << r.factorization[i].first;
    if (r.factorization[i].second > 1) os << "^" << r.factorization[i].second;
  }
  os << "\n";
  auto flag = [&](const char* name, bool v) { os << name << (v ? "yes" : "no") << "\n"; };
  flag("abelian:      ", r.flags.abelian);
  flag("elem abelian: ", r.flags.elementary_abelian);
  flag("poec:         ", r.flags.poec);
  flag("sip:          ", r.flags.sip);
  flag("ssip:         ", r.flags.ssip);
  flag("perfect:      ", r.flags.perfect);
  flag("solvable:     ", r.flags.solvable);
  flag("nilpotent:    ", r.flags.nilpotent);
  flag("metabelian:   ", r.flags.metabelian);
  os << "P[G] order:   " << r.pg_order << " (index " << r.index_pg << ")\n";
  os << "G_p orders:   ";
  for (size_t i = 0; i < r.gp_orders.size(); ++i) {
    if (i) os << ", ";
    os << "G_" << r.gp_orders[i].first << "=" << r.gp_orders[i].second;
  }
  os << "\n";
  os << "centre order: " << r.center_order << "\n";
  if (r.poec_witness)
    os << "poec witness: non-commuting prime-order pair (" << r.poec_witness->first << ", "
       << r.poec_witness->second << ")\n";
}

void print_report_csv(const PropertyReport& r, std::ostream& os) {
  os << "group_name,order,abelian,elementary_abelian,poec,sip,ssip,perfect,solvable,"
        "nilpotent,metabelian,center_order,pg_order,index_pg,sqf_count\n";
  os << csv_escape(r.group_name) << ',' << r.order << ',' << r.flags.abelian << ','
     << r.flags.elementary_abelian << ',' << r.flags.poec << ',' << r.flags.sip << ','
     << r.flags.ssip << ',' << r.flags.perfect << ',' << r.flags.solvable << ','
     << r.flags.nilpotent << ',' << r.flags.metabelian << ',' << r.center_order << ','
     << r.pg_order << ',' << r.index_pg << ',' << r.sqf_count << "\n";
}

int cmd_describe(const CliConfig& cfg, const std::string& expr) {
  PropertyReport r = classify(realize(expr, cfg.element_budget), expr);
  if (cfg.format == "json") {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    print_report_csv(r, std::cout);
  } else {
    print_report_text(r, std::cout);
  }
  return 0;
}

int cmd_lattice(const CliConfig& cfg, const std::string& expr) {
  FiniteGroup g = realize(expr, cfg.element_budget);
  LatticeBudget budget;
  budget.max_elements = cfg.lattice_budget;
  SubgroupLattice lat = all_subgroups(g, budget);
  if (cfg.format == "json") {
    std::cout << lattice_to_json(lat, expr).dump(2) << "\n";
    return 0;
  }
  std::cout << expr << ": order " << g.order() << ", " << lat.subgroups.size()
            << " subgroups, |S| = " << lat.s_collection.size() << "\n";
  std::vector<char> is_max(lat.subgroups.size(), 0), in_s(lat.subgroups.size(), 0);
  for (int i : lat.maximal) is_max[i] = 1;
  for (int i : lat.s_collection) in_s[i] = 1;
  for (size_t i = 0; i < lat.subgroups.size(); ++i) {
    const Subgroup& s = lat.subgroups[i];
    std::cout << "  #" << i << " order " << s.order() << " gens {";
    for (size_t j = 0; j < s.generators.size(); ++j)
      std::cout << (j ? "," : "") << s.generators[j];
    std::cout << "}" << (is_max[i] ? " maximal" : "") << (in_s[i] ? " in-S" : "") << "\n";
  }
  std::cout << "sip " << (sip_by_definition(lat) ? "yes" : "no") << ", ssip "
            << (ssip_by_definition(lat) ? "yes" : "no") << ", supersolvable "
            << (is_supersolvable(lat) ? "yes" : "no") << ", lagrangian "
            << (is_lagrangian(lat) ? "yes" : "no") << "\n";
  return 0;
}

std::vector<CatalogEntry> load_catalog(const CliConfig& cfg) {
  if (cfg.catalog_path.empty()) return builtin_catalog();
  std::ifstream in(cfg.catalog_path);
  if (!in) throw CatalogError("cannot open catalog file " + cfg.catalog_path);
  return read_catalog_jsonl(in);
}

int run_scan(const CliConfig& cfg, long bound) {
  ScanReport rep = counterexample_scan(bound, cfg.element_budget);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    auto rows = nlohmann::ordered_json::array();
    for (const ScanRow& r : rep.rows) {
      nlohmann::ordered_json e;
      e["name"] = r.name;
      e["order"] = r.order;
      e["poec"] = r.poec;
      e["sip"] = r.sip;
      e["ssip"] = r.ssip;
      e["perfect"] = r.perfect;
      e["center_order"] = r.center_order;
      e["squared_primes"] = r.squared_primes;
      rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["trivial_center_poec"] = rep.trivial_center_poec;
    j["cube_divisibility_gaps"] = rep.cube_divisibility_gaps;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "scan of parameterized families up to order " << bound << " (" << rep.rows.size()
            << " groups)\n";
  std::printf("%-44s %6s %5s %4s %5s %8s %7s\n", "group", "order", "poec", "sip", "ssip",
              "perfect", "|Z(G)|");
  for (const ScanRow& r : rep.rows)
    std::printf("%-44s %6ld %5s %4s %5s %8s %7ld\n", r.name.c_str(), r.order,
                r.poec ? "yes" : "no", r.sip ? "yes" : "no", r.ssip ? "yes" : "no",
                r.perfect ? "yes" : "no", r.center_order);
  if (rep.trivial_center_poec.empty()) {
    std::cout << "observation: no POEC group with trivial centre found\n";
  } else {
    std::cout << "*** COUNTEREXAMPLE CANDIDATES (POEC with trivial centre) ***\n";
    for (const auto& n : rep.trivial_center_poec) std::cout << "  " << n << "\n";
  }
  return 0;
}

int cmd_verify(const CliConfig& cfg, const std::string& claims_arg, bool scan, long bound) {
  if (scan) return run_scan(cfg, bound);

  std::vector<CatalogEntry> entries = load_catalog(cfg);
  std::vector<std::string> filter;
  {
    std::stringstream ss(claims_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      bool known = false;
      for (const ClaimInfo& info : claim_table()) known = known || info.id == tok;
      if (!known) throw CatalogError("unknown claim id '" + tok + "' (expected C1..C23)");
      filter.push_back(tok);
    }
  }
  AnalysisBudgets budgets;
  budgets.element_budget = cfg.element_budget;
  budgets.lattice.max_elements = cfg.lattice_budget;
  auto analyses = analyze_catalog(entries, budgets, cfg.parallelism);
  auto results = run_claims(analyses, filter, cfg.element_budget);
  int hard_failures = count_hard_failures(results);
  auto counterexamples = open_issue_counterexamples(results);

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    int holds = 0, na = 0;
    for (const ClaimResult& r : results) {
      nlohmann::ordered_json e;
      e["claim_id"] = r.claim_id;
      e["group"] = r.group;
      e["verdict"] = verdict_name(r.verdict);
      if (r.witness.empty())
        e["witness"] = nullptr;
      else
        e["witness"] = r.witness;
      arr.push_back(std::move(e));
      if (r.verdict == ClaimResult::Verdict::Holds) ++holds;
      if (r.verdict == ClaimResult::Verdict::NotApplicable) ++na;
    }
    j["claims"] = std::move(arr);
    j["summary"] = nlohmann::ordered_json{{"holds", holds},
                                          {"fails", hard_failures},
                                          {"not_applicable", na},
                                          {"open_issue_counterexamples", counterexamples.size()}};
    std::cout << j.dump(2) << "\n";
  } else {
    size_t group_w = 5;
    for (const ClaimResult& r : results) group_w = std::max(group_w, r.group.size());
    int holds = 0, na = 0;
    for (const ClaimResult& r : results) {
      if (r.verdict == ClaimResult::Verdict::Holds) ++holds;
      if (r.verdict == ClaimResult::Verdict::NotApplicable) ++na;
      std::printf("%-5s %-*s %-14s %s\n", r.claim_id.c_str(), static_cast<int>(group_w),
                  r.group.c_str(), verdict_name(r.verdict), r.witness.c_str());
    }
    std::printf("summary: %d holds, %d fails, %d not applicable over %zu catalog entries\n", holds,
                hard_failures, na, entries.size());
    if (!counterexamples.empty()) {
      std::cout << "\n*** OPEN QUESTION COUNTEREXAMPLES ***\n";
      for (const ClaimResult* r : counterexamples)
        std::cout << "  " << r->group << ": " << r->witness << "\n";
    }
  }
  return hard_failures > 0 ? 1 : 0;
}

int cmd_catalog(const CliConfig& cfg, const std::string& action) {
  std::vector<CatalogEntry> entries = load_catalog(cfg);
  if (action == "list") {
    if (cfg.format == "json") {
      write_catalog_jsonl(std::cout, entries);
    } else {
      size_t name_w = 4;
      for (const CatalogEntry& e : entries) name_w = std::max(name_w, e.name.size());
      for (const CatalogEntry& e : entries)
        std::printf("%-*s  %-40s  %zu pinned fields\n", static_cast<int>(name_w), e.name.c_str(),
                    e.spec.c_str(), e.expected.size());
    }
    return 0;
  }
  AnalysisBudgets budgets;
  budgets.element_budget = cfg.element_budget;
  budgets.lattice.max_elements = cfg.lattice_budget;
  auto analyses = analyze_catalog(entries, budgets, cfg.parallelism);
  int mismatches = 0;
  for (const CatalogAnalysis& a : analyses) {
    if (!a.ok()) {
      std::cout << "ERROR    " << a.entry.name << ": " << a.error << "\n";
      ++mismatches;
      continue;
    }
    if (auto m = expected_mismatch(a.entry, a.report)) {
      std::cout << "MISMATCH " << *m << "\n";
      ++mismatches;
    } else {
      std::cout << "ok       " << a.entry.name << "\n";
    }
  }
  std::cout << (mismatches ? "catalog validation FAILED\n" : "catalog validation passed\n");
  return mismatches ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group toolkit: subgroup-intersection properties and the claim suite"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand

  CliConfig cfg;
  app.add_option("--element-budget", cfg.element_budget, "max elements per group")
      ->envname("GROUPLAB_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--lattice-budget", cfg.lattice_budget, "max group order for lattice enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--parallelism", cfg.parallelism, "worker threads for catalog analysis")
      ->check(CLI::PositiveNumber);
  app.add_option("--catalog", cfg.catalog_path, "catalog file (JSON lines); default: built-in");

  std::string describe_expr, lattice_expr, claims_arg, catalog_action;
  auto* describe = app.add_subcommand("describe", "classify a group given as a DSL expression");
  describe->add_option("expr", describe_expr, "group expression, e.g. \"sd(C9, C3, [[4]])\"")
      ->required();

  auto* lattice = app.add_subcommand("lattice", "dump the full subgroup lattice of a small group");
  lattice->add_option("expr", lattice_expr, "group expression")->required();

  bool scan = false;
  long bound = 100;
  auto* verify = app.add_subcommand("verify", "run the structural-claim suite over the catalog");
  verify->add_option("--claims", claims_arg, "comma-separated claim ids, e.g. C16,C17");
  verify->add_flag("--scan", scan, "sweep parameterized families for open-question counterexamples");
  verify->add_option("--bound", bound, "order bound for --scan");

  auto* catalog = app.add_subcommand("catalog", "list or validate the catalog");
  catalog->add_option("action", catalog_action, "list or validate")
      ->check(CLI::IsMember({"list", "validate"}))
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) return cmd_describe(cfg, describe_expr);
    if (lattice->parsed()) return cmd_lattice(cfg, lattice_expr);
    if (verify->parsed()) return cmd_verify(cfg, claims_arg, scan, bound);
    if (catalog->parsed()) return cmd_catalog(cfg, catalog_action);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
