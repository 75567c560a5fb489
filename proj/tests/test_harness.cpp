#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <grouplab/grouplab.hpp>

#include "random_specs.hpp"

using namespace grouplab;

namespace {

// smaller slice of the catalog so harness tests stay quick
std::vector<CatalogEntry> small_catalog() {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : builtin_catalog())
    if (realize(e.spec).order() <= 36) out.push_back(e);
  return out;
}

const CatalogAnalysis* find(const std::vector<CatalogAnalysis>& as, const std::string& name) {
  for (const CatalogAnalysis& a : as)
    if (a.entry.name == name) return &a;
  return nullptr;
}

std::vector<const ClaimResult*> rows(const std::vector<ClaimResult>& rs, const std::string& claim,
                                     const std::string& group = "") {
  std::vector<const ClaimResult*> out;
  for (const ClaimResult& r : rs)
    if (r.claim_id == claim && (group.empty() || r.group == group)) out.push_back(&r);
  return out;
}

}  // namespace

TEST_CASE("catalog integrity") {
  auto entries = builtin_catalog();
  CHECK(entries.size() >= 30);

  std::set<std::string> names;
  for (const CatalogEntry& e : entries) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);  // unique names
    CHECK_NOTHROW(validate_catalog_entry(e));
    // every expected field carries a provenance note
    for (auto it = e.expected.begin(); it != e.expected.end(); ++it) {
      REQUIRE(e.provenance.contains(it.key()));
      std::string note = e.provenance[it.key()].get<std::string>();
      bool tagged = note.rfind("known:", 0) == 0 || note.rfind("trivial:", 0) == 0 ||
                    note.rfind("derived:", 0) == 0;
      CHECK_MESSAGE(tagged, e.name, " field ", it.key(), " note: ", note);
    }
  }

  // every group named across the discussion is present
  for (const char* name : {"Q8", "Q16", "Q32", "C4 x S3", "C4 x A5", "D4", "Heis(3)", "SL2(3)",
                           "SL2(5)", "A4", "A5", "S3", "S4", "C9:C3", "C25:C5",
                           "SmallGroup(32,2)", "(C2xC2):C9", "C5:C4"})
    CHECK_MESSAGE(names.count(name) == 1, name);
}

TEST_CASE("catalog expected fields match classification") {
  auto analyses = analyze_catalog(small_catalog());
  for (const CatalogAnalysis& a : analyses) {
    CAPTURE(a.entry.name);
    REQUIRE(a.ok());
    auto mismatch = expected_mismatch(a.entry, a.report);
    CHECK_MESSAGE(!mismatch.has_value(), mismatch.value_or(""));
  }
}

TEST_CASE("expected-field mismatches are detected") {
  CatalogEntry wrong;
  wrong.name = "Q8-wrong";
  wrong.spec = "Q8";
  wrong.expected["ssip"] = true;  // Q8 is SIP but not SSIP
  wrong.provenance["ssip"] = "trivial: deliberately wrong";
  PropertyReport r = classify(realize("Q8"), wrong.name);
  auto m = expected_mismatch(wrong, r);
  REQUIRE(m.has_value());
  CHECK(m->find("ssip") != std::string::npos);
}

TEST_CASE("catalog JSONL round trip") {
  auto entries = builtin_catalog();
  std::stringstream buf;
  write_catalog_jsonl(buf, entries);
  auto back = read_catalog_jsonl(buf);
  REQUIRE(back.size() == entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    CHECK(back[i].name == entries[i].name);
    CHECK(back[i].spec == entries[i].spec);
    CHECK(back[i].expected == entries[i].expected);
    CHECK(back[i].provenance == entries[i].provenance);
  }
}

TEST_CASE("the shipped catalog file matches the built-in catalog") {
  std::ifstream in(std::string(GROUPLAB_SOURCE_DIR) + "/data/catalog.jsonl");
  REQUIRE(in.good());
  auto from_file = read_catalog_jsonl(in);
  auto builtin = builtin_catalog();
  REQUIRE(from_file.size() == builtin.size());
  for (size_t i = 0; i < builtin.size(); ++i) {
    CHECK(from_file[i].name == builtin[i].name);
    CHECK(from_file[i].spec == builtin[i].spec);
    CHECK(from_file[i].expected == builtin[i].expected);
    CHECK(from_file[i].provenance == builtin[i].provenance);
  }
}

TEST_CASE("catalog parse errors") {
  {
    std::stringstream bad("not json at all\n");
    CHECK_THROWS_AS(read_catalog_jsonl(bad), CatalogError);
  }
  {
    std::stringstream missing(R"({"name":"X"})"
                              "\n");
    CHECK_THROWS_AS(read_catalog_jsonl(missing), CatalogError);
  }
  {
    // expected field without a provenance note
    std::stringstream noprov(R"({"name":"X","spec":"C4","expected":{"order":4},"provenance":{}})"
                             "\n");
    CHECK_THROWS_AS(read_catalog_jsonl(noprov), CatalogError);
  }
  {
    std::stringstream badfield(
        R"({"name":"X","spec":"C4","expected":{"frobnicated":true},"provenance":{"frobnicated":"trivial: no"}})"
        "\n");
    CHECK_THROWS_AS(read_catalog_jsonl(badfield), CatalogError);
  }
  {
    std::stringstream badspec(
        R"({"name":"X","spec":"Q7","expected":{},"provenance":{}})"
        "\n");
    CHECK_THROWS_AS(read_catalog_jsonl(badspec), CatalogError);
  }
  {
    // comments and blank lines are fine
    std::stringstream ok("# comment\n\n"
                         R"({"name":"X","spec":"C4"})"
                         "\n");
    CHECK(read_catalog_jsonl(ok).size() == 1);
  }
}

TEST_CASE("claim table") {
  const auto& table = claim_table();
  REQUIRE(table.size() == 23);
  for (size_t i = 0; i < table.size(); ++i) {
    CHECK(table[i].id == "C" + std::to_string(i + 1));
    CHECK_FALSE(table[i].statement.empty());
  }
}

TEST_CASE("claim suite on the small catalog") {
  auto analyses = analyze_catalog(small_catalog(), {}, 2);
  auto results = run_claims(analyses);
  CHECK(count_hard_failures(results) == 0);
  CHECK(open_issue_counterexamples(results).empty());

  SUBCASE("C3 on the order-32 witness holds with a Klein witness") {
    auto r = rows(results, "C3");
    REQUIRE(r.size() == 1);
    CHECK(r[0]->group == "SmallGroup(32,2)");
    CHECK(r[0]->verdict == ClaimResult::Verdict::Holds);
    CHECK(r[0]->witness.find("klein=") != std::string::npos);
    CHECK(r[0]->witness.find("quotient_pair=") != std::string::npos);
  }
  SUBCASE("C16 rows cover every non-trivial entry and all hold") {
    auto r = rows(results, "C16");
    CHECK(r.size() == analyses.size());
    for (auto* row : r) CHECK(row->verdict == ClaimResult::Verdict::Holds);
  }
  SUBCASE("C15 on elementary abelian entries holds") {
    for (auto* row : rows(results, "C15", "E(2,3)"))
      CHECK(row->verdict == ClaimResult::Verdict::Holds);
    CHECK(rows(results, "C15", "E(2,3)").size() == 1);
  }
  SUBCASE("C19 covers the POEC-and-SSIP entries") {
    auto r = rows(results, "C19");
    std::set<std::string> groups;
    for (auto* row : r) {
      groups.insert(row->group);
      CHECK(row->verdict == ClaimResult::Verdict::Holds);
    }
    CHECK(groups.count("C9:C3") == 1);
    CHECK(groups.count("(C2xC2):C9") == 1);
    CHECK(groups.count("C5:C4") == 0);  // SSIP but not POEC
  }
  SUBCASE("results are ordered by claim then group") {
    auto rank = [](const std::string& id) { return std::stoi(id.substr(1)); };
    for (size_t i = 1; i < results.size(); ++i) {
      int a = rank(results[i - 1].claim_id), b = rank(results[i].claim_id);
      CHECK(a <= b);
      if (a == b) CHECK(results[i - 1].group <= results[i].group);
    }
  }
}

TEST_CASE("claim filtering") {
  auto analyses = analyze_catalog(small_catalog());
  auto results = run_claims(analyses, {"C16", "C17"});
  CHECK_FALSE(results.empty());
  for (const ClaimResult& r : results) CHECK((r.claim_id == "C16" || r.claim_id == "C17"));
}

TEST_CASE("failed verdicts carry witnesses; C23 stays out of the exit code") {
  std::vector<ClaimResult> fake;
  fake.push_back(ClaimResult::fails("C5", "X", "square-free order 30"));
  fake.push_back(ClaimResult::fails("C23", "Y", "POEC group with trivial centre"));
  fake.push_back(ClaimResult::holds("C1", "Z"));
  CHECK(count_hard_failures(fake) == 1);
  auto ce = open_issue_counterexamples(fake);
  REQUIRE(ce.size() == 1);
  CHECK(ce[0]->group == "Y");
  for (const ClaimResult& r : fake)
    if (r.verdict == ClaimResult::Verdict::Fails) CHECK_FALSE(r.witness.empty());
}

TEST_CASE("construction errors surface as setup failures") {
  CatalogEntry big;
  big.name = "too-big";
  big.spec = "S9";
  AnalysisBudgets tiny;
  tiny.element_budget = 100;
  auto analyses = analyze_catalog({big}, tiny);
  REQUIRE(analyses.size() == 1);
  CHECK_FALSE(analyses[0].ok());
  auto results = run_claims(analyses);
  REQUIRE(results.size() == 1);
  CHECK(results[0].claim_id == "setup");
  CHECK(results[0].verdict == ClaimResult::Verdict::Fails);
  CHECK(count_hard_failures(results) == 1);
}

TEST_CASE("parallel analysis is deterministic") {
  auto entries = small_catalog();
  auto serial = analyze_catalog(entries, {}, 1);
  auto parallel = analyze_catalog(entries, {}, 3);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].entry.name == parallel[i].entry.name);
    CHECK(report_to_json(serial[i].report).dump() == report_to_json(parallel[i].report).dump());
  }
}

TEST_CASE("every claim holds on a random catalog") {
  // the claims are theorems, so any batch of valid groups must come out clean
  std::vector<CatalogEntry> entries;
  for (const std::string& spec : testutil::random_semidirect_specs(105u, 10, 120)) {
    CatalogEntry e;
    e.name = spec;
    e.spec = spec;
    entries.push_back(std::move(e));
  }
  auto analyses = analyze_catalog(entries, {}, 2);
  auto results = run_claims(analyses);
  for (const ClaimResult& r : results) {
    INFO(r.claim_id, " on ", r.group, ": ", r.witness);
    CHECK(r.verdict != ClaimResult::Verdict::Fails);
  }
  CHECK(count_hard_failures(results) == 0);
  CHECK(open_issue_counterexamples(results).empty());
}

TEST_CASE("counterexample scan") {
  ScanReport rep = counterexample_scan(60);
  CHECK_FALSE(rep.rows.empty());

  // the open questions stay unanswered on these families
  CHECK(rep.trivial_center_poec.empty());
  CHECK(rep.cube_divisibility_gaps.empty());
  for (const ScanRow& r : rep.rows)
    if (r.poec) CHECK(r.center_order > 1);

  auto row_named = [&](const std::string& name) -> const ScanRow* {
    for (const ScanRow& r : rep.rows)
      if (r.name == name) return &r;
    return nullptr;
  };

  // generalized quaternion sweep: POEC with centre of order 2
  for (const char* q : {"Q8", "Q16", "Q32"}) {
    const ScanRow* r = row_named(q);
    REQUIRE(r != nullptr);
    CHECK(r->poec);
    CHECK(r->center_order == 2);
  }

  // the trivial-centre SSIP example shows up and is not POEC
  const ScanRow* zr = row_named("sd(C5, C4, [[2]])");
  REQUIRE(zr != nullptr);
  CHECK_FALSE(zr->poec);
  CHECK(zr->ssip);
  CHECK(zr->center_order == 1);

  // dihedral observations: never POEC
  for (int n = 3; n <= 20; ++n) {
    const ScanRow* dr = row_named("D" + std::to_string(n));
    if (2 * n <= 60) {
      REQUIRE(dr != nullptr);
      CHECK_FALSE(dr->poec);
    }
  }
}
