// Acceptance suite: end-to-end checks over the shipped catalog.  Each
// criterion prints one PASS/FAIL line; the binary fails if any line fails.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <set>

#include <grouplab/grouplab.hpp>

#include "random_specs.hpp"

using namespace grouplab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  bool finish(int number, const std::string& title) {
    bool pass = problems.empty();
    std::printf("[criterion %d] %s - %s\n", number, pass ? "PASS" : "FAIL", title.c_str());
    for (const std::string& p : problems) std::printf("    problem: %s\n", p.c_str());
    std::fflush(stdout);
    return pass;
  }
};

const std::vector<CatalogAnalysis>& shared_analyses() {
  static const std::vector<CatalogAnalysis> analyses = [] {
    return analyze_catalog(builtin_catalog(), {}, 4);
  }();
  return analyses;
}

}  // namespace

TEST_CASE("criterion 1: oracle equivalence on catalog groups of order <= 200") {
  auto t0 = Clock::now();
  Criterion c;
  int checked = 0;
  for (const CatalogEntry& e : builtin_catalog()) {
    FiniteGroup g = realize(e.spec);
    if (g.order() > 200 || g.order() <= 1) continue;
    ++checked;
    SubgroupLattice lat = all_subgroups(g);
    c.require(sip_by_definition(lat) == is_sip(g), e.name + ": SIP oracle mismatch");
    c.require(ssip_by_definition(lat) == is_ssip(g), e.name + ": SSIP oracle mismatch");
  }
  double elapsed = seconds_since(t0);
  c.require(checked >= 30, "expected at least 30 groups of order <= 200 in the catalog");
  c.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s exceeds 60s");
  CHECK(c.finish(1, "SIP/SSIP deciders agree with the subgroup-lattice oracle (" +
                        std::to_string(checked) + " groups, " + std::to_string(elapsed) + "s)"));
}

TEST_CASE("criterion 2: regression of the worked examples") {
  Criterion c;

  {
    FiniteGroup q8 = realize("Q8");
    c.require(prime_structure(q8).pg.order() == 2, "P[Q8] order is not 2");
    SubgroupLattice lat = all_subgroups(q8);
    c.require(lat.s_collection.size() == 4, "|S(Q8)| is not 4");
    c.require(is_sip(q8) && !is_ssip(q8), "Q8 should be SIP but not SSIP");
  }
  {
    FiniteGroup g = realize("C4 x S3");
    c.require(is_ssip(g), "C4 x S3 should be SSIP");
    SubgroupLattice lat = all_subgroups(g);
    c.require(lat.s_collection.size() == 1 && lat.subgroups[lat.s_collection[0]].order() == 12,
              "C4 x S3 should have a unique S-member of order 12");
  }
  {
    FiniteGroup g = realize("sd(C2 x C2, C9, [[0,1],[1,1]])");
    c.require(is_poec(g), "(C2xC2):C9 should be POEC");
    c.require(center(g).order() == 3, "(C2xC2):C9 centre order should be exactly 3");
    c.require(!is_lagrangian(all_subgroups(g)), "(C2xC2):C9 should not be Lagrangian");
  }
  {
    FiniteGroup g = realize("sd(C5, C4, [[2]])");
    c.require(is_ssip(g), "C5:C4 should be SSIP");
    c.require(center(g).order() == 1, "C5:C4 should have trivial centre");
  }
  {
    FiniteGroup g = realize("sd(C4 x C2, C4, [[1,0],[1,1]])");
    FiniteGroup d4 = realize("D4");
    const auto& orders = g.order_table();
    bool found = false;
    for (int x = 1; x < g.order() && !found; ++x) {
      if (orders[x] != 2) continue;
      for (int y = x + 1; y < g.order() && !found; ++y) {
        if (orders[y] != 2) continue;
        Subgroup n = generated_subgroup(g, {x, y});
        if (n.order() != 4 || !is_normal(g, n)) continue;
        Quotient q = quotient(g, n);
        if (is_isomorphic(q.group, d4) && !is_poec(q.group)) found = true;
      }
    }
    c.require(found, "no Klein normal subgroup of the order-32 group with non-POEC D4 quotient");
  }
  c.require(!is_poec(realize("D4")), "D4 should not be POEC");
  c.require(!is_poec(realize("Heis(3)")), "Heis(3) should not be POEC");
  for (const char* q : {"Q8", "Q16", "Q32"})
    c.require(is_poec(realize(q)), std::string(q) + " should be POEC");

  CHECK(c.finish(2, "worked examples reproduce their pinned values"));
}

TEST_CASE("criterion 3: claim suite is green over the shipped catalog") {
  auto t0 = Clock::now();
  Criterion c;
  auto entries = builtin_catalog();
  c.require(entries.size() >= 30, "catalog has fewer than 30 entries");
  auto analyses = analyze_catalog(entries, {}, 4);
  auto results = run_claims(analyses);
  double elapsed = seconds_since(t0);

  for (const ClaimResult& r : results)
    if (r.verdict == ClaimResult::Verdict::Fails && r.claim_id != "C23")
      c.require(false, r.claim_id + " fails on " + r.group + ": " + r.witness);
  c.require(open_issue_counterexamples(results).empty(),
            "open-question scan reported a counterexample");
  c.require(elapsed < 300.0, "runtime " + std::to_string(elapsed) + "s exceeds 5 minutes");

  int holds = 0;
  for (const ClaimResult& r : results)
    if (r.verdict == ClaimResult::Verdict::Holds) ++holds;
  CHECK(c.finish(3, "verify over " + std::to_string(entries.size()) + " entries: " +
                        std::to_string(holds) + " holds, 0 fails (" + std::to_string(elapsed) +
                        "s at parallelism 4)"));
}

TEST_CASE("criterion 4: POEC equals the square-free-subgroup characterization") {
  Criterion c;
  int checked = 0;
  for (const CatalogAnalysis& a : shared_analyses()) {
    ++checked;
    c.require(a.ok(), a.entry.name + " failed to build");
    if (a.ok())
      c.require(is_poec_via_sqf(a.group) == a.report.flags.poec,
                a.entry.name + ": the two POEC routes disagree");
  }
  for (const std::string& expr : testutil::random_semidirect_specs(20250501u, 50, 400)) {
    ++checked;
    FiniteGroup g = realize(expr);
    c.require(is_poec(g) == is_poec_via_sqf(g), expr + ": the two POEC routes disagree");
  }
  CHECK(c.finish(4, "pairwise-commuting and square-free-subgroup POEC routes agree on " +
                        std::to_string(checked) + " groups"));
}

TEST_CASE("criterion 5: structure of the collection S") {
  Criterion c;
  int with_lattice = 0;
  for (const CatalogAnalysis& a : shared_analyses()) {
    if (!a.ok() || !a.lattice) continue;
    ++with_lattice;
    const SubgroupLattice& lat = *a.lattice;
    if (lat.s_collection.empty()) continue;

    c.require(lat.s_minimum.has_value(), a.entry.name + ": no minimum of S");
    if (lat.s_minimum)
      c.require(lat.subgroups[*lat.s_minimum].members == a.ps.pg.members,
                a.entry.name + ": min(S) differs from P[G]");

    std::set<int> maximal(lat.maximal.begin(), lat.maximal.end());
    for (int m : maximal_s_members(lat))
      c.require(maximal.count(m) == 1,
                a.entry.name + ": maximal S-member is not a maximal subgroup");

    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < lat.subgroups.size(); ++i) index[lat.subgroups[i].members] = (int)i;
    std::set<int> in_s(lat.s_collection.begin(), lat.s_collection.end());
    for (int x : lat.s_collection)
      for (int y : lat.s_collection) {
        auto meet = detail::intersect_members(lat.subgroups[x].members, lat.subgroups[y].members);
        auto it = index.find(meet);
        bool closed = it != index.end() && in_s.count(it->second) == 1;
        c.require(closed, a.entry.name + ": S not closed under intersection");
      }
  }
  c.require(with_lattice >= 30, "fewer than 30 catalog groups within the lattice budget");
  CHECK(c.finish(5, "min(S) = P[G], maximal S-members are maximal subgroups, S is "
                    "intersection-closed (" + std::to_string(with_lattice) + " lattices)"));
}

TEST_CASE("criterion 6: structural algorithm checks") {
  Criterion c;

  for (const CatalogAnalysis& a : shared_analyses()) {
    if (!a.ok()) continue;
    for (auto& [p, e] : a.report.factorization)
      c.require(sylow(a.group, p).order() == int_pow(p, e),
                a.entry.name + ": Sylow order is not the exact " + std::to_string(p) + "-part");
  }

  int quotients_checked = 0;
  for (const CatalogAnalysis& a : shared_analyses()) {
    if (!a.ok() || a.group.order() > 1024) continue;
    std::vector<Subgroup> normals{center(a.group), commutator_subgroup(a.group)};
    for (long p : a.ps.primes) {
      Subgroup s = sylow(a.group, p);
      if (is_normal(a.group, s)) normals.push_back(std::move(s));
    }
    for (const Subgroup& n : normals) {
      Quotient q = quotient(a.group, n);
      ++quotients_checked;
      for (int x = 0; x < a.group.order(); ++x)
        for (int y = 0; y < a.group.order(); ++y)
          if (q.projection[a.group.mul(x, y)] != q.group.mul(q.projection[x], q.projection[y])) {
            c.require(false, a.entry.name + ": projection is not a homomorphism");
            x = y = a.group.order();
          }
    }
  }
  c.require(quotients_checked > 50, "too few quotients exercised");

  {
    SeriesReport s = derived_series(realize("S4"));
    std::vector<int> got;
    for (const Subgroup& t : s.terms) got.push_back(t.order());
    c.require(got == std::vector<int>{24, 12, 4, 1}, "derived series of S4 is not 24 > 12 > 4 > 1");
  }
  CHECK(c.finish(6, "Sylow orders exact; " + std::to_string(quotients_checked) +
                        " quotient projections verified exhaustively; S4 derived series"));
}

TEST_CASE("criterion 7: classification sanity for perfect groups") {
  Criterion c;
  for (const char* name : {"A5", "SL2(5)"}) {
    PropertyReport r = classify(realize(name), name);
    c.require(r.flags.perfect, std::string(name) + " should be perfect");
    c.require(!r.flags.poec, std::string(name) + " should not be POEC");
  }
  for (const CatalogAnalysis& a : shared_analyses())
    if (a.ok() && a.report.flags.perfect)
      c.require(!a.report.flags.poec, a.entry.name + " is perfect and POEC below order 1215000");
  CHECK(c.finish(7, "perfect groups classified correctly; no perfect catalog entry is POEC"));
}

TEST_CASE("criterion 8: parser round trip and positioned errors") {
  Criterion c;

  std::vector<std::string> corpus;
  for (const CatalogEntry& e : builtin_catalog()) corpus.push_back(e.spec);
  for (const char* extra : {
           "sd(C9, C3, [[4]]) x sd(C9, C3, [[4]])",
           "(C2 x C3) x (C4 x C5)",
           "C2 x (C3 x (C4 x C5))",
           "sd(C3 x C3, C4, [[0,1],[2,0]])",
           "sd(C7, C6, [[3]])",
           "Q64 x D12",
           "E(5,2) x Heis(5)",
           "GL2(7)",
           "A6 x C2",
           "sd(C2 x C2 x C2, C7, [[0,1,0],[0,0,1],[1,1,0]])",
           "S5 x S4",
           "(Q8 x Q8) x Q8",
           "sd(C16, C4, [[5]])",
           "Heis(3) x sd(C5, C4, [[2]])",
           "D20 x C36",
       })
    corpus.push_back(extra);
  std::sort(corpus.begin(), corpus.end());
  corpus.erase(std::unique(corpus.begin(), corpus.end()), corpus.end());
  c.require(corpus.size() >= 50, "corpus has fewer than 50 distinct expressions, got " +
                                     std::to_string(corpus.size()));

  int round_trips = 0;
  for (const std::string& text : corpus) {
    try {
      GroupSpec once = parse_group_expr(text);
      GroupSpec again = parse_group_expr(print_group_spec(once));
      if (once == again) ++round_trips;
      else c.require(false, "round trip changed: " + text);
    } catch (const Error& e) {
      c.require(false, "corpus expression failed to parse: " + text);
    }
  }

  struct Bad {
    const char* text;
    size_t position;
  };
  const Bad malformed[] = {
      {"", 0},          {"X4", 0},           {"C", 1},
      {"C4 y S3", 3},   {"C4 x", 4},         {"(C4 x C2", 8},
      {"sd(C4, C2", 9}, {"sd(C4, C2, [1])", 12}, {"E(2 3)", 4},
      {"sd(C4, C2, [[1]]", 16},
  };
  int positioned = 0;
  for (const Bad& b : malformed) {
    try {
      parse_group_expr(b.text);
      c.require(false, std::string("malformed input parsed: '") + b.text + "'");
    } catch (const SyntaxError& e) {
      if (e.position == b.position) ++positioned;
      else
        c.require(false, std::string("'") + b.text + "': position " +
                             std::to_string(e.position) + ", expected " +
                             std::to_string(b.position));
    }
  }

  CHECK(c.finish(8, std::to_string(round_trips) + "/" + std::to_string(corpus.size()) +
                        " expressions round-trip; " + std::to_string(positioned) +
                        "/10 malformed inputs give positioned errors"));
}
