#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <grouplab/catalog.hpp>
#include <grouplab/dsl.hpp>
#include <grouplab/structure.hpp>

#include "oracle.hpp"

using namespace grouplab;

namespace {

int element_of_order(const FiniteGroup& g, int o) {
  const auto& orders = g.order_table();
  for (int x = 0; x < g.order(); ++x)
    if (orders[x] == o) return x;
  return -1;
}

}  // namespace

TEST_CASE("generated subgroups") {
  SUBCASE("empty seed gives the trivial subgroup") {
    FiniteGroup g = realize("S4");
    Subgroup t = generated_subgroup(g, {});
    CHECK(t.order() == 1);
    CHECK(t.members == std::vector<int>{0});
  }
  SUBCASE("a transposition and a 3-cycle generate S3") {
    FiniteGroup s3 = realize("S3");
    Subgroup h = generated_subgroup(s3, {element_of_order(s3, 2), element_of_order(s3, 3)});
    CHECK(h.order() == 6);
  }
  SUBCASE("b^2 generates the order-2 subgroup of Q8") {
    FiniteGroup q8 = realize("Q8");
    int b = q8.index_of(Key{0, 1});
    Subgroup h = generated_subgroup(q8, {q8.mul(b, b)});
    CHECK(h.order() == 2);
  }
  SUBCASE("idempotent and monotone") {
    FiniteGroup g = realize("S4");
    Subgroup h = generated_subgroup(g, {element_of_order(g, 4)});
    Subgroup hh = generated_subgroup(g, h.members);
    CHECK(h.members == hh.members);
    Subgroup wider = generated_subgroup(g, {element_of_order(g, 4), element_of_order(g, 3)});
    CHECK(wider.contains_all(h));
  }
}

TEST_CASE("centralizer and center") {
  CHECK(center(realize("sd(C2 x C2, C9, [[0,1],[1,1]])")).order() == 3);
  CHECK(center(realize("sd(C5, C4, [[2]])")).order() == 1);

  FiniteGroup ab = realize("C12 x C2");
  CHECK(center(ab).order() == ab.order());

  FiniteGroup q8 = realize("Q8");
  CHECK(center(q8).order() == 2);
  // centralizer of a non-central element of Q8 is the C4 through it
  int i = element_of_order(q8, 4);
  CHECK(centralizer(q8, {i}).order() == 4);
}

TEST_CASE("commutator subgroup and derived series") {
  SUBCASE("abelian groups have trivial derived subgroup") {
    FiniteGroup g = realize("C6 x C4");
    CHECK(commutator_subgroup(g).order() == 1);
    SeriesReport s = derived_series(g);
    CHECK(s.terms.size() == 2);
    CHECK(s.terminated);
  }
  SUBCASE("SL2(5) is perfect") {
    FiniteGroup g = realize("SL2(5)");
    CHECK(commutator_subgroup(g).order() == g.order());
    CHECK(is_perfect(g));
    CHECK_FALSE(is_solvable(g));
  }
  SUBCASE("derived series of S3 and S4 match the all-pairs oracle") {
    FiniteGroup s3 = realize("S3");
    auto mul3 = [&](int a, int b) { return s3.mul(a, b); };
    auto inv3 = [&](int a) { return s3.inv(a); };
    CHECK(oracle::derived_series_orders(mul3, inv3, s3.order()) == std::vector<int>{6, 3, 1});
    SeriesReport s = derived_series(s3);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[0].order() == 6);
    CHECK(s.terms[1].order() == 3);
    CHECK(s.terms[2].order() == 1);
    CHECK(s.terminated);

    FiniteGroup s4 = realize("S4");
    auto mul4 = [&](int a, int b) { return s4.mul(a, b); };
    auto inv4 = [&](int a) { return s4.inv(a); };
    std::vector<int> expected = oracle::derived_series_orders(mul4, inv4, s4.order());
    CHECK(expected == std::vector<int>{24, 12, 4, 1});
    SeriesReport t = derived_series(s4);
    std::vector<int> got;
    for (const Subgroup& term : t.terms) got.push_back(term.order());
    CHECK(got == expected);
  }
}

TEST_CASE("lower central series and nilpotency") {
  CHECK(is_nilpotent(realize("Q16")));
  CHECK(is_nilpotent(realize("Heis(3)")));
  CHECK_FALSE(is_nilpotent(realize("S3")));
  CHECK_FALSE(is_nilpotent(realize("SL2(3)")));
  CHECK(is_solvable(realize("SL2(3)")));

  // nilpotent implies solvable
  for (const char* expr : {"Q8", "Heis(3)", "C12", "sd(C9, C3, [[4]])", "E(2,3)"}) {
    FiniteGroup g = realize(expr);
    REQUIRE(is_nilpotent(g));
    CHECK(is_solvable(g));
  }

  // S3: lower central series stalls at A3
  SeriesReport lcs = lower_central_series(realize("S3"));
  CHECK_FALSE(lcs.terminated);
  CHECK(lcs.terms.back().order() == 3);
}

TEST_CASE("normal closure and normality") {
  SUBCASE("A5: the normal closure of every non-identity element is everything") {
    FiniteGroup a5 = realize("A5");
    for (int g = 1; g < a5.order(); ++g) CHECK(normal_closure(a5, {g}).order() == 60);
  }
  SUBCASE("the center is always normal") {
    for (const char* expr : {"Q8", "S4", "SL2(3)", "sd(C2 x C2, C9, [[0,1],[1,1]])"}) {
      FiniteGroup g = realize(expr);
      CHECK(is_normal(g, center(g)));
    }
  }
  SUBCASE("a transposition does not generate a normal subgroup of S3") {
    FiniteGroup s3 = realize("S3");
    Subgroup h = generated_subgroup(s3, {element_of_order(s3, 2)});
    CHECK_FALSE(is_normal(s3, h));
    CHECK(normal_closure(s3, h.generators).order() == 6);
  }
}

TEST_CASE("quotients") {
  SUBCASE("the order-32 group has a normal Klein subgroup with quotient D4") {
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
        if (is_isomorphic(q.group, d4)) found = true;
      }
    }
    CHECK(found);
  }
  SUBCASE("quotient by the trivial subgroup is the group itself") {
    FiniteGroup s3 = realize("S3");
    Quotient q = quotient(s3, trivial_subgroup(s3));
    CHECK(q.group.order() == 6);
    CHECK(is_isomorphic(q.group, s3));
  }
  SUBCASE("Q8 over its center is the Klein group") {
    FiniteGroup q8 = realize("Q8");
    Quotient q = quotient(q8, center(q8));
    CHECK(q.group.order() == 4);
    CHECK(q.group.order_profile() == std::map<int, int>{{1, 1}, {2, 3}});
  }
  SUBCASE("projection is a homomorphism (exhaustive)") {
    for (const char* expr : {"S4", "Q16", "SL2(3)"}) {
      FiniteGroup g = realize(expr);
      Quotient q = quotient(g, commutator_subgroup(g));
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          REQUIRE(q.projection[g.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
      CHECK(is_abelian(q.group));  // G/G' is abelian
    }
  }
  SUBCASE("non-normal subgroups are rejected") {
    FiniteGroup s3 = realize("S3");
    Subgroup h = generated_subgroup(s3, {element_of_order(s3, 2)});
    CHECK_THROWS_AS(quotient(s3, h), NotNormal);
  }
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow(realize("C12"), 2).order() == 4);
  CHECK(sylow(realize("C12"), 3).order() == 3);

  FiniteGroup s4 = realize("S4");
  Subgroup syl2 = sylow(s4, 2);
  CHECK(syl2.order() == 8);
  {
    std::vector<int> members = syl2.members;
    FiniteGroup sub = group_from_table(8, [&] {
      std::vector<int> table(64);
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          int prod = s4.mul(members[i], members[j]);
          table[8 * i + j] =
              static_cast<int>(std::lower_bound(members.begin(), members.end(), prod) -
                               members.begin());
        }
      return table;
    }());
    CHECK(is_isomorphic(sub, realize("D4")));
  }

  FiniteGroup sl25 = realize("SL2(5)");
  Subgroup syl = sylow(sl25, 2);
  CHECK(syl.order() == 8);
  {
    std::vector<int> members = syl.members;
    std::vector<int> table(64);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        int prod = sl25.mul(members[i], members[j]);
        table[8 * i + j] = static_cast<int>(
            std::lower_bound(members.begin(), members.end(), prod) - members.begin());
      }
    CHECK(is_isomorphic(group_from_table(8, table), realize("Q8")));
  }

  SUBCASE("order is the exact p-part") {
    for (const char* expr : {"S4", "SL2(3)", "C4 x S3", "sd(C2 x C2, C9, [[0,1],[1,1]])"}) {
      FiniteGroup g = realize(expr);
      for (auto& [p, e] : factorize(g.order())) CHECK(sylow(g, p).order() == int_pow(p, e));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(sylow(realize("S4"), 5), PrimeDoesNotDivide);
    CHECK_THROWS_AS(sylow(realize("S4"), 4), PrimeDoesNotDivide);
  }
}

TEST_CASE("simplicity") {
  CHECK(is_simple(realize("C7")));
  CHECK(is_simple(realize("A5")));
  CHECK_FALSE(is_simple(realize("Q8")));
  CHECK_FALSE(is_simple(realize("C6")));
  CHECK_FALSE(is_simple(realize("S4")));
  CHECK_FALSE(is_simple(realize("SL2(5)")));  // centre is proper normal
}

TEST_CASE("isomorphism testing") {
  CHECK_FALSE(is_isomorphic(realize("C4"), realize("C2 x C2")));
  CHECK_FALSE(is_isomorphic(realize("Q8"), realize("D4")));  // 1 vs 5 involutions
  CHECK(is_isomorphic(realize("C6"), realize("C2 x C3")));
  CHECK(is_isomorphic(realize("S3"), realize("D3")));
  CHECK(is_isomorphic(realize("SL2(2)"), realize("S3")));
  CHECK_FALSE(is_isomorphic(realize("S3"), realize("C6")));
  CHECK_FALSE(is_isomorphic(realize("Heis(3)"), realize("sd(C9, C3, [[4]])")));  // exponents 3 vs 9

  SUBCASE("reflexive and symmetric across the whole catalog") {
    std::vector<FiniteGroup> groups, copies;
    std::vector<std::string> names;
    for (const CatalogEntry& e : builtin_catalog()) {
      groups.push_back(realize(e.spec));
      copies.push_back(realize(e.spec));  // fresh instance of the same group
      names.push_back(e.name);
    }
    for (size_t i = 0; i < groups.size(); ++i) {
      CAPTURE(names[i]);
      CHECK(is_isomorphic(groups[i], copies[i]));
      for (size_t j = i + 1; j < groups.size(); ++j) {
        CAPTURE(names[j]);
        CHECK(is_isomorphic(groups[i], groups[j]) == is_isomorphic(groups[j], groups[i]));
      }
    }
  }
  SUBCASE("the five groups of order 8 are pairwise distinct") {
    std::vector<FiniteGroup> groups;
    for (const char* e : {"C8", "C4 x C2", "E(2,3)", "D4", "Q8"}) groups.push_back(realize(e));
    for (size_t i = 0; i < groups.size(); ++i)
      for (size_t j = 0; j < groups.size(); ++j)
        CHECK(is_isomorphic(groups[i], groups[j]) == (i == j));
  }
  SUBCASE("the five groups of order 12 are pairwise distinct") {
    std::vector<FiniteGroup> groups;
    for (const char* e : {"C12", "C6 x C2", "A4", "D6"}) groups.push_back(realize(e));
    groups.push_back(enumerate_elements(std::make_shared<DicyclicBackend>(3)));
    for (size_t i = 0; i < groups.size(); ++i)
      for (size_t j = 0; j < groups.size(); ++j)
        CHECK(is_isomorphic(groups[i], groups[j]) == (i == j));
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(is_isomorphic(realize("SL2(7)"), realize("SL2(7)")), TooLarge);
  }
}

TEST_CASE("Lagrange: produced subgroup orders divide the group order") {
  for (const char* expr : {"S4", "SL2(3)", "sd(C2 x C2, C9, [[0,1],[1,1]])", "Q16"}) {
    FiniteGroup g = realize(expr);
    for (const Subgroup& h :
         {center(g), commutator_subgroup(g), sylow(g, 2), generated_subgroup(g, {1, 2})})
      CHECK(g.order() % h.order() == 0);
  }
}
