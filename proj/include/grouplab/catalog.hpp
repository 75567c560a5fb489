// Curated catalog of concrete groups with pinned expected properties.
// Every expected field carries a provenance note: "known" (established for
// this group in the literature), "trivial" (immediate from a definition), or
// "derived" (computed here and cross-checked against the lattice oracle).

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsl.hpp"
#include "properties.hpp"

namespace grouplab {

struct CatalogError : Error {
  explicit CatalogError(const std::string& msg) : Error(msg) {}
};

struct CatalogEntry {
  std::string name;
  std::string spec;
  OrderedJson expected;    // field -> pinned value
  OrderedJson provenance;  // field -> source note
};

inline const std::vector<std::string>& expected_field_names() {
  static const std::vector<std::string> fields = {
      "order",   "abelian",  "elementary_abelian", "poec",         "sip",
      "ssip",    "perfect",  "solvable",           "nilpotent",    "metabelian",
      "center_order", "pg_order", "index_pg"};
  return fields;
}

inline void validate_catalog_entry(const CatalogEntry& e) {
  if (e.name.empty()) throw CatalogError("catalog entry without a name");
  try {
    parse_group_expr(e.spec);
  } catch (const Error& err) {
    throw CatalogError("entry '" + e.name + "': spec does not parse: " + err.what());
  }
  const auto& fields = expected_field_names();
  for (auto it = e.expected.begin(); it != e.expected.end(); ++it) {
    if (std::find(fields.begin(), fields.end(), it.key()) == fields.end())
      throw CatalogError("entry '" + e.name + "': unknown expected field '" + it.key() + "'");
    if (!e.provenance.contains(it.key()))
      throw CatalogError("entry '" + e.name + "': expected field '" + it.key() +
                         "' has no provenance note");
  }
}

inline OrderedJson report_field(const PropertyReport& r, const std::string& key) {
  if (key == "order") return r.order;
  if (key == "abelian") return r.flags.abelian;
  if (key == "elementary_abelian") return r.flags.elementary_abelian;
  if (key == "poec") return r.flags.poec;
  if (key == "sip") return r.flags.sip;
  if (key == "ssip") return r.flags.ssip;
  if (key == "perfect") return r.flags.perfect;
  if (key == "solvable") return r.flags.solvable;
  if (key == "nilpotent") return r.flags.nilpotent;
  if (key == "metabelian") return r.flags.metabelian;
  if (key == "center_order") return r.center_order;
  if (key == "pg_order") return r.pg_order;
  if (key == "index_pg") return r.index_pg;
  throw CatalogError("unknown report field '" + key + "'");
}

// first mismatch between pinned values and a computed report, if any
inline std::optional<std::string> expected_mismatch(const CatalogEntry& e,
                                                    const PropertyReport& r) {
  for (auto it = e.expected.begin(); it != e.expected.end(); ++it) {
    OrderedJson got = report_field(r, it.key());
    if (got != it.value())
      return e.name + ": field '" + it.key() + "' expected " + it.value().dump() + ", got " +
             got.dump();
  }
  return std::nullopt;
}

// --- JSON-lines interchange ----------------------------------------------

inline OrderedJson catalog_entry_to_json(const CatalogEntry& e) {
  OrderedJson j;
  j["name"] = e.name;
  j["spec"] = e.spec;
  j["expected"] = e.expected;
  j["provenance"] = e.provenance;
  return j;
}

inline void write_catalog_jsonl(std::ostream& os, const std::vector<CatalogEntry>& entries) {
  for (const CatalogEntry& e : entries) os << catalog_entry_to_json(e).dump() << '\n';
}

inline std::vector<CatalogEntry> read_catalog_jsonl(std::istream& is) {
  std::vector<CatalogEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    OrderedJson j;
    try {
      j = OrderedJson::parse(line);
    } catch (const nlohmann::json::exception& ex) {
      throw CatalogError("catalog line " + std::to_string(lineno) + ": " + ex.what());
    }
    CatalogEntry e;
    if (!j.contains("name") || !j.contains("spec"))
      throw CatalogError("catalog line " + std::to_string(lineno) + ": missing name or spec");
    e.name = j["name"].get<std::string>();
    e.spec = j["spec"].get<std::string>();
    e.expected = j.value("expected", OrderedJson::object());
    e.provenance = j.value("provenance", OrderedJson::object());
    validate_catalog_entry(e);
    entries.push_back(std::move(e));
  }
  return entries;
}

// --- the shipped catalog ---------------------------------------------------

namespace detail {

class EntryBuilder {
 public:
  EntryBuilder(std::string name, std::string spec) {
    e_.name = std::move(name);
    e_.spec = std::move(spec);
  }
  EntryBuilder& field(const std::string& key, OrderedJson value, const std::string& note) {
    e_.expected[key] = std::move(value);
    e_.provenance[key] = note;
    return *this;
  }
  CatalogEntry done() { return std::move(e_); }

 private:
  CatalogEntry e_;
};

}  // namespace detail

inline std::vector<CatalogEntry> builtin_catalog() {
  using B = detail::EntryBuilder;
  std::vector<CatalogEntry> out;
  auto add = [&](B b) { out.push_back(b.done()); };

  // cyclic groups: SSIP exactly when the order is p^2 times distinct primes
  add(B("C2", "C2")
          .field("order", 2, "trivial: cyclic")
          .field("abelian", true, "trivial: cyclic")
          .field("elementary_abelian", true, "trivial: prime order")
          .field("poec", true, "trivial: abelian groups are POEC")
          .field("sip", false, "trivial: P[G] = G for prime order")
          .field("ssip", false, "trivial: [G:P[G]] = 1"));
  add(B("C3", "C3")
          .field("order", 3, "trivial: cyclic")
          .field("sip", false, "trivial: P[G] = G for prime order"));
  add(B("C4", "C4")
          .field("order", 4, "trivial: cyclic")
          .field("elementary_abelian", false, "trivial: has an element of order 4")
          .field("sip", true, "derived: P[G] = C2 is proper; lattice oracle agrees")
          .field("ssip", true, "derived: [G:P[G]] = 2 is prime")
          .field("pg_order", 2, "trivial: unique involution generates C2"))
      ;
  add(B("C6", "C6")
          .field("order", 6, "trivial: cyclic")
          .field("sip", false, "derived: order-2 and order-3 elements generate C6")
          .field("ssip", false, "derived: [G:P[G]] = 1"));
  add(B("C8", "C8")
          .field("order", 8, "trivial: cyclic")
          .field("sip", true, "derived: P[G] = C2")
          .field("ssip", false, "derived: [G:P[G]] = 4 is not prime")
          .field("pg_order", 2, "derived: single involution"));
  add(B("C12", "C12")
          .field("order", 12, "trivial: cyclic")
          .field("ssip", true, "known: cyclic groups of order p^2 q are SSIP; 12 = 2^2*3")
          .field("pg_order", 6, "derived: prime-order elements generate the index-2 subgroup")
          .field("index_pg", 2, "derived: lattice oracle finds S = {order-6 subgroup}"));
  add(B("C18", "C18")
          .field("order", 18, "trivial: cyclic")
          .field("ssip", true, "derived: 18 = 3^2*2, index of P[G] is 3"));
  add(B("C20", "C20")
          .field("order", 20, "trivial: cyclic")
          .field("ssip", true, "derived: 20 = 2^2*5, index of P[G] is 2"));
  add(B("C24", "C24")
          .field("order", 24, "trivial: cyclic")
          .field("sip", true, "derived: P[G] = C6 proper")
          .field("ssip", false, "derived: index of P[G] is 4"));
  add(B("C30", "C30")
          .field("order", 30, "trivial: cyclic")
          .field("poec", true, "trivial: abelian")
          .field("sip", false, "known: no group of square-free order is SIP"));
  add(B("C36", "C36")
          .field("order", 36, "trivial: cyclic")
          .field("sip", true, "derived: P[G] = C6 proper")
          .field("ssip", false, "derived: index of P[G] is 6"));

  // elementary abelian controls
  add(B("E(2,2)", "E(2,2)")
          .field("order", 4, "trivial: 2^2")
          .field("elementary_abelian", true, "trivial: exponent 2")
          .field("sip", false, "known: elementary abelian groups are not SIP"));
  add(B("E(2,3)", "E(2,3)")
          .field("order", 8, "trivial: 2^3")
          .field("sip", false, "known: elementary abelian groups are not SIP"));
  add(B("E(3,2)", "E(3,2)")
          .field("order", 9, "trivial: 3^2")
          .field("sip", false, "known: elementary abelian groups are not SIP")
          .field("pg_order", 9, "trivial: every non-identity element has order 3")
          .field("index_pg", 1, "trivial: P[G] = G"));

  // symmetric and alternating groups
  add(B("S3", "S3")
          .field("order", 6, "trivial: 3!")
          .field("poec", false, "derived: a transposition and a 3-cycle do not commute")
          .field("sip", false, "derived: transpositions and 3-cycles generate S3")
          .field("solvable", true, "known: S3 is metabelian")
          .field("metabelian", true, "known: derived series S3 > A3 > 1")
          .field("nilpotent", false, "known: trivial center")
          .field("center_order", 1, "known: trivial center"));
  add(B("S4", "S4")
          .field("order", 24, "trivial: 4!")
          .field("poec", false, "derived: non-commuting transpositions")
          .field("sip", false, "derived: prime-order elements generate S4")
          .field("solvable", true, "known: S4 is solvable")
          .field("metabelian", false, "derived: second derived subgroup is the Klein group")
          .field("center_order", 1, "known: trivial center"));
  add(B("A4", "A4")
          .field("order", 12, "trivial: 4!/2")
          .field("poec", false, "derived: an order-2 and an order-3 element do not commute")
          .field("sip", false, "derived: prime-order elements generate A4")
          .field("solvable", true, "known: A4 is solvable")
          .field("center_order", 1, "known: A4 has trivial center"));
  add(B("A5", "A5")
          .field("order", 60, "trivial: 5!/2")
          .field("perfect", true, "known: A5 is simple non-abelian, hence perfect")
          .field("poec", false, "derived: non-commuting 3- and 5-cycles")
          .field("sip", false, "derived: prime-order elements generate A5")
          .field("solvable", false, "known: A5 is the smallest non-solvable group"));

  // direct products around S3 and A5
  add(B("C4 x S3", "C4 x S3")
          .field("order", 24, "trivial: 4 * 6")
          .field("poec", false, "known: order-2 and order-3 elements fail to commute in S3")
          .field("sip", true, "known: {0,2} x S3 meets every non-trivial subgroup")
          .field("ssip", true, "known: that subgroup is the unique one")
          .field("pg_order", 12, "derived: P[G] = {0,2} x S3")
          .field("index_pg", 2, "derived: index 2")
          .field("solvable", true, "trivial: product of solvable groups"));
  add(B("C4 x A5", "C4 x A5")
          .field("order", 240, "trivial: 4 * 60")
          .field("sip", true, "known: non-solvable SIP example")
          .field("ssip", true, "derived: P[G] = {0,2} x A5 has index 2")
          .field("perfect", false, "known: smallest non-solvable SIP group is not perfect")
          .field("solvable", false, "trivial: contains A5")
          .field("pg_order", 120, "derived: {0,2} x A5")
          .field("center_order", 4, "trivial: C4 times the trivial centre of A5"));

  // dihedral groups: reflections generate, so never SIP; never POEC
  for (int n = 4; n <= 10; ++n) {
    add(B("D" + std::to_string(n), "D" + std::to_string(n))
            .field("order", 2 * n, "trivial: dihedral")
            .field("poec", false,
                   n == 4 ? "known: D4 is not POEC" : "derived: adjacent reflections do not commute")
            .field("sip", false, "derived: reflections generate the dihedral group"));
  }

  // generalized quaternion groups: the unique involution gives POEC and SIP
  add(B("Q8", "Q8")
          .field("order", 8, "trivial: dicyclic of order 8")
          .field("poec", true, "known: unique element of order 2")
          .field("sip", true, "known: the order-2 subgroup meets every non-trivial subgroup")
          .field("ssip", false, "known: SIP but not SSIP")
          .field("pg_order", 2, "known: unique subgroup of order 2")
          .field("index_pg", 4, "trivial: 8 / 2")
          .field("center_order", 2, "known: centre is the unique order-2 subgroup")
          .field("nilpotent", true, "trivial: 2-group"));
  add(B("Q16", "Q16")
          .field("order", 16, "trivial: dicyclic of order 16")
          .field("poec", true, "known: unique element of order 2")
          .field("sip", true, "known: unique involution")
          .field("ssip", false, "derived: [G:P[G]] = 8")
          .field("pg_order", 2, "known: unique subgroup of order 2")
          .field("center_order", 2, "known: centre of a generalized quaternion group"));
  add(B("Q32", "Q32")
          .field("order", 32, "trivial: dicyclic of order 32")
          .field("poec", true, "known: unique element of order 2")
          .field("sip", true, "known: unique involution")
          .field("ssip", false, "derived: [G:P[G]] = 16")
          .field("center_order", 2, "known: centre of a generalized quaternion group"));

  // p-groups of order p^3 and friends
  add(B("Heis(3)", "Heis(3)")
          .field("order", 27, "trivial: 3^3")
          .field("poec", false, "known: non-abelian of exponent 3, all elements have prime order")
          .field("sip", false, "derived: P[G] = G since exponent is 3")
          .field("nilpotent", true, "trivial: p-group"));
  add(B("C9:C3", "sd(C9, C3, [[4]])")
          .field("order", 27, "trivial: 9 * 3")
          .field("poec", true, "known: the non-abelian POEC group of order p^3 for p = 3")
          .field("ssip", true, "known: Z_{p^2} : Z_p is SSIP")
          .field("pg_order", 9, "derived: order-3 elements generate the order-9 subgroup")
          .field("index_pg", 3, "derived: index 3")
          .field("center_order", 3, "derived: centre is generated by the cube of the C9 generator")
          .field("nilpotent", true, "trivial: p-group"));
  add(B("C25:C5", "sd(C25, C5, [[6]])")
          .field("order", 125, "trivial: 25 * 5")
          .field("poec", true, "known: the non-abelian POEC group of order p^3 for p = 5")
          .field("ssip", true, "known: Z_{p^2} : Z_p is SSIP")
          .field("pg_order", 25, "derived: order-5 elements generate the order-25 subgroup")
          .field("center_order", 5, "derived: centre of the extraspecial-type action"));
  add(B("SmallGroup(32,2)", "sd(C4 x C2, C4, [[1,0],[1,1]])")
          .field("order", 32, "trivial: 8 * 4")
          .field("poec", true, "known: POEC group whose D4 quotient is not POEC")
          .field("sip", true, "derived: involutions generate the order-8 torsion subgroup")
          .field("ssip", false, "derived: [G:P[G]] = 4")
          .field("pg_order", 8, "derived: the seven involutions plus identity form a subgroup")
          .field("center_order", 8, "derived: 2-torsion elements fixed by the action, times x^2")
          .field("nilpotent", true, "trivial: 2-group"));

  // mixed-order semidirect products
  add(B("(C2xC2):C9", "sd(C2 x C2, C9, [[0,1],[1,1]])")
          .field("order", 36, "trivial: 4 * 9")
          .field("poec", true, "known: POEC with centre of order 3")
          .field("center_order", 3, "known: centre has order 3")
          .field("ssip", true, "derived: P[G] = C2 x C2 x C3 has index 3")
          .field("pg_order", 12, "derived: Klein part times the order-3 subgroup")
          .field("solvable", true, "trivial: semidirect product of abelian groups"));
  add(B("C5:C4", "sd(C5, C4, [[2]])")
          .field("order", 20, "trivial: 5 * 4")
          .field("center_order", 1, "known: SSIP group with trivial centre")
          .field("ssip", true, "known: SSIP example with trivial centre")
          .field("poec", false, "derived: an involution moves the order-5 elements")
          .field("pg_order", 10, "derived: P[G] is dihedral of order 10")
          .field("metabelian", true, "derived: derived subgroup is C5"));

  // products that stay POEC
  add(B("Q8 x C3", "Q8 x C3")
          .field("order", 24, "trivial: 8 * 3")
          .field("poec", true, "derived: POEC is closed under direct products")
          .field("sip", true, "derived: P[G] = C2 x C3 proper")
          .field("ssip", false, "derived: index of P[G] is 4")
          .field("pg_order", 6, "derived: unique involution times C3")
          .field("center_order", 6, "derived: centre of Q8 times C3")
          .field("nilpotent", true, "trivial: product of p-groups"));
  add(B("C2 x (C9:C3)", "C2 x sd(C9, C3, [[4]])")
          .field("order", 54, "trivial: 2 * 27")
          .field("poec", true, "derived: POEC is closed under direct products")
          .field("ssip", true, "derived: P[G] = C2 x (order-9 subgroup) has index 3")
          .field("center_order", 6, "derived: C2 times the order-3 centre"));
  add(B("C3 x (C9:C3)", "C3 x sd(C9, C3, [[4]])")
          .field("order", 81, "trivial: 3 * 27")
          .field("poec", true, "known: the POEC p-group construction of order p^n, p = 3, n = 4")
          .field("ssip", true, "derived: P[G] has index 3")
          .field("center_order", 9, "derived: C3 times the order-3 centre")
          .field("nilpotent", true, "trivial: p-group"));

  // linear groups
  add(B("SL2(3)", "SL2(3)")
          .field("order", 24, "trivial: 3*(9-1)")
          .field("poec", false, "derived: order-3 elements from different Sylow subgroups")
          .field("sip", false, "derived: prime-order elements generate SL2(3)")
          .field("perfect", false, "known: SL2(3) has derived subgroup Q8")
          .field("solvable", true, "known: SL2(3) is solvable")
          .field("center_order", 2, "known: centre is {I, -I}"));
  add(B("SL2(5)", "SL2(5)")
          .field("order", 120, "trivial: 5*(25-1)")
          .field("perfect", true, "known: SL2(5) is a non-trivial perfect group")
          .field("poec", false, "derived: non-commuting order-3 and order-5 elements")
          .field("sip", false, "derived: prime-order elements generate SL2(5)")
          .field("solvable", false, "trivial: perfect and non-trivial")
          .field("center_order", 2, "known: centre is {I, -I}"));

  for (const CatalogEntry& e : out) validate_catalog_entry(e);
  return out;
}

}  // namespace grouplab
