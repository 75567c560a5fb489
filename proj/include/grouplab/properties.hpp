// Property deciders: P[G], G_p, POEC / SIP / SSIP, perfect, solvable,
// nilpotent, metabelian, and the combined classifier.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "structure.hpp"

namespace grouplab {

using OrderedJson = nlohmann::ordered_json;

struct PrimeStructure {
  std::vector<long> primes;       // primes dividing |G|, ascending
  std::map<long, Subgroup> gp;    // p -> G_p = <elements of order p>
  Subgroup pg;                    // P[G] = <elements of prime order>
  long index_pg = 1;              // [G : P[G]]
  std::vector<int> sqf_elements;  // ids of square-free-order elements
};

inline PrimeStructure prime_structure(const FiniteGroup& G) {
  PrimeStructure ps;
  for (auto& [p, e] : factorize(G.order())) ps.primes.push_back(p);

  const auto& orders = G.order_table();
  std::vector<int> all_prime_order;
  for (long p : ps.primes) {
    std::vector<int> seed;
    for (int x = 0; x < G.order(); ++x)
      if (orders[x] == p) seed.push_back(x);
    all_prime_order.insert(all_prime_order.end(), seed.begin(), seed.end());
    ps.gp.emplace(p, generated_subgroup(G, seed));
  }
  std::sort(all_prime_order.begin(), all_prime_order.end());
  ps.pg = generated_subgroup(G, all_prime_order);
  ps.index_pg = G.order() / ps.pg.order();

  for (int x = 0; x < G.order(); ++x)
    if (is_square_free(orders[x])) ps.sqf_elements.push_back(x);

  // G_p and P[G] are generated by full automorphism orbits, hence normal
  for (auto& [p, sub] : ps.gp)
    if (!is_normal(G, sub)) internal_fail("G_p is not normal");
  if (!is_normal(G, ps.pg)) internal_fail("P[G] is not normal");
  return ps;
}

// first non-commuting pair of prime-order elements, ascending scan
inline std::optional<std::pair<int, int>> poec_witness(const FiniteGroup& G) {
  const auto& orders = G.order_table();
  std::vector<int> prime_order;
  for (int x = 0; x < G.order(); ++x)
    if (is_prime(orders[x])) prime_order.push_back(x);
  for (size_t i = 0; i < prime_order.size(); ++i)
    for (size_t j = i + 1; j < prime_order.size(); ++j) {
      int a = prime_order[i], b = prime_order[j];
      if (G.mul(a, b) != G.mul(b, a)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

inline bool is_poec(const FiniteGroup& G) {
  if (is_abelian(G)) return true;
  return !poec_witness(G).has_value();
}

inline bool is_sip(const FiniteGroup& G) {
  if (G.order() == 1) throw TrivialGroup("SIP is undefined for the trivial group");
  return prime_structure(G).pg.order() < G.order();
}

inline bool is_ssip(const FiniteGroup& G) {
  if (G.order() == 1) throw TrivialGroup("SSIP is undefined for the trivial group");
  return is_prime(prime_structure(G).index_pg);
}

// Alternative POEC route: the square-free-order elements form an abelian
// subgroup.  Kept free of any shortcut through is_poec so the two deciders
// stay independent checks of each other.
inline bool is_poec_via_sqf(const FiniteGroup& G) {
  const auto& orders = G.order_table();
  std::vector<int> sqf;
  for (int x = 0; x < G.order(); ++x)
    if (is_square_free(orders[x])) sqf.push_back(x);
  std::vector<char> in_sqf(G.order(), 0);
  for (int x : sqf) in_sqf[x] = 1;
  for (size_t i = 0; i < sqf.size(); ++i)
    for (size_t j = i; j < sqf.size(); ++j) {
      int xy = G.mul(sqf[i], sqf[j]);
      if (!in_sqf[xy]) return false;                        // not closed
      if (xy != G.mul(sqf[j], sqf[i])) return false;        // not abelian
    }
  return true;
}

struct PropertyFlags {
  bool abelian = false;
  bool elementary_abelian = false;
  bool poec = false;
  bool sip = false;
  bool ssip = false;
  bool perfect = false;
  bool solvable = false;
  bool nilpotent = false;
  bool metabelian = false;
};

struct PropertyReport {
  std::string group_name;
  long order = 1;
  std::vector<std::pair<long, int>> factorization;
  PropertyFlags flags;
  std::vector<long> primes;
  std::vector<std::pair<long, long>> gp_orders;
  long pg_order = 1;
  long index_pg = 1;
  long sqf_count = 1;
  long center_order = 1;
  std::optional<std::pair<int, int>> poec_witness;

  Subgroup pg;  // kept so downstream checks can reuse P[G] without recomputing
};

inline PropertyReport classify(const FiniteGroup& G, const std::string& name) {
  PropertyReport r;
  r.group_name = name;
  r.order = G.order();
  r.factorization = factorize(r.order);

  r.flags.abelian = is_abelian(G);
  {
    auto profile = G.order_profile();
    r.flags.elementary_abelian =
        r.flags.abelian &&
        (r.order == 1 || (profile.size() == 2 && is_prime(profile.rbegin()->first)));
  }

  SeriesReport ds = derived_series(G);
  r.flags.perfect = ds.terms.size() == 1;  // G' = G
  r.flags.solvable = ds.terminated;
  r.flags.metabelian = ds.terminated && ds.terms.size() <= 3;
  r.flags.nilpotent = lower_central_series(G).terminated;

  PrimeStructure ps = prime_structure(G);
  r.primes = ps.primes;
  for (auto& [p, sub] : ps.gp) r.gp_orders.emplace_back(p, sub.order());
  r.pg_order = ps.pg.order();
  r.index_pg = ps.index_pg;
  r.sqf_count = static_cast<long>(ps.sqf_elements.size());
  r.pg = std::move(ps.pg);

  if (r.flags.abelian) {
    r.flags.poec = true;
  } else {
    r.poec_witness = poec_witness(G);
    r.flags.poec = !r.poec_witness.has_value();
  }
  if (r.order > 1) {
    r.flags.sip = r.pg_order < r.order;
    r.flags.ssip = is_prime(r.index_pg);
  }
  r.center_order = center(G).order();

  // cross-flag containments; a violation is a bug, not a data error
  if (r.flags.ssip && !r.flags.sip) internal_fail("SSIP without SIP");
  if (r.flags.poec && !r.flags.abelian && !r.flags.sip) internal_fail("non-abelian POEC without SIP");
  if (r.order > 1 && r.flags.perfect && r.flags.solvable) internal_fail("perfect and solvable");
  if (r.flags.nilpotent && !r.flags.solvable) internal_fail("nilpotent but not solvable");
  return r;
}

inline OrderedJson report_to_json(const PropertyReport& r) {
  OrderedJson j;
  j["group_name"] = r.group_name;
  j["order"] = OrderedJson{{"value", r.order}, {"factorization", r.factorization}};
  OrderedJson flags;
  flags["abelian"] = r.flags.abelian;
  flags["elementary_abelian"] = r.flags.elementary_abelian;
  flags["poec"] = r.flags.poec;
  flags["sip"] = r.flags.sip;
  flags["ssip"] = r.flags.ssip;
  flags["perfect"] = r.flags.perfect;
  flags["solvable"] = r.flags.solvable;
  flags["nilpotent"] = r.flags.nilpotent;
  flags["metabelian"] = r.flags.metabelian;
  j["flags"] = std::move(flags);
  OrderedJson ps;
  ps["primes"] = r.primes;
  ps["gp_orders"] = r.gp_orders;
  ps["pg_order"] = r.pg_order;
  ps["index_pg"] = r.index_pg;
  ps["sqf_count"] = r.sqf_count;
  j["prime_structure"] = std::move(ps);
  j["center_order"] = r.center_order;
  if (r.poec_witness)
    j["poec_witness"] = OrderedJson::array({r.poec_witness->first, r.poec_witness->second});
  else
    j["poec_witness"] = nullptr;
  return j;
}

}  // namespace grouplab
