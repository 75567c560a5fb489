// Brute-force subgroup lattice: ground truth for the intersection-property
// deciders.  Enumerates every subgroup of a small group, the collection S of
// proper subgroups meeting all non-trivial subgroups, maximal subgroups, and
// the order-divisor (Lagrangian) and prime-index-maximal (supersolvable,
// Huppert's criterion -- classical, see README) checks.

#pragma once

#include <map>
#include <optional>

#include <json.hpp>

#include "structure.hpp"

namespace grouplab {

struct LatticeBudget {
  int max_elements = 512;
  size_t max_subgroups = 100'000;
};

struct SubgroupLattice {
  FiniteGroup parent;
  std::vector<Subgroup> subgroups;  // deduplicated, sorted by order then member set
  std::vector<int> maximal;         // indices of maximal proper subgroups
  std::vector<int> s_collection;    // indices of members of S
  std::optional<int> s_minimum;     // index of the intersection of S's members
};

namespace detail {

// true iff A and B share a non-identity element (both sorted, both contain 0)
inline bool intersects_nontrivially(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 1, j = 1;  // skip the shared identity at front
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return false;
}

inline std::vector<int> intersect_members(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

// All subgroups: every cyclic subgroup, then pairwise joins to a fixpoint.
inline SubgroupLattice all_subgroups(const FiniteGroup& G, const LatticeBudget& budget = {}) {
  if (G.order() > budget.max_elements)
    throw BudgetExceeded("group order " + std::to_string(G.order()) + " exceeds lattice budget " +
                         std::to_string(budget.max_elements));

  std::vector<Subgroup> subs;
  std::map<std::vector<int>, int> seen;
  auto add = [&](Subgroup s) {
    auto it = seen.find(s.members);
    if (it != seen.end()) return it->second;
    int idx = static_cast<int>(subs.size());
    seen.emplace(s.members, idx);
    subs.push_back(std::move(s));
    if (subs.size() > budget.max_subgroups)
      throw BudgetExceeded("subgroup count exceeds lattice budget " +
                           std::to_string(budget.max_subgroups));
    return idx;
  };

  for (int x = 0; x < G.order(); ++x) {
    std::vector<int> members;
    int y = 0;
    do {
      members.push_back(y);
      y = G.mul(y, x);
    } while (y != 0);
    std::sort(members.begin(), members.end());
    if (!seen.count(members)) add(subgroup_from_members(G, std::move(members)));
  }

  for (size_t i = 1; i < subs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (subs[i].contains_all(subs[j]) || subs[j].contains_all(subs[i])) continue;
      std::vector<int> gens = subs[i].generators;
      gens.insert(gens.end(), subs[j].generators.begin(), subs[j].generators.end());
      add(generated_subgroup(G, gens));
    }
  }

  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });

  SubgroupLattice lat;
  lat.parent = G;
  lat.subgroups = std::move(subs);

  const auto& all = lat.subgroups;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    if (all[i].is_whole()) continue;
    bool maximal = true;
    for (int j = 0; j < static_cast<int>(all.size()) && maximal; ++j)
      if (j != i && !all[j].is_whole() && all[j].order() > all[i].order() &&
          all[j].contains_all(all[i]))
        maximal = false;
    if (maximal) lat.maximal.push_back(i);
  }

  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    if (all[i].is_whole()) continue;
    bool meets_all = true;
    for (const Subgroup& x : all) {
      if (x.is_trivial()) continue;
      if (!detail::intersects_nontrivially(all[i].members, x.members)) { meets_all = false; break; }
    }
    if (meets_all) lat.s_collection.push_back(i);
  }

  if (!lat.s_collection.empty()) {
    std::vector<int> meet = all[lat.s_collection[0]].members;
    for (size_t k = 1; k < lat.s_collection.size(); ++k)
      meet = detail::intersect_members(meet, all[lat.s_collection[k]].members);
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
      if (all[i].members == meet) { lat.s_minimum = i; break; }
    if (!lat.s_minimum) internal_fail("intersection of S-members is missing from the lattice");
  }
  return lat;
}

inline bool sip_by_definition(const SubgroupLattice& lat) { return !lat.s_collection.empty(); }
inline bool ssip_by_definition(const SubgroupLattice& lat) { return lat.s_collection.size() == 1; }

inline std::vector<int> maximal_subgroups(const SubgroupLattice& lat) { return lat.maximal; }

// maximal elements of S under inclusion
inline std::vector<int> maximal_s_members(const SubgroupLattice& lat) {
  std::vector<int> out;
  for (int i : lat.s_collection) {
    bool top = true;
    for (int j : lat.s_collection)
      if (j != i && lat.subgroups[j].order() > lat.subgroups[i].order() &&
          lat.subgroups[j].contains_all(lat.subgroups[i])) {
        top = false;
        break;
      }
    if (top) out.push_back(i);
  }
  return out;
}

// Huppert: supersolvable iff every maximal subgroup has prime index
inline bool is_supersolvable(const SubgroupLattice& lat) {
  for (int i : lat.maximal)
    if (!is_prime(lat.parent.order() / lat.subgroups[i].order())) return false;
  return true;
}

// a subgroup of every order dividing |G|
inline bool is_lagrangian(const SubgroupLattice& lat) {
  std::vector<char> have(lat.parent.order() + 1, 0);
  for (const Subgroup& s : lat.subgroups) have[s.order()] = 1;
  for (int d = 1; d <= lat.parent.order(); ++d)
    if (lat.parent.order() % d == 0 && !have[d]) return false;
  return true;
}

inline nlohmann::ordered_json lattice_to_json(const SubgroupLattice& lat,
                                              const std::string& name) {
  nlohmann::ordered_json j;
  j["group"] = name;
  j["order"] = lat.parent.order();
  j["subgroup_count"] = lat.subgroups.size();
  std::vector<char> is_max(lat.subgroups.size(), 0), in_s(lat.subgroups.size(), 0);
  for (int i : lat.maximal) is_max[i] = 1;
  for (int i : lat.s_collection) in_s[i] = 1;
  auto subs = nlohmann::ordered_json::array();
  for (size_t i = 0; i < lat.subgroups.size(); ++i) {
    const Subgroup& s = lat.subgroups[i];
    nlohmann::ordered_json e;
    e["index"] = i;
    e["order"] = s.order();
    e["generators"] = s.generators;
    e["members"] = s.members;
    e["maximal"] = static_cast<bool>(is_max[i]);
    e["in_s_collection"] = static_cast<bool>(in_s[i]);
    subs.push_back(std::move(e));
  }
  j["subgroups"] = std::move(subs);
  j["s_collection"] = lat.s_collection;
  if (lat.s_minimum) j["s_minimum"] = *lat.s_minimum;
  else j["s_minimum"] = nullptr;
  j["sip"] = sip_by_definition(lat);
  j["ssip"] = ssip_by_definition(lat);
  j["supersolvable"] = is_supersolvable(lat);
  j["lagrangian"] = is_lagrangian(lat);
  return j;
}

}  // namespace grouplab
