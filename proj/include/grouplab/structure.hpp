// Subgroup machinery: generated subgroups, centralizers, series, normal
// closure, quotients, Sylow subgroups, simplicity, small isomorphism tests.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "core.hpp"

namespace grouplab {

constexpr int kIsomorphismCap = 256;

struct Subgroup {
  FiniteGroup parent;
  std::vector<int> members;     // sorted ids
  std::vector<int> generators;  // witness: members = closure(generators)

  int order() const { return static_cast<int>(members.size()); }
  bool is_trivial() const { return members.size() == 1; }
  bool is_whole() const { return order() == parent.order(); }

  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }

  bool contains_all(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(), other.members.begin(),
                         other.members.end());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

namespace detail {

// Closure of {e} ∪ gens under right multiplication by gens.  With cap > 0,
// stops and reports failure as soon as the closure passes cap elements.
inline bool close_under(const FiniteGroup& G, const std::vector<int>& gens,
                        std::vector<int>& out, size_t cap = 0) {
  std::vector<char> mark(G.order(), 0);
  out.clear();
  out.push_back(0);
  mark[0] = 1;
  for (size_t at = 0; at < out.size(); ++at) {
    for (int g : gens) {
      int t = G.mul(out[at], g);
      if (!mark[t]) {
        mark[t] = 1;
        out.push_back(t);
        if (cap && out.size() > cap) return false;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return true;
}

// Greedy minimal generating list for a closed member set (ascending scan).
inline std::vector<int> reduce_generators(const FiniteGroup& G, const std::vector<int>& members) {
  std::vector<int> gens;
  std::vector<int> closed{0};
  std::vector<char> mark(G.order(), 0);
  mark[0] = 1;
  for (int m : members) {
    if (mark[m]) continue;
    gens.push_back(m);
    close_under(G, gens, closed);
    if (closed.size() == members.size()) break;
    std::fill(mark.begin(), mark.end(), 0);
    for (int x : closed) mark[x] = 1;
  }
  return gens;
}

}  // namespace detail

inline Subgroup subgroup_from_members(const FiniteGroup& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (members.empty() || members[0] != 0) internal_fail("subgroup must contain the identity");
  if (G.order() % members.size() != 0)
    internal_fail("Lagrange violated: " + std::to_string(members.size()) + " does not divide " +
                  std::to_string(G.order()));
  Subgroup H;
  H.parent = G;
  H.generators = detail::reduce_generators(G, members);
  H.members = std::move(members);
  return H;
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup H;
  H.parent = G;
  H.members = {0};
  return H;
}

inline Subgroup whole_subgroup(const FiniteGroup& G) {
  Subgroup H;
  H.parent = G;
  H.members.resize(G.order());
  std::iota(H.members.begin(), H.members.end(), 0);
  H.generators = G.generators();
  return H;
}

// least subgroup containing the seed; deterministic breadth-first closure
inline Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& seed) {
  Subgroup H;
  H.parent = G;
  std::vector<int> closed{0};
  std::vector<char> mark(G.order(), 0);
  mark[0] = 1;
  for (int s : seed) {
    if (mark[s]) continue;
    H.generators.push_back(s);
    detail::close_under(G, H.generators, closed);
    std::fill(mark.begin(), mark.end(), 0);
    for (int x : closed) mark[x] = 1;
  }
  H.members = std::move(closed);
  if (G.order() % H.members.size() != 0) internal_fail("Lagrange violated in closure");
  return H;
}

inline Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& s) {
  std::vector<int> members;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : s)
      if (G.mul(g, x) != G.mul(x, g)) { ok = false; break; }
    if (ok) members.push_back(g);
  }
  return subgroup_from_members(G, std::move(members));
}

// Z(G); an element central for every generator is central for the group
inline Subgroup center(const FiniteGroup& G) { return centralizer(G, G.generators()); }

inline bool is_abelian(const FiniteGroup& G) {
  const auto& gens = G.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

// Least subgroup containing seed that is invariant under conjugation by the
// given conjugators (pass the ambient group's generators for normal closure).
inline Subgroup normal_closure_within(const FiniteGroup& G, const std::vector<int>& conjugators,
                                      const std::vector<int>& seed) {
  Subgroup H = generated_subgroup(G, seed);
  while (true) {
    std::vector<int> extra;
    for (int c : conjugators)
      for (int s : H.generators) {
        int t = G.conjugate(c, s);
        if (!H.contains(t)) extra.push_back(t);
      }
    if (extra.empty()) return H;
    std::vector<int> next_seed = H.generators;
    next_seed.insert(next_seed.end(), extra.begin(), extra.end());
    H = generated_subgroup(G, next_seed);
  }
}

inline Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& seed) {
  return normal_closure_within(G, G.generators(), seed);
}

// gHg^{-1} = H for every generator g suffices: conjugation by a generator is
// an automorphism, and the generator images cover all of G
inline bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (int g : G.generators())
    for (int s : H.generators)
      if (!H.contains(G.conjugate(g, s))) return false;
  return true;
}

// derived subgroup of H, computed inside H: normal closure (within H) of the
// commutators of H's generator pairs
inline Subgroup derived_subgroup_of(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> seed;
  for (int a : H.generators)
    for (int b : H.generators) {
      if (a == b) continue;
      int c = G.commutator(a, b);
      if (c != 0) seed.push_back(c);
    }
  return normal_closure_within(G, H.generators, seed);
}

inline Subgroup commutator_subgroup(const FiniteGroup& G) {
  return derived_subgroup_of(G, whole_subgroup(G));
}

struct SeriesReport {
  enum class Kind { Derived, LowerCentral };
  Kind kind;
  std::vector<Subgroup> terms;  // strictly descending, first = whole group
  bool terminated = false;      // reached the trivial subgroup
};

inline SeriesReport derived_series(const FiniteGroup& G) {
  SeriesReport r;
  r.kind = SeriesReport::Kind::Derived;
  r.terms.push_back(whole_subgroup(G));
  while (r.terms.back().order() > 1) {
    Subgroup next = derived_subgroup_of(G, r.terms.back());
    if (next.order() == r.terms.back().order()) break;
    r.terms.push_back(std::move(next));
  }
  r.terminated = r.terms.back().is_trivial();
  return r;
}

inline SeriesReport lower_central_series(const FiniteGroup& G) {
  SeriesReport r;
  r.kind = SeriesReport::Kind::LowerCentral;
  r.terms.push_back(whole_subgroup(G));
  while (r.terms.back().order() > 1) {
    std::vector<int> seed;
    for (int x : r.terms.back().generators)
      for (int g : G.generators()) {
        int c = G.commutator(x, g);
        if (c != 0) seed.push_back(c);
      }
    Subgroup next = normal_closure(G, seed);
    if (next.order() == r.terms.back().order()) break;
    r.terms.push_back(std::move(next));
  }
  r.terminated = r.terms.back().is_trivial();
  return r;
}

inline bool is_solvable(const FiniteGroup& G) { return derived_series(G).terminated; }
inline bool is_nilpotent(const FiniteGroup& G) { return lower_central_series(G).terminated; }

inline bool is_perfect(const FiniteGroup& G) {
  return commutator_subgroup(G).order() == G.order();
}

// QUOTIENTS

struct Quotient {
  FiniteGroup group;           // Cayley-table backed, ids = coset indices
  std::vector<int> projection; // parent id -> coset id
};

constexpr int kQuotientOrderCap = kMulMemoCap;

inline Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw NotNormal("subgroup is not normal in the parent group");
  int q = G.order() / N.order();
  if (q > kQuotientOrderCap)
    throw BudgetExceeded("quotient order " + std::to_string(q) + " exceeds table cap " +
                         std::to_string(kQuotientOrderCap));

  // cosets indexed in order of their least member; identity coset is 0
  std::vector<int> proj(G.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < G.order(); ++x) {
    if (proj[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : N.members) proj[G.mul(x, m)] = idx;
  }

  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[static_cast<size_t>(i) * q + j] = proj[G.mul(reps[i], reps[j])];

  std::vector<int> gens;
  for (int g : G.generators()) {
    int im = proj[g];
    if (im != 0 && std::find(gens.begin(), gens.end(), im) == gens.end()) gens.push_back(im);
  }

  Quotient result;
  result.group = group_from_table(q, std::move(table), std::move(gens));
  result.projection = std::move(proj);
  return result;
}

// SYLOW SUBGROUPS
//
// Greedy extension: adjoin any p-power-order element whose closure with the
// current subgroup stays a p-group.  A proper p-subgroup H sits inside some
// Sylow subgroup P, and any y in P \ H keeps <H, y> inside P, so an extending
// element always exists; the order postcondition asserts full p-part.

inline Subgroup sylow(const FiniteGroup& G, long p) {
  if (!is_prime(p)) throw PrimeDoesNotDivide(std::to_string(p) + " is not prime");
  long n = G.order();
  int vp = 0;
  while (n % p == 0) { n /= p; ++vp; }
  if (vp == 0)
    throw PrimeDoesNotDivide(std::to_string(p) + " does not divide " + std::to_string(G.order()));
  size_t target = static_cast<size_t>(int_pow(p, vp));

  const auto& orders = G.order_table();
  auto p_power_order = [&](int x) {
    int o = orders[x];
    while (o % p == 0) o /= static_cast<int>(p);
    return x != 0 && o == 1;
  };

  Subgroup H = trivial_subgroup(G);
  while (H.members.size() < target) {
    bool extended = false;
    for (int y = 1; y < G.order(); ++y) {
      if (!p_power_order(y) || H.contains(y)) continue;
      std::vector<int> gens = H.generators;
      gens.push_back(y);
      std::vector<int> closed;
      if (!detail::close_under(G, gens, closed, target)) continue;
      size_t sz = closed.size();
      while (sz % p == 0) sz /= p;
      if (sz != 1) continue;
      H.generators = std::move(gens);
      H.members = std::move(closed);
      extended = true;
      break;
    }
    if (!extended) internal_fail("greedy Sylow extension stalled");
  }
  if (H.members.size() != target) internal_fail("Sylow order postcondition failed");
  return H;
}

// true iff the normal closure of every non-identity element is the whole group
inline bool is_simple(const FiniteGroup& G) {
  if (G.order() == 1) return false;
  for (int g = 1; g < G.order(); ++g)
    if (normal_closure(G, {g}).order() < G.order()) return false;
  return true;
}

// ISOMORPHISM (small groups)

namespace detail {

// Maps generator words of G into H along the proposed images and checks
// consistency edge by edge; a clean pass means the generated subgroups are
// isomorphic via gens[i] -> images[i].
inline bool generator_map_extends(const FiniteGroup& G, const FiniteGroup& H,
                                  const std::vector<int>& gens, const std::vector<int>& images,
                                  bool require_onto) {
  std::vector<int> fwd(G.order(), -1), rev(H.order(), -1);
  fwd[0] = 0;
  rev[0] = 0;
  std::vector<int> queue{0};
  size_t count = 1;
  for (size_t at = 0; at < queue.size(); ++at) {
    int x = queue[at];
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = G.mul(x, gens[i]);
      int fy = H.mul(fwd[x], images[i]);
      if (fwd[y] < 0) {
        if (rev[fy] >= 0) return false;  // not injective
        fwd[y] = fy;
        rev[fy] = y;
        queue.push_back(y);
        ++count;
      } else if (fwd[y] != fy) {
        return false;  // not a homomorphism
      }
    }
  }
  return !require_onto || count == static_cast<size_t>(G.order());
}

struct IsoSearch {
  const FiniteGroup& G;
  const FiniteGroup& H;
  std::vector<int> gens;                    // generating sequence of G
  std::vector<std::vector<int>> candidates; // per generator, same-invariant elements of H
  std::vector<int> images;

  bool run(size_t depth) {
    if (depth == gens.size()) return true;
    for (int y : candidates[depth]) {
      images[depth] = y;
      std::vector<int> g(gens.begin(), gens.begin() + depth + 1);
      std::vector<int> im(images.begin(), images.begin() + depth + 1);
      bool full = depth + 1 == gens.size();
      if (!generator_map_extends(G, H, g, im, full)) continue;
      if (run(depth + 1)) return true;
    }
    return false;
  }
};

// (element order, centralizer size): preserved by isomorphisms
inline std::vector<std::pair<int, int>> element_invariants(const FiniteGroup& G) {
  const auto& orders = G.order_table();
  std::vector<std::pair<int, int>> inv(G.order());
  for (int x = 0; x < G.order(); ++x) {
    int cent = 0;
    for (int g = 0; g < G.order(); ++g)
      if (G.mul(g, x) == G.mul(x, g)) ++cent;
    inv[x] = {orders[x], cent};
  }
  return inv;
}

}  // namespace detail

inline bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() > kIsomorphismCap || H.order() > kIsomorphismCap)
    throw TooLarge("isomorphism test capped at order " + std::to_string(kIsomorphismCap));
  if (G.order() != H.order()) return false;
  if (G.same_instance(H)) return true;
  if (G.order_profile() != H.order_profile()) return false;

  auto inv_g = detail::element_invariants(G);
  auto inv_h = detail::element_invariants(H);
  std::map<std::pair<int, int>, std::vector<int>> classes_h;
  for (int y = 0; y < H.order(); ++y) classes_h[inv_h[y]].push_back(y);
  {
    std::map<std::pair<int, int>, int> count_g;
    for (auto& iv : inv_g) ++count_g[iv];
    std::map<std::pair<int, int>, int> count_h;
    for (auto& iv : inv_h) ++count_h[iv];
    if (count_g != count_h) return false;
  }

  // generating sequence: repeatedly adjoin the not-yet-generated element
  // whose invariant class is rarest (fewest candidate images)
  detail::IsoSearch search{G, H, {}, {}, {}};
  {
    std::vector<int> closed{0};
    std::vector<char> mark(G.order(), 0);
    mark[0] = 1;
    while (closed.size() < static_cast<size_t>(G.order())) {
      int best = -1;
      size_t best_class = 0;
      for (int x = 0; x < G.order(); ++x) {
        if (mark[x]) continue;
        size_t cls = classes_h.at(inv_g[x]).size();
        if (best < 0 || cls < best_class) { best = x; best_class = cls; }
      }
      search.gens.push_back(best);
      detail::close_under(G, search.gens, closed);
      std::fill(mark.begin(), mark.end(), 0);
      for (int x : closed) mark[x] = 1;
    }
  }
  for (int g : search.gens) search.candidates.push_back(classes_h.at(inv_g[g]));
  search.images.resize(search.gens.size());
  return search.run(0);
}

}  // namespace grouplab
