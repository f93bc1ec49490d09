#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/error.hpp"
#include "ghostpi/finite_group.hpp"

namespace ghostpi {

/// A set of subgroups of one finite group.
struct SubgroupFamily {
  std::set<ElementSet> members;

  friend bool operator==(const SubgroupFamily&, const SubgroupFamily&) = default;
};

struct ProdiscreteCaps {
  std::size_t max_group_order = 1024;
  /// Full subgroup-lattice enumeration in lemma1_report stops above this order.
  std::size_t max_lattice_order = 64;
};

namespace detail {

inline void check_family(const FiniteGroup& g, const SubgroupFamily& h, const ProdiscreteCaps& caps) {
  if (g.order() > caps.max_group_order)
    throw CapError("group order " + std::to_string(g.order()) + " exceeds cap " +
                   std::to_string(caps.max_group_order));
  for (const auto& m : h.members) {
    if (!std::is_sorted(m.begin(), m.end()) || std::adjacent_find(m.begin(), m.end()) != m.end())
      throw InvariantError("subgroup element lists must be sorted without repeats");
    if (!m.empty() && m.back() >= g.order())
      throw InvariantError("subgroup element out of range");
    if (!g.is_subgroup(m))
      throw InvariantError("family member is not a subgroup");
  }
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const ElementSet& big, const ElementSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace detail

/// Every subgroup of g containing k, found by adjoining one element at a time.
inline std::set<ElementSet> overgroups(const FiniteGroup& g, const ElementSet& k) {
  std::set<ElementSet> found{k};
  std::vector<ElementSet> queue{k};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementSet cur = queue[head];
    std::vector<char> done(g.order(), 0);
    for (auto x : cur)
      done[x] = 1;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (done[x])
        continue;
      std::vector<std::size_t> seeds = cur;
      seeds.push_back(x);
      ElementSet bigger = g.generated(seeds);
      done[g.inv(x)] = 1;
      if (found.insert(bigger).second)
        queue.push_back(std::move(bigger));
    }
  }
  return found;
}

inline std::set<ElementSet> all_subgroups(const FiniteGroup& g) { return overgroups(g, g.trivial_subgroup()); }

/// Closes a family under intersection and conjugation (no overgroups).
inline std::set<ElementSet> meet_closure(const FiniteGroup& g, const SubgroupFamily& h) {
  std::set<ElementSet> m;
  for (const auto& k : h.members)
    for (std::size_t x = 0; x < g.order(); ++x)
      m.insert(g.conjugate(k, x));
  if (m.empty())
    m.insert(g.whole());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> cur(m.begin(), m.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (m.insert(detail::intersect(cur[i], cur[j])).second)
          grew = true;
  }
  return m;
}

/// Names the first axiom the family violates, if any.
inline std::optional<std::string> violated_axiom(const FiniteGroup& g, const SubgroupFamily& open) {
  const auto& f = open.members;
  for (const auto& a : f)
    for (const auto& b : f)
      if (!f.count(detail::intersect(a, b)))
        return "Top1 (closed under intersection)";
  for (const auto& a : f)
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!f.count(g.conjugate(a, x)))
        return "Top2 (closed under conjugation)";
  for (const auto& a : f)
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<std::size_t> seeds = a;
      seeds.push_back(x);
      if (!f.count(g.generated(seeds)))
        return "Top3 (closed under overgroups)";
    }
  return std::nullopt;
}

/// Open subgroups of the topology generated by h: the subgroups containing a
/// finite intersection of conjugates of members. An empty family generates
/// the indiscrete topology {G}.
inline SubgroupFamily generate_topology(const FiniteGroup& g, const SubgroupFamily& h,
                                        const ProdiscreteCaps& caps = {}) {
  detail::check_family(g, h, caps);
  SubgroupFamily open;
  std::set<ElementSet> meets = meet_closure(g, h);
  for (const auto& m : meets) {
    bool dominated = false;
    for (const auto& other : meets)
      if (other != m && other.size() < m.size() && detail::contains(m, other)) {
        dominated = true;
        break;
      }
    if (dominated)
      continue;
    auto up = overgroups(g, m);
    open.members.insert(up.begin(), up.end());
  }
  if (auto bad = violated_axiom(g, open))
    throw InvariantError("generated family violates " + *bad);
  return open;
}

struct Completion {
  FiniteGroup group;
  /// Element of G -> element of the completion.
  std::vector<std::size_t> map;
  /// Intersection of all open subgroups; normal in G.
  ElementSet kernel;
};

/// For finite G the completion is G/N with N the intersection of all open
/// subgroups, which is also the intersection of all conjugates of members.
inline Completion completion(const FiniteGroup& g, const SubgroupFamily& h, const ProdiscreteCaps& caps = {}) {
  detail::check_family(g, h, caps);
  ElementSet n = g.whole();
  for (const auto& k : h.members)
    for (std::size_t x = 0; x < g.order(); ++x)
      n = detail::intersect(n, g.conjugate(k, x));
  if (!g.is_normal(n))
    throw InvariantError("intersection of conjugates is not normal");
  auto [q, map] = g.quotient(n);
  return {std::move(q), std::move(map), std::move(n)};
}

inline ElementSet image(const std::vector<std::size_t>& map, const ElementSet& s) {
  std::set<std::size_t> out;
  for (auto x : s)
    out.insert(map[x]);
  return {out.begin(), out.end()};
}

inline ElementSet preimage(const std::vector<std::size_t>& map, const ElementSet& s) {
  ElementSet out;
  for (std::size_t x = 0; x < map.size(); ++x)
    if (std::binary_search(s.begin(), s.end(), map[x]))
      out.push_back(x);
  return out;
}

struct Lemma1Report {
  std::size_t group_order = 0;
  std::size_t completion_order = 0;
  std::size_t open_in_group = 0;
  std::size_t open_in_completion = 0;
  bool bijection = false;
  bool normality_preserved = false;
  bool index_preserved = false;
  /// Every subgroup of the completion is open iff its preimage is open
  /// (only checked when the completion is small enough to enumerate).
  std::optional<bool> finest_topology;
  /// All members normal: the completion matches the limit of G/N_i.
  std::optional<bool> classical_limit;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks by enumeration that U -> preimage(U) is an index- and
/// normality-preserving bijection between open subgroups of the completion
/// and open subgroups of G.
inline Lemma1Report lemma1_report(const FiniteGroup& g, const SubgroupFamily& h, const ProdiscreteCaps& caps = {}) {
  Lemma1Report rep;
  SubgroupFamily open = generate_topology(g, h, caps);
  Completion c = completion(g, h, caps);
  const FiniteGroup& q = c.group;
  rep.group_order = g.order();
  rep.completion_order = q.order();

  // quotient topology: generated by the images of the members
  SubgroupFamily images;
  for (const auto& m : h.members)
    images.members.insert(image(c.map, m));
  SubgroupFamily open_q = generate_topology(q, images, caps);
  rep.open_in_group = open.members.size();
  rep.open_in_completion = open_q.members.size();

  std::set<ElementSet> hit;
  rep.bijection = true;
  rep.normality_preserved = true;
  rep.index_preserved = true;
  for (const auto& u : open_q.members) {
    ElementSet pre = preimage(c.map, u);
    if (!open.members.count(pre) || !hit.insert(pre).second)
      rep.bijection = false;
    if (q.is_normal(u) != g.is_normal(pre))
      rep.normality_preserved = false;
    if (g.order() * u.size() != q.order() * pre.size())
      rep.index_preserved = false;
  }
  if (hit.size() != open.members.size())
    rep.bijection = false;

  if (q.order() <= caps.max_lattice_order) {
    bool finest = true;
    for (const auto& u : all_subgroups(q))
      if (open_q.members.count(u) != open.members.count(preimage(c.map, u)))
        finest = false;
    rep.finest_topology = finest;
    if (!finest)
      rep.failures.push_back("quotient topology is not the finest one making G -> G^ continuous");
  }

  const bool normal_family =
      std::all_of(h.members.begin(), h.members.end(), [&](const ElementSet& m) { return g.is_normal(m); });
  if (normal_family) {
    // limit of G/N_i over the normal open subgroups: the image of G in the
    // product of the finite quotients
    std::vector<std::vector<std::size_t>> maps;
    for (const auto& n : open.members)
      if (g.is_normal(n))
        maps.push_back(g.quotient(n).second);
    std::set<std::vector<std::size_t>> tuples;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<std::size_t> t;
      for (const auto& m : maps)
        t.push_back(m[x]);
      tuples.insert(std::move(t));
    }
    rep.classical_limit = tuples.size() == q.order();
    if (!*rep.classical_limit)
      rep.failures.push_back("classical limit has order " + std::to_string(tuples.size()));
  }

  if (!rep.bijection)
    rep.failures.push_back("preimage map is not a bijection on open subgroups");
  if (!rep.normality_preserved)
    rep.failures.push_back("normality not preserved");
  if (!rep.index_preserved)
    rep.failures.push_back("index not preserved");
  return rep;
}

} // namespace ghostpi
