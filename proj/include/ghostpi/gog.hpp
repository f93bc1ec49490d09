#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/error.hpp"
#include "ghostpi/presentation.hpp"

namespace ghostpi {

/// A graph of groups: vertex groups by presentation, and for each edge the
/// pairs (alpha(a), omega(a)) of images of the edge-group generators a in
/// the source and target vertex groups.
///
/// Edge groups are only known through these image pairs; no abstract edge
/// presentation is stored.
struct GraphOfGroups {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::map<int, Presentation> vertex_groups;
  std::vector<std::vector<std::pair<Word, Word>>> edge_groups;

  const Presentation& group_at(int v) const {
    static const Presentation trivial;
    auto it = vertex_groups.find(v);
    return it == vertex_groups.end() ? trivial : it->second;
  }

  void validate() const {
    std::set<int> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size())
      throw InvariantError("duplicate vertex in graph of groups");
    if (vs.empty())
      throw InvariantError("graph of groups needs a vertex");
    for (const auto& [v, p] : vertex_groups)
      if (!vs.count(v))
        throw InvariantError("vertex group attached to unknown vertex " + std::to_string(v));
    if (edge_groups.size() > edges.size())
      throw InvariantError("edge group data for a missing edge");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      if (!vs.count(u) || !vs.count(v))
        throw InvariantError("edge " + std::to_string(e) + " has an unknown endpoint");
      if (e >= edge_groups.size())
        continue;
      for (const auto& [alpha, omega] : edge_groups[e]) {
        for (Letter l : alpha)
          if (l.gen >= group_at(u).generator_count())
            throw InvariantError("edge word uses a generator outside its source vertex group");
        for (Letter l : omega)
          if (l.gen >= group_at(v).generator_count())
            throw InvariantError("edge word uses a generator outside its target vertex group");
      }
    }
    // connectivity of the underlying graph
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::set<int> seen{vertices.front()};
    std::deque<int> queue{vertices.front()};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v])
        if (seen.insert(w).second)
          queue.push_back(w);
    }
    if (seen.size() != vs.size())
      throw PreconditionError("underlying graph of the graph of groups is disconnected");
  }

  /// #E - #V + 1: rank of the free fundamental group of the underlying graph.
  std::size_t graph_rank() const { return edges.size() + 1 - vertices.size(); }
};

/// Indices of spanning-tree edges. Breadth first from the least vertex with
/// (neighbour, edge index) tie-breaking, or random frontier picks given a seed.
inline std::set<std::size_t> gog_spanning_tree(const GraphOfGroups& g, std::optional<std::uint64_t> seed = {}) {
  std::map<int, std::vector<std::pair<int, std::size_t>>> adj;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v)
      continue;
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  for (auto& [v, nb] : adj)
    std::sort(nb.begin(), nb.end());
  const int root = *std::min_element(g.vertices.begin(), g.vertices.end());
  std::set<std::size_t> tree;
  std::set<int> seen{root};
  if (!seed) {
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [w, e] : adj[v])
        if (seen.insert(w).second) {
          tree.insert(e);
          queue.push_back(w);
        }
    }
    return tree;
  }
  std::mt19937_64 rng(*seed);
  std::vector<std::pair<int, std::size_t>> frontier = adj[root];
  while (!frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    std::size_t i = pick(rng);
    auto [w, e] = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    if (!seen.insert(w).second)
      continue;
    tree.insert(e);
    for (auto next : adj[w])
      if (!seen.count(next.first))
        frontier.push_back(next);
  }
  return tree;
}

struct GogLayout {
  /// First generator index of each vertex group in the combined presentation.
  std::map<int, std::uint32_t> offset;
  /// Stable letter of each edge.
  std::vector<std::uint32_t> stable_letter;
};

inline Word shift_word(const Word& w, std::uint32_t by) {
  Word out = w;
  for (auto& l : out)
    l.gen += by;
  return out;
}

/// Fundamental group of a graph of groups: all vertex generators and
/// relators, a stable letter t_e per edge with t_e alpha(a) t_e^-1 = omega(a)
/// for every edge-group generator a, and t_e = 1 on spanning-tree edges.
inline Presentation gog_presentation(const GraphOfGroups& g, std::optional<std::uint64_t> tree_seed = {},
                                     GogLayout* layout = nullptr) {
  g.validate();
  std::vector<std::string> names;
  GogLayout lay;
  std::vector<int> sorted = g.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    lay.offset[v] = static_cast<std::uint32_t>(names.size());
    for (const auto& n : g.group_at(v).generators())
      names.push_back("v" + std::to_string(v) + "." + n);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    lay.stable_letter.push_back(static_cast<std::uint32_t>(names.size()));
    names.push_back("t" + std::to_string(e));
  }
  Presentation p(std::move(names));
  for (int v : sorted)
    for (const auto& r : g.group_at(v).relators())
      p.add_relator(shift_word(r, lay.offset[v]));
  for (std::size_t e = 0; e < g.edges.size() && e < g.edge_groups.size(); ++e) {
    auto [u, v] = g.edges[e];
    const Letter t{lay.stable_letter[e], 1};
    for (const auto& [alpha, omega] : g.edge_groups[e]) {
      Word r{t};
      for (Letter l : shift_word(alpha, lay.offset[u]))
        r.push_back(l);
      r.push_back(t.inverse());
      for (Letter l : inverse(shift_word(omega, lay.offset[v])))
        r.push_back(l);
      p.add_relator(r);
    }
  }
  for (auto e : gog_spanning_tree(g, tree_seed))
    p.add_relator(Word{{lay.stable_letter[e], 1}});
  if (layout)
    *layout = std::move(lay);
  return p;
}

/// Quotient by the normal closure of all vertex groups (hence of all edge
/// group images): the fundamental group of the underlying graph.
inline Presentation kill_inertia(const GraphOfGroups& g, std::optional<std::uint64_t> tree_seed = {}) {
  GogLayout lay;
  Presentation p = gog_presentation(g, tree_seed, &lay);
  for (const auto& [v, off] : lay.offset)
    for (std::uint32_t i = 0; i < g.group_at(v).generator_count(); ++i)
      p.add_relator(Word{{off + i, 1}});
  return p;
}

} // namespace ghostpi
