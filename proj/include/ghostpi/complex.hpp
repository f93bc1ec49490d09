#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/error.hpp"
#include "ghostpi/presentation.hpp"

namespace ghostpi {

using VertexId = int;
using Edge = std::array<VertexId, 2>;
using Triangle = std::array<VertexId, 3>;
/// Vertex list in ascending order.
using Simplex = std::vector<VertexId>;

/// Finite abstract simplicial complex of dimension at most 2.
///
/// Simplices are stored sorted, each with ascending vertices, and the complex
/// is closed under taking faces.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Strict constructor: all faces must already be listed.
  SimplicialComplex(std::vector<VertexId> vertices, std::vector<Edge> edges, std::vector<Triangle> triangles)
      : vertices_(std::move(vertices)), edges_(std::move(edges)), triangles_(std::move(triangles)) {
    for (auto& e : edges_)
      std::sort(e.begin(), e.end());
    for (auto& t : triangles_)
      std::sort(t.begin(), t.end());
    sort_unique(vertices_);
    sort_unique(edges_);
    sort_unique(triangles_);
    for (const auto& e : edges_) {
      if (e[0] == e[1])
        throw InvariantError("edge with repeated vertex " + std::to_string(e[0]));
      for (auto v : e)
        if (!has_vertex(v))
          throw InvariantError("edge uses missing vertex " + std::to_string(v));
    }
    for (const auto& t : triangles_) {
      if (t[0] == t[1] || t[1] == t[2])
        throw InvariantError("triangle with repeated vertex");
      if (!has_edge(t[0], t[1]) || !has_edge(t[0], t[2]) || !has_edge(t[1], t[2]))
        throw InvariantError("triangle is missing a boundary edge");
    }
    for (auto v : vertices_)
      adjacency_[v];
    for (const auto& e : edges_) {
      adjacency_[e[0]].push_back(e[1]);
      adjacency_[e[1]].push_back(e[0]);
    }
    for (auto& [v, nb] : adjacency_)
      std::sort(nb.begin(), nb.end());
  }

  struct Closed;

  /// Builds the face closure of arbitrary simplices of dimension <= 2.
  /// Higher simplices are rejected unless `truncate` is set, in which case
  /// only their 2-skeleton is kept.
  static Closed from_simplices(const std::vector<Simplex>& simplices, const std::vector<VertexId>& extra_vertices = {},
                               bool truncate = false);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }

  bool empty() const { return vertices_.empty(); }
  bool has_vertex(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool has_edge(VertexId a, VertexId b) const {
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  bool has_triangle(Triangle t) const {
    std::sort(t.begin(), t.end());
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
  }
  /// `s` need not be sorted; duplicates make it a non-simplex.
  bool has_simplex(Simplex s) const {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      return false;
    switch (s.size()) {
    case 1: return has_vertex(s[0]);
    case 2: return has_edge(s[0], s[1]);
    case 3: return has_triangle({s[0], s[1], s[2]});
    default: return false;
    }
  }

  std::size_t vertex_index(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      throw PreconditionError("vertex " + std::to_string(v) + " is not in the complex");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// All simplices, vertices first, then edges, then triangles.
  std::vector<Simplex> simplices() const {
    std::vector<Simplex> out;
    for (auto v : vertices_)
      out.push_back({v});
    for (const auto& e : edges_)
      out.push_back({e[0], e[1]});
    for (const auto& t : triangles_)
      out.push_back({t[0], t[1], t[2]});
    return out;
  }

  std::size_t simplex_count() const { return vertices_.size() + edges_.size() + triangles_.size(); }
  long euler_characteristic() const {
    return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) +
           static_cast<long>(triangles_.size());
  }
  VertexId max_vertex() const { return vertices_.empty() ? -1 : vertices_.back(); }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.triangles_ == b.triangles_;
  }

private:
  template <class T>
  static void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::map<VertexId, std::vector<VertexId>> adjacency_;
};

/// Result of face closure, with the number of faces that had to be added.
struct SimplicialComplex::Closed {
  SimplicialComplex complex;
  std::size_t added_faces = 0;
  std::size_t truncated_simplices = 0;
};

inline SimplicialComplex::Closed SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices,
                                                                   const std::vector<VertexId>& extra_vertices,
                                                                   bool truncate) {
  std::set<VertexId> listed_v(extra_vertices.begin(), extra_vertices.end());
  std::set<Edge> listed_e;
  std::set<Triangle> listed_t;
  std::set<VertexId> vs(extra_vertices.begin(), extra_vertices.end());
  std::set<Edge> es;
  std::set<Triangle> ts;
  std::size_t truncated = 0;
  auto add_triangle = [&](VertexId a, VertexId b, VertexId c) {
    ts.insert({a, b, c});
    es.insert({a, b});
    es.insert({a, c});
    es.insert({b, c});
    vs.insert({a, b, c});
  };
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty())
      throw InvariantError("empty simplex");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvariantError("simplex with repeated vertex");
    switch (s.size()) {
    case 1:
      listed_v.insert(s[0]);
      vs.insert(s[0]);
      break;
    case 2:
      listed_e.insert({s[0], s[1]});
      es.insert({s[0], s[1]});
      vs.insert({s[0], s[1]});
      break;
    case 3:
      listed_t.insert({s[0], s[1], s[2]});
      add_triangle(s[0], s[1], s[2]);
      break;
    default:
      if (!truncate)
        throw InvariantError("simplex of dimension " + std::to_string(s.size() - 1) +
                             " exceeds 2 (enable truncation to keep its 2-skeleton)");
      ++truncated;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          for (std::size_t k = j + 1; k < s.size(); ++k) {
            listed_t.insert({s[i], s[j], s[k]});
            add_triangle(s[i], s[j], s[k]);
          }
    }
  }
  Closed out{SimplicialComplex({vs.begin(), vs.end()}, {es.begin(), es.end()}, {ts.begin(), ts.end()}), 0,
             truncated};
  out.added_faces = (vs.size() - listed_v.size()) + (es.size() - listed_e.size()) + (ts.size() - listed_t.size());
  return out;
}

struct Subdivision {
  SimplicialComplex complex;
  /// Barycenter vertex of each original simplex. Original vertices keep their
  /// ids; edge and triangle barycenters get fresh ids above the old maximum.
  std::map<Simplex, VertexId> barycenter;
};

inline Subdivision barycentric_subdivide(const SimplicialComplex& x) {
  Subdivision sd;
  VertexId next = x.max_vertex() + 1;
  std::vector<VertexId> vs;
  for (auto v : x.vertices()) {
    sd.barycenter[{v}] = v;
    vs.push_back(v);
  }
  for (const auto& e : x.edges()) {
    sd.barycenter[{e[0], e[1]}] = next;
    vs.push_back(next++);
  }
  for (const auto& t : x.triangles()) {
    sd.barycenter[{t[0], t[1], t[2]}] = next;
    vs.push_back(next++);
  }
  std::vector<Edge> es;
  std::vector<Triangle> ts;
  for (const auto& e : x.edges()) {
    VertexId b = sd.barycenter.at({e[0], e[1]});
    es.push_back({e[0], b});
    es.push_back({e[1], b});
  }
  for (const auto& t : x.triangles()) {
    VertexId c = sd.barycenter.at({t[0], t[1], t[2]});
    for (int i = 0; i < 3; ++i) {
      VertexId v = t[static_cast<std::size_t>(i)];
      es.push_back({v, c});
      for (int j = 0; j < 3; ++j) {
        if (j == i)
          continue;
        VertexId w = t[static_cast<std::size_t>(j)];
        Simplex edge = v < w ? Simplex{v, w} : Simplex{w, v};
        VertexId b = sd.barycenter.at(edge);
        if (v < w)
          es.push_back({b, c});
        ts.push_back({v, b, c});
      }
    }
  }
  sd.complex = SimplicialComplex(std::move(vs), std::move(es), std::move(ts));
  return sd;
}

/// Vertex sets of the edge-connected components, each sorted, ordered by
/// least vertex.
inline std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& x) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (auto v : x.vertices()) {
    if (seen.count(v))
      continue;
    std::vector<VertexId> comp{v};
    seen.insert(v);
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (auto w : x.neighbors(comp[head]))
        if (seen.insert(w).second)
          comp.push_back(w);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const SimplicialComplex& x) { return connected_components(x).size() == 1; }

/// Closed or open walk along edges, as a start vertex and oriented steps.
struct EdgePath {
  VertexId start = 0;
  std::vector<Edge> steps;

  VertexId end() const { return steps.empty() ? start : steps.back()[1]; }
  bool closed() const { return end() == start; }

  EdgePath reversed() const {
    EdgePath r{end(), {}};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      r.steps.push_back({(*it)[1], (*it)[0]});
    return r;
  }

  EdgePath then(const EdgePath& next) const {
    if (next.start != end())
      throw PreconditionError("paths do not chain");
    EdgePath r = *this;
    r.steps.insert(r.steps.end(), next.steps.begin(), next.steps.end());
    return r;
  }

  static EdgePath through(const std::vector<VertexId>& vertices) {
    if (vertices.empty())
      throw PreconditionError("a path needs at least one vertex");
    EdgePath p{vertices.front(), {}};
    for (std::size_t i = 1; i < vertices.size(); ++i)
      p.steps.push_back({vertices[i - 1], vertices[i]});
    return p;
  }

  void validate(const SimplicialComplex& x) const {
    if (!x.has_vertex(start))
      throw PreconditionError("path starts outside the complex");
    VertexId at = start;
    for (const auto& s : steps) {
      if (s[0] != at)
        throw PreconditionError("path steps do not chain");
      if (!x.has_edge(s[0], s[1]))
        throw PreconditionError("path uses non-edge {" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "}");
      at = s[1];
    }
  }

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Spanning tree of the root's component. Non-tree edges of the whole complex
/// are numbered in ascending edge order; they are the edge-path generators.
class SpanningTree {
public:
  SpanningTree(std::shared_ptr<const SimplicialComplex> complex, VertexId root,
               std::map<VertexId, std::pair<VertexId, Edge>> parent)
      : complex_(std::move(complex)), root_(root), parent_(std::move(parent)) {
    for (const auto& [v, pe] : parent_)
      tree_edges_.insert(pe.second);
    std::uint32_t g = 0;
    for (const auto& e : complex_->edges())
      if (!tree_edges_.count(e))
        generator_.emplace(e, g++);
  }

  const SimplicialComplex& complex() const { return *complex_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
  VertexId root() const { return root_; }
  const std::set<Edge>& tree_edges() const { return tree_edges_; }
  const std::map<VertexId, std::pair<VertexId, Edge>>& parent() const { return parent_; }
  bool spans(VertexId v) const { return v == root_ || parent_.count(v); }
  bool is_tree_edge(VertexId a, VertexId b) const { return tree_edges_.count(a < b ? Edge{a, b} : Edge{b, a}) > 0; }

  /// Generator index of a non-tree edge, if it is one.
  std::optional<std::uint32_t> generator(VertexId a, VertexId b) const {
    auto it = generator_.find(a < b ? Edge{a, b} : Edge{b, a});
    if (it == generator_.end())
      return std::nullopt;
    return it->second;
  }
  const std::map<Edge, std::uint32_t>& generators() const { return generator_; }

  /// Unique tree path from the root to v.
  EdgePath path_to(VertexId v) const {
    if (!spans(v))
      throw PreconditionError("vertex " + std::to_string(v) + " is not spanned by the tree");
    std::vector<VertexId> rev{v};
    while (v != root_) {
      v = parent_.at(v).first;
      rev.push_back(v);
    }
    std::reverse(rev.begin(), rev.end());
    return EdgePath::through(rev);
  }

  /// Loop at the root running through the non-tree edge (u, v), u < v.
  EdgePath generator_loop(const Edge& e) const {
    return path_to(e[0]).then(EdgePath{e[0], {{e[0], e[1]}}}).then(path_to(e[1]).reversed());
  }

private:
  std::shared_ptr<const SimplicialComplex> complex_;
  VertexId root_;
  std::map<VertexId, std::pair<VertexId, Edge>> parent_;
  std::set<Edge> tree_edges_;
  std::map<Edge, std::uint32_t> generator_;
};

/// Breadth-first spanning tree, neighbours explored in ascending order.
inline SpanningTree spanning_tree(const SimplicialComplex& x, VertexId root) {
  if (!x.has_vertex(root))
    throw PreconditionError("root " + std::to_string(root) + " is not a vertex");
  std::map<VertexId, std::pair<VertexId, Edge>> parent;
  std::deque<VertexId> queue{root};
  std::set<VertexId> seen{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (auto w : x.neighbors(v))
      if (seen.insert(w).second) {
        parent[w] = {v, v < w ? Edge{v, w} : Edge{w, v}};
        queue.push_back(w);
      }
  }
  return SpanningTree(std::make_shared<const SimplicialComplex>(x), root, std::move(parent));
}

/// Spanning tree grown from a uniformly random frontier edge at every step.
inline SpanningTree random_spanning_tree(const SimplicialComplex& x, VertexId root, std::uint64_t seed) {
  if (!x.has_vertex(root))
    throw PreconditionError("root " + std::to_string(root) + " is not a vertex");
  std::mt19937_64 rng(seed);
  std::map<VertexId, std::pair<VertexId, Edge>> parent;
  std::set<VertexId> seen{root};
  std::vector<std::pair<VertexId, VertexId>> frontier;
  for (auto w : x.neighbors(root))
    frontier.push_back({root, w});
  while (!frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    std::size_t i = pick(rng);
    auto [v, w] = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    if (!seen.insert(w).second)
      continue;
    parent[w] = {v, v < w ? Edge{v, w} : Edge{w, v}};
    for (auto u : x.neighbors(w))
      if (!seen.count(u))
        frontier.push_back({w, u});
  }
  return SpanningTree(std::make_shared<const SimplicialComplex>(x), root, std::move(parent));
}

/// Word of a closed path at the root: tree edges vanish, a non-tree edge
/// {u, v} with u < v reads as its generator when walked u -> v and as the
/// inverse otherwise.
inline Word loop_word(const EdgePath& path, const SpanningTree& tree) {
  if (path.start != tree.root() || !path.closed())
    throw PreconditionError("loop_word needs a path closed at the tree root");
  path.validate(tree.complex());
  Word w;
  for (const auto& s : path.steps)
    if (auto g = tree.generator(s[0], s[1]))
      w.push_back({*g, static_cast<std::int8_t>(s[0] < s[1] ? 1 : -1)});
  return free_reduce(w);
}

/// Edge-path group presentation of pi_1(|X|, root).
inline Presentation edge_path_presentation(const SimplicialComplex& x, const SpanningTree& tree) {
  for (auto v : x.vertices())
    if (!tree.spans(v))
      throw PreconditionError("edge-path presentation needs a connected complex");
  std::vector<std::string> names(tree.generators().size());
  for (const auto& [e, g] : tree.generators())
    names[g] = "e" + std::to_string(e[0]) + "_" + std::to_string(e[1]);
  Presentation p(std::move(names));
  auto letter = [&](VertexId a, VertexId b, Word& w) {
    if (auto g = tree.generator(a, b))
      w.push_back({*g, static_cast<std::int8_t>(a < b ? 1 : -1)});
  };
  for (const auto& t : x.triangles()) {
    Word w;
    letter(t[0], t[1], w);
    letter(t[1], t[2], w);
    letter(t[2], t[0], w);
    if (!cyclic_reduce(w).empty())
      p.add_relator(w);
  }
  return p;
}

} // namespace ghostpi
