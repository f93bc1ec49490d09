#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/complex.hpp"
#include "ghostpi/error.hpp"
#include "ghostpi/finite_group.hpp"

namespace ghostpi {

/// Vertex map of one generator; unlisted vertices are fixed.
using VertexMap = std::map<VertexId, VertexId>;

/// A finite group acting on a simplicial complex by simplicial automorphisms.
///
/// Every group element is stored as a permutation of vertex positions (the
/// index of a vertex in complex().vertices()). Element 0 is the identity and
/// mul(i, j) = k means perm_k = perm_i o perm_j.
class FiniteAction {
public:
  FiniteAction() = default;

  /// Closes the generators into the full group (at most `cap` elements).
  FiniteAction(SimplicialComplex complex, const std::vector<VertexMap>& generators, std::size_t cap = 4096)
      : complex_(std::move(complex)) {
    const auto& vs = complex_.vertices();
    std::vector<Permutation> gens;
    for (const auto& m : generators) {
      Permutation p = identity_permutation(vs.size());
      for (const auto& [from, to] : m) {
        if (!complex_.has_vertex(from) || !complex_.has_vertex(to))
          throw InvariantError("generator maps " + std::to_string(from) + " -> " + std::to_string(to) +
                               " outside the complex");
        p[complex_.vertex_index(from)] = static_cast<std::uint32_t>(complex_.vertex_index(to));
      }
      if (!is_permutation(p))
        throw InvariantError("generator is not a bijection on vertices");
      check_automorphism(p);
      gens.push_back(std::move(p));
    }
    auto closure = close_permutations(gens, vs.size(), cap);
    elements_ = std::move(closure.elements);
    group_ = std::move(closure.group);
    generators_ = std::move(closure.generator_indices);
  }

  /// Assembles an action whose elements are already closed and tabulated.
  static FiniteAction from_parts(SimplicialComplex complex, std::vector<Permutation> elements, FiniteGroup group,
                                 std::vector<std::size_t> generators) {
    FiniteAction a;
    a.complex_ = std::move(complex);
    a.elements_ = std::move(elements);
    a.group_ = std::move(group);
    a.generators_ = std::move(generators);
    if (a.elements_.size() != a.group_.order())
      throw InvariantError("element list and group table disagree in size");
    for (const auto& p : a.elements_) {
      if (p.size() != a.complex_.vertices().size() || !is_permutation(p))
        throw InvariantError("action element is not a vertex permutation");
      a.check_automorphism(p);
    }
    return a;
  }

  const SimplicialComplex& complex() const { return complex_; }
  const FiniteGroup& group() const { return group_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  VertexId apply(std::size_t g, VertexId v) const {
    return complex_.vertices()[elements_.at(g)[complex_.vertex_index(v)]];
  }

  Simplex apply(std::size_t g, const Simplex& s) const {
    Simplex out;
    for (auto v : s)
      out.push_back(apply(g, v));
    std::sort(out.begin(), out.end());
    return out;
  }

  EdgePath apply(std::size_t g, const EdgePath& path) const {
    EdgePath out{apply(g, path.start), {}};
    for (const auto& s : path.steps)
      out.steps.push_back({apply(g, s[0]), apply(g, s[1])});
    return out;
  }

  bool fixes(std::size_t g, VertexId v) const { return apply(g, v) == v; }

  bool globally_fixed(VertexId v) const {
    for (std::size_t g = 0; g < order(); ++g)
      if (!fixes(g, v))
        return false;
    return true;
  }

  std::vector<VertexId> orbit(VertexId v) const {
    std::set<VertexId> o;
    for (std::size_t g = 0; g < order(); ++g)
      o.insert(apply(g, v));
    return {o.begin(), o.end()};
  }

private:
  void check_automorphism(const Permutation& p) const {
    const auto& vs = complex_.vertices();
    auto img = [&](VertexId v) { return vs[p[complex_.vertex_index(v)]]; };
    for (const auto& e : complex_.edges())
      if (!complex_.has_edge(img(e[0]), img(e[1])))
        throw InvariantError("generator does not map edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                             "} to an edge");
    for (const auto& t : complex_.triangles())
      if (!complex_.has_triangle({img(t[0]), img(t[1]), img(t[2])}))
        throw InvariantError("generator does not map a triangle to a triangle");
  }

  SimplicialComplex complex_;
  std::vector<Permutation> elements_;
  FiniteGroup group_;
  std::vector<std::size_t> generators_;
};

/// Simplices fixed pointwise by one group element.
struct FixedSubcomplex {
  std::size_t element = 0;
  SimplicialComplex complex;
};

inline FixedSubcomplex fixed_subcomplex(const FiniteAction& a, std::size_t g) {
  if (g >= a.order())
    throw PreconditionError("group element " + std::to_string(g) + " out of range");
  const auto& x = a.complex();
  std::vector<VertexId> vs;
  for (auto v : x.vertices())
    if (a.fixes(g, v))
      vs.push_back(v);
  auto fixed = [&](VertexId v) { return std::binary_search(vs.begin(), vs.end(), v); };
  std::vector<Edge> es;
  for (const auto& e : x.edges())
    if (fixed(e[0]) && fixed(e[1]))
      es.push_back(e);
  std::vector<Triangle> ts;
  for (const auto& t : x.triangles())
    if (fixed(t[0]) && fixed(t[1]) && fixed(t[2]))
      ts.push_back(t);
  return {g, SimplicialComplex(std::move(vs), std::move(es), std::move(ts))};
}

inline constexpr std::size_t kDefaultRegularityBudget = 10'000'000;

/// Regularity test: whenever (g_0 v_0, ..., g_n v_n) spans a simplex (repeated
/// vertices collapse) for a simplex (v_0, ..., v_n), a single g must satisfy
/// g v_i = g_i v_i for all i. Tuples are normalised to g_0 = identity.
///
/// Returns nullopt when more than `budget` tuples would be needed.
inline std::optional<bool> is_regular(const FiniteAction& a, std::size_t budget = kDefaultRegularityBudget) {
  const auto& x = a.complex();
  const std::size_t order = a.order();
  std::size_t spent = 0;
  for (const auto& s : x.simplices()) {
    const std::size_t n = s.size();
    if (n < 2)
      continue;
    std::size_t tuples = 1;
    for (std::size_t i = 1; i < n; ++i)
      tuples *= order;
    spent += tuples;
    if (spent > budget)
      return std::nullopt;
    std::vector<std::size_t> pick(n, 0);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t rest = t;
      for (std::size_t i = 1; i < n; ++i) {
        pick[i] = rest % order;
        rest /= order;
      }
      Simplex image;
      for (std::size_t i = 0; i < n; ++i)
        image.push_back(a.apply(pick[i], s[i]));
      Simplex collapsed = image;
      std::sort(collapsed.begin(), collapsed.end());
      collapsed.erase(std::unique(collapsed.begin(), collapsed.end()), collapsed.end());
      if (!x.has_simplex(collapsed))
        continue;
      bool realized = false;
      for (std::size_t h = 0; h < order && !realized; ++h) {
        realized = true;
        for (std::size_t i = 0; i < n && realized; ++i)
          realized = a.apply(h, s[i]) == image[i];
      }
      if (!realized)
        return false;
    }
  }
  return true;
}

/// Equivariant barycentric subdivision: the barycenter of s goes to the
/// barycenter of g s. The abstract group and its table are unchanged.
inline FiniteAction subdivide(const FiniteAction& a) {
  Subdivision sd = barycentric_subdivide(a.complex());
  const auto& nv = sd.complex.vertices();
  std::vector<Permutation> elements;
  for (std::size_t g = 0; g < a.order(); ++g) {
    Permutation p(nv.size());
    for (const auto& [simplex, bary] : sd.barycenter)
      p[sd.complex.vertex_index(bary)] =
          static_cast<std::uint32_t>(sd.complex.vertex_index(sd.barycenter.at(a.apply(g, simplex))));
    elements.push_back(std::move(p));
  }
  return FiniteAction::from_parts(std::move(sd.complex), std::move(elements), a.group(), a.generators());
}

struct Regularized {
  FiniteAction action;
  int subdivisions = 0;
};

/// Subdivides until the action is regular (at most twice). Vertex ids of the
/// input survive, so basepoints stay valid.
inline Regularized regularize_counted(const FiniteAction& a, std::size_t budget = kDefaultRegularityBudget) {
  Regularized r{a, 0};
  while (true) {
    auto regular = is_regular(r.action, budget);
    if (regular.value_or(false))
      return r;
    if (!regular) {
      // too expensive to check: two subdivisions always suffice
      while (r.subdivisions < 2) {
        r.action = subdivide(r.action);
        ++r.subdivisions;
      }
      return r;
    }
    if (r.subdivisions == 2)
      throw InvariantError("action is still not regular after two barycentric subdivisions");
    r.action = subdivide(r.action);
    ++r.subdivisions;
  }
}

inline FiniteAction regularize(const FiniteAction& a, std::size_t budget = kDefaultRegularityBudget) {
  return regularize_counted(a, budget).action;
}

struct QuotientData {
  SimplicialComplex complex;
  /// Vertex of the regularized complex -> least vertex of its orbit.
  std::map<VertexId, VertexId> projection;
  int subdivisions = 0;
};

/// Orbit complex of the regularized action.
inline QuotientData quotient_complex(const FiniteAction& a, std::size_t budget = kDefaultRegularityBudget) {
  Regularized r = regularize_counted(a, budget);
  const auto& act = r.action;
  QuotientData q;
  q.subdivisions = r.subdivisions;
  for (auto v : act.complex().vertices())
    q.projection[v] = act.orbit(v).front();
  std::vector<Simplex> images;
  for (const auto& s : act.complex().simplices()) {
    Simplex img;
    for (auto v : s)
      img.push_back(q.projection.at(v));
    images.push_back(std::move(img));
  }
  q.complex = SimplicialComplex::from_simplices(images).complex;
  return q;
}

struct ConeResult {
  FiniteAction action;
  VertexId apex = 0;
};

/// Attaches a cone over the orbit of x; every element fixes the new apex.
inline ConeResult cone_over_orbit(const FiniteAction& a, VertexId x) {
  const auto& cx = a.complex();
  if (!cx.has_vertex(x))
    throw PreconditionError("cone vertex " + std::to_string(x) + " is not in the complex");
  const VertexId apex = cx.max_vertex() + 1;
  std::vector<VertexId> vs = cx.vertices();
  vs.push_back(apex);
  std::vector<Edge> es = cx.edges();
  for (auto v : a.orbit(x))
    es.push_back({v, apex});
  SimplicialComplex y(std::move(vs), std::move(es), cx.triangles());
  // the apex is the largest id, hence the last position
  std::vector<Permutation> elements = a.elements();
  for (auto& p : elements)
    p.push_back(static_cast<std::uint32_t>(p.size()));
  return {FiniteAction::from_parts(std::move(y), std::move(elements), a.group(), a.generators()), apex};
}

/// A regularized action together with a globally fixed basepoint.
struct BasedAction {
  FiniteAction action;
  VertexId basepoint = 0;
  bool coned = false;
  int subdivisions = 0;
};

/// Picks the basepoint both quotient computations work from. When x is absent,
/// not globally fixed, or `force_cone` is set, the cone over the orbit of x
/// (least vertex when absent) is attached and its apex becomes the basepoint.
inline BasedAction with_fixed_basepoint(const FiniteAction& a, std::optional<VertexId> x, bool force_cone = false,
                                        std::size_t budget = kDefaultRegularityBudget) {
  if (a.complex().empty())
    throw PreconditionError("empty complex");
  if (x && !a.complex().has_vertex(*x))
    throw PreconditionError("basepoint " + std::to_string(*x) + " is not a vertex");
  BasedAction b;
  if (force_cone || !x || !a.globally_fixed(*x)) {
    ConeResult c = cone_over_orbit(a, x.value_or(a.complex().vertices().front()));
    b.basepoint = c.apex;
    b.coned = true;
    Regularized r = regularize_counted(c.action, budget);
    b.action = std::move(r.action);
    b.subdivisions = r.subdivisions;
  } else {
    b.basepoint = *x;
    Regularized r = regularize_counted(a, budget);
    b.action = std::move(r.action);
    b.subdivisions = r.subdivisions;
  }
  return b;
}

} // namespace ghostpi
