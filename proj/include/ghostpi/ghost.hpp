#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/action.hpp"
#include "ghostpi/complex.hpp"
#include "ghostpi/fingerprint.hpp"
#include "ghostpi/presentation.hpp"
#include "ghostpi/tietze.hpp"

namespace ghostpi {

/// Where a relator of a quotient presentation came from.
struct RelatorOrigin {
  enum class Kind { original, coinvariant, lambda };
  Kind kind = Kind::original;
  /// Group element (coinvariant, lambda).
  std::size_t element = 0;
  /// pi_1 generator whose image was compared (coinvariant).
  std::uint32_t generator = 0;
  /// Component of the fixed set, numbered by least vertex (lambda).
  std::size_t component = 0;

  friend bool operator==(const RelatorOrigin&, const RelatorOrigin&) = default;
};

inline const char* to_string(RelatorOrigin::Kind k) {
  switch (k) {
  case RelatorOrigin::Kind::original: return "original";
  case RelatorOrigin::Kind::coinvariant: return "coinvariant";
  case RelatorOrigin::Kind::lambda: return "lambda";
  }
  return "?";
}

struct TaggedRelator {
  Word word;
  RelatorOrigin origin;
};

/// Path chosen from the basepoint into one component of a fixed set.
struct LambdaPath {
  std::size_t element = 0;
  std::size_t component = 0;
  EdgePath path;
};

namespace detail {

inline void require_fixed_root(const FiniteAction& a, const SpanningTree& tree) {
  if (!a.globally_fixed(tree.root()))
    throw PreconditionError("basepoint " + std::to_string(tree.root()) + " is not fixed by the whole group");
}

} // namespace detail

/// The loop gamma (g gamma)^-1 at the basepoint, as a word in the edge-path
/// generators of `tree`.
inline Word lambda_word(const FiniteAction& a, const SpanningTree& tree, std::size_t g, const EdgePath& gamma) {
  detail::require_fixed_root(a, tree);
  if (gamma.start != tree.root())
    throw PreconditionError("lambda path must start at the basepoint");
  if (!a.fixes(g, gamma.end()))
    throw PreconditionError("lambda path must end at a point fixed by the element");
  return loop_word(gamma.then(a.apply(g, gamma).reversed()), tree);
}

/// Relators w^-1 g(w) making the group act trivially on pi_1.
///
/// Only the supplied group generators are used by default; the normal closure
/// is the same as for all elements. `all_elements` switches to every element.
inline std::vector<TaggedRelator> coinvariant_relators(const FiniteAction& a, const SpanningTree& tree,
                                                       bool all_elements = false) {
  detail::require_fixed_root(a, tree);
  std::set<std::size_t> acting;
  if (all_elements)
    for (std::size_t g = 1; g < a.order(); ++g)
      acting.insert(g);
  else
    for (auto g : a.generators())
      if (g != 0)
        acting.insert(g);
  std::vector<TaggedRelator> out;
  for (auto g : acting)
    for (const auto& [edge, w] : tree.generators()) {
      Word r{{w, -1}};
      Word image = loop_word(a.apply(g, tree.generator_loop(edge)), tree);
      r.insert(r.end(), image.begin(), image.end());
      if (!cyclic_reduce(r).empty())
        out.push_back({std::move(r), {RelatorOrigin::Kind::coinvariant, g, w, 0}});
    }
  return out;
}

struct GhostOptions {
  /// One lambda relator per C(g)-orbit of fixed components instead of per component.
  bool center2 = false;
  /// Attach the cone even when the basepoint is globally fixed.
  bool force_cone = false;
  /// Coinvariant relators for every element rather than for the generators.
  bool all_element_coinvariants = false;
  /// Grow a random spanning tree with this seed instead of the BFS tree.
  std::optional<std::uint64_t> tree_seed;
  /// Fault injection: delete the lambda relator with this index.
  std::optional<std::size_t> drop_lambda;
  std::size_t regularity_budget = kDefaultRegularityBudget;
  SimplifyOptions simplify;
};

struct GhostResult {
  /// pi_1 of the (possibly coned) space plus coinvariant and lambda relators,
  /// aligned with `provenance`.
  Presentation raw;
  std::vector<RelatorOrigin> provenance;
  /// Tietze-simplified form of `raw`.
  Presentation presentation;
  bool simplification_capped = false;
  std::vector<LambdaPath> paths;
  VertexId basepoint = 0;
  bool coned = false;
  int subdivisions = 0;

  std::size_t count(RelatorOrigin::Kind k) const {
    return static_cast<std::size_t>(
        std::count_if(provenance.begin(), provenance.end(), [k](const RelatorOrigin& o) { return o.kind == k; }));
  }

  /// Only the original and coinvariant relators: pi_1(X, x)_G.
  Presentation coinvariants() const {
    Presentation p(raw.generators());
    for (std::size_t i = 0; i < provenance.size(); ++i)
      if (provenance[i].kind != RelatorOrigin::Kind::lambda)
        p.add_relator(raw.relators()[i]);
    return p;
  }
};

/// pi_1 of the coarse quotient X/G as pi_1(X, x)_G modulo the lambda classes,
/// one per (element, fixed-set component).
inline GhostResult pi1_of_quotient(const FiniteAction& a, std::optional<VertexId> x, const GhostOptions& opt = {}) {
  if (!is_connected(a.complex()))
    throw PreconditionError("quotient fundamental group needs a connected complex");
  BasedAction based = with_fixed_basepoint(a, x, opt.force_cone, opt.regularity_budget);
  const FiniteAction& act = based.action;
  const SimplicialComplex& y = act.complex();
  SpanningTree tree =
      opt.tree_seed ? random_spanning_tree(y, based.basepoint, *opt.tree_seed) : spanning_tree(y, based.basepoint);

  GhostResult res;
  res.basepoint = based.basepoint;
  res.coned = based.coned;
  res.subdivisions = based.subdivisions;

  Presentation base = edge_path_presentation(y, tree);
  res.raw = Presentation(base.generators());
  for (const auto& r : base.relators()) {
    res.raw.add_relator(r);
    res.provenance.push_back({RelatorOrigin::Kind::original, 0, 0, 0});
  }
  for (auto& t : coinvariant_relators(act, tree, opt.all_element_coinvariants)) {
    res.raw.add_relator(t.word);
    res.provenance.push_back(t.origin);
  }

  std::size_t lambda_index = 0;
  for (std::size_t g = 0; g < act.order(); ++g) {
    auto components = connected_components(fixed_subcomplex(act, g).complex);
    std::vector<std::size_t> chosen;
    if (opt.center2) {
      std::map<VertexId, std::size_t> component_of;
      for (std::size_t i = 0; i < components.size(); ++i)
        for (auto v : components[i])
          component_of[v] = i;
      std::vector<char> covered(components.size(), 0);
      const auto centralizer = act.group().centralizer(g);
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (covered[i])
          continue;
        chosen.push_back(i);
        for (auto h : centralizer)
          covered[component_of.at(act.apply(h, components[i].front()))] = 1;
      }
    } else {
      for (std::size_t i = 0; i < components.size(); ++i)
        chosen.push_back(i);
    }
    for (auto i : chosen) {
      EdgePath gamma = tree.path_to(components[i].front());
      Word w = lambda_word(act, tree, g, gamma);
      res.paths.push_back({g, i, gamma});
      if (cyclic_reduce(w).empty())
        continue;
      if (opt.drop_lambda && *opt.drop_lambda == lambda_index++)
        continue;
      res.raw.add_relator(w);
      res.provenance.push_back({RelatorOrigin::Kind::lambda, g, 0, i});
    }
  }

  Simplified s = tietze_simplify(res.raw, opt.simplify);
  res.presentation = std::move(s.presentation);
  res.simplification_capped = s.capped;
  return res;
}

/// Presentation of a finite group on chosen generating elements: one relator
/// w_q s w_{qs}^-1 per element q and generator s, where w_q are shortlex
/// words from a breadth-first search of the Cayley graph.
inline Presentation cayley_presentation(const FiniteGroup& g, const std::vector<std::size_t>& generators) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < generators.size(); ++i)
    names.push_back("s" + std::to_string(i));
  Presentation p(names);
  std::vector<std::optional<Word>> word(g.order());
  word[g.identity()] = Word{};
  std::deque<std::size_t> queue{g.identity()};
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      auto r = g.mul(q, generators[i]);
      if (!word[r]) {
        Word w = *word[q];
        w.push_back({static_cast<std::uint32_t>(i), 1});
        word[r] = std::move(w);
        queue.push_back(r);
      }
    }
  }
  for (std::size_t q = 0; q < g.order(); ++q) {
    if (!word[q])
      throw PreconditionError("elements do not generate the group");
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Word r = *word[q];
      r.push_back({static_cast<std::uint32_t>(i), 1});
      Word back = inverse(*word[g.mul(q, generators[i])]);
      r.insert(r.end(), back.begin(), back.end());
      if (!cyclic_reduce(r).empty())
        p.add_relator(r);
    }
  }
  return p;
}

struct ArmstrongResult {
  /// Elements with a fixed point in |X| (a fixed vertex after regularization).
  std::vector<std::size_t> with_fixed_points;
  ElementSet normal_closure;
  FiniteGroup quotient;
  Presentation presentation;
};

/// G modulo the normal subgroup generated by elements that fix a point.
inline ArmstrongResult armstrong_quotient(const FiniteAction& a, std::size_t budget = kDefaultRegularityBudget) {
  FiniteAction reg = regularize(a, budget);
  ArmstrongResult res;
  for (std::size_t g = 0; g < reg.order(); ++g)
    if (!fixed_subcomplex(reg, g).complex.empty())
      res.with_fixed_points.push_back(g);
  res.normal_closure = reg.group().normal_closure(res.with_fixed_points);
  auto [quotient, coset] = reg.group().quotient(res.normal_closure);
  res.quotient = quotient;
  std::vector<std::size_t> images;
  for (auto s : reg.generators())
    images.push_back(coset[s]);
  res.presentation = tietze_simplify(cayley_presentation(res.quotient, images)).presentation;
  return res;
}

struct ProxyEntry {
  std::string name;
  std::string left;
  std::string right;
  bool match = false;
};

struct ProxyReport {
  Fingerprint left;
  Fingerprint right;
  std::vector<ProxyEntry> entries;

  bool all_match() const {
    return std::all_of(entries.begin(), entries.end(), [](const ProxyEntry& e) { return e.match; });
  }
};

/// Compares two presentations entry by entry on the fingerprint panel.
inline ProxyReport compare_fingerprints(const Fingerprint& l, const Fingerprint& r) {
  ProxyReport rep{l, r, {}};
  rep.entries.push_back({"H1", l.abelian.to_string(), r.abelian.to_string(), l.abelian == r.abelian});
  const std::size_t n = std::max(l.hom_counts.size(), r.hom_counts.size());
  for (std::size_t i = 0; i < n; ++i) {
    ProxyEntry e;
    e.name = i < l.hom_counts.size() ? l.hom_counts[i].first : r.hom_counts[i].first;
    e.left = i < l.hom_counts.size() ? l.hom_counts[i].second.str() : "-";
    e.right = i < r.hom_counts.size() ? r.hom_counts[i].second.str() : "-";
    e.match = i < l.hom_counts.size() && i < r.hom_counts.size() && l.hom_counts[i] == r.hom_counts[i];
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

/// Finite-panel stand-in for equality of profinite completions: two groups
/// have isomorphic profinite completions exactly when they have the same
/// number of homomorphisms into every finite group.
inline ProxyReport profinite_proxy_equal(const Presentation& p, const Presentation& q,
                                         const std::vector<NamedGroup>& panel, const FingerprintOptions& opt = {}) {
  return compare_fingerprints(fingerprint(p, panel, opt), fingerprint(q, panel, opt));
}

} // namespace ghostpi
