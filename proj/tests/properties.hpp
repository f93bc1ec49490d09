#pragma once

// Seeded invariance properties. Each returns the list of violations found.

#include <string>
#include <vector>

#include "support.hpp"

namespace properties {

using namespace ghostpi;
using Failures = std::vector<std::string>;

inline const std::vector<NamedGroup>& panel() {
  static const auto p = groups::panel_from_names(groups::default_panel_names());
  return p;
}

inline Fingerprint formula(const FiniteAction& a, std::optional<VertexId> x, const GhostOptions& opt = {}) {
  return fingerprint(pi1_of_quotient(a, x, opt).presentation, panel());
}

/// Same answer from every globally fixed vertex, a random vertex and no basepoint.
inline Failures basepoint_independence(std::uint64_t seed) {
  Failures out;
  std::mt19937_64 rng(seed);
  for (const auto& spec : build::reference_actions()) {
    auto a = spec.action();
    const auto& vs = a.complex().vertices();
    const Fingerprint ref = formula(a, std::nullopt);
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    std::vector<VertexId> tries{vs[pick(rng)]};
    for (auto v : vs)
      if (a.globally_fixed(v))
        tries.push_back(v);
    for (auto v : tries)
      if (formula(a, v) != ref)
        out.push_back(spec.name + ": basepoint " + std::to_string(v));
  }
  return out;
}

/// Coning at a globally fixed basepoint changes nothing.
inline Failures cone_consistency(std::uint64_t seed) {
  Failures out;
  std::mt19937_64 rng(seed);
  for (const auto& spec : build::reference_actions()) {
    auto a = spec.action();
    std::vector<VertexId> fixed;
    for (auto v : a.complex().vertices())
      if (a.globally_fixed(v))
        fixed.push_back(v);
    if (fixed.empty())
      continue;
    std::uniform_int_distribution<std::size_t> pick(0, fixed.size() - 1);
    const VertexId x = fixed[pick(rng)];
    GhostOptions cone;
    cone.force_cone = true;
    auto plain = pi1_of_quotient(a, x);
    auto coned = pi1_of_quotient(a, x, cone);
    if (!coned.coned || plain.coned)
      out.push_back(spec.name + ": cone flag");
    if (fingerprint(plain.presentation, panel()) != fingerprint(coned.presentation, panel()))
      out.push_back(spec.name + ": coned at " + std::to_string(x));
  }
  return out;
}

/// One lambda relator per centralizer orbit of components gives the same group.
inline Failures center2_invariance(std::uint64_t seed) {
  Failures out;
  std::mt19937_64 rng(seed);
  for (const auto& spec : build::reference_actions()) {
    GhostOptions c2;
    c2.center2 = true;
    c2.tree_seed = rng();
    GhostOptions all;
    all.tree_seed = c2.tree_seed;
    auto full = pi1_of_quotient(spec.action(), spec.basepoint, all);
    auto reduced = pi1_of_quotient(spec.action(), spec.basepoint, c2);
    if (reduced.count(RelatorOrigin::Kind::lambda) > full.count(RelatorOrigin::Kind::lambda))
      out.push_back(spec.name + ": center2 added lambda relators");
    if (fingerprint(full.presentation, panel()) != fingerprint(reduced.presentation, panel()))
      out.push_back(spec.name + ": center2 changed the fingerprint");
  }
  return out;
}

/// Random spanning trees give the same group as the breadth-first tree.
inline Failures spanning_tree_invariance(std::uint64_t seed) {
  Failures out;
  std::mt19937_64 rng(seed);
  for (const auto& spec : build::reference_actions()) {
    auto a = spec.action();
    GhostOptions opt;
    opt.tree_seed = rng();
    if (formula(a, spec.basepoint) != formula(a, spec.basepoint, opt))
      out.push_back(spec.name + ": tree seed " + std::to_string(*opt.tree_seed));
  }
  return out;
}

/// Renaming vertices (to sparse ids) does not change the quotient.
inline Failures relabeling_invariance(std::uint64_t seed) {
  Failures out;
  std::mt19937_64 rng(seed);
  for (const auto& spec : build::reference_actions()) {
    const auto& vs = spec.complex.vertices();
    std::vector<VertexId> ids(3 * vs.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::map<VertexId, VertexId> sigma;
    for (std::size_t i = 0; i < vs.size(); ++i)
      sigma[vs[i]] = ids[i];
    std::vector<Simplex> simplices;
    for (auto s : spec.complex.simplices()) {
      for (auto& v : s)
        v = sigma.at(v);
      simplices.push_back(s);
    }
    auto x = SimplicialComplex::from_simplices(simplices).complex;
    std::vector<VertexMap> gens;
    for (const auto& m : spec.generators) {
      VertexMap g;
      for (const auto& [from, to] : m)
        g[sigma.at(from)] = sigma.at(to);
      gens.push_back(g);
    }
    std::optional<VertexId> bp;
    if (spec.basepoint)
      bp = sigma.at(*spec.basepoint);
    if (formula(FiniteAction(x, gens), bp) != formula(spec.action(), spec.basepoint))
      out.push_back(spec.name + ": relabeled");
  }
  return out;
}

/// Simplification keeps the abelianization and every hom count, and hom
/// counts into cyclic groups follow from the abelianization.
inline Failures tietze_compatibility(std::uint64_t seed) {
  Failures out;
  std::mt19937_64 rng(seed);
  const auto targets = groups::panel_from_names({"Z2", "Z3", "Z4", "S3", "Q8"});
  for (int i = 0; i < 40; ++i) {
    auto p = support::random_presentation(rng, 3, 1 + i % 4, 7);
    auto s = tietze_simplify(p).presentation;
    if (s.generator_count() > p.generator_count() ||
        (s.generator_count() == p.generator_count() && s.total_length() > p.total_length()))
      out.push_back("tietze grew presentation " + p.to_string());
    const auto ab = abelianization(p);
    if (abelianization(s) != ab)
      out.push_back("abelianization changed for " + p.to_string());
    for (const auto& t : targets) {
      const BigInt brute = support::brute_force_homs(p, t.group);
      if (count_homs(s, t.group) != brute)
        out.push_back("hom count into " + t.name + " changed for " + p.to_string());
      if (t.group.is_abelian() && t.name.front() == 'Z') {
        const std::size_t n = t.group.order();
        BigInt expected = 1;
        for (std::size_t k = 0; k < ab.free_rank; ++k)
          expected *= n;
        for (const auto& d : ab.torsion)
          expected *= boost::multiprecision::gcd(d, BigInt(n));
        if (brute != expected)
          out.push_back("cyclic hom count into " + t.name + " disagrees with H1 for " + p.to_string());
      }
    }
  }
  return out;
}

/// Smith normal form ignores row/column permutations and sign changes, and
/// agrees with the determinant-divisor oracle.
inline Failures snf_permutation_invariance(std::uint64_t seed) {
  Failures out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 40; ++i) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    IntMatrix m(rows, std::vector<BigInt>(cols));
    for (auto& r : m)
      for (auto& x : r)
        x = entry(rng);
    const auto ref = smith_normal_form(m);
    if (ref != support::invariant_factors_by_minors(m))
      out.push_back("smith normal form disagrees with minors");
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix q(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      const bool neg = flip(rng);
      for (std::size_t c = 0; c < cols; ++c)
        q[r][c] = neg ? BigInt(-m[rp[r]][cp[c]]) : m[rp[r]][cp[c]];
    }
    if (smith_normal_form(q) != ref)
      out.push_back("smith normal form changed under permutation");
  }
  return out;
}

struct Property {
  const char* name;
  Failures (*check)(std::uint64_t);
};

inline const std::vector<Property>& all() {
  static const std::vector<Property> list{
      {"basepoint independence", basepoint_independence},
      {"cone consistency", cone_consistency},
      {"center2 invariance", center2_invariance},
      {"spanning-tree invariance", spanning_tree_invariance},
      {"relabeling invariance", relabeling_invariance},
      {"tietze/abelianization/hom-count compatibility", tietze_compatibility},
      {"SNF permutation invariance", snf_permutation_invariance},
  };
  return list;
}

} // namespace properties
