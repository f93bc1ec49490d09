#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "ghostpi/fingerprint.hpp"
#include "ghostpi/ghost.hpp"
#include "ghostpi/oracle.hpp"

namespace ghostpi {

struct ComparisonReport {
  Fingerprint formula;
  Fingerprint oracle;
  std::vector<ProxyEntry> entries;
  bool all_match = false;
  double formula_ms = 0;
  double oracle_ms = 0;
  std::size_t formula_relators_raw = 0;
  std::size_t formula_relators_simplified = 0;
  std::size_t oracle_relators_raw = 0;
  std::size_t oracle_relators_simplified = 0;
  std::size_t lambda_relators = 0;
  std::size_t coinvariant_relators = 0;
  VertexId basepoint = 0;
  bool coned = false;
  int subdivisions = 0;
};

/// Runs the fixed-point formula and the orbit-complex oracle on the same space
/// (the same cone decision is applied to both) and compares fingerprints.
inline ComparisonReport compare_formula_vs_oracle(const FiniteAction& a, std::optional<VertexId> x,
                                                  const std::vector<NamedGroup>& panel,
                                                  const GhostOptions& ghost_opt = {},
                                                  const FingerprintOptions& fp_opt = {}) {
  using clock = std::chrono::steady_clock;
  ComparisonReport rep;

  auto t0 = clock::now();
  GhostResult g = pi1_of_quotient(a, x, ghost_opt);
  rep.formula = fingerprint(g.presentation, panel, fp_opt);
  auto t1 = clock::now();

  BasedAction based = with_fixed_basepoint(a, x, ghost_opt.force_cone, ghost_opt.regularity_budget);
  Presentation oracle = oracle_pi1_quotient(based.action, based.basepoint, ghost_opt.regularity_budget);
  Presentation oracle_simple = tietze_simplify(oracle, fp_opt.simplify).presentation;
  rep.oracle = fingerprint(oracle_simple, panel, fp_opt);
  auto t2 = clock::now();

  auto cmp = compare_fingerprints(rep.formula, rep.oracle);
  rep.all_match = cmp.all_match();
  rep.entries = std::move(cmp.entries);
  rep.formula_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rep.oracle_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  rep.formula_relators_raw = g.raw.relators().size();
  rep.formula_relators_simplified = g.presentation.relators().size();
  rep.oracle_relators_raw = oracle.relators().size();
  rep.oracle_relators_simplified = oracle_simple.relators().size();
  rep.lambda_relators = g.count(RelatorOrigin::Kind::lambda);
  rep.coinvariant_relators = g.count(RelatorOrigin::Kind::coinvariant);
  rep.basepoint = g.basepoint;
  rep.coned = g.coned;
  rep.subdivisions = g.subdivisions;
  return rep;
}

} // namespace ghostpi
