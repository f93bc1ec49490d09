#pragma once

// Ground truth for quotient fundamental groups, computed from the orbit
// complex alone. Nothing here may depend on ghost.hpp.

#include "ghostpi/action.hpp"
#include "ghostpi/complex.hpp"
#include "ghostpi/presentation.hpp"

namespace ghostpi {

/// Edge-path presentation of the orbit complex of the regularized action,
/// rooted at the image of `basepoint`.
///
/// The orbit complex of a regular action realizes the coarse quotient |X|/G
/// (standard theorem on regular simplicial actions), so this presentation
/// is pi_1(X/G) computed without any fixed-point data.
inline Presentation oracle_pi1_quotient(const FiniteAction& a, VertexId basepoint,
                                        std::size_t budget = kDefaultRegularityBudget) {
  if (!is_connected(a.complex()))
    throw PreconditionError("quotient fundamental group needs a connected complex");
  if (!a.complex().has_vertex(basepoint))
    throw PreconditionError("basepoint " + std::to_string(basepoint) + " is not a vertex");
  QuotientData q = quotient_complex(a, budget);
  return edge_path_presentation(q.complex, spanning_tree(q.complex, q.projection.at(basepoint)));
}

} // namespace ghostpi
