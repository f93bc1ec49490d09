#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ghostpi/abelian.hpp"
#include "ghostpi/finite_group.hpp"
#include "ghostpi/presentation.hpp"

namespace ghostpi {

struct HomCaps {
  /// Generators that occur in some relator; free generators are not limited.
  std::size_t max_generators = 4;
  std::size_t max_target_order = 24;
};

/// Exact number of homomorphisms P -> target.
///
/// Generators absent from every relator contribute a factor |T| each. The
/// rest are assigned by backtracking, and each relator is evaluated as soon as
/// all of its generators carry an image.
inline BigInt count_homs(const Presentation& p, const FiniteGroup& target, const HomCaps& caps = {}) {
  if (target.order() > caps.max_target_order)
    throw CapError("target group order " + std::to_string(target.order()) + " exceeds cap " +
                   std::to_string(caps.max_target_order));

  const std::size_t n = p.generator_count();
  std::vector<char> constrained(n, 0);
  for (const auto& r : p.relators())
    for (Letter l : r)
      constrained[l.gen] = 1;

  // constrained generators ordered by descending relator frequency
  std::vector<std::size_t> freq(n, 0);
  for (const auto& r : p.relators()) {
    std::vector<char> seen(n, 0);
    for (Letter l : r)
      if (!seen[l.gen]) {
        seen[l.gen] = 1;
        ++freq[l.gen];
      }
  }
  std::vector<std::size_t> order;
  for (std::size_t g = 0; g < n; ++g)
    if (constrained[g])
      order.push_back(g);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return freq[a] > freq[b]; });
  if (order.size() > caps.max_generators)
    throw CapError(std::to_string(order.size()) + " constrained generators exceed hom-count cap " +
                   std::to_string(caps.max_generators));

  std::vector<std::size_t> position(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    position[order[i]] = i;
  // relators bucketed by the depth at which they become fully assigned
  std::vector<std::vector<const Word*>> ready(order.size());
  for (const auto& r : p.relators()) {
    if (r.empty())
      continue;
    std::size_t depth = 0;
    for (Letter l : r)
      depth = std::max(depth, position[l.gen]);
    ready[depth].push_back(&r);
  }

  std::vector<std::size_t> image(n, target.identity());
  std::uint64_t count = 0;
  auto holds = [&](const Word& w) {
    std::size_t x = target.identity();
    for (Letter l : w)
      x = target.mul(x, l.exp > 0 ? image[l.gen] : target.inv(image[l.gen]));
    return x == target.identity();
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      ++count;
      return;
    }
    for (std::size_t t = 0; t < target.order(); ++t) {
      image[order[depth]] = t;
      bool ok = true;
      for (const Word* w : ready[depth])
        if (!holds(*w)) {
          ok = false;
          break;
        }
      if (ok)
        self(self, depth + 1);
    }
  };
  search(search, 0);

  BigInt total = count;
  for (std::size_t g = 0; g < n; ++g)
    if (!constrained[g])
      total *= target.order();
  return total;
}

} // namespace ghostpi
