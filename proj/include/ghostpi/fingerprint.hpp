#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/abelian.hpp"
#include "ghostpi/group_catalog.hpp"
#include "ghostpi/homs.hpp"
#include "ghostpi/tietze.hpp"

namespace ghostpi {

/// Abelian invariants plus homomorphism counts into a panel of finite groups.
///
/// Equal fingerprints are necessary, not sufficient, for isomorphism. Equal
/// hom counts into every finite group would mean equal profinite completions;
/// a panel is a finite truncation of that test.
struct Fingerprint {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, BigInt>> hom_counts;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string to_string() const {
    std::string out = "H1 = " + abelian.to_string() + "; homs:";
    for (const auto& [name, count] : hom_counts)
      out += " " + name + "=" + count.str();
    return out;
  }
};

struct FingerprintOptions {
  HomCaps caps;
  SimplifyOptions simplify;
};

inline Fingerprint fingerprint(const Presentation& p, const std::vector<NamedGroup>& panel,
                               const FingerprintOptions& opt = {}) {
  Presentation simple = tietze_simplify(p, opt.simplify).presentation;
  Fingerprint f;
  f.abelian = abelianization(simple);
  for (const auto& target : panel)
    f.hom_counts.emplace_back(target.name, count_homs(simple, target.group, opt.caps));
  return f;
}

/// Fingerprint the free group of the given rank would have.
inline Fingerprint free_group_fingerprint(std::size_t rank, const std::vector<NamedGroup>& panel) {
  Fingerprint f;
  f.abelian.free_rank = rank;
  for (const auto& target : panel) {
    BigInt c = 1;
    for (std::size_t i = 0; i < rank; ++i)
      c *= target.group.order();
    f.hom_counts.emplace_back(target.name, c);
  }
  return f;
}

} // namespace ghostpi
