#pragma once

#include <array>
#include <cstddef>
#include <cstdlib>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ghostpi/error.hpp"
#include "ghostpi/finite_group.hpp"

namespace ghostpi {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

namespace groups {

inline FiniteGroup cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = (i + j) % n;
  return FiniteGroup(t);
}

/// Cyclic extension <a, x | a^m, x^n = a^s, x a x^-1 = a^r>, elements a^i x^j.
/// Requires r^n = 1 and r*s = s (mod m); the table is verified on construction.
inline FiniteGroup metacyclic(std::size_t m, std::size_t n, long r, long s) {
  const long mm = static_cast<long>(m);
  auto mod = [mm](long v) { return ((v % mm) + mm) % mm; };
  std::vector<long> rpow(n + 1, 1);
  for (std::size_t j = 1; j <= n; ++j)
    rpow[j] = mod(rpow[j - 1] * r);
  if (rpow[n] != mod(1) || mod(r * s) != mod(s))
    throw InvariantError("metacyclic parameters do not define a group");
  const std::size_t order = m * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      long i = static_cast<long>(a / n), j = static_cast<long>(a % n);
      long k = static_cast<long>(b / n), l = static_cast<long>(b % n);
      long ai = i + k * rpow[static_cast<std::size_t>(j)];
      long xj = j + l;
      if (xj >= static_cast<long>(n)) {
        ai += s;
        xj -= static_cast<long>(n);
      }
      t[a][b] = static_cast<std::size_t>(mod(ai)) * n + static_cast<std::size_t>(xj);
    }
  return FiniteGroup(t);
}

inline FiniteGroup dihedral(std::size_t k) { return metacyclic(k, 2, -1, 0); }
inline FiniteGroup dicyclic(std::size_t k) { return metacyclic(2 * k, 2, -1, static_cast<long>(k)); }

inline FiniteGroup from_permutations(const std::vector<Permutation>& gens, std::size_t degree) {
  return close_permutations(gens, degree).group;
}

inline FiniteGroup symmetric(std::size_t n) {
  if (n <= 1)
    return cyclic(1);
  Permutation cycle(n), swap = identity_permutation(n);
  for (std::size_t i = 0; i < n; ++i)
    cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  std::swap(swap[0], swap[1]);
  return from_permutations({cycle, swap}, n);
}

inline FiniteGroup alternating4() { return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4); }

/// SL(2,3) as 2x2 matrices over F_3.
inline FiniteGroup sl23() {
  using M = std::array<int, 4>;
  auto mul = [](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3, (x[2] * y[0] + x[3] * y[2]) % 3,
             (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  Closure<M, decltype(mul)> c({M{1, 1, 0, 1}, M{1, 0, 1, 1}}, M{1, 0, 0, 1}, mul, 64);
  return FiniteGroup(c.group.table());
}

/// (Z4 x Z2) x| Z2 where the outer generator acts by (i, j) -> twist(i, j).
template <class Twist>
FiniteGroup z4z2_by_z2(Twist twist) {
  using E = std::tuple<int, int, int>;
  auto mul = [twist](const E& x, const E& y) {
    auto [i1, j1, k1] = x;
    auto [i2, j2, k2] = y;
    if (k1)
      std::tie(i2, j2) = twist(i2, j2);
    return E{(i1 + i2) % 4, (j1 + j2) % 2, (k1 + k2) % 2};
  };
  Closure<E, decltype(mul)> c({E{1, 0, 0}, E{0, 1, 0}, E{0, 0, 1}}, E{0, 0, 0}, mul, 64);
  return FiniteGroup(c.group.table());
}

/// Z3 x| D4 with D4 acting through the sign of its action on the square's
/// corners (kernel is the Klein four-group).
inline FiniteGroup z3_by_d4() {
  // points 0..3 carry D4, points 4..6 carry Z3
  return from_permutations({{0, 1, 2, 3, 5, 6, 4}, {1, 2, 3, 0, 4, 6, 5}, {2, 1, 0, 3, 4, 6, 5}}, 7);
}

/// Every group of order <= 24 up to isomorphism, ordered by order.
inline const std::vector<NamedGroup>& catalog() {
  static const std::vector<NamedGroup> all = [] {
    std::vector<NamedGroup> g;
    auto add = [&](std::string name, FiniteGroup grp) { g.push_back({std::move(name), std::move(grp)}); };
    auto Z = [](std::size_t n) { return cyclic(n); };
    auto x = [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); };
    add("1", Z(1));
    add("Z2", Z(2));
    add("Z3", Z(3));
    add("Z4", Z(4));
    add("Z2xZ2", x(Z(2), Z(2)));
    add("Z5", Z(5));
    add("Z6", Z(6));
    add("S3", symmetric(3));
    add("Z7", Z(7));
    add("Z8", Z(8));
    add("Z4xZ2", x(Z(4), Z(2)));
    add("Z2xZ2xZ2", x(x(Z(2), Z(2)), Z(2)));
    add("D4", dihedral(4));
    add("Q8", dicyclic(2));
    add("Z9", Z(9));
    add("Z3xZ3", x(Z(3), Z(3)));
    add("Z10", Z(10));
    add("D5", dihedral(5));
    add("Z11", Z(11));
    add("Z12", Z(12));
    add("Z6xZ2", x(Z(6), Z(2)));
    add("A4", alternating4());
    add("D6", dihedral(6));
    add("Dic3", dicyclic(3));
    add("Z13", Z(13));
    add("Z14", Z(14));
    add("D7", dihedral(7));
    add("Z15", Z(15));
    add("Z16", Z(16));
    add("Z8xZ2", x(Z(8), Z(2)));
    add("Z4xZ4", x(Z(4), Z(4)));
    add("Z4xZ2xZ2", x(x(Z(4), Z(2)), Z(2)));
    add("Z2^4", x(x(Z(2), Z(2)), x(Z(2), Z(2))));
    add("D8", dihedral(8));
    add("Q16", dicyclic(4));
    add("SD16", metacyclic(8, 2, 3, 0));
    add("M16", metacyclic(8, 2, 5, 0));
    add("Z4:Z4", metacyclic(4, 4, -1, 0));
    add("Z2xD4", x(Z(2), dihedral(4)));
    add("Z2xQ8", x(Z(2), dicyclic(2)));
    add("Z4oD4", z4z2_by_z2([](int i, int j) { return std::pair{(i + 2 * j) % 4, j}; }));
    add("(Z4xZ2):Z2", z4z2_by_z2([](int i, int j) { return std::pair{i, (j + i) % 2}; }));
    add("Z17", Z(17));
    add("Z18", Z(18));
    add("Z6xZ3", x(Z(6), Z(3)));
    add("D9", dihedral(9));
    add("Z3xS3", x(Z(3), symmetric(3)));
    add("(Z3xZ3):Z2", from_permutations({{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {0, 2, 1, 3, 5, 4}}, 6));
    add("Z19", Z(19));
    add("Z20", Z(20));
    add("Z10xZ2", x(Z(10), Z(2)));
    add("D10", dihedral(10));
    add("Dic5", dicyclic(5));
    add("F20", metacyclic(5, 4, 2, 0));
    add("Z21", Z(21));
    add("Z7:Z3", metacyclic(7, 3, 2, 0));
    add("Z22", Z(22));
    add("D11", dihedral(11));
    add("Z23", Z(23));
    add("Z24", Z(24));
    add("Z12xZ2", x(Z(12), Z(2)));
    add("Z6xZ2xZ2", x(x(Z(6), Z(2)), Z(2)));
    add("S4", symmetric(4));
    add("SL(2,3)", sl23());
    add("Z2xA4", x(Z(2), alternating4()));
    add("D12", dihedral(12));
    add("Dic6", dicyclic(6));
    add("Z3:Z8", metacyclic(3, 8, 2, 0));
    add("Z2xDic3", x(Z(2), dicyclic(3)));
    add("Z3:D4", z3_by_d4());
    add("Z4xS3", x(Z(4), symmetric(3)));
    add("Z2xZ2xS3", x(x(Z(2), Z(2)), symmetric(3)));
    add("Z3xD4", x(Z(3), dihedral(4)));
    add("Z3xQ8", x(Z(3), dicyclic(2)));
    return g;
  }();
  return all;
}

inline const FiniteGroup& by_name(const std::string& name) {
  for (const auto& g : catalog())
    if (g.name == name)
      return g.group;
  throw SchemaError("unknown group name '" + name + "'");
}

inline std::vector<std::string> default_panel_names() {
  return {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z5", "Z6", "D4", "Q8", "A4", "S4"};
}

/// Comma-separated group names, e.g. "Z2,S3,Q8".
inline std::vector<NamedGroup> panel_from_names(const std::vector<std::string>& names) {
  std::vector<NamedGroup> out;
  for (const auto& n : names)
    out.push_back({n, by_name(n)});
  return out;
}

inline std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

/// The eleven-group default panel; GHOSTPI_PANEL overrides it when set.
inline std::vector<NamedGroup> default_panel() {
  if (const char* env = std::getenv("GHOSTPI_PANEL"); env && *env)
    return panel_from_names(split_names(env));
  return panel_from_names(default_panel_names());
}

} // namespace groups
} // namespace ghostpi
