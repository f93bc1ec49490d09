#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghostpi/presentation.hpp"

namespace ghostpi {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero Smith invariants d_1 | d_2 | ... | d_k (all positive) of an integer
/// matrix. Zero rows/columns contribute nothing, so the zero matrix yields ().
///
/// Pivot is always the entry of least nonzero absolute value in the active
/// block, which keeps intermediate growth small.
inline std::vector<BigInt> smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols)
      throw InvariantError("ragged integer matrix");

  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // least |a_ij| over the active block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows)
      break;

    for (;;) {
      std::swap(a[t], a[pi]);
      for (auto& r : a)
        std::swap(r[t], r[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0)
          continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] -= q * a[t][j];
        if (a[i][t] != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0)
          continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] -= q * a[i][t];
        if (a[t][j] != 0)
          clean = false;
      }

      if (!clean) {
        // a smaller remainder is left in row t or column t; pivot on it
        pi = t;
        pj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[pi][pj])) {
            pi = i;
            pj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[pi][pj])) {
            pi = t;
            pj = j;
          }
        continue;
      }

      // row t and column t are clear; enforce divisibility of the remaining block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      for (std::size_t j = t; j < cols; ++j)
        a[t][j] += a[bad][j];
      pi = t;
      pj = t;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

/// Finitely generated abelian group Z^free_rank + sum Z/d_i with d_1 | d_2 | ...
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

  std::string to_string() const {
    std::string out;
    for (const auto& d : torsion)
      out += (out.empty() ? "" : " + ") + ("Z/" + d.str());
    if (free_rank > 0)
      out += (out.empty() ? "" : " + ") + (free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank));
    return out.empty() ? "0" : out;
  }
};

/// Exponent-sum matrix: one row per relator, one column per generator.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  m.reserve(p.relators().size());
  for (const auto& r : p.relators()) {
    std::vector<BigInt> row(p.generator_count());
    for (Letter l : r)
      row[l.gen] += l.exp;
    m.push_back(std::move(row));
  }
  return m;
}

inline AbelianInvariants abelianization(const Presentation& p) {
  auto invariants = smith_normal_form(relation_matrix(p));
  AbelianInvariants out;
  out.free_rank = p.generator_count() - invariants.size();
  for (auto& d : invariants)
    if (d > 1)
      out.torsion.push_back(d);
  return out;
}

/// True when `quotient` is isomorphic to a quotient of `group`.
///
/// Both groups are written as chains of cyclic factors ordered from the
/// largest (free factors count as 0, divisible by everything) and padded with
/// trivial factors; the test is factor-wise divisibility.
inline bool is_quotient_of(const AbelianInvariants& quotient, const AbelianInvariants& group) {
  auto chain = [](const AbelianInvariants& a) {
    std::vector<BigInt> c(a.free_rank, BigInt(0));
    for (auto it = a.torsion.rbegin(); it != a.torsion.rend(); ++it)
      c.push_back(*it);
    return c;
  };
  auto q = chain(quotient), g = chain(group);
  if (q.size() > g.size())
    return false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (g[i] == 0)
      continue;
    if (q[i] == 0 || g[i] % q[i] != 0)
      return false;
  }
  return true;
}

} // namespace ghostpi
