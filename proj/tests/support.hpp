#pragma once

// Test-side oracles. None of these call the library routine they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <ghostpi/ghostpi.hpp>

namespace support {

using ghostpi::BigInt;
using ghostpi::FiniteGroup;
using ghostpi::Presentation;
using ghostpi::Word;

inline constexpr std::uint64_t kSeeds[] = {11, 2024, 977};

// ------------------------------------------------------------ determinant divisors

inline BigInt det(std::vector<std::vector<BigInt>> m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n)
    return;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

/// Nonzero invariant factors d_k / d_{k-1}, d_k = gcd of k x k minors.
inline std::vector<BigInt> invariant_factors_by_minors(const ghostpi::IntMatrix& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<BigInt> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            m[i][j] = a[r[i]][c[j]];
        g = boost::multiprecision::gcd(g, abs(det(m)));
      }
    if (g == 0)
      break;
    d.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < d.size(); ++k)
    out.push_back(d[k] / d[k - 1]);
  return out;
}

// -------------------------------------------------------------- ranks mod p

/// Rank over F_p (p prime), or over Q when p == 0 (exact rational elimination).
inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  using R = boost::multiprecision::cpp_rational;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  if (p == 0) {
    std::vector<std::vector<R>> q(rows, std::vector<R>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        q[i][j] = m[i][j];
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t r = rank;
      while (r < rows && q[r][c] == 0)
        ++r;
      if (r == rows)
        continue;
      std::swap(q[r], q[rank]);
      for (std::size_t i = 0; i < rows; ++i)
        if (i != rank && q[i][c] != 0) {
          R f = q[i][c] / q[rank][c];
          for (std::size_t j = c; j < cols; ++j)
            q[i][j] -= f * q[rank][j];
        }
      ++rank;
    }
    return rank;
  }
  auto mod = [p](long long v) { return ((v % p) + p) % p; };
  auto inv = [&](long long v) {
    long long r = 1, b = mod(v), e = p - 2;
    while (e) {
      if (e & 1)
        r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m)
    for (auto& x : row)
      x = mod(x);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && m[r][c] == 0)
      ++r;
    if (r == rows)
      continue;
    std::swap(m[r], m[rank]);
    long long iv = inv(m[rank][c]);
    for (auto& x : m[rank])
      x = x * iv % p;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != rank && m[i][c] != 0) {
        long long f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j)
          m[i][j] = mod(m[i][j] - f * m[rank][j]);
      }
    ++rank;
  }
  return rank;
}

/// dim H1(X; F_p) (p = 0: Betti number) from the simplicial boundary matrices.
inline std::size_t h1_dimension(const ghostpi::SimplicialComplex& x, long long p) {
  const auto& vs = x.vertices();
  const auto& es = x.edges();
  const auto& ts = x.triangles();
  std::vector<std::vector<long long>> d1(vs.size(), std::vector<long long>(es.size(), 0));
  for (std::size_t e = 0; e < es.size(); ++e) {
    d1[x.vertex_index(es[e][0])][e] -= 1;
    d1[x.vertex_index(es[e][1])][e] += 1;
  }
  std::map<ghostpi::Edge, std::size_t> eidx;
  for (std::size_t e = 0; e < es.size(); ++e)
    eidx[es[e]] = e;
  std::vector<std::vector<long long>> d2(es.size(), std::vector<long long>(ts.size(), 0));
  for (std::size_t t = 0; t < ts.size(); ++t) {
    auto [a, b, c] = ts[t];
    d2[eidx.at({b, c})][t] += 1;
    d2[eidx.at({a, c})][t] -= 1;
    d2[eidx.at({a, b})][t] += 1;
  }
  return es.size() - rank_mod(d1, p) - (ts.empty() ? 0 : rank_mod(d2, p));
}

/// The abelian invariants must explain H1 over Q and over F_p for small primes.
inline bool abelian_matches_homology(const ghostpi::AbelianInvariants& a, const ghostpi::SimplicialComplex& x) {
  if (a.free_rank != h1_dimension(x, 0))
    return false;
  for (long long p : {2, 3, 5, 7}) {
    std::size_t divisible = 0;
    for (const auto& d : a.torsion)
      if (d % p == 0)
        ++divisible;
    if (a.free_rank + divisible != h1_dimension(x, p))
      return false;
  }
  return true;
}

// -------------------------------------------------------------- hom counts

inline std::size_t evaluate(const FiniteGroup& t, const Word& w, const std::vector<std::size_t>& images) {
  std::size_t acc = t.identity();
  for (auto l : w)
    acc = t.mul(acc, l.exp > 0 ? images[l.gen] : t.inv(images[l.gen]));
  return acc;
}

/// Every assignment of generator images, checked relator by relator.
inline std::uint64_t brute_force_homs(const Presentation& p, const FiniteGroup& t) {
  const std::size_t n = p.generator_count();
  std::vector<std::size_t> images(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators())
      if (evaluate(t, r, images) != t.identity()) {
        ok = false;
        break;
      }
    count += ok;
    std::size_t i = 0;
    while (i < n && ++images[i] == t.order())
      images[i++] = 0;
    if (i == n)
      return count;
  }
}

// ---------------------------------------------------------- random objects

inline Presentation random_presentation(std::mt19937_64& rng, std::size_t gens, std::size_t rels,
                                        std::size_t max_len) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens; ++i)
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  Presentation p(names);
  std::uniform_int_distribution<std::size_t> len(1, max_len), gen(0, gens - 1);
  std::bernoulli_distribution sign(0.5);
  for (std::size_t r = 0; r < rels; ++r) {
    Word w;
    for (std::size_t k = len(rng); k > 0; --k)
      w.push_back({static_cast<std::uint32_t>(gen(rng)), static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
    p.add_relator(w);
  }
  return p;
}

/// Connected graph of groups with at most `max_v` vertices and `max_e` edges.
/// Vertex groups are drawn from {1, Z2, Z3, Z2xZ2, Z}; each edge carries a
/// trivial or cyclic edge group sent to random words on both sides.
inline ghostpi::GraphOfGroups random_graph_of_groups(std::mt19937_64& rng, std::size_t max_v = 6,
                                                     std::size_t max_e = 9) {
  using ghostpi::Letter;
  ghostpi::GraphOfGroups g;
  std::uniform_int_distribution<std::size_t> nv(1, max_v);
  const std::size_t v = nv(rng);
  for (std::size_t i = 0; i < v; ++i)
    g.vertices.push_back(static_cast<int>(i));
  std::uniform_int_distribution<int> kind(0, 4);
  for (int i = 0; i < static_cast<int>(v); ++i) {
    Presentation p;
    switch (kind(rng)) {
    case 0: break;
    case 1:
      p = Presentation({"a"});
      p.add_relator(Word{{0, 1}, {0, 1}});
      break;
    case 2:
      p = Presentation({"a"});
      p.add_relator(Word{{0, 1}, {0, 1}, {0, 1}});
      break;
    case 3:
      p = Presentation({"a", "b"});
      p.add_relator(Word{{0, 1}, {0, 1}});
      p.add_relator(Word{{1, 1}, {1, 1}});
      p.add_relator(Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
      break;
    default: p = Presentation({"a"});
    }
    g.vertex_groups[i] = p;
  }
  // a random tree, then extra edges (loops allowed) up to the edge budget
  for (std::size_t i = 1; i < v; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    g.edges.push_back({static_cast<int>(parent(rng)), static_cast<int>(i)});
  }
  std::uniform_int_distribution<std::size_t> extra(0, max_e - g.edges.size());
  std::uniform_int_distribution<int> any(0, static_cast<int>(v) - 1);
  for (std::size_t k = extra(rng); k > 0; --k)
    g.edges.push_back({any(rng), any(rng)});
  auto random_word = [&](int vertex) {
    Word w;
    const std::size_t n = g.group_at(vertex).generator_count();
    if (n == 0)
      return w;
    std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(n - 1));
    std::uniform_int_distribution<int> len(0, 3);
    std::bernoulli_distribution sign(0.5);
    for (int i = len(rng); i > 0; --i)
      w.push_back(Letter{gen(rng), static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
    return w;
  };
  std::bernoulli_distribution cyclic_edge(0.6);
  for (auto [a, b] : g.edges) {
    std::vector<std::pair<Word, Word>> images;
    if (cyclic_edge(rng))
      images.push_back({random_word(a), random_word(b)});
    g.edge_groups.push_back(std::move(images));
  }
  return g;
}

// ------------------------------------------------------------ isomorphism

inline std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    out.push_back(g.element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Searches for an isomorphism by mapping a generating set and extending.
inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || order_profile(a) != order_profile(b))
    return false;
  // greedy generating set of a
  std::vector<std::size_t> gens;
  ghostpi::ElementSet span = a.trivial_subgroup();
  for (std::size_t x = 0; x < a.order() && span.size() < a.order(); ++x)
    if (!std::binary_search(span.begin(), span.end(), x)) {
      gens.push_back(x);
      span = a.generated(gens);
    }
  std::vector<std::size_t> images(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      // extend along words from the identity
      std::vector<long> phi(a.order(), -1);
      phi[a.identity()] = static_cast<long>(b.identity());
      std::vector<std::size_t> queue{a.identity()};
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (std::size_t i = 0; i < gens.size(); ++i) {
          std::size_t y = a.mul(queue[h], gens[i]);
          std::size_t img = b.mul(static_cast<std::size_t>(phi[queue[h]]), images[i]);
          if (phi[y] == -1) {
            phi[y] = static_cast<long>(img);
            queue.push_back(y);
          } else if (phi[y] != static_cast<long>(img)) {
            return false;
          }
        }
      std::set<long> hit(phi.begin(), phi.end());
      if (hit.size() != a.order())
        return false;
      for (std::size_t x = 0; x < a.order(); ++x)
        for (std::size_t y = 0; y < a.order(); ++y)
          if (phi[a.mul(x, y)] != static_cast<long>(b.mul(phi[x], phi[y])))
            return false;
      return true;
    }
    for (std::size_t c = 0; c < b.order(); ++c) {
      if (b.element_order(c) != a.element_order(gens[k]))
        continue;
      images[k] = c;
      if (search(k + 1))
        return true;
    }
    return false;
  };
  return search(0);
}

} // namespace support
