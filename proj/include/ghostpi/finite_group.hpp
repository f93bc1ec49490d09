#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/error.hpp"

namespace ghostpi {

/// Sorted list of element indices.
using ElementSet = std::vector<std::size_t>;

/// A finite group stored as its full multiplication table.
class FiniteGroup {
public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<std::size_t>>{{0}}) {}

  /// Validates identity, inverses and associativity before accepting the table.
  explicit FiniteGroup(const std::vector<std::vector<std::size_t>>& table) {
    n_ = table.size();
    if (n_ == 0)
      throw InvariantError("group table must be non-empty");
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (table[i].size() != n_)
        throw InvariantError("group table must be square");
      for (std::size_t j = 0; j < n_; ++j) {
        if (table[i][j] >= n_)
          throw InvariantError("group table entry out of range");
        table_[i * n_ + j] = static_cast<std::uint32_t>(table[i][j]);
      }
    }
    finish_and_verify();
  }

  std::size_t order() const { return n_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }

  std::vector<std::vector<std::size_t>> table() const {
    std::vector<std::vector<std::size_t>> t(n_, std::vector<std::size_t>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        t[i][j] = mul(i, j);
    return t;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a))
      ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  ElementSet trivial_subgroup() const { return {identity_}; }
  ElementSet whole() const {
    ElementSet s(n_);
    std::iota(s.begin(), s.end(), std::size_t{0});
    return s;
  }

  /// Subgroup generated by `seeds` (closure under right multiplication suffices
  /// in a finite group).
  ElementSet generated(const std::vector<std::size_t>& seeds) const {
    std::vector<char> in(n_, 0);
    std::vector<std::size_t> gens;
    for (auto s : seeds)
      if (s != identity_ && !in[s]) {
        in[s] = 1;
        gens.push_back(s);
      }
    std::fill(in.begin(), in.end(), 0);
    std::deque<std::size_t> queue{identity_};
    in[identity_] = 1;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto g : gens) {
        auto y = mul(x, g);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
    ElementSet out;
    for (std::size_t i = 0; i < n_; ++i)
      if (in[i])
        out.push_back(i);
    return out;
  }

  bool is_subgroup(const ElementSet& s) const {
    if (!std::binary_search(s.begin(), s.end(), identity_))
      return false;
    for (auto a : s) {
      if (!std::binary_search(s.begin(), s.end(), inv(a)))
        return false;
      for (auto b : s)
        if (!std::binary_search(s.begin(), s.end(), mul(a, b)))
          return false;
    }
    return true;
  }

  ElementSet conjugate(const ElementSet& s, std::size_t g) const {
    ElementSet out;
    out.reserve(s.size());
    for (auto x : s)
      out.push_back(conj(g, x));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_normal(const ElementSet& s) const {
    for (std::size_t g = 0; g < n_; ++g)
      if (conjugate(s, g) != s)
        return false;
    return true;
  }

  /// Smallest normal subgroup containing `seeds`.
  ElementSet normal_closure(const std::vector<std::size_t>& seeds) const {
    std::vector<std::size_t> conjugates;
    for (auto s : seeds)
      for (std::size_t g = 0; g < n_; ++g)
        conjugates.push_back(conj(g, s));
    return generated(conjugates);
  }

  std::vector<std::size_t> centralizer(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < n_; ++g)
      if (mul(g, x) == mul(x, g))
        out.push_back(g);
    return out;
  }

  /// Quotient by a normal subgroup. Cosets are numbered by their least element;
  /// the returned map sends each element to its coset index.
  std::pair<FiniteGroup, std::vector<std::size_t>> quotient(const ElementSet& normal) const {
    if (!is_subgroup(normal) || !is_normal(normal))
      throw PreconditionError("quotient requires a normal subgroup");
    std::vector<std::size_t> coset(n_, n_);
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < n_; ++g) {
      if (coset[g] != n_)
        continue;
      for (auto h : normal)
        coset[mul(g, h)] = reps.size();
      reps.push_back(g);
    }
    std::vector<std::vector<std::size_t>> t(reps.size(), std::vector<std::size_t>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        t[i][j] = coset[mul(reps[i], reps[j])];
    return {FiniteGroup(t), std::move(coset)};
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

private:
  struct Unchecked {};
  FiniteGroup(Unchecked, std::size_t n, std::vector<std::uint32_t> table) : n_(n), table_(std::move(table)) {
    identity_ = 0;
    inverse_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(a, b) == identity_) {
          inverse_[a] = b;
          break;
        }
  }

  template <class T, class Mul>
  friend struct Closure;

  void finish_and_verify() {
    identity_ = n_;
    for (std::size_t e = 0; e < n_ && identity_ == n_; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n_ && ok; ++a)
        ok = mul(e, a) == a && mul(a, e) == a;
      if (ok)
        identity_ = e;
    }
    if (identity_ == n_)
      throw InvariantError("group table has no identity");
    inverse_.assign(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      if (inverse_[a] == n_)
        throw InvariantError("element " + std::to_string(a) + " has no inverse");
    }
    // Light's test: associativity on triples whose middle entry lies in a
    // generating set implies associativity everywhere.
    std::vector<std::size_t> gens;
    std::vector<char> reached(n_, 0);
    reached[identity_] = 1;
    for (std::size_t cand = 0; cand < n_; ++cand) {
      if (reached[cand])
        continue;
      gens.push_back(cand);
      std::deque<std::size_t> queue;
      for (std::size_t x = 0; x < n_; ++x)
        if (reached[x])
          queue.push_back(x);
      reached[cand] = 1;
      queue.push_back(cand);
      while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto g : gens) {
          auto y = mul(x, g);
          if (!reached[y]) {
            reached[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
    for (auto s : gens)
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
          if (mul(mul(x, s), y) != mul(x, mul(s, y)))
            throw InvariantError("group table is not associative");
  }

  std::size_t n_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
};

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  return FiniteGroup(t);
}

/// Closure of a generating set under an associative product, breadth first.
/// Element 0 is the identity; `generator_indices` locates each generator.
template <class T, class Mul>
struct Closure {
  FiniteGroup group;
  std::vector<T> elements;
  std::vector<std::size_t> generator_indices;

  Closure(const std::vector<T>& generators, const T& identity, Mul mul, std::size_t cap) {
    std::map<T, std::size_t> index;
    elements.push_back(identity);
    index.emplace(identity, 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto& g : generators) {
        T y = mul(elements[head], g);
        if (index.emplace(y, elements.size()).second) {
          elements.push_back(std::move(y));
          if (elements.size() > cap)
            throw CapError("group closure exceeds " + std::to_string(cap) + " elements");
        }
      }
    }
    for (const auto& g : generators)
      generator_indices.push_back(index.at(g));
    const std::size_t n = elements.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table[i * n + j] = static_cast<std::uint32_t>(index.at(mul(elements[i], elements[j])));
    group = FiniteGroup(FiniteGroup::Unchecked{}, n, std::move(table));
  }
};

using Permutation = std::vector<std::uint32_t>;

/// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    r[i] = p[q[i]];
  return r;
}

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || seen[x])
      return false;
    seen[x] = 1;
  }
  return true;
}

struct ComposePermutations {
  Permutation operator()(const Permutation& p, const Permutation& q) const { return compose(p, q); }
};

using PermutationClosure = Closure<Permutation, ComposePermutations>;

inline PermutationClosure close_permutations(const std::vector<Permutation>& gens, std::size_t degree,
                                             std::size_t cap = 4096) {
  for (const auto& g : gens)
    if (g.size() != degree || !is_permutation(g))
      throw InvariantError("generator is not a permutation of degree " + std::to_string(degree));
  return PermutationClosure(gens, identity_permutation(degree), ComposePermutations{}, cap);
}

} // namespace ghostpi
