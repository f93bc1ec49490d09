#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ghostpi {

/// One letter of a group word: a generator index raised to +1 or -1.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t exp = 1;

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-exp)}; }
  constexpr bool cancels(Letter other) const { return gen == other.gen && exp == -other.exp; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    if (auto c = a.gen <=> b.gen; c != 0)
      return c;
    return a.exp <=> b.exp;
  }
};

using Word = std::vector<Letter>;

inline Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

/// Removes adjacent cancelling pairs; single pass with a stack.
inline Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back().cancels(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

/// Free reduction followed by stripping cancelling first/last letters.
inline Word cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].cancels(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

/// Lexicographically least rotation (Booth-free quadratic scan; relators are short).
inline Word least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n <= 1)
    return Word(w.begin(), w.end());
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      Letter a = w[(s + k) % n], b = w[(best + k) % n];
      if (a == b)
        continue;
      if (a < b)
        best = s;
      break;
    }
  }
  Word out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(w[(best + k) % n]);
  return out;
}

/// Canonical stored form of a relator: cyclically reduced, least rotation.
inline Word normalize_relator(std::span<const Letter> w) { return least_rotation(cyclic_reduce(w)); }

/// Key identifying a relator up to rotation and inversion (same normal closure).
inline Word relator_class_key(std::span<const Letter> w) {
  Word a = normalize_relator(w);
  Word b = normalize_relator(inverse(a));
  return std::min(a, b);
}

inline std::string format_word(std::span<const Letter> w, const std::vector<std::string>& names) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += w[i].gen < names.size() ? names[w[i].gen] : "g" + std::to_string(w[i].gen);
    if (w[i].exp < 0)
      out += "^-1";
  }
  return out;
}

inline std::size_t occurrences(std::span<const Letter> w, std::uint32_t gen) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [gen](Letter l) { return l.gen == gen; }));
}

} // namespace ghostpi
