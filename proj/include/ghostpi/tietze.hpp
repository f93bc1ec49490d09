#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/presentation.hpp"

namespace ghostpi {

struct SimplifyOptions {
  std::size_t max_iterations = 100000;
  /// Eliminations that would push the total relator length past this are skipped.
  std::size_t max_total_length = 1u << 20;
  /// Upper bound on letter comparisons spent in one overlap-reduction sweep.
  std::size_t overlap_budget = 50'000'000;
};

struct Simplified {
  Presentation presentation;
  /// The iteration cap stopped simplification; the presentation is still
  /// isomorphic to the input, just not fully reduced.
  bool capped = false;
};

namespace detail {

struct WorkingPresentation {
  std::vector<std::string> names;
  std::vector<Word> relators;

  void tidy() {
    std::set<Word> seen;
    std::vector<Word> kept;
    for (auto& r : relators) {
      Word n = normalize_relator(r);
      if (n.empty())
        continue;
      if (seen.insert(relator_class_key(n)).second)
        kept.push_back(std::move(n));
    }
    std::stable_sort(kept.begin(), kept.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    relators = std::move(kept);
  }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators)
      n += r.size();
    return n;
  }

  /// Replaces generator `g` by `value` everywhere and deletes it.
  void eliminate(std::uint32_t g, const Word& value) {
    Word value_inv = inverse(value);
    for (auto& r : relators) {
      Word out;
      out.reserve(r.size());
      for (Letter l : r) {
        if (l.gen != g) {
          out.push_back(l);
          continue;
        }
        const Word& v = l.exp > 0 ? value : value_inv;
        out.insert(out.end(), v.begin(), v.end());
      }
      for (Letter& l : out)
        if (l.gen > g)
          --l.gen;
      r = free_reduce(out);
    }
    names.erase(names.begin() + g);
  }

  /// One generator elimination: a generator occurring exactly once in some
  /// relator is solved for and substituted. Shortest relators are tried first.
  bool eliminate_once(const SimplifyOptions& opt) {
    const std::size_t total = total_length();
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      const Word& r = relators[ri];
      std::vector<std::size_t> occ(names.size(), 0);
      for (Letter l : r)
        ++occ[l.gen];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const Letter l = r[pos];
        if (occ[l.gen] != 1)
          continue;
        std::size_t growth = 0;
        for (std::size_t s = 0; s < relators.size(); ++s)
          if (s != ri)
            growth += occurrences(relators[s], l.gen) * (r.size() - 1);
        if (total + growth > opt.max_total_length)
          continue;
        // r = l w cyclically, so l = w^-1
        Word w;
        for (std::size_t k = 1; k < r.size(); ++k)
          w.push_back(r[(pos + k) % r.size()]);
        Word value = l.exp > 0 ? inverse(w) : w;
        relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(ri));
        eliminate(l.gen, value);
        return true;
      }
    }
    return false;
  }

  /// Shortens a relator r using s = u v with |u| > |v|: an occurrence of u in
  /// r (cyclically) is replaced by v^-1.
  bool reduce_by_overlap(const SimplifyOptions& opt) {
    std::size_t spent = 0;
    for (std::size_t si = 0; si < relators.size(); ++si) {
      const Word s = relators[si];
      const std::size_t len = s.size();
      if (len == 0)
        continue;
      for (const Word& base : {s, inverse(s)}) {
        for (std::size_t rot = 0; rot < len; ++rot) {
          Word c;
          for (std::size_t k = 0; k < len; ++k)
            c.push_back(base[(rot + k) % len]);
          for (std::size_t ri = 0; ri < relators.size(); ++ri) {
            if (ri == si)
              continue;
            Word& r = relators[ri];
            const std::size_t rl = r.size();
            if (rl < len / 2 + 1)
              continue;
            for (std::size_t start = 0; start < rl; ++start) {
              // longest prefix of c matching r cyclically from `start`
              std::size_t k = 0;
              while (k < len && k < rl && r[(start + k) % rl] == c[k])
                ++k;
              spent += k + 1;
              if (2 * k <= len)
                continue;
              Word out;
              for (std::size_t j = len; j-- > k;)
                out.push_back(c[j].inverse());
              for (std::size_t j = k; j < rl; ++j)
                out.push_back(r[(start + j) % rl]);
              r = normalize_relator(out);
              return true;
            }
            if (spent > opt.overlap_budget)
              return false;
          }
        }
      }
    }
    return false;
  }
};

} // namespace detail

/// Isomorphism-preserving simplification by Tietze moves.
///
/// Every productive step strictly lowers (generator count, total relator
/// length) lexicographically, so the loop terminates; the iteration cap only
/// bounds work.
inline Simplified tietze_simplify(const Presentation& p, const SimplifyOptions& opt = {}) {
  detail::WorkingPresentation w{p.generators(), p.relators()};
  bool capped = true;
  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    w.tidy();
    if (w.eliminate_once(opt))
      continue;
    if (w.reduce_by_overlap(opt))
      continue;
    capped = false;
    break;
  }
  w.tidy();
  return {Presentation(std::move(w.names), std::move(w.relators)), capped};
}

} // namespace ghostpi
