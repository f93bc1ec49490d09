#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghostpi/error.hpp"
#include "ghostpi/word.hpp"

namespace ghostpi {

/// A finitely presented group <generators | relators>.
///
/// Relators are always stored cyclically reduced and in least rotation.
/// Empty relators are kept until a simplification pass drops them, so the
/// relator list can stay aligned with external provenance data.
class Presentation {
public:
  Presentation() = default;

  explicit Presentation(std::vector<std::string> generators, std::vector<Word> relators = {})
      : generators_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
      if (g.empty())
        throw InvariantError("generator names must be non-empty");
      if (!seen.insert(g).second)
        throw InvariantError("duplicate generator name '" + g + "'");
    }
    relators_.reserve(relators.size());
    for (auto& r : relators)
      add_relator(r);
  }

  /// Presentation with generators named prefix0, prefix1, ...
  static Presentation free(std::size_t rank, const std::string& prefix = "x") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i)
      names.push_back(prefix + std::to_string(i));
    return Presentation(std::move(names));
  }

  void add_relator(std::span<const Letter> w) {
    for (Letter l : w) {
      if (l.gen >= generators_.size())
        throw InvariantError("relator references generator " + std::to_string(l.gen) + " of " +
                             std::to_string(generators_.size()));
      if (l.exp != 1 && l.exp != -1)
        throw InvariantError("letter exponents must be +1 or -1");
    }
    relators_.push_back(normalize_relator(w));
  }

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators_)
      n += r.size();
    return n;
  }

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i)
      out += (i ? ", " : "") + generators_[i];
    out += " | ";
    for (std::size_t i = 0; i < relators_.size(); ++i)
      out += (i ? ", " : "") + format_word(relators_[i], generators_);
    return out + ">";
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Parses "a b^-1 a^2" style text (space or '*' separated, integer powers).
/// Names must already be generators of the presentation.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  std::size_t i = 0;
  auto index_of = [&](const std::string& n) -> std::uint32_t {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == n)
        return static_cast<std::uint32_t>(k);
    throw InvariantError("unknown generator '" + n + "'");
  };
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '*') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '*' && text[j] != '^')
      ++j;
    std::string name = text.substr(i, j - i);
    std::int8_t e = 1;
    if (j < text.size() && text[j] == '^') {
      std::size_t k = j + 1;
      while (k < text.size() && text[k] != ' ' && text[k] != '*')
        ++k;
      std::string ex = text.substr(j + 1, k - j - 1);
      int power = std::stoi(ex);
      j = k;
      auto g = index_of(name);
      auto sign = static_cast<std::int8_t>(power < 0 ? -1 : 1);
      for (int p = 0; p < (power < 0 ? -power : power); ++p)
        w.push_back({g, sign});
      i = j;
      continue;
    }
    w.push_back({index_of(name), e});
    i = j;
  }
  return w;
}

} // namespace ghostpi
