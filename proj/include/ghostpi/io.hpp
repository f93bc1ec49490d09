#pragma once

// JSON scenario files and reports.

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghostpi/action.hpp"
#include "ghostpi/compare.hpp"
#include "ghostpi/complex.hpp"
#include "ghostpi/error.hpp"
#include "ghostpi/fingerprint.hpp"
#include "ghostpi/ghost.hpp"
#include "ghostpi/gog.hpp"
#include "ghostpi/group_catalog.hpp"
#include "ghostpi/presentation.hpp"
#include "ghostpi/prodiscrete.hpp"

namespace ghostpi::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object())
    fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline long long as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    fail(where, "expected an integer");
  return j.get<long long>();
}

inline int as_vertex(const Json& j, const std::string& where) {
  long long v = as_int(j, where);
  if (v < 0 || v > std::numeric_limits<int>::max() / 4)
    fail(where, "vertex id out of range");
  return static_cast<int>(v);
}

inline std::size_t as_size(const Json& j, const std::string& where) {
  long long v = as_int(j, where);
  if (v < 0)
    fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

inline bool as_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean())
    fail(where, "expected true or false");
  return j.get<bool>();
}

inline const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array())
    fail(where, "expected an array");
  return j;
}

} // namespace detail

// ---------------------------------------------------------------- complexes

struct ParsedComplex {
  SimplicialComplex complex;
  std::size_t added_faces = 0;
};

inline ParsedComplex parse_complex(const Json& j, const std::string& where = "complex") {
  std::vector<VertexId> vertices;
  if (j.contains("vertices"))
    for (const auto& v : detail::as_array(j["vertices"], where + ".vertices"))
      vertices.push_back(detail::as_vertex(v, where + ".vertices"));
  std::vector<Simplex> simplices;
  for (const auto& s : detail::as_array(detail::field(j, "simplices", where), where + ".simplices")) {
    Simplex sx;
    for (const auto& v : detail::as_array(s, where + ".simplices"))
      sx.push_back(detail::as_vertex(v, where + ".simplices"));
    simplices.push_back(std::move(sx));
  }
  auto closed = SimplicialComplex::from_simplices(simplices, vertices);
  return {std::move(closed.complex), closed.added_faces};
}

inline Json complex_to_json(const SimplicialComplex& x) {
  Json j;
  j["vertices"] = x.vertices();
  Json s = Json::array();
  std::set<Edge> covered;
  for (const auto& t : x.triangles()) {
    s.push_back({t[0], t[1], t[2]});
    covered.insert({Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}});
  }
  for (const auto& e : x.edges())
    if (!covered.count(e))
      s.push_back({e[0], e[1]});
  j["simplices"] = std::move(s);
  return j;
}

// ------------------------------------------------------------ presentations

/// A word as ["a", 1, "b", -2] or as the string "a b^-2".
inline Word parse_word_json(const Json& j, const std::vector<std::string>& names, const std::string& where) {
  if (j.is_string())
    return parse_word(j.get<std::string>(), names);
  const auto& a = detail::as_array(j, where);
  if (a.size() % 2 != 0)
    detail::fail(where, "word arrays alternate generator names and exponents");
  Word w;
  for (std::size_t i = 0; i < a.size(); i += 2) {
    if (!a[i].is_string())
      detail::fail(where, "expected a generator name at position " + std::to_string(i));
    const std::string name = a[i].get<std::string>();
    long long e = detail::as_int(a[i + 1], where);
    if (e == 0)
      detail::fail(where, "zero exponent");
    std::uint32_t g = 0;
    for (; g < names.size() && names[g] != name; ++g) {
    }
    if (g == names.size())
      detail::fail(where, "unknown generator '" + name + "'");
    for (long long k = 0; k < (e < 0 ? -e : e); ++k)
      w.push_back({g, static_cast<std::int8_t>(e < 0 ? -1 : 1)});
  }
  return w;
}

inline Json word_to_json(const Word& w, const std::vector<std::string>& names) {
  Json out = Json::array();
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t k = i;
    int e = 0;
    while (k < w.size() && w[k] == w[i]) {
      e += w[k].exp;
      ++k;
    }
    out.push_back(names.at(w[i].gen));
    out.push_back(e);
    i = k;
  }
  return out;
}

inline Presentation parse_presentation(const Json& j, const std::string& where = "presentation") {
  std::vector<std::string> names;
  for (const auto& g : detail::as_array(detail::field(j, "generators", where), where + ".generators")) {
    if (!g.is_string())
      detail::fail(where + ".generators", "expected generator names");
    names.push_back(g.get<std::string>());
  }
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size())
    detail::fail(where + ".generators", "duplicate generator name");
  Presentation p(names);
  if (j.contains("relators"))
    for (const auto& r : detail::as_array(j["relators"], where + ".relators"))
      p.add_relator(parse_word_json(r, names, where + ".relators"));
  return p;
}

inline Json presentation_to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators();
  Json rs = Json::array();
  for (const auto& r : p.relators())
    rs.push_back(word_to_json(r, p.generators()));
  j["relators"] = std::move(rs);
  return j;
}

// ------------------------------------------------------------------ actions

struct ActionOptions {
  std::optional<VertexId> basepoint;
  bool center2 = false;
  bool force_cone = false;
  std::optional<std::size_t> drop_lambda;
  /// Barycentric subdivisions applied to the input before anything else.
  int extra_subdivisions = 0;
  std::optional<std::vector<std::string>> panel;
};

struct ParsedAction {
  SimplicialComplex complex;
  std::size_t added_faces = 0;
  std::vector<VertexMap> generators;
  ActionOptions options;
};

inline VertexMap parse_vertex_map(const Json& j, const std::string& where) {
  if (!j.is_object())
    detail::fail(where, "expected a vertex-map object such as {\"0\": 3}");
  VertexMap m;
  for (const auto& [key, value] : j.items()) {
    int from = 0;
    try {
      std::size_t used = 0;
      from = std::stoi(key, &used);
      if (used != key.size() || from < 0)
        throw std::invalid_argument(key);
    } catch (const std::exception&) {
      detail::fail(where, "vertex key '" + key + "' is not a non-negative integer");
    }
    m[from] = detail::as_vertex(value, where + "." + key);
  }
  return m;
}

inline Json vertex_map_to_json(const VertexMap& m) {
  Json j = Json::object();
  for (const auto& [from, to] : m)
    if (from != to)
      j[std::to_string(from)] = to;
  return j;
}

inline ActionOptions parse_action_options(const Json& scenario) {
  ActionOptions o;
  if (scenario.contains("basepoint") && !scenario["basepoint"].is_null())
    o.basepoint = detail::as_vertex(scenario["basepoint"], "basepoint");
  if (!scenario.contains("options"))
    return o;
  const Json& opt = scenario["options"];
  if (!opt.is_object())
    detail::fail("options", "expected an object");
  for (const auto& [key, value] : opt.items()) {
    if (key == "center2")
      o.center2 = detail::as_bool(value, "options.center2");
    else if (key == "force_cone")
      o.force_cone = detail::as_bool(value, "options.force_cone");
    else if (key == "drop_lambda")
      o.drop_lambda = detail::as_size(value, "options.drop_lambda");
    else if (key == "subdivisions") {
      std::size_t n = detail::as_size(value, "options.subdivisions");
      if (n > 2)
        detail::fail("options.subdivisions", "at most 2 extra subdivisions");
      o.extra_subdivisions = static_cast<int>(n);
    } else if (key == "panel") {
      std::vector<std::string> names;
      for (const auto& n : detail::as_array(value, "options.panel")) {
        if (!n.is_string())
          detail::fail("options.panel", "expected group names");
        names.push_back(n.get<std::string>());
      }
      o.panel = std::move(names);
    } else
      detail::fail("options", "unknown option '" + key + "'");
  }
  return o;
}

inline ParsedAction parse_action(const Json& j) {
  ParsedAction a;
  auto c = parse_complex(detail::field(j, "complex", "action"));
  a.complex = std::move(c.complex);
  a.added_faces = c.added_faces;
  if (j.contains("generators"))
    for (const auto& g : detail::as_array(j["generators"], "generators"))
      a.generators.push_back(parse_vertex_map(g, "generators"));
  a.options = parse_action_options(j);
  return a;
}

inline FiniteAction build_action(const ParsedAction& p, std::size_t group_cap = 4096) {
  FiniteAction a(p.complex, p.generators, group_cap);
  for (int i = 0; i < p.options.extra_subdivisions; ++i)
    a = subdivide(a);
  return a;
}

// ---------------------------------------------------------- graph of groups

inline GraphOfGroups parse_gog(const Json& j) {
  GraphOfGroups g;
  for (const auto& v : detail::as_array(detail::field(j, "vertices", "gog"), "vertices"))
    g.vertices.push_back(detail::as_vertex(v, "vertices"));
  if (j.contains("edges"))
    for (const auto& e : detail::as_array(j["edges"], "edges")) {
      if (!e.is_array() || e.size() != 2)
        detail::fail("edges", "each edge is [u, v]");
      g.edges.push_back({detail::as_vertex(e[0], "edges"), detail::as_vertex(e[1], "edges")});
    }
  if (j.contains("vertex_groups")) {
    const Json& vg = j["vertex_groups"];
    if (!vg.is_object())
      detail::fail("vertex_groups", "expected an object keyed by vertex id");
    for (const auto& [key, value] : vg.items()) {
      int v = 0;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        detail::fail("vertex_groups", "key '" + key + "' is not a vertex id");
      }
      g.vertex_groups[v] = parse_presentation(value, "vertex_groups." + key);
    }
  }
  g.edge_groups.assign(g.edges.size(), {});
  if (j.contains("edge_groups")) {
    const Json& eg = j["edge_groups"];
    if (!eg.is_object())
      detail::fail("edge_groups", "expected an object keyed by edge index");
    for (const auto& [key, value] : eg.items()) {
      std::size_t e = 0;
      try {
        e = static_cast<std::size_t>(std::stoul(key));
      } catch (const std::exception&) {
        detail::fail("edge_groups", "key '" + key + "' is not an edge index");
      }
      if (e >= g.edges.size())
        detail::fail("edge_groups", "edge index " + key + " out of range");
      const std::string where = "edge_groups." + key;
      for (const auto& pair : detail::as_array(value, where)) {
        if (!pair.is_array() || pair.size() != 2)
          detail::fail(where, "each entry is [word in source group, word in target group]");
        auto [u, v] = g.edges[e];
        g.edge_groups[e].push_back({parse_word_json(pair[0], g.group_at(u).generators(), where),
                                    parse_word_json(pair[1], g.group_at(v).generators(), where)});
      }
    }
  }
  g.validate();
  return g;
}

// -------------------------------------------------------------- prodiscrete

struct ParsedGroup {
  FiniteGroup group;
  /// Present when the group was given by permutations (element i acts as elements[i]).
  std::vector<Permutation> elements;
  std::size_t degree = 0;
};

inline Permutation parse_permutation(const Json& j, const std::string& where) {
  Permutation p;
  for (const auto& x : detail::as_array(j, where))
    p.push_back(static_cast<std::uint32_t>(detail::as_size(x, where)));
  return p;
}

inline ParsedGroup parse_group(const Json& j, std::size_t cap = 1024) {
  ParsedGroup out;
  if (j.is_string()) {
    out.group = groups::by_name(j.get<std::string>());
  } else if (j.contains("name")) {
    if (!j["name"].is_string())
      detail::fail("group.name", "expected a string");
    out.group = groups::by_name(j["name"].get<std::string>());
  } else if (j.contains("table")) {
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : detail::as_array(j["table"], "group.table")) {
      std::vector<std::size_t> r;
      for (const auto& x : detail::as_array(row, "group.table"))
        r.push_back(detail::as_size(x, "group.table"));
      table.push_back(std::move(r));
    }
    if (table.size() > cap)
      throw CapError("group order " + std::to_string(table.size()) + " exceeds cap " + std::to_string(cap));
    out.group = FiniteGroup(table);
  } else if (j.contains("permutations")) {
    std::vector<Permutation> gens;
    for (const auto& p : detail::as_array(j["permutations"], "group.permutations"))
      gens.push_back(parse_permutation(p, "group.permutations"));
    std::size_t degree = j.contains("degree") ? detail::as_size(j["degree"], "group.degree")
                                              : (gens.empty() ? 1 : gens.front().size());
    auto closure = close_permutations(gens, degree, cap);
    out.group = std::move(closure.group);
    out.elements = std::move(closure.elements);
    out.degree = degree;
  } else {
    detail::fail("group", "give a \"name\", a \"table\" or \"permutations\"");
  }
  if (out.group.order() > cap)
    throw CapError("group order " + std::to_string(out.group.order()) + " exceeds cap " + std::to_string(cap));
  return out;
}

/// Members as element-index lists, {"generated_by": [indices]} or, for
/// permutation groups, {"generators": [permutations]}.
inline SubgroupFamily parse_family(const Json& j, const ParsedGroup& g) {
  SubgroupFamily f;
  for (const auto& m : detail::as_array(j, "family")) {
    if (m.is_array()) {
      std::set<std::size_t> s;
      for (const auto& x : m)
        s.insert(detail::as_size(x, "family"));
      f.members.insert(ElementSet(s.begin(), s.end()));
    } else if (m.is_object() && m.contains("generated_by")) {
      std::vector<std::size_t> seeds;
      for (const auto& x : detail::as_array(m["generated_by"], "family.generated_by")) {
        seeds.push_back(detail::as_size(x, "family.generated_by"));
        if (seeds.back() >= g.group.order())
          detail::fail("family.generated_by", "element index out of range");
      }
      f.members.insert(g.group.generated(seeds));
    } else if (m.is_object() && m.contains("generators")) {
      if (g.elements.empty())
        detail::fail("family.generators", "permutation members need a permutation group");
      std::vector<std::size_t> seeds;
      for (const auto& p : detail::as_array(m["generators"], "family.generators")) {
        Permutation perm = parse_permutation(p, "family.generators");
        auto it = std::find(g.elements.begin(), g.elements.end(), perm);
        if (it == g.elements.end())
          detail::fail("family.generators", "permutation is not in the group");
        seeds.push_back(static_cast<std::size_t>(it - g.elements.begin()));
      }
      f.members.insert(g.group.generated(seeds));
    } else {
      detail::fail("family", "members are index lists, {\"generated_by\": ...} or {\"generators\": ...}");
    }
  }
  return f;
}

// ------------------------------------------------------------------ reports

/// Hom counts as JSON numbers when they fit, decimal strings otherwise.
inline Json bigint_to_json(const BigInt& n) {
  if (n <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(n);
  return n.str();
}

inline Json abelian_to_json(const AbelianInvariants& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  Json t = Json::array();
  for (const auto& d : a.torsion)
    t.push_back(bigint_to_json(d));
  j["torsion"] = std::move(t);
  j["text"] = a.to_string();
  return j;
}

inline Json fingerprint_to_json(const Fingerprint& f) {
  Json j;
  j["abelianization"] = abelian_to_json(f.abelian);
  Json h = Json::object();
  for (const auto& [name, count] : f.hom_counts)
    h[name] = bigint_to_json(count);
  j["hom_counts"] = std::move(h);
  return j;
}

inline Json proxy_entries_to_json(const std::vector<ProxyEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries)
    out.push_back({{"name", e.name}, {"left", e.left}, {"right", e.right}, {"match", e.match}});
  return out;
}

inline Json ghost_to_json(const GhostResult& g) {
  Json j;
  j["basepoint"] = g.basepoint;
  j["coned"] = g.coned;
  j["subdivisions"] = g.subdivisions;
  j["raw"] = presentation_to_json(g.raw);
  Json prov = Json::array();
  for (std::size_t i = 0; i < g.provenance.size(); ++i) {
    const auto& o = g.provenance[i];
    Json e;
    e["kind"] = to_string(o.kind);
    if (o.kind != RelatorOrigin::Kind::original)
      e["element"] = o.element;
    if (o.kind == RelatorOrigin::Kind::coinvariant)
      e["generator"] = g.raw.generators().at(o.generator);
    if (o.kind == RelatorOrigin::Kind::lambda)
      e["component"] = o.component;
    e["relator"] = word_to_json(g.raw.relators().at(i), g.raw.generators());
    prov.push_back(std::move(e));
  }
  j["provenance"] = std::move(prov);
  Json paths = Json::array();
  for (const auto& p : g.paths) {
    Json vs = Json::array({p.path.start});
    for (const auto& s : p.path.steps)
      vs.push_back(s[1]);
    paths.push_back({{"element", p.element}, {"component", p.component}, {"path", std::move(vs)}});
  }
  j["lambda_paths"] = std::move(paths);
  j["counts"] = {{"original", g.count(RelatorOrigin::Kind::original)},
                 {"coinvariant", g.count(RelatorOrigin::Kind::coinvariant)},
                 {"lambda", g.count(RelatorOrigin::Kind::lambda)}};
  j["presentation"] = presentation_to_json(g.presentation);
  j["simplification_capped"] = g.simplification_capped;
  return j;
}

/// Timings are left out so that reports are byte-identical across runs.
inline Json comparison_to_json(const ComparisonReport& r) {
  Json j;
  j["all_match"] = r.all_match;
  j["basepoint"] = r.basepoint;
  j["coned"] = r.coned;
  j["subdivisions"] = r.subdivisions;
  j["formula"] = fingerprint_to_json(r.formula);
  j["oracle"] = fingerprint_to_json(r.oracle);
  j["entries"] = proxy_entries_to_json(r.entries);
  j["relators"] = {{"formula_raw", r.formula_relators_raw},
                   {"formula_simplified", r.formula_relators_simplified},
                   {"oracle_raw", r.oracle_relators_raw},
                   {"oracle_simplified", r.oracle_relators_simplified},
                   {"lambda", r.lambda_relators},
                   {"coinvariant", r.coinvariant_relators}};
  return j;
}

inline Json element_set_to_json(const ElementSet& s) { return Json(s); }

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

} // namespace ghostpi::io
