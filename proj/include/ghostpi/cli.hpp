#pragma once

// Command-line front end: one scenario per JSON file, human or JSON reports.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ghostpi/compare.hpp"
#include "ghostpi/fingerprint.hpp"
#include "ghostpi/ghost.hpp"
#include "ghostpi/gog.hpp"
#include "ghostpi/group_catalog.hpp"
#include "ghostpi/io.hpp"
#include "ghostpi/oracle.hpp"
#include "ghostpi/prodiscrete.hpp"

namespace ghostpi::cli {

using io::Json;

enum ExitCode : int { ok = 0, mismatch = 1, schema = 2, cap = 3 };

struct Settings {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::string panel_csv;
  bool center2 = false;
  bool force_cone = false;
  std::size_t max_group_order = 1024;
  std::size_t max_action_order = 4096;
  std::size_t hom_generators = HomCaps{}.max_generators;
  std::size_t hom_target_order = HomCaps{}.max_target_order;
  std::size_t regularity_budget = kDefaultRegularityBudget;
  std::size_t tietze_iterations = SimplifyOptions{}.max_iterations;
  std::size_t jobs = 0;
};

enum class Kind { complex, action, gog, prodiscrete, presentation, presentation_pair };

inline Kind scenario_kind(const Json& j) {
  if (!j.is_object())
    throw SchemaError("scenario must be a JSON object");
  if (j.contains("kind")) {
    if (!j["kind"].is_string())
      throw SchemaError("kind: expected a string");
    const std::string k = j["kind"].get<std::string>();
    if (k == "complex") return Kind::complex;
    if (k == "action") return Kind::action;
    if (k == "gog") return Kind::gog;
    if (k == "prodiscrete") return Kind::prodiscrete;
    if (k == "presentation") return Kind::presentation;
    if (k == "presentation-pair" || k == "presentation_pair") return Kind::presentation_pair;
    throw SchemaError("kind: unknown scenario kind '" + k + "'");
  }
  if (j.contains("complex")) return Kind::action;
  if (j.contains("simplices")) return Kind::complex;
  if (j.contains("vertex_groups") || j.contains("edges")) return Kind::gog;
  if (j.contains("group")) return Kind::prodiscrete;
  if (j.contains("left") && j.contains("right")) return Kind::presentation_pair;
  if (j.contains("generators") && j.contains("relators")) return Kind::presentation;
  throw SchemaError("cannot tell the scenario kind; add a \"kind\" field");
}

inline const char* kind_name(Kind k) {
  switch (k) {
  case Kind::complex: return "complex";
  case Kind::action: return "action";
  case Kind::gog: return "gog";
  case Kind::prodiscrete: return "prodiscrete";
  case Kind::presentation: return "presentation";
  case Kind::presentation_pair: return "presentation-pair";
  }
  return "?";
}

/// "trivial group", "free rank r", or the abelianization.
inline std::string describe(const Fingerprint& f, const std::vector<NamedGroup>& panel) {
  if (f.abelian.torsion.empty() && f == free_group_fingerprint(f.abelian.free_rank, panel))
    return f.abelian.free_rank == 0 ? "trivial group" : "free rank " + std::to_string(f.abelian.free_rank);
  return "H1 = " + f.abelian.to_string();
}

struct Outcome {
  int code = ExitCode::ok;
  std::string text;
  Json json;
};

class Runner {
public:
  explicit Runner(Settings s) : s_(std::move(s)) {}

  const Settings& settings() const { return s_; }

  std::vector<NamedGroup> panel(const std::optional<std::vector<std::string>>& from_scenario) const {
    if (!s_.panel_csv.empty())
      return groups::panel_from_names(groups::split_names(s_.panel_csv));
    if (from_scenario)
      return groups::panel_from_names(*from_scenario);
    return groups::default_panel();
  }

  FingerprintOptions fp_options() const {
    FingerprintOptions o;
    o.caps.max_generators = s_.hom_generators;
    o.caps.max_target_order = s_.hom_target_order;
    o.simplify.max_iterations = s_.tietze_iterations;
    return o;
  }

  GhostOptions ghost_options(const io::ActionOptions& a) const {
    GhostOptions o;
    o.center2 = s_.center2 || a.center2;
    o.force_cone = s_.force_cone || a.force_cone;
    o.drop_lambda = a.drop_lambda;
    o.tree_seed = s_.seed;
    o.regularity_budget = s_.regularity_budget;
    o.simplify.max_iterations = s_.tietze_iterations;
    return o;
  }

  Outcome dispatch(const std::string& command, const std::string& path) const {
    Json j = io::load_json_file(path);
    const Kind kind = scenario_kind(j);
    Outcome out;
    if (command == "pi1") out = pi1(j, kind);
    else if (command == "quotient") out = quotient(require(j, kind, Kind::action, command));
    else if (command == "oracle") out = oracle(require(j, kind, Kind::action, command));
    else if (command == "check") out = check(require(j, kind, Kind::action, command));
    else if (command == "armstrong") out = armstrong(require(j, kind, Kind::action, command));
    else if (command == "bass") out = bass(require(j, kind, Kind::gog, command));
    else if (command == "complete") out = complete(require(j, kind, Kind::prodiscrete, command));
    else if (command == "fingerprint") out = fingerprint_cmd(j, kind);
    else throw SchemaError("unknown command " + command);

    Json head;
    head["schema_version"] = io::kSchemaVersion;
    head["command"] = command;
    head["scenario"] = scenario_name(j, path);
    head["kind"] = kind_name(kind);
    for (auto& [k, v] : out.json.items())
      head[k] = v;
    out.json = std::move(head);
    return out;
  }

  static std::string scenario_name(const Json& j, const std::string& path) {
    if (j.contains("name") && j["name"].is_string())
      return j["name"].get<std::string>();
    return std::filesystem::path(path).stem().string();
  }

private:
  Settings s_;

  static const Json& require(const Json& j, Kind have, Kind want, const std::string& command) {
    if (have != want) {
      const std::string name = kind_name(want);
      const char* article = name.front() == 'a' ? " needs an " : " needs a ";
      throw SchemaError(command + article + name + " scenario, got " + kind_name(have));
    }
    return j;
  }

  struct LoadedAction {
    io::ParsedAction parsed;
    FiniteAction action;
  };

  LoadedAction load_action(const Json& j) const {
    io::ParsedAction p = io::parse_action(j);
    FiniteAction a = io::build_action(p, s_.max_action_order);
    return {std::move(p), std::move(a)};
  }

  Json fingerprint_json(const Fingerprint& f, const std::vector<NamedGroup>& panel) const {
    Json j = io::fingerprint_to_json(f);
    j["description"] = describe(f, panel);
    return j;
  }

  Outcome pi1(const Json& j, Kind kind) const {
    SimplicialComplex x;
    std::optional<VertexId> root;
    std::optional<std::vector<std::string>> scenario_panel;
    std::size_t added = 0;
    if (kind == Kind::complex) {
      auto c = io::parse_complex(j);
      x = std::move(c.complex);
      added = c.added_faces;
    } else if (kind == Kind::action) {
      auto p = io::parse_action(j);
      x = p.complex;
      added = p.added_faces;
      root = p.options.basepoint;
      scenario_panel = p.options.panel;
    } else {
      throw SchemaError("pi1 needs a complex or action scenario");
    }
    if (x.empty())
      throw PreconditionError("empty complex");
    const VertexId r = root.value_or(x.vertices().front());
    if (!x.has_vertex(r))
      throw PreconditionError("basepoint " + std::to_string(r) + " is not a vertex");
    SpanningTree tree = s_.seed ? random_spanning_tree(x, r, *s_.seed) : spanning_tree(x, r);
    Presentation raw = edge_path_presentation(x, tree);
    Presentation simple = tietze_simplify(raw, fp_options().simplify).presentation;
    auto pan = panel(scenario_panel);
    Fingerprint f = fingerprint(simple, pan, fp_options());
    Outcome o;
    o.json["closure_added_faces"] = added;
    o.json["basepoint"] = r;
    o.json["simplices"] = x.simplex_count();
    o.json["euler_characteristic"] = x.euler_characteristic();
    o.json["raw"] = io::presentation_to_json(raw);
    o.json["presentation"] = io::presentation_to_json(simple);
    o.json["fingerprint"] = fingerprint_json(f, pan);
    std::ostringstream t;
    t << "pi1: " << describe(f, pan) << "\n";
    t << "  complex: " << x.simplex_count() << " simplices, euler characteristic " << x.euler_characteristic();
    if (added)
      t << ", " << added << " faces added by closure";
    t << "\n  presentation: " << simple.to_string() << "\n";
    t << "  fingerprint: " << f.to_string() << "\n";
    o.text = t.str();
    return o;
  }

  Outcome quotient(const Json& j) const {
    auto la = load_action(j);
    GhostResult g = pi1_of_quotient(la.action, la.parsed.options.basepoint, ghost_options(la.parsed.options));
    auto pan = panel(la.parsed.options.panel);
    Fingerprint f = fingerprint(g.presentation, pan, fp_options());
    Outcome o;
    o.json["group_order"] = la.action.order();
    o.json["ghost"] = io::ghost_to_json(g);
    o.json["fingerprint"] = fingerprint_json(f, pan);
    std::ostringstream t;
    t << "quotient: " << describe(f, pan) << "\n";
    t << "  group order " << la.action.order() << ", basepoint " << g.basepoint << (g.coned ? " (cone apex)" : "")
      << ", " << g.subdivisions << " subdivision(s)\n";
    t << "  relators: " << g.count(RelatorOrigin::Kind::original) << " original, "
      << g.count(RelatorOrigin::Kind::coinvariant) << " coinvariant, " << g.count(RelatorOrigin::Kind::lambda)
      << " lambda\n";
    t << "  presentation: " << g.presentation.to_string() << "\n";
    t << "  fingerprint: " << f.to_string() << "\n";
    o.text = t.str();
    return o;
  }

  Outcome oracle(const Json& j) const {
    auto la = load_action(j);
    const auto& opt = la.parsed.options;
    BasedAction based = with_fixed_basepoint(la.action, opt.basepoint, s_.force_cone || opt.force_cone,
                                             s_.regularity_budget);
    Presentation raw = oracle_pi1_quotient(based.action, based.basepoint, s_.regularity_budget);
    Presentation simple = tietze_simplify(raw, fp_options().simplify).presentation;
    auto pan = panel(opt.panel);
    Fingerprint f = fingerprint(simple, pan, fp_options());
    Outcome o;
    o.json["basepoint"] = based.basepoint;
    o.json["coned"] = based.coned;
    o.json["subdivisions"] = based.subdivisions;
    o.json["raw"] = io::presentation_to_json(raw);
    o.json["presentation"] = io::presentation_to_json(simple);
    o.json["fingerprint"] = fingerprint_json(f, pan);
    std::ostringstream t;
    t << "oracle: " << describe(f, pan) << "\n";
    t << "  presentation: " << simple.to_string() << "\n";
    t << "  fingerprint: " << f.to_string() << "\n";
    o.text = t.str();
    return o;
  }

public:
  Outcome check(const Json& j) const {
    auto la = load_action(j);
    auto pan = panel(la.parsed.options.panel);
    ComparisonReport r = compare_formula_vs_oracle(la.action, la.parsed.options.basepoint, pan,
                                                   ghost_options(la.parsed.options), fp_options());
    Outcome o;
    o.code = r.all_match ? ExitCode::ok : ExitCode::mismatch;
    o.json["group_order"] = la.action.order();
    o.json["report"] = io::comparison_to_json(r);
    std::ostringstream t;
    t << describe(r.formula, pan) << ": " << (r.all_match ? "match" : "MISMATCH");
    if (!r.all_match) {
      t << " (oracle: " << describe(r.oracle, pan) << ";";
      for (const auto& e : r.entries)
        if (!e.match)
          t << " " << e.name << " " << e.left << " vs " << e.right;
      t << ")";
    }
    o.text = t.str();
    return o;
  }

private:
  Outcome armstrong(const Json& j) const {
    auto la = load_action(j);
    auto pan = panel(la.parsed.options.panel);
    ArmstrongResult a = armstrong_quotient(la.action, s_.regularity_budget);
    Fingerprint fa = fingerprint(a.presentation, pan, fp_options());
    const SimplicialComplex& x = la.action.complex();
    Fingerprint fx = fingerprint(edge_path_presentation(x, spanning_tree(x, x.vertices().front())), pan, fp_options());
    const bool simply_connected = fx == free_group_fingerprint(0, pan);
    GhostResult g = pi1_of_quotient(la.action, la.parsed.options.basepoint, ghost_options(la.parsed.options));
    Fingerprint fg = fingerprint(g.presentation, pan, fp_options());
    Outcome o;
    o.json["group_order"] = la.action.order();
    o.json["elements_with_fixed_points"] = a.with_fixed_points;
    o.json["normal_closure_order"] = a.normal_closure.size();
    o.json["quotient_order"] = a.quotient.order();
    o.json["presentation"] = io::presentation_to_json(a.presentation);
    o.json["fingerprint"] = fingerprint_json(fa, pan);
    o.json["complex_simply_connected"] = simply_connected;
    o.json["formula_fingerprint"] = fingerprint_json(fg, pan);
    o.json["formula_agrees"] = fg == fa;
    std::ostringstream t;
    t << "armstrong: G/<<fixing elements>> has order " << a.quotient.order() << " (" << describe(fa, pan) << ")\n";
    t << "  " << a.with_fixed_points.size() << " of " << la.action.order()
      << " elements fix a point; normal closure order " << a.normal_closure.size() << "\n";
    t << "  complex " << (simply_connected ? "is" : "is not") << " simply connected (fingerprint); formula "
      << (fg == fa ? "agrees" : "differs") << "\n";
    o.text = t.str();
    return o;
  }

  Outcome bass(const Json& j) const {
    GraphOfGroups g = io::parse_gog(j);
    auto pan = panel(std::nullopt);
    Presentation full = gog_presentation(g, s_.seed);
    Presentation killed = kill_inertia(g, s_.seed);
    Fingerprint ff = fingerprint(full, pan, fp_options());
    Fingerprint fk = fingerprint(killed, pan, fp_options());
    const std::size_t rank = g.graph_rank();
    const bool agrees = fk == free_group_fingerprint(rank, pan);
    Outcome o;
    o.code = agrees ? ExitCode::ok : ExitCode::mismatch;
    o.json["graph_rank"] = rank;
    o.json["presentation"] = io::presentation_to_json(full);
    o.json["fingerprint"] = fingerprint_json(ff, pan);
    o.json["kill_inertia"] = io::presentation_to_json(tietze_simplify(killed, fp_options().simplify).presentation);
    o.json["kill_inertia_fingerprint"] = fingerprint_json(fk, pan);
    o.json["matches_free_group"] = agrees;
    std::ostringstream t;
    t << "bass: " << describe(fk, pan) << " (expected free rank " << rank << ": " << (agrees ? "match" : "MISMATCH")
      << ")\n";
    t << "  pi1 of the graph of groups: " << describe(ff, pan) << "\n";
    o.text = t.str();
    return o;
  }

  Outcome complete(const Json& j) const {
    io::ParsedGroup g = io::parse_group(io::detail::field(j, "group", "prodiscrete"), s_.max_group_order);
    SubgroupFamily h = j.contains("family") ? io::parse_family(j["family"], g) : SubgroupFamily{};
    ProdiscreteCaps caps;
    caps.max_group_order = s_.max_group_order;
    SubgroupFamily open = generate_topology(g.group, h, caps);
    Completion c = completion(g.group, h, caps);
    Lemma1Report rep = lemma1_report(g.group, h, caps);
    Outcome o;
    o.code = rep.ok() ? ExitCode::ok : ExitCode::mismatch;
    o.json["group_order"] = g.group.order();
    Json members = Json::array();
    for (const auto& m : open.members)
      members.push_back(m);
    o.json["open_subgroups"] = std::move(members);
    o.json["kernel"] = c.kernel;
    o.json["completion_order"] = c.group.order();
    o.json["completion_map"] = c.map;
    Json l;
    l["open_in_group"] = rep.open_in_group;
    l["open_in_completion"] = rep.open_in_completion;
    l["bijection"] = rep.bijection;
    l["normality_preserved"] = rep.normality_preserved;
    l["index_preserved"] = rep.index_preserved;
    l["finest_topology"] = rep.finest_topology ? Json(*rep.finest_topology) : Json(nullptr);
    l["classical_limit"] = rep.classical_limit ? Json(*rep.classical_limit) : Json(nullptr);
    l["failures"] = rep.failures;
    o.json["lemma1"] = std::move(l);
    std::ostringstream t;
    t << "complete: completion order " << c.group.order() << "\n";
    t << "  group order " << g.group.order() << ", " << open.members.size() << " open subgroups, kernel order "
      << c.kernel.size() << "\n";
    t << "  open-subgroup correspondence: " << (rep.ok() ? "verified" : "FAILED");
    for (const auto& f : rep.failures)
      t << "; " << f;
    t << "\n";
    o.text = t.str();
    return o;
  }

  Outcome fingerprint_cmd(const Json& j, Kind kind) const {
    Outcome o;
    std::ostringstream t;
    if (kind == Kind::presentation_pair) {
      Presentation l = io::parse_presentation(io::detail::field(j, "left", "pair"), "left");
      Presentation r = io::parse_presentation(io::detail::field(j, "right", "pair"), "right");
      auto pan = panel(std::nullopt);
      ProxyReport rep = profinite_proxy_equal(l, r, pan, fp_options());
      o.code = rep.all_match() ? ExitCode::ok : ExitCode::mismatch;
      o.json["left"] = fingerprint_json(rep.left, pan);
      o.json["right"] = fingerprint_json(rep.right, pan);
      o.json["entries"] = io::proxy_entries_to_json(rep.entries);
      o.json["all_match"] = rep.all_match();
      t << "fingerprint: " << (rep.all_match() ? "indistinguishable under the panel" : "distinguished") << "\n";
      t << "  left: " << rep.left.to_string() << "\n  right: " << rep.right.to_string() << "\n";
      o.text = t.str();
      return o;
    }
    Presentation p;
    std::optional<std::vector<std::string>> scenario_panel;
    if (kind == Kind::presentation) {
      p = io::parse_presentation(j);
    } else if (kind == Kind::gog) {
      p = gog_presentation(io::parse_gog(j), s_.seed);
    } else if (kind == Kind::action) {
      auto la = load_action(j);
      scenario_panel = la.parsed.options.panel;
      p = pi1_of_quotient(la.action, la.parsed.options.basepoint, ghost_options(la.parsed.options)).presentation;
    } else if (kind == Kind::complex) {
      auto c = io::parse_complex(j);
      p = edge_path_presentation(c.complex, spanning_tree(c.complex, c.complex.vertices().front()));
    } else {
      throw SchemaError("fingerprint needs a presentation, pair, gog, action or complex scenario");
    }
    auto pan = panel(scenario_panel);
    Fingerprint f = fingerprint(p, pan, fp_options());
    o.json["fingerprint"] = fingerprint_json(f, pan);
    t << "fingerprint: " << describe(f, pan) << "\n  " << f.to_string() << "\n";
    o.text = t.str();
    return o;
  }
};

/// Maps library exceptions to exit codes.
inline int code_for(const std::exception& e) {
  if (dynamic_cast<const CapError*>(&e))
    return ExitCode::cap;
  return ExitCode::schema;
}

inline Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Outcome o;
    o.code = code_for(e);
    o.text = std::string("error: ") + e.what();
    o.json["error"] = e.what();
    o.json["exit_code"] = o.code;
    return o;
  }
}

/// Exit code for a batch: schema/invariant problems first, then caps, then mismatches.
inline int combine(const std::vector<int>& codes) {
  for (int c : {ExitCode::schema, ExitCode::cap, ExitCode::mismatch})
    if (std::find(codes.begin(), codes.end(), c) != codes.end())
      return c;
  return ExitCode::ok;
}

inline std::vector<std::string> scenario_files(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw SchemaError(dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end(), [](const std::string& a, const std::string& b) {
    return fs::path(a).filename() < fs::path(b).filename();
  });
  return files;
}

inline int check_dir(const Runner& runner, const std::string& dir, std::ostream& out) {
  const auto files = scenario_files(dir);
  std::size_t jobs = runner.settings().jobs;
  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> results(files.size());
  for (std::size_t start = 0; start < files.size(); start += jobs) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + jobs); ++i)
      batch.push_back(std::async(std::launch::async, [&runner, path = files[i]] {
        return guarded([&] { return runner.dispatch("check", path); });
      }));
    for (std::size_t i = 0; i < batch.size(); ++i)
      results[start + i] = batch[i].get();
  }
  std::vector<int> codes;
  std::size_t matched = 0, mismatched = 0, failed = 0;
  for (const auto& r : results) {
    codes.push_back(r.code);
    if (r.code == ExitCode::ok) ++matched;
    else if (r.code == ExitCode::mismatch) ++mismatched;
    else ++failed;
  }
  const int code = combine(codes);
  if (runner.settings().json) {
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["command"] = "check";
    j["directory"] = dir;
    Json list = Json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
      Json item = results[i].json;
      item["file"] = std::filesystem::path(files[i]).filename().string();
      list.push_back(std::move(item));
    }
    j["scenarios"] = std::move(list);
    j["summary"] = {{"scenarios", files.size()}, {"match", matched}, {"mismatch", mismatched}, {"error", failed}};
    j["exit_code"] = code;
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < files.size(); ++i)
      out << std::filesystem::path(files[i]).stem().string() << ": " << results[i].text << "\n";
    out << files.size() << " scenarios: " << matched << " match, " << mismatched << " mismatch, " << failed
        << " error\n";
  }
  return code;
}

/// Runs one command line (args excludes the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fundamental groups of quotients of finite simplicial group actions"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_flag("--json", s.json, "emit JSON reports");
  app.add_option("--seed", s.seed, "seed for randomized spanning trees");
  app.add_option("--panel", s.panel_csv, "comma-separated panel group names (default: GHOSTPI_PANEL or the 11-group panel)");
  app.add_flag("--center2", s.center2, "one lambda relator per centralizer orbit of fixed components");
  app.add_flag("--force-cone", s.force_cone, "attach the cone even at a globally fixed basepoint");
  app.add_option("--max-group-order", s.max_group_order, "cap on prodiscrete group orders")->capture_default_str();
  app.add_option("--max-action-order", s.max_action_order, "cap on acting group orders")->capture_default_str();
  app.add_option("--hom-generators", s.hom_generators, "cap on constrained generators when counting homomorphisms")
      ->capture_default_str();
  app.add_option("--hom-target-order", s.hom_target_order, "cap on panel group orders")->capture_default_str();
  app.add_option("--regularity-budget", s.regularity_budget, "tuple checks before subdividing unconditionally")
      ->capture_default_str();
  app.add_option("--tietze-iterations", s.tietze_iterations, "cap on simplification steps")->capture_default_str();
  app.add_option("--jobs", s.jobs, "parallel scenarios for check --dir (0: one per core)");

  std::string file, dir;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"pi1", "edge-path presentation of a complex"},
      {"quotient", "fixed-point formula for pi1 of the quotient"},
      {"oracle", "pi1 of the quotient from the orbit complex"},
      {"check", "compare formula and oracle fingerprints"},
      {"armstrong", "quotient of G by the elements with fixed points"},
      {"bass", "graph of groups and its inertia-free quotient"},
      {"complete", "prodiscrete completion of a finite group"},
      {"fingerprint", "abelianization and homomorphism counts"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "check") {
      auto* f = sub->add_option("file", file, "scenario file");
      auto* d = sub->add_option("--dir", dir, "check every .json file in a directory");
      f->excludes(d);
      sub->require_option(1);
    } else {
      sub->add_option("file", file, "scenario file")->required();
    }
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::schema;
  }

  std::string command;
  for (auto* sub : subs)
    if (sub->parsed())
      command = sub->get_name();

  try {
    Runner runner(s);
    groups::panel_from_names(s.panel_csv.empty() ? groups::default_panel_names() : groups::split_names(s.panel_csv));
    if (command == "check" && !dir.empty())
      return check_dir(runner, dir, out);
    Outcome o = runner.dispatch(command, file);
    if (s.json)
      out << o.json.dump(2) << "\n";
    else if (command == "check")
      out << Runner::scenario_name(io::load_json_file(file), file) << ": " << o.text << "\n";
    else
      out << o.text;
    return o.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return code_for(e);
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace ghostpi::cli
