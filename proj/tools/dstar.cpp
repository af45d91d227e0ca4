// dstar: exact planar Turan numbers for double stars, star-block weight
// certificates, extremal constructions, and isomorph-free enumeration.
//
// Exit codes: 0 ok, 1 usage error, 2 guard refusal, 3 forbidden pattern
// present in the input, 4 input not planar.

#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dstar/canonical.hpp"
#include "dstar/enumerate.hpp"
#include "dstar/extremal.hpp"
#include "dstar/formats.hpp"
#include "dstar/planarity.hpp"
#include "dstar/starblock.hpp"
#include "dstar/turan.hpp"

using json = nlohmann::ordered_json;
using namespace dstar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitPatternFound = 3;
constexpr int kExitNonPlanar = 4;

PatternSpec parse_pattern(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("pattern must look like m,l");
  return PatternSpec::of(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

std::vector<Graph> read_input_graphs(const std::string& path, bool planar_code) {
  auto parse = [&](std::istream& in) {
    return planar_code ? read_planar_code(in) : read_graph6(in);
  };
  if (path.empty() || path == "-") return parse(std::cin);
  std::ifstream in(path, planar_code ? std::ios::binary : std::ios::in);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

json vertex_list(VertexSet s) {
  json out = json::array();
  for (int v : s) out.push_back(v);
  return out;
}

json stats_json(const EnumStats& s) {
  return json{{"visited", s.visited},
              {"emitted", s.emitted},
              {"pruned_planarity", s.pruned_planarity},
              {"pruned_pattern", s.pruned_pattern},
              {"pruned_edges", s.pruned_edges}};
}

json witness_json(const DoubleStarWitness& w) {
  return json{{"x", w.x}, {"y", w.y}, {"x_arms", vertex_list(w.x_arms)}, {"y_arms", vertex_list(w.y_arms)}};
}

int cmd_compute(int n, const std::string& pattern, const std::string& format, int workers,
                bool unsafe_large, int witness_cap) {
  int limit = unsafe_large ? 12 : 10;
  if (n > limit) {
    std::cerr << "refused: n = " << n << " exceeds the exact-computation guard (n <= " << limit
              << (unsafe_large ? ")" : "; pass --unsafe-large to raise it to 12)") << "\n";
    return kExitGuard;
  }
  PatternSpec p = parse_pattern(pattern);
  TuranResult r = compute_planar_turan(n, p, workers, witness_cap, unsafe_large);
  if (format == "json") {
    json out{{"n", r.n},
             {"m", p.m},
             {"l", p.l},
             {"value", r.value},
             {"witness_count", r.witnesses.size()},
             {"witnesses", r.witnesses},
             {"stats", stats_json(r.stats)},
             {"elapsed_ms", r.elapsed_ms}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "graph6") {
    for (const std::string& w : r.witnesses) std::cout << w << "\n";
  } else if (format == "dot") {
    for (const std::string& w : r.witnesses) write_dot(graph6_decode(w), std::cout);
  } else {
    std::cout << "ex_P(" << n << ", S_{" << p.m << "," << p.l << "}) = " << r.value << "\n"
              << "extremal graphs kept: " << r.witnesses.size() << "\n"
              << "classes visited: " << r.stats.visited << ", emitted: " << r.stats.emitted << "\n"
              << "elapsed: " << r.elapsed_ms << " ms\n";
  }
  return kExitOk;
}

json block_json(const StarBlockBase& base, std::size_t i) {
  const StarBlock& b = base.blocks[i];
  QuarterWeight bound = class_weight_bound(base.classes[i], b.vertices().count(), std::max(base.t(), 1));
  return json{{"kind", to_string(b.kind)},
              {"vertices", vertex_list(b.vertices())},
              {"core", vertex_list(b.core)},
              {"extension", vertex_list(b.extension)},
              {"peripheral", vertex_list(b.peripheral)},
              {"shared_deg_le3", vertex_list(b.shared_le3)},
              {"shared_deg4", vertex_list(b.shared_deg4)},
              {"has_triple_shared", b.has_triple_shared},
              {"w0", b.w0.to_string()},
              {"w", b.w.to_string()},
              {"class", to_string(base.classes[i])},
              {"bound", bound.to_string()},
              {"passes", b.w <= bound}};
}

json audit_json(const WeightAudit& a) {
  json blocks = json::array();
  for (const BlockAuditRow& row : a.blocks) {
    blocks.push_back(json{{"kind", to_string(row.kind)},
                          {"vertices", vertex_list(row.verts)},
                          {"w0", row.w0.to_string()},
                          {"w", row.w.to_string()},
                          {"class", to_string(row.cls)},
                          {"bound", row.bound.to_string()},
                          {"passes", row.passes}});
  }
  return json{{"blocks", blocks},
              {"edge_identity", json{{"edges", a.edges},
                                     {"w0_g1", a.w0_g1.to_string()},
                                     {"w0_g2", a.w0_g2.to_string()},
                                     {"pass", a.edge_identity_ok}}},
              {"ledger", json{{"lhs", a.ledger_lhs.to_string()},
                              {"rhs", a.ledger_rhs.to_string()},
                              {"r1", a.r1},
                              {"r2", a.r2},
                              {"r3", a.r3},
                              {"exact_expected", a.ledger_exact},
                              {"pass", a.ledger_ok}}},
              {"classes", json{{"t0", a.t0}, {"t1", a.t1}, {"t2", a.t2}}},
              {"bipartite_bound", json{{"applicable", a.bipartite_applicable}, {"pass", a.bipartite_ok}}},
              {"multi_block_edge_bound",
               json{{"applicable", a.multi_block_applicable}, {"pass", a.multi_block_edge_ok}}},
              {"pass", a.all_ok()}};
}

int cmd_decompose(const std::string& input, bool planar_code, const std::string& format,
                  int max_rounds) {
  std::vector<Graph> graphs = read_input_graphs(input, planar_code);
  if (graphs.empty()) {
    std::cerr << "no input graphs\n";
    return kExitUsage;
  }
  json results = json::array();
  for (const Graph& g : graphs) {
    if (!is_planar(g)) {
      std::cerr << "input graph is not planar\n";
      return kExitNonPlanar;
    }
    if (auto w = detect_double_star(g, PatternSpec::of(3, 3))) {
      std::cerr << "input graph contains S_{3,3}: witness " << witness_json(*w).dump() << "\n";
      return kExitPatternFound;
    }
    StarBlockBase base = build_base(g);
    RefineResult ref = refine_until_bounded(g, base, max_rounds);
    WeightAudit a = audit(g, ref.base);
    json cert{{"graph6", graph6_encode(g)},
              {"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"base", json{{"block_count", ref.base.blocks.size()},
                            {"g1", vertex_list(ref.base.g1)},
                            {"g2", vertex_list(ref.base.g2)}}},
              {"blocks", json::array()},
              {"refinement", json{{"rounds", ref.rounds},
                                  {"all_pass", ref.all_pass},
                                  {"unresolved_block",
                                   ref.unresolved_block ? json(*ref.unresolved_block) : json(nullptr)}}},
              {"audit", audit_json(a)}};
    for (std::size_t i = 0; i < ref.base.blocks.size(); ++i) cert["blocks"].push_back(block_json(ref.base, i));
    results.push_back(std::move(cert));
  }
  if (format == "table") {
    for (const json& cert : results) {
      std::cout << cert["graph6"].get<std::string>() << ": " << cert["base"]["block_count"]
                << " blocks, refinement "
                << (cert["refinement"]["all_pass"].get<bool>() ? "pass" : "UNRESOLVED") << ", audit "
                << (cert["audit"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
  } else {
    std::cout << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_construct(const std::string& recipe, int n, const std::string& format) {
  ConstructionRecipe r;
  if (recipe == "double-wheel") r.kind = Recipe::double_wheel;
  else if (recipe == "triangle-forest") r.kind = Recipe::triangle_forest;
  else if (recipe == "glued-stars") r.kind = Recipe::glued_stars;
  else if (recipe == "four-regular-8") { r.kind = Recipe::four_regular_8; n = 8; }
  else if (recipe == "four-regular-9") { r.kind = Recipe::four_regular_9; n = 9; }
  else if (recipe == "component-66") { r.kind = Recipe::component_66; n = 7; }
  else if (recipe == "component-65") { r.kind = Recipe::component_65; n = 7; }
  else if (recipe == "maximal-planar") r.kind = Recipe::maximal_planar;
  else {
    std::cerr << "unknown recipe: " << recipe << "\n";
    return kExitUsage;
  }
  r.n = n;
  Graph g = construct(r);
  if (format == "dot") {
    write_dot(g, std::cout);
  } else if (format == "json") {
    PatternSpec target = recipe_target(r.kind);
    json out{{"recipe", recipe},
             {"n", g.vertex_count()},
             {"edges", g.edge_count()},
             {"target_pattern", json{{"m", target.m}, {"l", target.l}}},
             {"graph6", graph6_encode(g)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << graph6_encode(g) << "\n";
  }
  return kExitOk;
}

int cmd_detect(const std::string& input, bool planar_code, const std::string& pattern,
               const std::string& format) {
  PatternSpec p = parse_pattern(pattern);
  std::vector<Graph> graphs = read_input_graphs(input, planar_code);
  bool any = false;
  json results = json::array();
  for (const Graph& g : graphs) {
    auto w = detect_double_star(g, p);
    any = any || w.has_value();
    if (format == "json") {
      json row{{"graph6", graph6_encode(g)}, {"found", w.has_value()}};
      if (w) row["witness"] = witness_json(*w);
      results.push_back(std::move(row));
    } else {
      std::cout << graph6_encode(g) << ": " << (w ? "found" : "not found") << "\n";
    }
  }
  if (format == "json") std::cout << results.dump(2) << "\n";
  return any ? kExitPatternFound : kExitOk;
}

int cmd_enumerate(int n, int min_edges, int max_edges, bool planar, const std::string& forbid,
                  bool connected, int workers, const std::string& stats_path) {
  EnumConstraints c;
  c.n = n;
  c.min_edges = min_edges;
  c.max_edges = max_edges;
  c.require_planar = planar;
  c.require_connected = connected;
  if (!forbid.empty()) c.forbid = parse_pattern(forbid);

  std::vector<std::vector<std::string>> per_root;
  std::mutex m;
  EnumStats stats = enumerate_parallel(
      c, workers,
      [&](const Graph& g, std::size_t root) {
        std::string line = graph6_encode(g);
        std::scoped_lock lock(m);
        per_root[root].push_back(std::move(line));
      },
      [&](std::size_t roots) { per_root.resize(roots); });
  for (const auto& bucket : per_root)
    for (const std::string& line : bucket) std::cout << line << "\n";

  json s = stats_json(stats);
  if (stats_path.empty()) {
    std::cerr << s.dump() << "\n";
  } else {
    std::ofstream out(stats_path);
    out << s.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(int n_max, int weights_n, int degree_classes_n, const std::string& format, int workers) {
  json out = json::object();
  bool all_ok = true;
  if (weights_n < 0 && degree_classes_n < 0) {
    auto rows = verify_closed_forms(n_max, workers);
    json jrows = json::array();
    if (format != "json") std::cout << "  n  m  computed  predicted  status\n";
    for (const ClosedFormRow& r : rows) {
      all_ok = all_ok && r.match;
      if (format != "json") {
        std::printf("%3d %2d %9d %10d  %s\n", r.n, r.m, r.computed, r.predicted,
                    !r.formula_applies ? "out of stated range" : (r.match ? "match" : "MISMATCH"));
      } else {
        jrows.push_back(json{{"n", r.n},
                             {"m", r.m},
                             {"computed", r.computed},
                             {"predicted", r.predicted},
                             {"formula_applies", r.formula_applies},
                             {"match", r.match}});
      }
    }
    out["closed_forms"] = std::move(jrows);
  }
  if (weights_n >= 0) {
    WeightCorpusSummary s = verify_corpus_weights(weights_n, workers);
    all_ok = all_ok && s.clean();
    if (format != "json")
      std::cout << "weight corpus n=" << s.n << ": " << s.graphs << " graphs, "
                << (s.clean() ? "clean" : "FAILURES") << "\n";
    out["weight_corpus"] = json{{"n", s.n},
                                {"graphs", s.graphs},
                                {"with_blocks", s.with_blocks},
                                {"base_failures", s.base_failures},
                                {"refine_unresolved", s.refine_unresolved},
                                {"audit_failures", s.audit_failures},
                                {"single_block", s.single_block},
                                {"single_block_cap_violations", s.single_block_cap_violations},
                                {"multi_block", s.multi_block},
                                {"multi_block_cap_violations", s.multi_block_cap_violations},
                                {"failures", s.failures}};
  }
  if (degree_classes_n >= 0) {
    DegreeClassCorpusSummary s = verify_corpus_degree_classes(degree_classes_n, workers);
    all_ok = all_ok && s.clean();
    if (format != "json")
      std::cout << "degree-class corpus n=" << s.n << ": " << s.applicable << " applicable, "
                << s.failures << " failures\n";
    out["degree_class_corpus"] = json{{"n", s.n},
                                      {"graphs", s.graphs},
                                      {"applicable", s.applicable},
                                      {"failures", s.failures},
                                      {"failing", s.failing}};
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitPatternFound;
}

int cmd_search(int n, const std::string& pattern, int target_edges, const std::string& format) {
  PatternSpec p = parse_pattern(pattern);
  auto g = search_extremal(n, p, target_edges);
  if (!g) {
    std::cout << "not found\n";
    return kExitOk;
  }
  if (format == "dot")
    write_dot(*g, std::cout);
  else
    std::cout << graph6_encode(*g) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact planar Turan toolkit for double stars"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  int workers = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "graph6", "dot"}));
  app.add_option("--workers", workers, "worker threads (default: TURAN_WORKERS or all cores)");

  auto* compute = app.add_subcommand("compute", "exact ex_P(n, S_{m,l}) by exhaustive search");
  int c_n = 0;
  std::string c_pattern = "3,3";
  bool c_unsafe = false;
  int c_cap = 100;
  compute->add_option("-n,--order", c_n, "number of vertices")->required();
  compute->add_option("-p,--pattern", c_pattern, "forbidden double star m,l");
  compute->add_flag("--unsafe-large", c_unsafe, "raise the n <= 10 guard to 12");
  compute->add_option("--max-witnesses", c_cap, "extremal graphs to keep");

  auto* decompose = app.add_subcommand("decompose", "star-block base, weights, and audit certificate");
  std::string d_input;
  int d_rounds = 4;
  bool d_pcode = false;
  decompose->add_option("-i,--input", d_input, "graph6 file (default: stdin)");
  decompose->add_flag("--planar-code", d_pcode, "input is binary planar_code");
  decompose->add_option("--max-rounds", d_rounds, "refinement round limit");

  auto* construct_cmd = app.add_subcommand("construct", "build an extremal family member");
  std::string r_recipe;
  int r_n = 0;
  construct_cmd
      ->add_option("recipe", r_recipe,
                   "double-wheel | triangle-forest | glued-stars | four-regular-8 | four-regular-9 | "
                   "component-66 | component-65 | maximal-planar")
      ->required();
  construct_cmd->add_option("-n,--order", r_n, "number of vertices (parametric families)");

  auto* detect = app.add_subcommand("detect", "double-star detection with witnesses");
  std::string t_input, t_pattern = "3,3";
  bool t_pcode = false;
  detect->add_option("-i,--input", t_input, "graph6 file (default: stdin)");
  detect->add_flag("--planar-code", t_pcode, "input is binary planar_code");
  detect->add_option("-p,--pattern", t_pattern, "double star m,l");

  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free graph stream");
  int e_n = 0, e_min = 0, e_max = -1;
  bool e_planar = false, e_connected = false;
  std::string e_forbid, e_stats;
  enumerate->add_option("-n,--order", e_n, "number of vertices")->required();
  enumerate->add_option("--min-edges", e_min, "minimum edge count");
  enumerate->add_option("--max-edges", e_max, "maximum edge count");
  enumerate->add_flag("--planar", e_planar, "keep planar graphs only");
  enumerate->add_option("--forbid", e_forbid, "forbidden double star m,l");
  enumerate->add_flag("--connected", e_connected, "keep connected graphs only");
  enumerate->add_option("--stats", e_stats, "write run statistics JSON here instead of stderr");

  auto* verify = app.add_subcommand("verify", "closed-form table and corpus certificates");
  int v_nmax = 8, v_weights = -1, v_classes = -1;
  verify->add_option("--n-max", v_nmax, "closed-form table up to this order");
  verify->add_option("--weights-corpus", v_weights, "weight-certificate corpus at this order");
  verify->add_option("--degree-classes", v_classes, "degree-class corpus at this order");

  auto* search = app.add_subcommand("search", "look for a pattern-free planar graph of a given size");
  int s_n = 0, s_target = 0;
  std::string s_pattern = "3,3";
  search->add_option("-n,--order", s_n, "number of vertices")->required();
  search->add_option("-p,--pattern", s_pattern, "forbidden double star m,l");
  search->add_option("-e,--edges", s_target, "exact edge count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(c_n, c_pattern, format, workers, c_unsafe, c_cap);
    if (decompose->parsed()) return cmd_decompose(d_input, d_pcode, format, d_rounds);
    if (construct_cmd->parsed()) return cmd_construct(r_recipe, r_n, format);
    if (detect->parsed()) return cmd_detect(t_input, t_pcode, t_pattern, format);
    if (enumerate->parsed())
      return cmd_enumerate(e_n, e_min, e_max, e_planar, e_forbid, e_connected, workers, e_stats);
    if (verify->parsed()) return cmd_verify(v_nmax, v_weights, v_classes, format, workers);
    if (search->parsed()) return cmd_search(s_n, s_pattern, s_target, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
