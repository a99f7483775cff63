#include "assoc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "assoc/bounds.hpp"
#include "assoc/enumerate.hpp"
#include "assoc/flip_graph.hpp"
#include "assoc/generators.hpp"
#include "assoc/io.hpp"
#include "assoc/split_bipartite.hpp"
#include "assoc/verify.hpp"

namespace assoc {

namespace {

// bare filenames land in ASSOC_SCRATCH_DIR when it is set
std::string resolve_output_path(const std::string& path) {
  if (path.empty() || path.find('/') != std::string::npos) return path;
  const char* scratch = std::getenv("ASSOC_SCRATCH_DIR");
  if (scratch == nullptr || *scratch == '\0') return path;
  return std::string(scratch) + "/" + path;
}

void write_or_print(const std::string& text, const std::string& out_path,
                    std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::string resolved = resolve_output_path(out_path);
  std::ofstream file(resolved);
  if (!file.good()) throw std::invalid_argument("cannot write to " + resolved);
  file << text;
}

int run_gen(const std::string& spec, const std::string& out_path, bool as_json,
            std::ostream& out) {
  Graph g = graph_from_spec(spec);
  if (as_json) {
    nlohmann::json j = graph_to_json(g);
    j["version"] = kToolVersion;
    j["spec"] = spec;
    write_or_print(j.dump(2) + "\n", out_path, out);
  } else {
    std::string text = "# assoc " + std::string(kToolVersion) + " gen " + spec +
                       "\n" + graph_to_edge_list(g);
    write_or_print(text, out_path, out);
  }
  return 0;
}

int run_enumerate(const std::string& graph_arg, bool list_trees, std::size_t cap,
                  bool as_json, std::ostream& out) {
  Graph g = load_graph(graph_arg);
  BigUint count = count_search_trees(g);
  if (as_json) {
    nlohmann::json j{{"version", kToolVersion},
                     {"graph", graph_arg},
                     {"count", count.to_string()}};
    if (list_trees) {
      nlohmann::json trees = nlohmann::json::array();
      for_each_search_tree(
          g, [&trees](const SearchTree& t) { trees.push_back(tree_to_text(t)); },
          cap);
      j["trees"] = trees;
    }
    out << j.dump(2) << "\n";
  } else {
    out << count.to_string() << "\n";
    if (list_trees)
      for_each_search_tree(
          g, [&out](const SearchTree& t) { out << tree_to_text(t) << "\n"; }, cap);
  }
  return 0;
}

SearchTree parse_tree_arg(const Graph& g, const std::string& arg) {
  std::ifstream in(arg);
  if (in.good()) {
    std::string line;
    std::getline(in, line);
    return tree_from_text(g, line);
  }
  if (!arg.empty() && arg.front() == '{')
    return tree_from_json(g, nlohmann::json::parse(arg));
  return tree_from_text(g, arg);
}

int run_distance(const std::string& graph_arg, const std::string& tree_a,
                 const std::string& tree_b, std::size_t cap, bool as_json,
                 bool timing, std::ostream& out) {
  Graph g = load_graph(graph_arg);
  SearchTree t1 = parse_tree_arg(g, tree_a);
  SearchTree t2 = parse_tree_arg(g, tree_b);
  if (!is_valid_search_tree(g, t1) || !is_valid_search_tree(g, t2))
    throw std::invalid_argument("input trees must be valid search trees");
  auto start = std::chrono::steady_clock::now();
  DistanceCertificate cert = distance(g, t1, t2, cap);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (as_json) {
    nlohmann::json witness = nlohmann::json::array();
    for (const Rotation& r : cert.witness)
      witness.push_back({{"parent", r.parent}, {"child", r.child}});
    nlohmann::json j{{"version", kToolVersion},
                     {"graph", graph_arg},
                     {"distance", cert.distance},
                     {"witness", witness}};
    if (timing) j["elapsed_ms"] = ms;
    out << j.dump(2) << "\n";
  } else {
    out << "distance " << cert.distance << "\n";
    for (const Rotation& r : cert.witness)
      out << "rotate child " << r.child << " (parent " << r.parent << ")\n";
  }
  return 0;
}

int run_diameter(const std::string& graph_arg, std::size_t cap, int threads,
                 bool as_json, bool timing, std::ostream& out) {
  Graph g = load_graph(graph_arg);
  auto start = std::chrono::steady_clock::now();
  FlipGraph fg = build_flip_graph(g, cap);
  DiameterResult result = diameter(fg, threads);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (as_json) {
    nlohmann::json j{{"version", kToolVersion},
                     {"graph", graph_arg},
                     {"nodes", result.nodes},
                     {"diameter", result.diameter},
                     {"witness",
                      {tree_to_text(fg.tree(result.from)),
                       tree_to_text(fg.tree(result.to))}}};
    if (timing) j["elapsed_ms"] = ms;
    out << j.dump(2) << "\n";
  } else {
    out << result.diameter << "\n";
  }
  return 0;
}

int run_verify(const std::string& id, const VerifyConfig& config, bool as_json,
               bool timing, const std::string& csv_path, std::ostream& out) {
  std::vector<std::string> ids;
  if (id == "all")
    ids = known_theorem_ids();
  else
    ids.push_back(id);
  bool all_pass = true;
  nlohmann::json reports = nlohmann::json::array();
  std::ostringstream csv;
  csv << "theorem,check,expected,actual,pass\n";
  for (const std::string& theorem : ids) {
    VerifyReport report = verify(theorem, config);
    all_pass = all_pass && report.pass();
    for (const VerifyCheck& check : report.checks) {
      std::string name = check.name;
      std::replace(name.begin(), name.end(), ',', ';');
      csv << report.theorem << ',' << name << ',' << check.expected << ','
          << check.actual << ',' << (check.pass ? "1" : "0") << "\n";
    }
    if (as_json) {
      reports.push_back(report_to_json(report, timing));
    } else {
      out << (report.pass() ? "PASS" : "FAIL") << " " << report.theorem << "\n";
      for (const VerifyCheck& check : report.checks)
        out << "  " << (check.pass ? "ok  " : "FAIL") << " " << check.name
            << ": expected " << check.expected << ", got " << check.actual
            << "\n";
    }
  }
  if (as_json)
    out << nlohmann::json{{"version", kToolVersion}, {"reports", reports}}.dump(2)
        << "\n";
  if (!csv_path.empty()) write_or_print(csv.str(), csv_path, out);
  return all_pass ? 0 : 1;
}

struct Range {
  int lo = 1, hi = 1;
};

Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("bad range: " + text);
  return r;
}

// random connected cograph: merge fragments by union or join, ending on a
// join so the result is connected
Graph random_cograph(std::mt19937_64& rng, int n) {
  struct Fragment {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
  };
  std::vector<Fragment> pool;
  for (int v = 0; v < n; ++v) pool.push_back({{v}, {}});
  while (pool.size() > 1) {
    std::size_t i = rng() % pool.size();
    std::size_t j = rng() % (pool.size() - 1);
    if (j >= i) ++j;
    Fragment merged = pool[i];
    const Fragment& other = pool[j];
    bool join = pool.size() == 2 || rng() % 2 == 0;
    if (join)
      for (int u : merged.vertices)
        for (int v : other.vertices) merged.edges.emplace_back(u, v);
    merged.vertices.insert(merged.vertices.end(), other.vertices.begin(),
                           other.vertices.end());
    merged.edges.insert(merged.edges.end(), other.edges.begin(),
                        other.edges.end());
    if (i > j) std::swap(i, j);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    pool[i] = std::move(merged);
  }
  return Graph(n, pool[0].edges);
}

// open question: is the diameter of a connected cograph associahedron at
// most 2m? reports rows, asserts nothing
int run_sweep_cograph(std::uint64_t seed, int count, int max_n,
                      const std::string& csv_path, std::size_t cap,
                      std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::ostringstream csv;
  csv << "n,m,diameter,two_m,within\n";
  for (int row = 0; row < count; ++row) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    Graph g = random_cograph(rng, n);
    int m = g.edge_count();
    std::string diam, within;
    try {
      int exact = diameter(g, cap).diameter;
      diam = std::to_string(exact);
      within = exact <= 2 * m ? "1" : "0";
    } catch (const CapExceeded&) {
      // leave the row without an exact value
    }
    csv << n << ',' << m << ',' << diam << ',' << 2 * m << ',' << within << "\n";
  }
  write_or_print(csv.str(), csv_path, out);
  return 0;
}

int run_sweep_families(const std::string& csv_path, std::size_t cap,
                       std::ostream& out) {
  std::ostringstream csv;
  csv << "graph,n,m,lower,upper,tree_depth,td_upper,pathwidth,exact\n";
  for (const BoundReport& row : family_bound_table(cap)) {
    auto opt = [](const auto& value) {
      return value ? std::to_string(*value) : std::string();
    };
    csv << row.spec << ',' << row.n << ',' << row.m << ',' << row.lower << ','
        << row.upper << ',' << opt(row.tree_depth) << ',' << opt(row.td_upper)
        << ',' << opt(row.pathwidth) << ',' << opt(row.exact) << "\n";
  }
  write_or_print(csv.str(), csv_path, out);
  return 0;
}

int run_sweep(const std::string& family, const std::string& p_range,
              const std::string& q_range, const std::string& csv_path,
              std::size_t cap, std::ostream& out) {
  if (family != "split")
    throw std::invalid_argument(
        "sweep families are 'split', 'families', and 'cograph'");
  Range pr = parse_range(p_range), qr = parse_range(q_range);
  std::ostringstream csv;
  csv << "p,q,alpha,beta,lower,upper_path,formula,bfs_exact\n";
  for (int p = pr.lo; p <= pr.hi; ++p) {
    for (int q = qr.lo; q <= qr.hi; ++q) {
      Graph spk = complete_split(p, q);
      SplitWitnessParams params = choose_witness_params(p, q);
      auto [t1, t2] = split_witnesses(spk, p, q, params);
      RotationSequence seq = q <= 4 * p
                                 ? split_upper_path_balanced(spk, p, q, t1, t2)
                                 : split_upper_path(spk, p, q, t1, t2);
      std::string exact;
      try {
        exact = std::to_string(diameter(spk, cap).diameter);
      } catch (const CapExceeded&) {
        // column stays empty when the skeleton exceeds the cap
      }
      csv << p << ',' << q << ',' << params.alpha << ',' << params.beta << ','
          << split_lower_bound(p, q) << ',' << seq.size() << ','
          << split_diameter(p, q) << ',' << exact << "\n";
    }
  }
  write_or_print(csv.str(), csv_path, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"graph associahedra: search trees, rotations, exact diameters"};
  app.require_subcommand(1);

  std::string gen_spec, gen_out;
  bool gen_json = false;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph from a family spec");
  gen->add_option("spec", gen_spec, "family spec, e.g. split:3,4")->required();
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->add_flag("--json", gen_json, "emit JSON instead of an edge list");

  std::string enum_graph;
  bool enum_trees = false, enum_json = false;
  std::size_t enum_cap = kDefaultEnumCap;
  CLI::App* enumerate = app.add_subcommand("enumerate", "count (and list) search trees");
  enumerate->add_option("graph", enum_graph, "family spec or graph file")->required();
  enumerate->add_flag("--trees", enum_trees, "print every tree");
  enumerate->add_flag("--json", enum_json, "JSON output");
  enumerate->add_option("--cap", enum_cap, "enumeration cap");

  std::string dist_graph, dist_a, dist_b;
  bool dist_json = false, dist_timing = false;
  std::size_t dist_cap = kDefaultNodeCap;
  CLI::App* dist = app.add_subcommand("distance", "exact rotation distance");
  dist->add_option("graph", dist_graph)->required();
  dist->add_option("treeA", dist_a, "tree as 'root; v:parent, ...' or a file")
      ->required();
  dist->add_option("treeB", dist_b)->required();
  dist->add_flag("--json", dist_json, "JSON output");
  dist->add_flag("--timing", dist_timing, "include elapsed_ms (breaks determinism)");
  dist->add_option("--cap", dist_cap, "visited-state cap");

  std::string diam_graph;
  bool diam_json = false, diam_timing = false;
  std::size_t diam_cap = kDefaultNodeCap;
  int diam_threads = 0;
  CLI::App* diam = app.add_subcommand("diameter", "exact flip-graph diameter");
  diam->add_option("graph", diam_graph)->required();
  diam->add_flag("--json", diam_json, "JSON output");
  diam->add_flag("--timing", diam_timing, "include elapsed_ms (breaks determinism)");
  diam->add_option("--cap", diam_cap, "skeleton node cap");
  diam->add_option("--threads", diam_threads, "worker threads (0 = default)");

  std::string verify_id, verify_config_path, verify_csv;
  bool verify_json = false, verify_timing = false;
  VerifyConfig verify_config;
  CLI::App* ver = app.add_subcommand("verify", "run theorem verification checks");
  ver->add_option("theorem", verify_id, "theorem id or 'all'")->required();
  ver->add_option("--scale", verify_config.scale, "scale factor for sampled checks");
  ver->add_option("--seed", verify_config.seed, "seed for sampled checks");
  ver->add_option("--cap", verify_config.node_cap, "skeleton node cap");
  ver->add_option("--threads", verify_config.threads, "worker threads");
  ver->add_option("--config", verify_config_path, "JSON config file");
  ver->add_option("--csv", verify_csv, "also write an aggregate CSV of all checks");
  ver->add_flag("--json", verify_json, "JSON output");
  ver->add_flag("--timing", verify_timing, "include elapsed_ms (breaks determinism)");

  std::string sweep_family, sweep_p = "1..4", sweep_q = "1..12", sweep_csv;
  std::size_t sweep_cap = 200'000;
  std::uint64_t sweep_seed = 7;
  int sweep_count = 30, sweep_max_n = 7;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "formula/construction/BFS comparison (split, families, cograph)");
  sweep->add_option("family", sweep_family, "split | families | cograph")->required();
  sweep->add_option("--p", sweep_p, "range, e.g. 1..4");
  sweep->add_option("--q", sweep_q, "range, e.g. 1..12");
  sweep->add_option("--csv", sweep_csv, "CSV output file (default stdout)");
  sweep->add_option("--cap", sweep_cap, "skeleton cap for exact columns");
  sweep->add_option("--seed", sweep_seed, "seed (cograph sweep)");
  sweep->add_option("--count", sweep_count, "rows (cograph sweep)");
  sweep->add_option("--max-n", sweep_max_n, "largest vertex count (cograph sweep)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << nlohmann::json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_spec, gen_out, gen_json, out);
    if (enumerate->parsed())
      return run_enumerate(enum_graph, enum_trees, enum_cap, enum_json, out);
    if (dist->parsed())
      return run_distance(dist_graph, dist_a, dist_b, dist_cap, dist_json,
                          dist_timing, out);
    if (diam->parsed())
      return run_diameter(diam_graph, diam_cap, diam_threads, diam_json,
                          diam_timing, out);
    if (ver->parsed()) {
      if (!verify_config_path.empty()) {
        std::ifstream in(verify_config_path);
        if (!in.good())
          throw std::invalid_argument("cannot read config: " + verify_config_path);
        nlohmann::json j;
        in >> j;
        VerifyConfig from_file = VerifyConfig::from_json(j);
        // explicit flags win over the file
        VerifyConfig defaults;
        if (verify_config.scale == defaults.scale) verify_config.scale = from_file.scale;
        if (verify_config.seed == defaults.seed) verify_config.seed = from_file.seed;
        if (verify_config.node_cap == defaults.node_cap)
          verify_config.node_cap = from_file.node_cap;
        if (verify_config.threads == defaults.threads)
          verify_config.threads = from_file.threads;
      }
      return run_verify(verify_id, verify_config, verify_json, verify_timing,
                        verify_csv, out);
    }
    if (sweep->parsed()) {
      if (sweep_family == "families")
        return run_sweep_families(sweep_csv, sweep_cap, out);
      if (sweep_family == "cograph")
        return run_sweep_cograph(sweep_seed, sweep_count, sweep_max_n, sweep_csv,
                                 sweep_cap, out);
      return run_sweep(sweep_family, sweep_p, sweep_q, sweep_csv, sweep_cap, out);
    }
  } catch (const CapExceeded& e) {
    err << nlohmann::json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << nlohmann::json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace assoc
