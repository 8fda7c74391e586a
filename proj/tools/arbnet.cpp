#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <arbnet/arbnet.hpp>

namespace {

using namespace arbnet;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;              // empty: stdout
  std::string format = "edgelist";  // graph output: edgelist | graph6
  std::string dot;
  std::string explained_out, ancestry_out;
  std::string summary;
  std::vector<std::string> suites;
  oracle::SuiteOptions suite;
  bool by_components = false;
  bool axioms = false;
  bool exhaustive = false;
  int verbosity = 0;
};

// Budget defaults, overridable from the environment before flags are parsed.
oracle::EnumerationBudget budget_from_env() {
  oracle::EnumerationBudget b;
  if (const char* s = std::getenv("ARBNET_MAX_NETWORKS")) b.max_networks = std::stoull(s);
  if (const char* s = std::getenv("ARBNET_TIME_CAP")) b.time_cap = std::stod(s);
  return b;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::string describe(const Witness& w) { return "induced " + to_string(w.kind) + " on " + vertex_list(w.vertices); }

std::string format_graph(const UndirectedGraph& g, const std::string& format) {
  return format == "graph6" ? io::serialize_graph6(g) + "\n" : io::serialize_edge_list(g);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    io::write_file(path, text);
}

UndirectedGraph load_graph(const std::string& path) { return io::parse_graph(io::read_file(path)); }
LabelledNetwork load_network(const std::string& path) { return io::parse_network(io::read_file(path)); }

int cmd_recognize(const RunConfig& cfg) {
  int status = kPass;
  for (const auto& path : cfg.inputs) {
    if (cfg.inputs.size() > 1) std::cout << "== " << path << "\n";
    UndirectedGraph g;
    try {
      g = load_graph(path);
    } catch (const ParseError& e) {
      std::cerr << path << ": " << e.what() << "\n";
      status = kBadInput;
      continue;
    }
    const auto r = classify(g);
    auto line = [](const char* key, bool value, const std::optional<Witness>& w) {
      std::cout << key << "=" << (value ? "true" : "false");
      if (w) std::cout << "  (" << describe(*w) << ")";
      std::cout << "\n";
    };
    std::cout << "vertices=" << g.size() << "\nedges=" << g.edge_count() << "\n";
    std::cout << "connected=" << (is_connected(g) ? "true" : "false") << "\n";
    line("cograph", r.cograph, r.cograph_witness);
    line("chordal", r.chordal, r.chordal_witness);
    line("hole_free", r.hole_free, r.hole_witness);
    line("ptolemaic", r.ptolemaic, r.ptolemaic_witness);
    line("distance_hereditary", r.distance_hereditary, r.dh_witness);
  }
  return status;
}

int cmd_explain(const RunConfig& cfg) {
  const auto g = load_graph(cfg.inputs.front());
  std::optional<LabelledArborealNetwork> ln;
  try {
    ln = cfg.by_components ? explain_by_components(g) : explain_dh(g);
  } catch (const NotDistanceHereditary& e) {
    std::cerr << "error: graph is not distance-hereditary";
    if (e.witness()) std::cerr << "; witness: " << describe(*e.witness());
    std::cerr << "\n";
    return kBadInput;
  }
  const std::string text = io::serialize_network(*ln);
  if (!verify_explains(io::parse_network(text), g))
    throw InvariantViolation("constructed network does not explain its input");
  emit(cfg.output, text);
  if (!cfg.dot.empty()) emit(cfg.dot, io::to_dot(*ln));
  if (cfg.verbosity > 0)
    std::cerr << ln->network().size() << " vertices, " << ln->network().roots().size() << " roots\n";
  return kPass;
}

int cmd_eval(const RunConfig& cfg) {
  const auto ln = load_network(cfg.inputs.front());
  const auto c = explained_graph(ln);
  const auto a = shared_ancestry_graph(ln.network());
  std::cout << "# explained graph\n" << format_graph(c, cfg.format);
  std::cout << "# shared-ancestry graph\n" << format_graph(a, cfg.format);
  if (!cfg.explained_out.empty()) io::write_file(cfg.explained_out, format_graph(c, cfg.format));
  if (!cfg.ancestry_out.empty()) io::write_file(cfg.ancestry_out, format_graph(a, cfg.format));
  return kPass;
}

int cmd_verify(const RunConfig& cfg) {
  const auto ln = load_network(cfg.inputs[0]);
  const auto g = load_graph(cfg.inputs[1]);
  if (verify_explains(ln, g)) {
    std::cout << "explains\n";
    return kPass;
  }
  const auto c = explained_graph(ln);
  std::cout << "does not explain\n";
  for (auto [u, v] : g.edges())
    if (!c.adjacent(u, v)) std::cout << "missing edge " << u << " " << v << "\n";
  for (auto [u, v] : c.edges())
    if (!g.adjacent(u, v)) std::cout << "extra edge " << u << " " << v << "\n";
  return kFail;
}

int cmd_compat(const RunConfig& cfg) {
  const auto g = load_graph(cfg.inputs[0]);
  const auto gstar = load_graph(cfg.inputs[1]);
  const auto r = check_conditions_E(g, gstar, cfg.axioms);
  auto quad = [](const Quadruple& q) { return vertex_list({q.begin(), q.end()}); };
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };

  std::cout << "E1 " << verdict(r.e1);
  if (r.e1_witness) std::cout << "  supergraph has an " << describe(*r.e1_witness);
  else if (!r.e1) std::cout << "  supergraph is disconnected";
  std::cout << "\nE2 " << verdict(r.e2);
  if (r.e2_witness) std::cout << "  P4 inside a supergraph clique: " << quad(*r.e2_witness);
  std::cout << "\nE3 " << verdict(r.e3);
  if (r.e3_witness)
    std::cout << "  asymmetric diamond (x y z u): " << quad(r.e3_witness->vertices) << ", type "
              << r.e3_witness->type();
  std::cout << "\n";
  if (r.axioms) {
    const auto& a = *r.axioms;
    std::cout << "A1 " << verdict(a.a1) << "\nA2 " << verdict(a.a2);
    if (!a.a2_witness.empty()) std::cout << "  " << vertex_list(a.a2_witness);
    std::cout << "\nA3 " << verdict(a.a3);
    if (a.a3_witness) std::cout << "  " << quad(*a.a3_witness);
    std::cout << "\nA4 " << verdict(a.a4);
    if (a.a4_witness) std::cout << "  " << quad(*a.a4_witness);
    std::cout << "\n";
  }
  std::cout << "compatible=" << (r.compatible() ? "true" : "false") << "\n";
  return r.compatible() ? kPass : kFail;
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

int cmd_two_root(const RunConfig& cfg) {
  const std::string text = io::read_file(cfg.inputs.front());
  if (!looks_like_json(text)) {
    const auto r = check_two_root_conditions(io::parse_graph(text));
    std::cout << "distance_hereditary=" << (r.distance_hereditary ? "true" : "false");
    if (r.obstruction) std::cout << "  (" << describe(*r.obstruction) << ")";
    std::cout << "\nnon_cograph_components=" << r.non_cograph_components << "\n";
    std::cout << "necessary=" << to_string(r.necessary) << "\n";
    std::cout << "galled_tree_explainable=" << to_string(r.galled_tree_explainable) << "\n";
    return r.necessary == Verdict::Met ? kPass : kFail;
  }

  const auto ln = io::parse_network(text);
  const auto roots = ln.network().roots().size();
  if (roots == 2) {
    const auto bgt = two_root_to_basic_galled(LabelledArborealNetwork(ln));
    if (cfg.verbosity > 0)
      std::cerr << "cycle paths " << bgt.first_length() << " and " << bgt.second_length() << ": "
                << to_string(classify_cycle(bgt)) << "\n";
    emit(cfg.output, io::serialize_network(bgt.labelled()));
    return kPass;
  }
  if (roots == 1) {
    BasicGalledTree bgt(ln);
    if (ln.label(bgt.root()) == 1) bgt = normalize_basic_to_zero(bgt);
    emit(cfg.output, io::serialize_network(basic_galled_to_two_root(bgt)));
    return kPass;
  }
  throw PreconditionError("two-root expects a network with two roots or a basic galled tree, got " +
                          std::to_string(roots) + " roots");
}

int cmd_bruteforce(const RunConfig& cfg) {
  const auto g = load_graph(cfg.inputs.front());
  if (g.size() < 2) throw PreconditionError("bruteforce needs at least two vertices");
  auto budget = cfg.suite.budget;
  budget.max_leaves = std::max(budget.max_leaves, g.size());
  oracle::BruteforceResult r;
  try {
    r = oracle::explainable_bruteforce(g, budget, cfg.exhaustive);
  } catch (const oracle::Truncated& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kBadInput;
  }
  std::cout << "explainable=" << (r.explainable ? "true" : "false") << "\n";
  std::cout << "networks_checked=" << r.networks_checked << "\n";
  if (cfg.exhaustive && r.explainable) {
    std::cout << "root_counts=";
    bool first = true;
    for (auto k : r.witness_root_counts) std::cout << (first ? "" : " ") << k, first = false;
    std::cout << "\n";
  }
  if (r.witness && !cfg.output.empty()) io::write_file(cfg.output, io::serialize_network(*r.witness));
  return r.explainable ? kPass : kFail;
}

int cmd_oracle(const RunConfig& cfg) {
  std::vector<std::string> names = cfg.suites;
  if (names.empty() || (names.size() == 1 && names.front() == "all")) names = oracle::suite_names();
  for (const auto& n : names) {
    const auto& known = oracle::suite_names();
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw PreconditionError("unknown suite '" + n + "'");
  }

  bool all_passed = true;
  nlohmann::json summary;
  summary["options"] = {{"max_n", cfg.suite.max_n},
                        {"relabelings", cfg.suite.relabelings},
                        {"random_pairs", cfg.suite.random_pairs},
                        {"random_two_root", cfg.suite.random_two_root},
                        {"seed", cfg.suite.seed},
                        {"max_networks", cfg.suite.budget.max_networks},
                        {"time_cap", cfg.suite.budget.time_cap}};
  summary["suites"] = nlohmann::json::array();
  for (const auto& n : names) {
    const auto r = oracle::run_suite(n, cfg.suite);
    all_passed = all_passed && r.passed;
    std::cout << r.name << " " << (r.passed ? "PASS" : "FAIL") << " checked=" << r.checked << " seconds=" << r.seconds
              << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    summary["suites"].push_back(
        {{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"seconds", r.seconds}, {"failures", r.failures}});
  }
  summary["passed"] = all_passed;
  if (!cfg.summary.empty()) io::write_file(cfg.summary, summary.dump(2) + "\n");
  return all_passed ? kPass : kFail;
}

int run(const RunConfig& cfg) {
  if (cfg.command == "recognize") return cmd_recognize(cfg);
  if (cfg.command == "explain") return cmd_explain(cfg);
  if (cfg.command == "eval") return cmd_eval(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "compat") return cmd_compat(cfg);
  if (cfg.command == "two-root") return cmd_two_root(cfg);
  if (cfg.command == "bruteforce") return cmd_bruteforce(cfg);
  return cmd_oracle(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.suite.budget = budget_from_env();

  CLI::App app{"Distance-hereditary graphs and labelled arboreal networks"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", cfg.verbosity, "More diagnostics on stderr");
  app.add_option("--max-networks", cfg.suite.budget.max_networks, "Enumeration cap (env ARBNET_MAX_NETWORKS)");
  app.add_option("--time-cap", cfg.suite.budget.time_cap, "Enumeration time cap in seconds (env ARBNET_TIME_CAP)");

  auto* recognize = app.add_subcommand("recognize", "Report graph classes with witnesses");
  recognize->add_option("graphs", cfg.inputs, "Edge-list or graph6 files")->required()->check(CLI::ExistingFile);

  auto* explain = app.add_subcommand("explain", "Build a labelled arboreal network explaining a graph");
  explain->add_option("graph", cfg.inputs, "Graph file")->required()->expected(1)->check(CLI::ExistingFile);
  explain->add_option("-o,--output", cfg.output, "Network file (default stdout)");
  explain->add_option("--dot", cfg.dot, "Also write a Graphviz drawing");
  explain->add_flag("--by-components", cfg.by_components, "Explain each component, then merge");

  auto* eval = app.add_subcommand("eval", "Print the explained and shared-ancestry graphs of a network");
  eval->add_option("network", cfg.inputs, "Network file")->required()->expected(1)->check(CLI::ExistingFile);
  eval->add_option("--format", cfg.format, "Graph format")->check(CLI::IsMember({"edgelist", "graph6"}));
  eval->add_option("--explained", cfg.explained_out, "Write the explained graph here");
  eval->add_option("--ancestry", cfg.ancestry_out, "Write the shared-ancestry graph here");

  auto* verify = app.add_subcommand("verify", "Exit 0 if the network explains the graph, 1 otherwise");
  verify->add_option("files", cfg.inputs, "Network file, graph file")->required()->expected(2)->check(CLI::ExistingFile);

  auto* compat = app.add_subcommand("compat", "Can a network explain the graph with this shared-ancestry graph?");
  compat->add_option("files", cfg.inputs, "Graph file, supergraph file")->required()->expected(2)->check(CLI::ExistingFile);
  compat->add_flag("--axioms", cfg.axioms, "Also check the symbolic-map axioms");

  auto* two_root = app.add_subcommand("two-root", "Two-root network <-> basic galled tree, or graph conditions");
  two_root->add_option("input", cfg.inputs, "Network or graph file")->required()->expected(1)->check(CLI::ExistingFile);
  two_root->add_option("-o,--output", cfg.output, "Network file (default stdout)");

  auto* brute = app.add_subcommand("bruteforce", "Search all small arboreal networks for one explaining a graph");
  brute->add_option("graph", cfg.inputs, "Graph file")->required()->expected(1)->check(CLI::ExistingFile);
  brute->add_option("-o,--output", cfg.output, "Write the first explaining network here");
  brute->add_flag("--exhaustive", cfg.exhaustive, "Collect the root counts of every explaining network");

  auto* orc = app.add_subcommand("oracle", "Run brute-force verification suites");
  orc->add_option("suites", cfg.suites, "Suite names, or 'all' (default)");
  orc->add_option("--max-n", cfg.suite.max_n, "Largest graph size enumerated")->check(CLI::Range(1, 7));
  orc->add_option("--relabelings", cfg.suite.relabelings, "Random labellings per network (connectivity)");
  orc->add_option("--pairs", cfg.suite.random_pairs, "Random network pairs (lcc-root-count)");
  orc->add_option("--two-root-samples", cfg.suite.random_two_root, "Random two-root networks (two-root)");
  orc->add_option("--seed", cfg.suite.seed, "Random seed");
  orc->add_option("--summary", cfg.summary, "Write a JSON summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kBadInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return run(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidNetwork& e) {
    std::cerr << "invalid network: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
