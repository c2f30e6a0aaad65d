// Command-line front end: one subcommand per library operation.

#include <ckhopf/ckhopf.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ckhopf;
using json = nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const std::string& text) const
  {
    if (path.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << text << '\n';
  }

  bool text() const { return format == "text"; }
};

void add_output_options(CLI::App* cmd, Output& out)
{
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", out.path, "Write output to this file instead of stdout");
}

Budget budget_from_env()
{
  Budget b;
  if (const char* env = std::getenv("CKHOPF_BUDGET")) {
    try {
      b.max_candidates = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("CKHOPF_BUDGET is not a number: ") + env);
    }
  }
  return b;
}

// A graph argument as given: the raw description keeps the caller's half-edge labels.
struct GraphInput {
  RawGraph raw;
  Graph graph;
};

json read_json_file(const std::string& path) { return io::detail::parse_text(io::read_file(path)); }

GraphInput load_graph(const std::string& arg)
{
  if (const corpus::Named* named = corpus::find(arg)) {
    if (std::filesystem::exists(arg))
      std::cerr << "warning: '" << arg << "' names a corpus graph; ignoring the file of the same name\n";
    return {named->raw, named->graph};
  }
  if (!std::filesystem::exists(arg))
    throw Error(ErrorCode::ParseError, "'" + arg + "' is neither a corpus name nor a readable file");
  const json j = read_json_file(arg);
  Graph g = io::graph_from_json(j);
  RawGraph raw;
  raw.half_edges = j.at("half_edges").get<std::vector<long long>>();
  for (const auto& e : j.at("edges").get<std::vector<std::vector<long long>>>())
    raw.edges.push_back(e);
  raw.vertices = j.at("vertices").get<std::vector<std::vector<long long>>>();
  raw.external = j.at("external").get<std::vector<long long>>();
  return {raw, g};
}

// Either a single graph or a graph polynomial (a JSON array of terms).
GraphPoly load_poly(const std::string& arg)
{
  if (!corpus::find(arg) && std::filesystem::exists(arg)) {
    const json j = read_json_file(arg);
    if (j.is_array())
      return io::graph_poly_from_json(j);
  }
  return GraphPoly::basis(load_graph(arg).graph);
}

// "1,2;3,4" -> {{1,2},{3,4}} in the caller's labels.
std::vector<std::pair<long long, long long>> parse_edge_list(const std::string& text)
{
  std::vector<std::pair<long long, long long>> out;
  std::stringstream pairs(text);
  std::string item;
  while (std::getline(pairs, item, ';')) {
    if (item.empty())
      continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorCode::ParseError, "edge '" + item + "' must be written as a,b");
    try {
      out.emplace_back(std::stoll(item.substr(0, comma)), std::stoll(item.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "edge '" + item + "' must be two integers");
    }
  }
  return out;
}

std::vector<Edge> edges_in_input_labels(const GraphInput& in, const std::vector<std::pair<long long, long long>>& pairs)
{
  std::vector<long long> labels = in.raw.half_edges;
  std::sort(labels.begin(), labels.end());
  auto index = [&](long long label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
      throw Error(ErrorCode::NotInternalEdge, "unknown half-edge " + std::to_string(label));
    return static_cast<int>(it - labels.begin());
  };
  std::vector<Edge> out;
  for (auto [a, b] : pairs)
    out.emplace_back(index(a), index(b));
  return out;
}

std::string render(const GraphPoly& p, const Output& out)
{
  return out.text() ? io::to_text(p) : io::to_json(p).dump();
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Graph Hopf algebra and invariant tensor toolkit"};
  app.require_subcommand(1);
  Output out;

  int edges = 0;
  bool connected = false, connected_plus = false;
  auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes with a given edge count");
  enumerate->add_option("--edges", edges, "Number of edges")->required()->check(CLI::NonNegativeNumber);
  auto* conn_flag = enumerate->add_flag("--connected", connected, "Connected graphs only");
  enumerate->add_flag("--connected-plus", connected_plus, "Connected graphs with an internal edge")->excludes(conn_flag);
  add_output_options(enumerate, out);

  std::string graph_arg, second_arg, edge_list;
  auto* aut = app.add_subcommand("aut", "Automorphism count");
  aut->add_option("graph", graph_arg, "Corpus name or graph file")->required();
  add_output_options(aut, out);

  auto* contract = app.add_subcommand("contract", "Contract a set of internal edges");
  contract->add_option("graph", graph_arg, "Corpus name or graph file")->required();
  contract->add_option("--edges", edge_list, "Edges as half-edge label pairs, e.g. 1,2;3,4")->required();
  add_output_options(contract, out);

  bool full_term = false;
  auto* coproduct_cmd = app.add_subcommand("coproduct", "Subgraph coproduct");
  coproduct_cmd->add_option("graph", graph_arg, "Corpus name, graph file or polynomial file")->required();
  coproduct_cmd->add_flag("--full-subgraph-term", full_term, "Also sum over the full internal edge set");
  add_output_options(coproduct_cmd, out);

  auto* antipode_cmd = app.add_subcommand("antipode", "Antipode");
  antipode_cmd->add_option("graph", graph_arg, "Corpus name, graph file or polynomial file")->required();
  add_output_options(antipode_cmd, out);

  auto* insert = app.add_subcommand("insert", "Insertion product G1 o G2");
  insert->add_option("g1", graph_arg, "Host graph")->required();
  insert->add_option("g2", second_arg, "Inserted graph")->required();
  add_output_options(insert, out);

  int edge_bound = 0;
  auto* star = app.add_subcommand("star", "Star product G1 * G2");
  star->add_option("g1", graph_arg, "First factor")->required();
  star->add_option("g2", second_arg, "Second factor")->required();
  star->add_option("--edge-bound", edge_bound, "Largest edge count kept")->required();
  add_output_options(star, out);

  int dim = 0;
  auto* phi_cmd = app.add_subcommand("phi", "Graph to invariant tensor");
  phi_cmd->add_option("graph", graph_arg, "Corpus name, graph file or polynomial file")->required();
  phi_cmd->add_option("--dim", dim, "Dimension n")->required()->check(CLI::NonNegativeNumber);
  add_output_options(phi_cmd, out);

  std::string tensor_path;
  auto* psi_cmd = app.add_subcommand("psi", "Invariant tensor to graphs");
  psi_cmd->add_option("tensor", tensor_path, "Tensor file")->required()->check(CLI::ExistingFile);
  psi_cmd->add_option("--dim", dim, "Dimension n")->required()->check(CLI::NonNegativeNumber);
  add_output_options(psi_cmd, out);

  int m_dim = 0, n_dim = 0;
  auto* delta = app.add_subcommand("delta", "Split a tensor over dimension m+n");
  delta->add_option("tensor", tensor_path, "Tensor file")->required()->check(CLI::ExistingFile);
  delta->add_option("--m", m_dim, "Left dimension")->required()->check(CLI::NonNegativeNumber);
  delta->add_option("--n", n_dim, "Right dimension")->required()->check(CLI::NonNegativeNumber);
  add_output_options(delta, out);

  harness::SuiteParams params;
  std::string suite = "all";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = harness::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--max-edges", params.max_edges, "Largest edge count in the corpus")->check(CLI::Range(0, 4));
  verify->add_option("--dim", params.dimension, "Tensor dimension")->check(CLI::Range(1, 6));
  verify->add_option("--seed", params.seed, "Random seed");
  verify->add_flag("--full-subgraph-term", params.full_subgraph_term, "Use the full subgraph range in the coproduct");
  verify->add_flag("--timing", timing, "Include elapsed time in the JSON report");
  add_output_options(verify, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const Budget budget = budget_from_env();
    if (enumerate->parsed()) {
      const GraphFilter filter =
          connected_plus ? GraphFilter::ConnectedPlus : (connected ? GraphFilter::Connected : GraphFilter::All);
      const GraphList graphs = enumerate_graphs(edges, filter, budget);
      if (out.text()) {
        std::string s;
        for (const CanonicalForm& cf : graphs)
          s += io::graph_name(cf.graph) + '\n';
        s += std::to_string(graphs.size()) + " classes";
        out.emit(s);
      } else {
        json arr = json::array();
        for (const CanonicalForm& cf : graphs)
          arr.push_back(io::to_json(cf.graph));
        out.emit(arr.dump());
      }
    } else if (aut->parsed()) {
      const Integer count = automorphism_count(load_graph(graph_arg).graph);
      out.emit(out.text() ? count.str() : json{{"automorphisms", count.str()}}.dump());
    } else if (contract->parsed()) {
      const GraphInput in = load_graph(graph_arg);
      const std::vector<Edge> gamma = edges_in_input_labels(in, parse_edge_list(edge_list));
      const Graph result = contract_subgraph(in.graph, gamma);
      out.emit(out.text() ? io::graph_name(result) : io::to_json(result).dump());
    } else if (coproduct_cmd->parsed()) {
      const GraphTensorPoly d = coproduct(load_poly(graph_arg), CoproductOptions{full_term});
      out.emit(out.text() ? io::to_text(d) : io::to_json(d).dump());
    } else if (antipode_cmd->parsed()) {
      out.emit(render(antipode(load_poly(graph_arg)), out));
    } else if (insert->parsed()) {
      out.emit(render(insertion_product(load_poly(graph_arg), load_poly(second_arg)), out));
    } else if (star->parsed()) {
      out.emit(render(star_product(load_poly(graph_arg), load_poly(second_arg), edge_bound, budget), out));
    } else if (phi_cmd->parsed()) {
      const InvariantTensor t = phi(load_poly(graph_arg), dim);
      out.emit(out.text() ? io::to_text(t) : io::to_json(t).dump());
    } else if (psi_cmd->parsed()) {
      out.emit(render(psi(io::invariant_tensor_from_json(read_json_file(tensor_path)), dim), out));
    } else if (delta->parsed()) {
      const InvariantTensorPair p =
          tensor_delta(io::invariant_tensor_from_json(read_json_file(tensor_path)), m_dim, n_dim);
      out.emit(out.text() ? io::to_text(p) : io::to_json(p).dump());
    } else if (verify->parsed()) {
      params.budget = budget;
      const harness::VerificationReport report = harness::run_suite(suite, params);
      out.emit(out.text() ? harness::to_table(report) : harness::to_json(report, timing).dump());
      return report.passed() ? exit_ok : exit_failed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}
