#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stargraph/autgroup.hpp"
#include "stargraph/cosetgraph.hpp"
#include "stargraph/families.hpp"
#include "stargraph/localsym.hpp"
#include "stargraph/suites.hpp"

using namespace stargraph;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t param(const std::vector<std::string>& ps, std::size_t i, const std::string& family) {
  if (i >= ps.size()) throw UsageError("family '" + family + "' needs " + std::to_string(i + 1) + " parameter(s)");
  const std::string& s = ps[i];
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("parameter '" + s + "' is not a non-negative integer");
  return std::stoul(s);
}

ConstructedInstance build(const std::string& family, const std::vector<std::string>& ps, const Caps& caps) {
  static const std::map<std::string, std::size_t> arity{
      {"cycle", 1},   {"complete", 1}, {"complete-bipartite", 2}, {"spider", 1},        {"path", 1},
      {"odd", 1},     {"johnson", 2},  {"hamming", 2},            {"pg", 1},            {"hermitian-gq", 0},
      {"gf3", 1},     {"s-squared", 1}};
  auto it = arity.find(family);
  if (it == arity.end()) throw UsageError("unknown family '" + family + "'");
  if (ps.size() != it->second)
    throw UsageError("family '" + family + "' takes " + std::to_string(it->second) + " parameter(s)");
  auto p = [&](std::size_t i) { return param(ps, i, family); };
  if (family == "cycle") return cycle(p(0));
  if (family == "complete") return complete(p(0));
  if (family == "complete-bipartite") return complete_bipartite(p(0), p(1));
  if (family == "spider") return spider(p(0));
  if (family == "path") return path(p(0));
  if (family == "odd") return odd_graph(p(0), caps);
  if (family == "johnson") return johnson_incidence(p(0), p(1), caps);
  if (family == "hamming") return hamming_clique_incidence(p(0), p(1), caps);
  if (family == "pg") return pg_incidence(p(0));
  if (family == "hermitian-gq") return hermitian_gq();
  if (family == "gf3") return gf3_translate_graph(p(0), caps);
  return s_squared_example(p(0), caps);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_outputs(const ConstructedInstance& inst, const std::string& graph_path, const std::string& gens_path) {
  write_text(graph_path, serialize(inst.graph));
  if (gens_path.empty()) return;
  if (!inst.group) throw UsageError(inst.name + " comes without a group; use autgroup instead");
  std::ostringstream os;
  os << "# " << inst.group_name << ", order " << inst.group->order() << "\n";
  write_generators(os, inst.group->degree(), inst.group->generators());
  write_text(gens_path, os.str());
}

PermGroup load_group(const std::string& path) {
  auto gs = read_generators_file(path);
  return PermGroup(gs.degree, gs.generators);
}

Permutation load_single(const std::string& path) {
  auto gs = read_generators_file(path);
  if (gs.generators.size() != 1) throw UsageError(path + " must hold exactly one permutation");
  return gs.generators.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-transitivity and st(edge)-transitivity of finite graphs"};
  app.require_subcommand(1);
  Caps caps;
  unsigned long long seed = 0;
  app.add_option("--max-vertices", caps.max_vertices, "Largest graph accepted")->capture_default_str();
  app.add_option("--max-s", caps.max_s, "Largest s tried for s-arc-transitivity")->capture_default_str();
  app.add_option("--seed", seed, "Reserved; nothing is randomised")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Build a graph from a named family");
  std::string family;
  std::vector<std::string> params;
  std::string out_path = "-", gens_path;
  construct->add_option("family", family,
                        "cycle, complete, complete-bipartite, spider, path, odd, johnson, hamming, pg, "
                        "hermitian-gq, gf3, s-squared")
      ->required();
  construct->add_option("params", params, "Family parameters");
  construct->add_option("-o,--output", out_path, "Graph file ('-' for stdout)")->capture_default_str();
  construct->add_option("--generators", gens_path, "Also write the attached group's generators here");

  auto* analyze_cmd = app.add_subcommand("analyze", "Report star and st(edge) symmetry of a graph");
  std::string graph_path, group_path, report = "text";
  analyze_cmd->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--group", group_path, "Generators of G; default is the full automorphism group")
      ->check(CLI::ExistingFile);
  analyze_cmd->add_option("--report", report, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* aut_cmd = app.add_subcommand("autgroup", "Generators of the automorphism group");
  std::string aut_graph, aut_out = "-";
  aut_cmd->add_option("graph", aut_graph, "Graph file")->required()->check(CLI::ExistingFile);
  aut_cmd->add_option("-o,--output", aut_out, "Generator file ('-' for stdout)")->capture_default_str();

  auto* coset_cmd = app.add_subcommand("cosetgraph", "Coset graph constructions");
  coset_cmd->require_subcommand(1);
  std::string g_path, h_path, x_path, c_out = "-", c_gens;
  auto* sab = coset_cmd->add_subcommand("sabidussi", "Cos(G, H, g) on the right cosets of H");
  sab->add_option("G", g_path, "Generators of G")->required()->check(CLI::ExistingFile);
  sab->add_option("H", h_path, "Generators of H")->required()->check(CLI::ExistingFile);
  sab->add_option("g", x_path, "File with the single element g")->required()->check(CLI::ExistingFile);
  auto* bip = coset_cmd->add_subcommand("bipartite", "Cos(G, L, R) on the cosets of L and of R");
  bip->add_option("G", g_path, "Generators of G")->required()->check(CLI::ExistingFile);
  bip->add_option("L", h_path, "Generators of L")->required()->check(CLI::ExistingFile);
  bip->add_option("R", x_path, "Generators of R")->required()->check(CLI::ExistingFile);
  for (auto* c : {sab, bip}) {
    c->add_option("-o,--output", c_out, "Graph file ('-' for stdout)")->capture_default_str();
    c->add_option("--generators", c_gens, "Also write G's action on the vertices here");
  }

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "small-valency, vertex-transitive, vertex-intransitive, coset or all")
      ->required();

  for (auto* c : {construct, analyze_cmd, aut_cmd, coset_cmd, verify}) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*construct) {
      write_outputs(build(family, params, caps), out_path, gens_path);
      return 0;
    }
    if (*analyze_cmd) {
      Graph g = read_graph_file(graph_path);
      std::optional<PermGroup> group;
      if (!group_path.empty()) group = load_group(group_path);
      auto r = analyze(g, group, group_path, caps);
      std::cout << (report == "json" ? report_json(r) + "\n" : report_text(r));
      return r.falsified() ? 2 : 0;
    }
    if (*aut_cmd) {
      Graph g = read_graph_file(aut_graph);
      PermGroup aut = automorphism_group(g, caps.aut_vertices);
      std::ostringstream os;
      os << "# order " << aut.order() << "\n";
      write_generators(os, aut.degree(), aut.generators());
      write_text(aut_out, os.str());
      return 0;
    }
    if (*coset_cmd) {
      PermGroup G = load_group(g_path);
      ConstructedInstance inst = *sab ? sabidussi(G, load_group(h_path), load_single(x_path), caps.max_coset_index)
                                      : bipartite_coset(G, load_group(h_path), load_group(x_path), caps.max_coset_index);
      write_outputs(inst, c_out, c_gens);
      return 0;
    }
    auto result = run_suite(suite);
    std::cout << format_suite(result);
    return result.all_pass() ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
