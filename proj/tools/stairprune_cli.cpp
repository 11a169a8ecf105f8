// command-line front end; links the C API only
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "stairprune.h"

namespace {

struct ModuleDeleter {
  void operator()(sp_module* m) const { sp_module_free(m); }
};
using ModulePtr = std::unique_ptr<sp_module, ModuleDeleter>;

struct StringDeleter {
  void operator()(char* s) const { sp_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// exits with the library's status code on failure
void check(int status) {
  if (status == SP_OK) return;
  std::cerr << "error: " << sp_last_error() << "\n";
  std::exit(status);
}

ModulePtr load_module(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(SP_ERROR_PARSE);
  }
  std::ostringstream text;
  text << in.rdbuf();
  sp_module* raw = nullptr;
  check(sp_module_parse_json(text.str().c_str(), &raw));
  return ModulePtr(raw);
}

void write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(SP_ERROR_VALIDATION);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pruning and distances for staircase upset-decomposable modules"};
  app.require_subcommand(1);

  // prune
  std::string prune_input, prune_alpha, prune_output;
  auto* cmd_prune = app.add_subcommand("prune", "write the alpha-pruning of a module");
  cmd_prune->add_option("input", prune_input, "module JSON file")->required();
  cmd_prune->add_option("--alpha", prune_alpha, "pruning scale (rational)")->required();
  cmd_prune->add_option("-o,--output", prune_output, "output file (default stdout)");

  // distances
  std::string dist_a, dist_b;
  std::string dp_tol = "1/1000000000";
  bool dp_exact = false;
  std::string di_field = "f2";
  int di_max_r = 4;
  auto* cmd_dp = app.add_subcommand("dp", "pruning distance between two modules");
  cmd_dp->add_option("a", dist_a, "first module JSON file")->required();
  cmd_dp->add_option("b", dist_b, "second module JSON file")->required();
  cmd_dp->add_option("--tol", dp_tol, "bisection tolerance (rational, default 1/1000000000)");
  cmd_dp->add_flag("--exact", dp_exact, "snap the bracket to a verified exact value");
  auto* cmd_db = app.add_subcommand("db", "bottleneck distance between two modules");
  cmd_db->add_option("a", dist_a, "first module JSON file")->required();
  cmd_db->add_option("b", dist_b, "second module JSON file")->required();
  auto* cmd_di = app.add_subcommand("di", "small-scale interleaving distance (exhaustive)");
  cmd_di->add_option("a", dist_a, "first module JSON file")->required();
  cmd_di->add_option("b", dist_b, "second module JSON file")->required();
  cmd_di->add_option("--field", di_field, "coefficient field: f2 or f3 (default f2)");
  cmd_di->add_option("--max-r", di_max_r, "summand count cap for the search (default 4)");

  // graph
  std::string graph_input, graph_alpha, graph_output;
  bool graph_dot = false;
  auto* cmd_graph = app.add_subcommand("graph", "emit the shift graph at a given alpha");
  cmd_graph->add_option("input", graph_input, "module JSON file")->required();
  cmd_graph->add_option("--alpha", graph_alpha, "graph scale (rational)")->required();
  cmd_graph->add_flag("--dot", graph_dot, "DOT format (the default and only format)");
  cmd_graph->add_option("-o,--output", graph_output, "output file (default stdout)");

  // gen
  std::uint64_t gen_seed = 0;
  int gen_r = 3, gen_dim = 2, gen_gens = 3, gen_bound = 9;
  std::string gen_output;
  auto* cmd_gen = app.add_subcommand("gen", "write a deterministic random module");
  cmd_gen->add_option("--seed", gen_seed, "generator seed (default 0)");
  cmd_gen->add_option("--r", gen_r, "summand count (default 3)");
  cmd_gen->add_option("--dim", gen_dim, "ambient dimension (default 2)");
  cmd_gen->add_option("--gens", gen_gens, "generators drawn per summand (default 3)");
  cmd_gen->add_option("--coord-bound", gen_bound, "coordinates drawn from [-b, b] (default 9)");
  cmd_gen->add_option("-o,--output", gen_output, "output file (default stdout)");

  // plot
  std::string plot_input, plot_output;
  auto* cmd_plot = app.add_subcommand("plot", "render staircase boundaries as SVG (dim 2)");
  cmd_plot->add_option("input", plot_input, "module JSON file")->required();
  cmd_plot->add_option("-o,--output", plot_output, "output file (default stdout)");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the built-in verification checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (cmd_prune->parsed()) {
    ModulePtr m = load_module(prune_input);
    sp_module* pruned = nullptr;
    check(sp_prune(m.get(), prune_alpha.c_str(), &pruned));
    ModulePtr holder(pruned);
    StringPtr json;
    char* raw = nullptr;
    check(sp_module_to_json(pruned, &raw));
    json.reset(raw);
    write_output(prune_output, json.get());
  } else if (cmd_dp->parsed() || cmd_db->parsed() || cmd_di->parsed()) {
    ModulePtr a = load_module(dist_a);
    ModulePtr b = load_module(dist_b);
    char* raw = nullptr;
    if (cmd_dp->parsed())
      check(sp_distance_pruning(a.get(), b.get(), dp_tol.c_str(), dp_exact ? 1 : 0, &raw));
    else if (cmd_db->parsed())
      check(sp_distance_bottleneck(a.get(), b.get(), &raw));
    else
      check(sp_distance_interleaving(a.get(), b.get(), di_field.c_str(), di_max_r, &raw));
    StringPtr result(raw);
    std::cout << result.get() << "\n";
  } else if (cmd_graph->parsed()) {
    ModulePtr m = load_module(graph_input);
    char* raw = nullptr;
    check(sp_graph_dot(m.get(), graph_alpha.c_str(), &raw));
    StringPtr dot(raw);
    write_output(graph_output, dot.get());
  } else if (cmd_gen->parsed()) {
    sp_module* raw_module = nullptr;
    check(sp_module_generate(gen_seed, gen_r, gen_dim, gen_gens, gen_bound, &raw_module));
    ModulePtr m(raw_module);
    char* raw = nullptr;
    check(sp_module_to_json(m.get(), &raw));
    StringPtr json(raw);
    write_output(gen_output, json.get());
  } else if (cmd_plot->parsed()) {
    ModulePtr m = load_module(plot_input);
    char* raw = nullptr;
    check(sp_plot_svg(m.get(), &raw));
    StringPtr svg(raw);
    write_output(plot_output, svg.get());
  } else if (cmd_verify->parsed()) {
    char* raw = nullptr;
    int failures = 0;
    check(sp_verify(&raw, &failures));
    StringPtr report(raw);
    std::cout << report.get();
    if (failures > 0) {
      std::cout << failures << " check(s) failed\n";
      return 1;
    }
    std::cout << "all checks passed\n";
  }
  return 0;
}
