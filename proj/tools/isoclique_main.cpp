#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "isoclique/cli.hpp"

namespace {

using isoclique::cli::RunConfig;

void add_input_flags(CLI::App* cmd, RunConfig& cfg) {
  auto* graph = cmd->add_option("--graph", cfg.graph_path, "Edge-list file");
  auto* gen = cmd->add_option("--gen", cfg.generator_spec,
                              "Generator spec, e.g. ba:n=1000,m=5,seed=7 or gnmp:n=200,m=25,p=0.1");
  graph->excludes(gen);
  gen->excludes(graph);
  cmd->add_option("--seed", cfg.seed, "Seed used when the generator spec has none");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate l-isolated maximal cliques with pruned pivoting search"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path;

  auto* enumerate = app.add_subcommand("enumerate", "List the l-isolated maximal cliques");
  add_input_flags(enumerate, cfg);
  enumerate->add_option("--ell", cfg.ell, "Isolation factor")->check(CLI::PositiveNumber);
  enumerate->add_option("--strategy", cfg.strategy, "none|size|degree|softcore|degeneracy|combo");
  enumerate->add_flag("--count-only", cfg.count_only, "Print only the number of cliques");
  enumerate->add_flag("--sort", cfg.sort, "Sort cliques lexicographically before printing");

  auto* sweep = app.add_subcommand("sweep", "Isolated clique counts for several values of l (CSV)");
  add_input_flags(sweep, cfg);
  sweep->add_option("--ells", cfg.ells, "Comma-separated isolation factors")->delimiter(',')->required();
  sweep->add_option("--strategy", cfg.strategy, "Pruning strategy");

  auto* distribution = app.add_subcommand("distribution", "Clique size histogram per l (CSV)");
  add_input_flags(distribution, cfg);
  distribution->add_option("--ells", cfg.ells, "Comma-separated isolation factors")
      ->delimiter(',')
      ->required();

  auto* compare = app.add_subcommand("compare", "Recursive calls and time per strategy");
  add_input_flags(compare, cfg);
  compare->add_option("--ell", cfg.ell, "Isolation factor")->check(CLI::PositiveNumber);
  compare->add_option("--strategies", cfg.strategies, "Comma-separated strategy names")->delimiter(',');

  auto* generate = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  generate->add_option("--gen", cfg.generator_spec, "Generator spec")->required();
  generate->add_option("--seed", cfg.seed, "Seed used when the spec has none");

  for (auto* cmd : {enumerate, sweep, distribution, compare, generate}) {
    cmd->add_option("--out", out_path, "Output file (default: standard output)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : isoclique::cli::kUsageError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return isoclique::cli::kRuntimeError;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  int status = isoclique::cli::kUsageError;
  if (*enumerate) status = isoclique::cli::cmd_enumerate(cfg, out, std::cerr);
  if (*sweep) status = isoclique::cli::cmd_sweep(cfg, out, std::cerr);
  if (*distribution) status = isoclique::cli::cmd_distribution(cfg, out, std::cerr);
  if (*compare) status = isoclique::cli::cmd_compare(cfg, out, std::cerr);
  if (*generate) status = isoclique::cli::cmd_generate(cfg, out, std::cerr);
  out.flush();
  return status;
}
