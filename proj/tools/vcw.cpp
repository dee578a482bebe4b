// vcw: vertex-coloring edge weightings with weights {1,2,3,4}.
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "vcw/commands.hpp"

int main(int argc, char** argv) {
  using namespace vcw::cli;
  CLI::App app{"Vertex-coloring edge weightings with weights {1,2,3,4}"};
  app.set_version_flag("--version", std::string(vcw::kVersion));
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool exact_cut = false;
  bool random_start = false;
  int exact_threshold = vcw::kDefaultExactCutThreshold;

  auto add_cut_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Seed for randomized cut starts");
    sub->add_flag("--exact-cut", exact_cut, "Use the exhaustive maximum cut");
    sub->add_option("--exact-cut-threshold", exact_threshold,
                    "Vertex limit for --exact-cut");
    sub->add_flag("--random-start", random_start,
                  "Start from an unimproved random cut");
  };
  auto options = [&] {
    vcw::WeightOptions o;
    o.seed = seed;
    o.exact_cut_threshold = exact_threshold;
    if (exact_cut) o.cut_strategy = vcw::CutStrategy::kExact;
    if (random_start) o.cut_strategy = vcw::CutStrategy::kRandomStart;
    return o;
  };

  WeightCommand weight;
  std::string format = "text";
  auto* weight_cmd = app.add_subcommand("weight", "Weight a graph and print a certificate");
  weight_cmd->add_option("input", weight.input, "Graph file")->required();
  add_cut_flags(weight_cmd);
  weight_cmd->add_flag("--trace", weight.trace, "Add per-stage detail");
  weight_cmd->add_flag("--weights-only", weight.weights_only,
                       "Print only 'u v w' lines");
  weight_cmd->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string graph_path;
  std::string weights_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a weighting");
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("weights", weights_path,
                         "Weight file ('u v w' lines) or text certificate")
      ->required();

  MinKCommand mink;
  auto* mink_cmd = app.add_subcommand("mink", "Exhaustive minimum weight-set size");
  mink_cmd->add_option("input", mink.input, "Graph file")->required();
  mink_cmd->add_option("--max-k", mink.max_k, "Largest k to try")
      ->check(CLI::PositiveNumber);

  GenCommand gen;
  auto* gen_cmd = app.add_subcommand(
      "gen", "Generate a graph: path N | cycle N | complete N | star N | "
             "grid R C | gnp N P | regular N D");
  gen_cmd->add_option("family", gen.family, "Graph family")->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");

  SweepCommand sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Weight every labeled graph up to n_max vertices");
  sweep_cmd->add_option("n_max", sweep.n_max, "Largest vertex count")
      ->required()
      ->check(CLI::Range(1, 7));
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads (0: all cores)");
  add_cut_flags(sweep_cmd);

  CLI11_PARSE(app, argc, argv);

  if (*weight_cmd) {
    weight.options = options();
    weight.format =
        format == "structured" ? OutputFormat::kStructured : OutputFormat::kText;
    return run_weight(weight, std::cout, std::cerr);
  }
  if (*verify_cmd) return run_verify(graph_path, weights_path, std::cout, std::cerr);
  if (*mink_cmd) return run_mink(mink, std::cout, std::cerr);
  if (*gen_cmd) return run_gen(gen, std::cout, std::cerr);
  if (*sweep_cmd) {
    sweep.options = options();
    return run_sweep(sweep, std::cout, std::cerr);
  }
  return kParse;
}
