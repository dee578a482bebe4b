#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcw/graph.hpp"
#include "vcw/weighting.hpp"

namespace vcw::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,   // verify found conflicts, or mink found no k <= max-k
  kK2 = 2,
  kParse = 3,      // unreadable input, bad parameters, domain mismatch
  kBudget = 4,
  kInternal = 5,
};

enum class OutputFormat { kText, kStructured };

struct WeightCommand {
  std::string input;
  WeightOptions options;
  bool trace = false;
  bool weights_only = false;
  OutputFormat format = OutputFormat::kText;
};

struct MinKCommand {
  std::string input;
  int max_k = 4;
};

struct GenCommand {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
};

struct SweepCommand {
  int n_max = 5;
  int jobs = 0;
  WeightOptions options;
};

int run_weight(const WeightCommand& cmd, std::ostream& out, std::ostream& err);
int run_verify(const std::string& graph_path, const std::string& weights_path,
               std::ostream& out, std::ostream& err);
int run_mink(const MinKCommand& cmd, std::ostream& out, std::ostream& err);
int run_gen(const GenCommand& cmd, std::ostream& out, std::ostream& err);
int run_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err);

// In-memory variants used by the file commands.
int weigh_graph(const Graph& g, const WeightCommand& cmd, std::ostream& out,
                std::ostream& err);
int min_k_report(const Graph& g, int max_k, std::ostream& out, std::ostream& err);

}  // namespace vcw::cli
