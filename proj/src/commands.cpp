#include "vcw/commands.hpp"

#include <ostream>
#include <stdexcept>

#include "vcw/certificate_io.hpp"
#include "vcw/errors.hpp"
#include "vcw/generators.hpp"
#include "vcw/graph_io.hpp"
#include "vcw/sweep.hpp"
#include "vcw/verify.hpp"

namespace vcw::cli {

int weigh_graph(const Graph& g, const WeightCommand& cmd, std::ostream& out,
                std::ostream& err) {
  try {
    const Certificate cert = weight_graph(g, cmd.options);
    if (cmd.weights_only) {
      write_weights(out, cert.graph, cert.weights);
    } else if (cmd.format == OutputFormat::kStructured) {
      write_certificate_json(out, cert, {cmd.trace});
    } else {
      write_certificate_text(out, cert, {cmd.trace});
    }
    if (!cert.verdict.ok) {
      err << "error: certificate failed verification\n";
      return kInternal;
    }
    return kOk;
  } catch (const K2Component& e) {
    err << "error: " << e.what() << '\n';
    return kK2;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int run_weight(const WeightCommand& cmd, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_graph_file(cmd.input);
  } catch (const Error& e) {
    err << cmd.input << ": " << e.what() << '\n';
    return kParse;
  }
  return weigh_graph(g, cmd, out, err);
}

int run_verify(const std::string& graph_path, const std::string& weights_path,
               std::ostream& out, std::ostream& err) {
  Graph g;
  std::vector<WeightEntry> entries;
  try {
    g = read_graph_file(graph_path);
  } catch (const Error& e) {
    err << graph_path << ": " << e.what() << '\n';
    return kParse;
  }
  try {
    entries = read_weight_file(weights_path);
  } catch (const Error& e) {
    err << weights_path << ": " << e.what() << '\n';
    return kParse;
  }
  try {
    const Verdict verdict = verify_weighting(g, weighting_from_entries(g, entries));
    if (verdict.ok) {
      out << "ok\n";
      return kOk;
    }
    for (const Edge& e : verdict.conflicts) {
      out << "conflict " << e.u << ' ' << e.v << " degree "
          << verdict.weighted_degree[e.u] << '\n';
    }
    out << "conflicts " << verdict.conflicts.size() << '\n';
    return kRejected;
  } catch (const DomainMismatch& e) {
    err << "DomainMismatch: " << e.what() << '\n';
    return kParse;
  }
}

int min_k_report(const Graph& g, int max_k, std::ostream& out, std::ostream& err) {
  try {
    const MinKResult r = brute_force_min_k(g, max_k);
    if (!r.k) {
      out << "none\n";
      return kRejected;
    }
    out << "min_k " << *r.k << '\n';
    write_weights(out, g, *r.witness);
    return kOk;
  } catch (const K2Component& e) {
    out << "none\n";
    err << "error: " << e.what() << '\n';
    return kK2;
  } catch (const BudgetExceeded& e) {
    err << "BudgetExceeded: " << e.what() << '\n';
    return kBudget;
  }
}

int run_mink(const MinKCommand& cmd, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_graph_file(cmd.input);
  } catch (const Error& e) {
    err << cmd.input << ": " << e.what() << '\n';
    return kParse;
  }
  return min_k_report(g, cmd.max_k, out, err);
}

int run_gen(const GenCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    out << "# " << cmd.family;
    for (const auto& p : cmd.params) out << ' ' << p;
    out << " seed " << cmd.seed << '\n';
    write_graph(out, gen::by_family(cmd.family, cmd.params, cmd.seed));
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
}

int run_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
  SweepOptions options;
  options.n_max = cmd.n_max;
  options.jobs = cmd.jobs;
  options.weight = cmd.options;
  try {
    const SweepSummary summary = vcw::run_sweep(options);
    write_sweep_summary(out, summary);
    return summary.failures == 0 ? kOk : kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
}

}  // namespace vcw::cli
