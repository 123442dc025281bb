#include "isoclique/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <locale>
#include <map>
#include <ostream>
#include <sstream>

#include "isoclique/enumerator.hpp"
#include "isoclique/generators.hpp"
#include "isoclique/pruning.hpp"

namespace isoclique::cli {

std::string format_fixed(double value, int decimals) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::fixed << std::setprecision(decimals) << value;
  return s.str();
}

std::string format_percent(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return "0.00";
  return format_fixed(100.0 * static_cast<double>(part) / static_cast<double>(whole), 2);
}

Graph load_input(const RunConfig& cfg, std::ostream& err) {
  if (cfg.graph_path.has_value() == cfg.generator_spec.has_value()) {
    throw std::invalid_argument("exactly one of --graph or --gen is required");
  }
  if (cfg.generator_spec) return generate(parse_generator_spec(*cfg.generator_spec, cfg.seed));
  LoadReport report;
  Graph g = load_edge_list_file(*cfg.graph_path, &report);
  if (report.self_loops > 0 || report.duplicate_edges > 0) {
    err << "# dropped " << report.self_loops << " self-loops and " << report.duplicate_edges
        << " duplicate edges\n";
  }
  return g;
}

std::string describe_input(const RunConfig& cfg) {
  if (cfg.generator_spec) return to_spec(parse_generator_spec(*cfg.generator_spec, cfg.seed));
  return cfg.graph_path.value_or("?");
}

namespace {

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

std::vector<std::int64_t> requested_ells(const RunConfig& cfg) {
  std::vector<std::int64_t> ells = cfg.ells.empty() ? std::vector<std::int64_t>{cfg.ell} : cfg.ells;
  for (auto l : ells) (void)IsolationParams{l};  // throws on ell < 1
  return ells;
}

void write_clique(std::ostream& out, const Graph& g, std::span<const VertexId> clique) {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (i > 0) out << ' ';
    out << g.label(clique[i]);
  }
  out << '\n';
}

std::uint64_t count_isolated(const Graph& g, std::int64_t ell, const PruneStrategy& strategy,
                             RunStats* stats) {
  std::uint64_t count = 0;
  *stats = enumerate(g, IsolationParams{ell}, strategy, [&](const CliqueReport&) { ++count; });
  return count;
}

}  // namespace

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto strategy = PruneStrategy::parse(cfg.strategy);
    const IsolationParams params{cfg.ell};
    const Graph g = load_input(cfg, err);

    std::vector<VertexSet> buffered;
    const bool stream = !cfg.count_only && !cfg.sort;
    const RunStats stats = enumerate(g, params, strategy, [&](const CliqueReport& r) {
      if (stream) {
        write_clique(out, g, r.vertices);
      } else if (cfg.sort) {
        buffered.emplace_back(r.vertices.begin(), r.vertices.end());
      }
    });

    if (cfg.count_only) {
      out << stats.emitted << '\n';
      return kOk;
    }
    if (cfg.sort) {
      std::sort(buffered.begin(), buffered.end());
      for (const auto& c : buffered) write_clique(out, g, c);
    }
    out << "# recursive_calls=" << stats.recursive_calls
        << " prune_firings=" << stats.total_prune_firings() << " emitted=" << stats.emitted
        << " filtered_at_leaf=" << stats.filtered_at_leaf
        << " elapsed_ms=" << format_fixed(stats.elapsed_ms(), 3) << '\n';
    return kOk;
  });
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto strategy = PruneStrategy::parse(cfg.strategy);
    const auto ells = requested_ells(cfg);
    const Graph g = load_input(cfg, err);

    std::uint64_t total = 0;
    enumerate_all_maximal(g, [&](const CliqueReport&) { ++total; });

    out << "# graph=" << describe_input(cfg) << " strategy=" << strategy.name()
        << " vertices=" << g.vertex_count() << " edges=" << g.edge_count()
        << " maximal_cliques=" << total << '\n';
    out << "ell,isolated_count,percent_of_total,recursive_calls,elapsed_ms\n";
    for (auto ell : ells) {
      RunStats stats;
      const auto count = count_isolated(g, ell, strategy, &stats);
      out << ell << ',' << count << ',' << format_percent(count, total) << ','
          << stats.recursive_calls << ',' << format_fixed(stats.elapsed_ms(), 3) << '\n';
    }
    return kOk;
  });
}

int cmd_distribution(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ells = requested_ells(cfg);
    const Graph g = load_input(cfg, err);

    struct Row {
      std::uint64_t total = 0;
      std::vector<std::uint64_t> isolated;
    };
    std::map<std::size_t, Row> rows;
    enumerate_all_maximal(g, [&](const CliqueReport& r) {
      Row& row = rows[r.size()];
      row.isolated.resize(ells.size(), 0);
      ++row.total;
      for (std::size_t i = 0; i < ells.size(); ++i) {
        if (static_cast<std::int64_t>(r.external_degree) < ells[i] * static_cast<std::int64_t>(r.size())) {
          ++row.isolated[i];
        }
      }
    });

    out << "size,total";
    for (auto ell : ells) out << ",ell_" << ell;
    out << '\n';
    for (const auto& [size, row] : rows) {
      out << size << ',' << row.total;
      for (auto c : row.isolated) out << ',' << c;
      out << '\n';
    }
    return kOk;
  });
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<PruneStrategy> strategies;
    if (cfg.strategies.empty()) {
      for (auto name : PruneStrategy::names()) strategies.push_back(PruneStrategy::parse(name));
    } else {
      for (const auto& name : cfg.strategies) strategies.push_back(PruneStrategy::parse(name));
    }
    const IsolationParams params{cfg.ell};
    const Graph g = load_input(cfg, err);

    struct Result {
      std::string name;
      std::uint64_t count;
      RunStats stats;
    };
    auto run = [&](const PruneStrategy& s) {
      RunStats stats;
      const auto count = count_isolated(g, params.ell(), s, &stats);
      return Result{s.name(), count, stats};
    };

    const Result baseline = run(PruneStrategy::none());
    std::vector<Result> results;
    for (const auto& s : strategies) {
      results.push_back(s == PruneStrategy::none() ? baseline : run(s));
    }
    for (const auto& r : results) {
      if (r.count != baseline.count) {
        throw InternalError("strategy '" + r.name + "' emitted " + std::to_string(r.count) +
                            " cliques but the unpruned search emitted " +
                            std::to_string(baseline.count));
      }
    }
    const double base_ms = baseline.stats.elapsed_ms();
    out << "# graph=" << describe_input(cfg) << " ell=" << params.ell()
        << " isolated_cliques=" << baseline.count << '\n';
    out << std::left << std::setw(12) << "strategy" << std::right << std::setw(16) << "calls"
        << std::setw(10) << "calls_%" << std::setw(14) << "elapsed_ms" << std::setw(10) << "time_%"
        << '\n';
    for (const auto& r : results) {
      const double time_pct = base_ms > 0.0 ? 100.0 * r.stats.elapsed_ms() / base_ms : 100.0;
      out << std::left << std::setw(12) << r.name << std::right << std::setw(16)
          << r.stats.recursive_calls << std::setw(10)
          << format_percent(r.stats.recursive_calls, baseline.stats.recursive_calls)
          << std::setw(14) << format_fixed(r.stats.elapsed_ms(), 3) << std::setw(10)
          << format_fixed(time_pct, 2) << '\n';
    }
    return kOk;
  });
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.generator_spec) throw std::invalid_argument("generate requires --gen");
    const auto config = parse_generator_spec(*cfg.generator_spec, cfg.seed);
    const Graph g = generate(config);
    out << "# generator " << to_spec(config) << '\n';
    write_edge_list(out, g);
    return kOk;
  });
}

}  // namespace isoclique::cli
