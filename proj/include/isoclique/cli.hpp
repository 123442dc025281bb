#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isoclique/graph.hpp"

// Subcommand bodies behind the `isoclique` executable. Each writes data to
// `out`, diagnostics to `err`, and returns the process exit status.
namespace isoclique::cli {

enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,   // unreadable input, malformed file
  kUsageError = 2,     // bad flag values
  kInternalError = 3,  // strategies disagreed on the output
};

struct RunConfig {
  std::optional<std::string> graph_path;
  std::optional<std::string> generator_spec;
  std::int64_t ell = 1;
  std::vector<std::int64_t> ells;
  std::string strategy = "combo";
  std::vector<std::string> strategies;
  bool count_only = false;
  bool sort = false;
  std::uint64_t seed = 1;
};

/// Loads the file or runs the generator named by `cfg`. Exactly one of the
/// two must be set (std::invalid_argument otherwise). Dropped self-loops and
/// duplicate edges are reported on `err`.
Graph load_input(const RunConfig& cfg, std::ostream& err);

/// Human-readable description of the input, for CSV headers.
std::string describe_input(const RunConfig& cfg);

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_distribution(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// `value` with `decimals` digits after the point, '.' as separator.
std::string format_fixed(double value, int decimals);

/// 100·part/whole with two decimals; "0.00" when whole is zero.
std::string format_percent(std::uint64_t part, std::uint64_t whole);

}  // namespace isoclique::cli
