#pragma once

// Subcommand implementations behind the `tripart` executable. Every command
// writes results to `out`, diagnostics to `err`, and returns the process exit
// code: 0 success, 1 verification mismatch, 2 invalid arguments or resource
// limits.

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "tripart/graph_core.hpp"
#include "tripart/records.hpp"

namespace tripart {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CountOptions {
  std::string quantity;  // trees | rooted-trees | forests-r | total-forests
  PartSizes parts;
  std::optional<std::uint32_t> r;
  bool with_oracle = false;
  OutputFormat format = OutputFormat::Plain;
};

struct VerifyOptions {
  std::uint32_t max_m = 1;
  std::uint32_t max_n = 1;
  std::uint32_t max_p = 1;
  /// Subset of: sums kirchhoff minors detLI census construction.
  std::set<std::string> oracles{"sums", "kirchhoff", "minors", "detLI"};
  std::uint32_t max_edges = 22;
  bool show_all = false;
  OutputFormat format = OutputFormat::Plain;
};

struct CensusOptions {
  PartSizes parts;
  std::uint32_t max_edges = 22;
  OutputFormat format = OutputFormat::Plain;
};

struct SampleOptions {
  PartSizes parts;
  std::uint32_t count = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Plain;
};

struct BenchOptions {
  std::uint32_t max_size = 10;
  std::uint32_t repetitions = 3;
  OutputFormat format = OutputFormat::Csv;
};

/// Census edge bound from FOREST_CENSUS_MAX_EDGES, else the default.
std::uint32_t census_edge_bound_from_env();

int cmd_count(const CountOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_census(const CensusOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripart
