#pragma once

#include "simplotope/gridfile.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace spt {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_parse_error = 2,
  exit_geometry_rejected = 3,
};

/// Adjacent patch index pairs: the explicit list, or every facet-sharing pair
/// when the grid says "auto".
std::vector<std::pair<std::size_t, std::size_t>> resolve_adjacencies(const GridFile& grid);

/// Condition sets and stacked matrix for every adjacent pair.
/// Throws std::invalid_argument on geometric rejection.
Json conditions_document(const GridFile& grid);

/// Conditioned random coefficients checked pair by pair. `replay`, when given,
/// supplies the condition sets instead of generating them. `all_pass` reports
/// the aggregate outcome.
Json verify_document(const GridFile& grid, int samples, std::uint64_t seed, const Json* replay,
                     bool& all_pass);

Json bnet_document(const GridFile& grid, bool render_float);

Json circumscribe_document(const GridFile& grid, bool render_float);

struct CommandOptions {
  std::string grid_path;
  std::string out_path;      // empty: write to stdout
  int samples = 25;
  std::uint64_t seed = 2024;
  bool render_float = false;
  int order_override = -1;   // <0: use the grid file's order
  std::string replay_path;   // verify: check an externally supplied condition set
};

int run_conditions(const CommandOptions& options, std::ostream& diag);
int run_verify(const CommandOptions& options, std::ostream& diag);
int run_bnet(const CommandOptions& options, std::ostream& diag);
int run_circumscribe(const CommandOptions& options, std::ostream& diag);

}  // namespace spt
