#pragma once

#include <filesystem>
#include <iosfwd>

#include "dqw/config.hpp"
#include "dqw/walk.hpp"

namespace dqw {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation_failure = 1;
inline constexpr int runtime_error = 2;
inline constexpr int config_error = 3;
}  // namespace exit_code

// Environment variable that overrides RunConfig::output_dir.
inline constexpr const char* kOutputDirEnv = "DQW_OUTPUT_DIR";

struct ScenarioResult {
  RunRecord record;
  std::filesystem::path output_dir;
  double max_norm_drift = 0.0;
};

/// Evolves the configured scenario and writes record.csv, density.txt,
/// density.pgm, config.txt and (gem only) oracle.csv.  Geometry and operator
/// errors propagate as exceptions.
ScenarioResult execute_scenario(const RunConfig& config);

/// CLI wrapper around execute_scenario: prints a norm-drift summary to `out`,
/// diagnostics to `err`, and returns an exit code.
int run_scenario(const RunConfig& config, std::ostream& out, std::ostream& err);

// "# dqw record v1", then j,norm,centroid_minus,centroid_plus.
void write_record_csv(std::ostream& os, const RunRecord& rec);
// One row per snapshot, one column per site.
void write_density_matrix(std::ostream& os, const RunRecord& rec);
// Binary 8-bit PGM, rows = snapshots, columns = sites, scaled by the global max.
void write_density_pgm(std::ostream& os, const RunRecord& rec);

}  // namespace dqw
