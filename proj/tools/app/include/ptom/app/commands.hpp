#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptom/analytic.hpp"
#include "ptom/app/config.hpp"

namespace ptom::app {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidConfig = 2,
  kExitNoSteadyState = 3,
  kExitDiscrepancy = 4,
};

/// Column-oriented output shared by the CSV and JSON writers. Cells are
/// JSON values; doubles print with `precision` significant digits in CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  std::vector<std::pair<std::string, nlohmann::json>> summary;
  bool single_record = false;
};

void write_table(std::ostream& out, const Table& table, OutputFormat format,
                 int precision);

struct EvolveRow {
  double t;  // s
  double x_analytic;
  double x_numeric;
  double n_a;
  double n_b;
  double n_a_st;
  double n_b_st;
  double n_a_sp;
  double n_b_sp;
};

struct EvolveSummary {
  RegimeLabel label;
  analytic::NumberMethod method;
  /// max |analytic - numeric| / (|numeric| + abs_floor / max_discrepancy);
  /// displacement in units of x_zpf. NaN when no comparison was possible.
  double max_rel_discrepancy_x;
  double max_rel_discrepancy_n;
  bool truncated;
  double blowup_time;  // s, NaN unless truncated
  bool within_threshold;
};

struct EvolveResult {
  std::vector<EvolveRow> rows;
  EvolveSummary summary;
};

/// Closed-form trajectory next to the RK4 oracle on the configured grid.
EvolveResult evolve(const RunConfig& config);

Table classify_table(const RunConfig& config);
Table sweep_table(const RunConfig& config);
Table evolve_table(const EvolveResult& result);
/// Throws analytic::OutsideRegime for a single unstable point.
Table steady_table(const RunConfig& config);
Table workpoint_table(const RunConfig& config);
Table preset_table(const std::string& id);

/// Executes config.command, writing to `out` (or to config.out when set).
/// Exceptions are reported on `err` and mapped onto ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parse, run, map errors to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace ptom::app
