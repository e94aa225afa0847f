#pragma once

#include "awlab/tables.hpp"
#include "config.hpp"

#include <iosfwd>

namespace awlab::cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kConfigError = 2 };

// Runs a suite, writes the JSON report to rc.out (or `out`), a summary to `err`.
int cmd_verify(Suite s, const RunConfig& rc, std::ostream& out, std::ostream& err);

// Writes <stem>.csv and <stem>.json when rc.out is set, otherwise the CSV to `out`.
int cmd_tables(TableKind k, const RunConfig& rc, std::ostream& out, std::ostream& err);

struct SweepPoint {
  KeyValues settings;
  std::string status;   // pass, fail, invalid
  std::string message;
  Report report;
};

// Evaluates every point on at most `jobs` worker threads; result order follows `points`.
std::vector<SweepPoint> run_sweep(const std::vector<KeyValues>& points, unsigned jobs);

// Per-point summaries with embedded reports, then the max residual per check_id.
std::string sweep_json(const std::vector<GridAxis>& axes, const std::vector<SweepPoint>& results);

int cmd_sweep(const KeyValues& base, const std::vector<GridAxis>& axes, const std::string& out_path, unsigned jobs,
              std::ostream& out, std::ostream& err);

}  // namespace awlab::cli
