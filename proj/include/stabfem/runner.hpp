#pragma once

#include <string>
#include <vector>

#include "stabfem/run_config.hpp"

namespace stabfem {

// One executed run, condensed to the columns reported in errors.csv.
struct RunRow {
  std::string benchmark;  // "inline" for inline problems
  SchemeKind scheme = SchemeKind::mmad;
  bool has_theta = false;
  double theta_deg = 0.0;
  bool has_field_errors = false;
  double l2_rel = 0.0, max_rel = 0.0;
  bool has_transient_errors = false;
  double et_l2 = 0.0, et_max = 0.0;
  double wall_ms = 0.0;
};

struct RunReport {
  std::vector<RunRow> rows;            // one per scheme x angle combination
  std::vector<std::string> artifacts;  // files written, in write order
};

// Executes every scheme x angle combination in the config and writes the
// requested artifacts under config.out_dir: a per-run directory with
// solution snapshots (CSV in 1D, VTK in 2D) plus hill_trace.csv for
// transient runs, and errors.csv / table.txt at the top level. Reruns with
// the same config rewrite identical bytes except the wall_ms column.
RunReport run_all(const RunConfig& config);

// The table.txt content: schemes as columns, one row block per angle,
// mirroring the published table layout. Wall times are excluded.
std::string render_table(const RunReport& report);

// Deterministic JSON rendering of the rows and artifact list.
std::string render_json(const RunReport& report);

}  // namespace stabfem
