#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/norms.hpp"
#include "stabfem/problem.hpp"
#include "stabfem/stabilization.hpp"

namespace stabfem {

// Exact solution of u phi' = D phi'' on [0,1] with phi(0)=0, phi(1)=1,
// evaluated in overflow-safe form (no bare exp(u/D)).
double exact_1d_steady(double x, double u, double diffusivity);

// Knobs a caller may override; negative values mean "use the case default".
struct BenchmarkKnobs {
  double theta_deg = -1.0;    // flow angle, 2D steady cases only
  double peclet = -1.0;       // global Peclet |u| L / D, steady cases
  double diffusivity = -1.0;  // explicit D, wins over peclet
  int elements = -1;          // per-direction element count
};

// A fully materialized run: mesh, problem, and the time plan.
struct BenchmarkRun {
  std::string name;
  Mesh mesh;
  ProblemSpec problem;
  bool steady = true;
  double dt = 0.0;
  int n_steps = 0;
  std::vector<int> snapshot_steps;  // transient cases; step 0 = initial state
  bool has_exact = false;
  ScalarTimeFn exact;          // reference field at (point, time)
  bool track_hill = false;     // record the per-step maximum of phi
  double k_tilde_default = 1.0;
  double theta_deg = 0.0;      // resolved angle (2D steady cases)
  bool has_theta = false;
};

struct BenchmarkCase {
  std::string name;
  bool steady = true;
  bool has_theta = false;
  std::function<BenchmarkRun(const BenchmarkKnobs&)> make;
};

// The seven benchmark problems, in catalog order.
const std::vector<BenchmarkCase>& catalog();

// Lookup by CLI name; unknown names raise a config error listing all seven.
const BenchmarkCase& find_case(const std::string& name);

struct SnapshotResult {
  int step = 0;
  SolutionField field;
  bool has_errors = false;
  ErrorReport errors;
};

struct RunResult {
  std::string benchmark;
  SchemeConfig scheme;  // with defaults resolved
  bool has_theta = false;
  double theta_deg = 0.0;
  Mesh mesh;
  std::vector<SnapshotResult> snapshots;
  bool has_field_errors = false;
  ErrorReport field_errors;  // steady final field, or the last snapshot
  bool has_trace = false;
  HillTrace trace;
  bool has_transient_errors = false;
  TransientErrors transient;
  double wall_ms = 0.0;
};

// Executes the steady solve or the Crank-Nicolson loop and evaluates the
// metrics the case defines. Scheme parameter defaults are resolved here:
// MZAD penalty falls back to the element size, MMAD k_tilde to the case
// default (1 for convection-diffusion cases, 0 for transient advection).
RunResult run_benchmark(const BenchmarkRun& run, const SchemeConfig& scheme);

}  // namespace stabfem
