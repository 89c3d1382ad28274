#pragma once

#include <string>
#include <vector>

#include "stabfem/benchmarks.hpp"
#include "stabfem/problem.hpp"
#include "stabfem/stabilization.hpp"

namespace stabfem {

// Self-contained steady problem described entirely by constants, for runs
// that are not in the benchmark catalog.
struct InlineProblem {
  int dim = 2;
  int nx = 0, ny = 0;
  std::array<double, 2> x_bounds{0.0, 1.0};
  std::array<double, 2> y_bounds{0.0, 1.0};
  std::array<double, 2> velocity{0.0, 0.0};
  double diffusivity = 0.0;
  double source = 0.0;
  std::vector<std::pair<std::string, double>> dirichlet;
  std::vector<std::pair<std::string, double>> neumann;
};

// A validated run request: exactly one of benchmark/inline is set. Scheme
// and theta lists describe a sweep; every combination becomes one run.
struct RunConfig {
  std::string benchmark;  // empty when inline_problem is used
  bool has_inline = false;
  InlineProblem inline_problem;
  std::vector<SchemeKind> schemes;  // default {MMAD}
  double penalty = -1.0;            // negative: default (element size)
  double k_tilde = -1.0;            // negative: default (per case)
  double peclet = -1.0;             // steady benchmarks; default 1e6
  double diffusivity = -1.0;        // explicit D wins over peclet
  std::vector<double> theta_deg;    // 2D steady benchmarks only
  int elements = -1;
  std::string out_dir = "out";
  bool emit_csv = true;
  bool emit_vtk = true;
  bool emit_table = true;
};

// Parses and validates the JSON configuration document. Malformed JSON is
// reported with line and column; semantic problems (unknown keys, unknown
// scheme or benchmark names, missing fields) raise config errors naming the
// valid choices.
RunConfig parse_config(const std::string& text);

}  // namespace stabfem
