#pragma once

#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/problem.hpp"

namespace stabfem {

// Relative error norms over nodal values: l2_rel compares the nodal error
// vector against the nodal reference vector, max_rel the componentwise peaks.
// This is the convention behind the published benchmark tables.
struct ErrorReport {
  double l2_rel = 0.0;
  double max_rel = 0.0;
};

ErrorReport error_norms(const SolutionField& field, const ScalarFn& reference,
                        const Mesh& mesh);

// Quadrature-based absolute error norms for convergence studies: the finite
// element interpolant is compared against the smooth reference at the
// element quadrature points.
double l2_error_quadrature(const Mesh& mesh, const SolutionField& field,
                           const ScalarFn& reference);
double gradient_error_quadrature(const Mesh& mesh, const SolutionField& field,
                                 const VelocityFn& reference_gradient);

// Per-step maximum nodal value of the transported field, entry 0 being the
// initial state, so a run of N steps yields N + 1 entries.
struct HillTrace {
  std::vector<double> maxima;
};

struct TransientErrors {
  double e_t_l2 = 0.0;
  double e_t_max = 0.0;
};

// e_t_l2 = sqrt(sum |ref_n - max_n|^2) / sqrt(sum |ref_n|^2),
// e_t_max = max |ref_n - max_n| / max |ref_n|.
TransientErrors transient_error_norms(const HillTrace& trace,
                                      const std::vector<double>& reference);

}  // namespace stabfem
