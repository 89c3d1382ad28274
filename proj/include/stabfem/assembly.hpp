#pragma once

#include <array>
#include <vector>

#include "stabfem/dof_layout.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/problem.hpp"
#include "stabfem/sparse.hpp"
#include "stabfem/stabilization.hpp"

namespace stabfem {

struct SolutionField {
  DofLayout layout;
  std::vector<double> phi;                 // one value per node
  std::vector<std::array<double, 2>> g;    // per node; empty for single-field
  double time = 0.0;
};

DofLayout make_layout(const Mesh& mesh, const SchemeConfig& scheme);

// Interleave/deinterleave the per-node fields into the solver vector.
std::vector<double> pack_state(const SolutionField& field);
SolutionField unpack_state(const DofLayout& layout, const std::vector<double>& x,
                           double time);

// Steady operator: convection plus diffusion plus the scheme's stabilization
// blocks. Velocity enters integrands at quadrature points; the upwind rule
// samples it at the element center. Unresolved penalty (two-field penalty
// scheme) or k_tilde (modified-model scheme) is a config_error.
SparseMatrix assemble_steady_matrix(const Mesh& mesh, const SchemeConfig& scheme,
                                    const ProblemSpec& problem);

// Generalized mass. Streamline-modified test weight when the scheme modifies
// every weighted term; gradient rows and columns stay zero, the gradient
// equation is algebraic.
SparseMatrix assemble_mass_matrix(const Mesh& mesh, const SchemeConfig& scheme,
                                  const ProblemSpec& problem);

// Source term (modified test weight where the scheme requires it) plus
// prescribed diffusive boundary-flux terms, both evaluated at `time`.
std::vector<double> assemble_load(const Mesh& mesh, const SchemeConfig& scheme,
                                  const ProblemSpec& problem, double time);

// Constraints for the transported field only; the auxiliary gradient never
// carries essential conditions. Where Dirichlet sets share nodes, the spec
// listed first wins.
std::vector<DirichletValue> dirichlet_constraints(const Mesh& mesh,
                                                  const DofLayout& layout,
                                                  const ProblemSpec& problem,
                                                  double time);

SolutionField solve_steady(const Mesh& mesh, const SchemeConfig& scheme,
                           const ProblemSpec& problem);

}  // namespace stabfem
