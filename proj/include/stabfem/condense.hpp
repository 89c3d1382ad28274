#pragma once

#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/problem.hpp"
#include "stabfem/stabilization.hpp"

namespace stabfem {

// Single-field reduction of the two-field penalty scheme: the auxiliary
// gradient is eliminated through the inverse gradient mass, leaving the
// (k+p)-diffusion operator minus the dense projection correction
// p D M^{-1} D^T. Dense because the mass inverse couples every gradient dof.
struct CondensedSystem {
  DofLayout layout;             // single-field
  std::vector<double> matrix;   // row-major n x n, before Dirichlet imposition
  std::vector<double> load;
  std::vector<DirichletValue> constraints;
};

CondensedSystem condense_mzad(const Mesh& mesh, const SchemeConfig& scheme,
                              const ProblemSpec& problem);

// Solves the condensed system and recovers the eliminated gradient, so the
// result is directly comparable with the coupled solve.
SolutionField solve_condensed_mzad(const Mesh& mesh, const SchemeConfig& scheme,
                                   const ProblemSpec& problem);

}  // namespace stabfem
