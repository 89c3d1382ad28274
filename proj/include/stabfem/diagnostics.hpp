#pragma once

#include <array>

#include "stabfem/assembly.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/problem.hpp"
#include "stabfem/stabilization.hpp"

namespace stabfem {

struct CoercivityReport {
  double lambda_min = 0.0;     // smallest eigenvalue of the symmetric part
  double operator_norm = 0.0;  // Frobenius norm of the free-dof block
  int n_free_dofs = 0;
};

// Well-posedness probe: constrains the transported field to zero on the whole
// boundary (the auxiliary gradient stays free), symmetrizes the remaining
// operator block, and eigensolves it densely. With a divergence-free velocity
// the convection part is skew on this subspace, so the result reflects only
// the diffusion and stabilization blocks.
CoercivityReport coercivity_check(const Mesh& mesh, const SchemeConfig& scheme,
                                  const ProblemSpec& problem);

struct EnergyTensors {
  std::array<std::array<double, 2>, 2> H{};  // constant coupling tensor
  double k_tilde = 0.0;  // K = k_tilde I; the fourth-order A scales gradients
};

// Quadratic functional
//   integral of  k/2 |grad phi|^2 + F phi
//              + 1/2 (grad phi - g) . H (grad phi - g)
//              + k_tilde/2 |g|^2 + k_tilde/2 |grad g|^2
// by element quadrature. The pure-diffusion two-field solution with source -F
// minimizes it over the unconstrained dofs. A single-field solution is
// treated as g = 0.
double energy_functional(const Mesh& mesh, const SolutionField& field,
                         double diffusivity, const EnergyTensors& tensors,
                         const ScalarFn& F);

}  // namespace stabfem
