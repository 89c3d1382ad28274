#pragma once

#include <memory>
#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/problem.hpp"
#include "stabfem/sparse.hpp"
#include "stabfem/stabilization.hpp"

namespace stabfem {

// Crank-Nicolson in time for the transported field; the auxiliary gradient
// equations carry no time derivative and are enforced fully implicitly, so
// each step solves
//   [M/dt + w o A] x[n+1] = [M/dt - w' o A] x[n] + (b[n] + b[n+1]) / 2
// with row weights w = 1/2 (phi), 1 (g) and w' = 1/2 (phi), 0 (g).
// The operator is factored once; Dirichlet values re-enter per step at t[n+1].
class CrankNicolsonStepper {
 public:
  CrankNicolsonStepper(const Mesh& mesh, const SchemeConfig& scheme,
                       const ProblemSpec& problem, double dt);

  void step();
  SolutionField state() const;
  double time() const { return time_; }
  int step_index() const { return step_; }
  double max_phi() const;  // largest nodal value of the transported field

 private:
  Mesh mesh_;
  SchemeConfig scheme_;
  ProblemSpec problem_;
  double dt_;
  DofLayout layout_;
  SparseMatrix rhs_mat_;
  std::vector<int> constrained_dofs_;
  std::unique_ptr<ConstrainedOperator> op_;
  std::vector<double> x_;
  std::vector<double> b_current_;
  double time_ = 0.0;
  int step_ = 0;
};

}  // namespace stabfem
