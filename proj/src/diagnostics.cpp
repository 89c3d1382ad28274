#include "stabfem/diagnostics.hpp"

#include <set>

#include <Eigen/Dense>

#include "stabfem/error.hpp"
#include "stabfem/quadrature.hpp"
#include "stabfem/shape.hpp"

namespace stabfem {

CoercivityReport coercivity_check(const Mesh& mesh, const SchemeConfig& scheme,
                                  const ProblemSpec& problem) {
  const DofLayout layout = make_layout(mesh, scheme);
  const SparseMatrix A = assemble_steady_matrix(mesh, scheme, problem);

  std::set<int> constrained;
  for (const auto& [name, nodes] : mesh.boundary_sets) {
    for (int n : nodes) constrained.insert(layout.dof(n, 0));
  }
  std::vector<int> free;
  for (int d = 0; d < layout.n_dofs(); ++d) {
    if (!constrained.count(d)) free.push_back(d);
  }

  const SparseMatrix sub = extract_submatrix(A, free, free);
  const int n = sub.n_rows();
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
  for (int row = 0; row < n; ++row) {
    for (int k = sub.row_offsets()[row]; k < sub.row_offsets()[row + 1]; ++k) {
      dense(row, sub.col_indices()[k]) = sub.values()[k];
    }
  }
  const Eigen::MatrixXd sym = 0.5 * (dense + dense.transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) {
    fail(Status::convergence_failure, "coercivity_check: eigensolve failed");
  }

  CoercivityReport report;
  report.lambda_min = n > 0 ? eig.eigenvalues()(0) : 0.0;
  report.operator_norm = sub.frobenius_norm();
  report.n_free_dofs = n;
  return report;
}

double energy_functional(const Mesh& mesh, const SolutionField& field,
                         double diffusivity, const EnergyTensors& tensors,
                         const ScalarFn& F) {
  if (static_cast<int>(field.phi.size()) != mesh.n_nodes()) {
    fail(Status::invalid_argument, "energy_functional: field/mesh mismatch");
  }
  const bool has_g = !field.g.empty();
  const QuadratureRule rule = gauss_rule(mesh.dim);
  const int npe = mesh.nodes_per_element();
  double J = 0.0;

  for (int e = 0; e < mesh.n_elements(); ++e) {
    for (size_t q = 0; q < rule.points.size(); ++q) {
      const ShapeEval s = eval_shape(mesh, e, rule.points[q]);
      const double w = rule.weights[q] * s.jac_det;

      double phi = 0.0;
      std::array<double, 2> grad_phi{};
      std::array<double, 2> g{};
      std::array<std::array<double, 2>, 2> grad_g{};  // grad_g[i][j] = d_j g_i
      for (int a = 0; a < npe; ++a) {
        const int node = mesh.elements[e][a];
        phi += field.phi[node] * s.values[a];
        for (int j = 0; j < 2; ++j) {
          grad_phi[j] += field.phi[node] * s.grads[a][j];
        }
        if (has_g) {
          for (int i = 0; i < 2; ++i) {
            g[i] += field.g[node][i] * s.values[a];
            for (int j = 0; j < 2; ++j) {
              grad_g[i][j] += field.g[node][i] * s.grads[a][j];
            }
          }
        }
      }

      double val = 0.0;
      val += 0.5 * diffusivity *
             (grad_phi[0] * grad_phi[0] + grad_phi[1] * grad_phi[1]);
      if (F) val += F({s.phys_point[0], s.phys_point[1]}) * phi;
      const std::array<double, 2> d = {grad_phi[0] - g[0], grad_phi[1] - g[1]};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          val += 0.5 * d[i] * tensors.H[i][j] * d[j];
        }
      }
      val += 0.5 * tensors.k_tilde * (g[0] * g[0] + g[1] * g[1]);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          val += 0.5 * tensors.k_tilde * grad_g[i][j] * grad_g[i][j];
        }
      }
      J += w * val;
    }
  }
  return J;
}

}  // namespace stabfem
