#include "stabfem/shape.hpp"

#include <cmath>
#include <string>

#include "stabfem/error.hpp"

namespace stabfem {

ShapeEval eval_shape(const Mesh& mesh, int elem, std::array<double, 2> ref_pt) {
  if (elem < 0 || elem >= mesh.n_elements()) {
    fail(Status::invalid_argument, "eval_shape: element index out of range");
  }
  const auto& conn = mesh.elements[elem];
  ShapeEval ev;

  if (mesh.dim == 1) {
    const double xi = ref_pt[0];
    const double x0 = mesh.nodes[conn[0]][0];
    const double x1 = mesh.nodes[conn[1]][0];
    const double h = x1 - x0;
    if (!(h > 0.0)) {
      fail(Status::degenerate_element,
           "eval_shape: non-positive length in element " + std::to_string(elem));
    }
    ev.n = 2;
    ev.values = {0.5 * (1.0 - xi), 0.5 * (1.0 + xi), 0.0, 0.0};
    ev.grads = {{{-1.0 / h, 0.0}, {1.0 / h, 0.0}, {0.0, 0.0}, {0.0, 0.0}}};
    ev.jac_det = 0.5 * h;
    ev.phys_point = {x0 + 0.5 * (1.0 + xi) * h, 0.0};
    return ev;
  }

  // bilinear quad, counterclockwise corners at (-1,-1), (1,-1), (1,1), (-1,1)
  static constexpr double xi_a[4] = {-1.0, 1.0, 1.0, -1.0};
  static constexpr double eta_a[4] = {-1.0, -1.0, 1.0, 1.0};
  const double xi = ref_pt[0];
  const double eta = ref_pt[1];

  ev.n = 4;
  double dN_ref[4][2];
  double jac[2][2] = {{0.0, 0.0}, {0.0, 0.0}};  // jac[i][j] = d x_i / d ref_j
  for (int a = 0; a < 4; ++a) {
    ev.values[a] = 0.25 * (1.0 + xi_a[a] * xi) * (1.0 + eta_a[a] * eta);
    dN_ref[a][0] = 0.25 * xi_a[a] * (1.0 + eta_a[a] * eta);
    dN_ref[a][1] = 0.25 * eta_a[a] * (1.0 + xi_a[a] * xi);
    const auto& xa = mesh.nodes[conn[a]];
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        jac[i][j] += xa[i] * dN_ref[a][j];
      }
    }
    ev.phys_point[0] += ev.values[a] * xa[0];
    ev.phys_point[1] += ev.values[a] * xa[1];
  }
  ev.jac_det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
  if (!(ev.jac_det > 0.0)) {
    fail(Status::degenerate_element,
         "eval_shape: non-positive Jacobian in element " + std::to_string(elem));
  }
  const double inv[2][2] = {{jac[1][1] / ev.jac_det, -jac[0][1] / ev.jac_det},
                            {-jac[1][0] / ev.jac_det, jac[0][0] / ev.jac_det}};
  for (int a = 0; a < 4; ++a) {
    // physical gradient via the inverse-Jacobian chain rule: dN/dx_i = inv^T dN_ref
    ev.grads[a][0] = inv[0][0] * dN_ref[a][0] + inv[1][0] * dN_ref[a][1];
    ev.grads[a][1] = inv[0][1] * dN_ref[a][0] + inv[1][1] * dN_ref[a][1];
  }
  return ev;
}

}  // namespace stabfem
