#pragma once

#include <array>

#include "stabfem/mesh.hpp"

namespace stabfem {

struct ShapeEval {
  int n = 0;  // nodes per element
  std::array<double, 4> values{};
  std::array<std::array<double, 2>, 4> grads{};  // physical-space gradients
  double jac_det = 0.0;
  std::array<double, 2> phys_point{};
};

// Isoparametric evaluation at a reference point in [-1,1]^dim.
// Throws degenerate_element when the Jacobian determinant is not positive.
ShapeEval eval_shape(const Mesh& mesh, int elem, std::array<double, 2> ref_pt);

}  // namespace stabfem
