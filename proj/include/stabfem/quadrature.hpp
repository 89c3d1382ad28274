#pragma once

#include <array>
#include <vector>

namespace stabfem {

struct QuadratureRule {
  std::vector<std::array<double, 2>> points;  // reference coordinates
  std::vector<double> weights;                // sum to the reference measure
};

// 2-point Gauss per direction: exact for every (bi)linear-element integrand
// assembled here on affine elements.
QuadratureRule gauss_rule(int dim);

// 2-point Gauss on a reference edge [-1, 1] (boundary flux integrals).
QuadratureRule edge_gauss_rule();

}  // namespace stabfem
