#include "stabfem/quadrature.hpp"

#include <cmath>

namespace stabfem {

QuadratureRule gauss_rule(int dim) {
  const double g = 1.0 / std::sqrt(3.0);
  QuadratureRule rule;
  if (dim == 1) {
    rule.points = {{-g, 0.0}, {g, 0.0}};
    rule.weights = {1.0, 1.0};
  } else {
    rule.points = {{-g, -g}, {g, -g}, {g, g}, {-g, g}};
    rule.weights = {1.0, 1.0, 1.0, 1.0};
  }
  return rule;
}

QuadratureRule edge_gauss_rule() {
  const double g = 1.0 / std::sqrt(3.0);
  QuadratureRule rule;
  rule.points = {{-g, 0.0}, {g, 0.0}};
  rule.weights = {1.0, 1.0};
  return rule;
}

}  // namespace stabfem
