#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace stabfem {

using Point = std::array<double, 2>;
using ScalarFn = std::function<double(Point)>;
using ScalarTimeFn = std::function<double(Point, double)>;
using VelocityFn = std::function<std::array<double, 2>(Point)>;

struct DirichletSpec {
  std::string set;  // boundary set name
  ScalarTimeFn value;
};

struct NeumannSpec {
  std::string set;
  ScalarTimeFn flux;  // prescribed diffusive boundary flux density k dphi/dn
};

// Scalar convection-diffusion problem on a structured mesh. Boundary parts
// carrying neither a Dirichlet nor a Neumann spec get the natural zero-flux
// condition. When Dirichlet specs overlap on a node (shared corners), the
// spec listed first wins.
struct ProblemSpec {
  VelocityFn velocity;
  double diffusivity = 0.0;
  ScalarTimeFn source;  // null means zero
  std::vector<DirichletSpec> dirichlet;
  std::vector<NeumannSpec> neumann;
  ScalarFn initial;  // transient runs only
};

}  // namespace stabfem
