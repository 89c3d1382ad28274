#include "stabfem/mesh.hpp"

#include <cmath>
#include <string>

#include "stabfem/error.hpp"
#include "stabfem/quadrature.hpp"
#include "stabfem/shape.hpp"

namespace stabfem {

namespace {

void validate_jacobians(const Mesh& mesh) {
  const QuadratureRule rule = gauss_rule(mesh.dim);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    for (const auto& pt : rule.points) {
      eval_shape(mesh, e, pt);  // throws on non-positive jac_det
    }
  }
}

}  // namespace

Mesh build_line_mesh(int n_elems, double x_min, double x_max) {
  if (n_elems < 1) {
    fail(Status::invalid_argument,
         "build_line_mesh: n_elems must be >= 1, got " + std::to_string(n_elems));
  }
  if (!(x_min < x_max)) {
    fail(Status::invalid_argument, "build_line_mesh: empty interval [" +
                                       std::to_string(x_min) + ", " +
                                       std::to_string(x_max) + "]");
  }
  Mesh mesh;
  mesh.dim = 1;
  mesh.nodes.resize(n_elems + 1);
  const double h = (x_max - x_min) / n_elems;
  for (int i = 0; i <= n_elems; ++i) {
    mesh.nodes[i] = {x_min + i * h, 0.0};
  }
  mesh.nodes.back() = {x_max, 0.0};
  mesh.elements.resize(n_elems);
  for (int e = 0; e < n_elems; ++e) {
    mesh.elements[e] = {e, e + 1, -1, -1};
  }
  mesh.boundary_sets["left"] = {0};
  mesh.boundary_sets["right"] = {n_elems};
  return mesh;
}

Mesh build_quad_mesh(int nx, int ny, std::array<double, 2> x_bounds,
                     std::array<double, 2> y_bounds) {
  if (nx < 1 || ny < 1) {
    fail(Status::invalid_argument, "build_quad_mesh: element counts must be >= 1");
  }
  if (!(x_bounds[0] < x_bounds[1]) || !(y_bounds[0] < y_bounds[1])) {
    fail(Status::invalid_argument, "build_quad_mesh: degenerate rectangle");
  }
  Mesh mesh;
  mesh.dim = 2;
  const double hx = (x_bounds[1] - x_bounds[0]) / nx;
  const double hy = (y_bounds[1] - y_bounds[0]) / ny;
  mesh.nodes.resize((nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      // row-major: node of grid point (i, j) is j*(nx+1) + i
      mesh.nodes[j * (nx + 1) + i] = {x_bounds[0] + i * hx, y_bounds[0] + j * hy};
    }
  }
  mesh.elements.resize(nx * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int n0 = j * (nx + 1) + i;
      mesh.elements[j * nx + i] = {n0, n0 + 1, n0 + nx + 2, n0 + nx + 1};
    }
  }
  auto& sets = mesh.boundary_sets;
  for (int j = 0; j <= ny; ++j) {
    sets["left"].push_back(j * (nx + 1));
    sets["right"].push_back(j * (nx + 1) + nx);
  }
  for (int i = 0; i <= nx; ++i) {
    sets["bottom"].push_back(i);
    sets["top"].push_back(ny * (nx + 1) + i);
  }
  validate_jacobians(mesh);
  return mesh;
}

std::array<double, 2> element_sizes(const Mesh& mesh, int elem) {
  if (elem < 0 || elem >= mesh.n_elements()) {
    fail(Status::invalid_argument, "element_sizes: element index out of range");
  }
  const auto& conn = mesh.elements[elem];
  if (mesh.dim == 1) {
    const double h = mesh.nodes[conn[1]][0] - mesh.nodes[conn[0]][0];
    return {std::abs(h), 0.0};
  }
  auto mid = [&](int a, int b) -> std::array<double, 2> {
    return {0.5 * (mesh.nodes[a][0] + mesh.nodes[b][0]),
            0.5 * (mesh.nodes[a][1] + mesh.nodes[b][1])};
  };
  auto dist = [](std::array<double, 2> p, std::array<double, 2> q) {
    return std::hypot(p[0] - q[0], p[1] - q[1]);
  };
  // h_1: between midpoints of the xi = +/-1 edges; h_2: the eta = +/-1 edges.
  const double h1 = dist(mid(conn[1], conn[2]), mid(conn[3], conn[0]));
  const double h2 = dist(mid(conn[2], conn[3]), mid(conn[0], conn[1]));
  return {h1, h2};
}

std::array<double, 2> element_center(const Mesh& mesh, int elem) {
  const auto& conn = mesh.elements[elem];
  const int n = mesh.nodes_per_element();
  std::array<double, 2> c{0.0, 0.0};
  for (int a = 0; a < n; ++a) {
    c[0] += mesh.nodes[conn[a]][0];
    c[1] += mesh.nodes[conn[a]][1];
  }
  c[0] /= n;
  c[1] /= n;
  return c;
}

}  // namespace stabfem
