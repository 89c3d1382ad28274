#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace stabfem {

// Structured line/quadrilateral mesh. Node coordinates are (x, y); 1D meshes
// keep y = 0. Quad connectivity is counterclockwise; 1D elements use the
// first two slots and pad the rest with -1.
struct Mesh {
  int dim = 1;
  std::vector<std::array<double, 2>> nodes;
  std::vector<std::array<int, 4>> elements;
  // "left"/"right" in 1D; "left"/"right"/"bottom"/"top" in 2D. Node lists are
  // ordered along the boundary; corner nodes appear in both adjacent sets.
  std::map<std::string, std::vector<int>> boundary_sets;

  int n_nodes() const { return static_cast<int>(nodes.size()); }
  int n_elements() const { return static_cast<int>(elements.size()); }
  int nodes_per_element() const { return dim == 1 ? 2 : 4; }
};

Mesh build_line_mesh(int n_elems, double x_min, double x_max);
Mesh build_quad_mesh(int nx, int ny, std::array<double, 2> x_bounds,
                     std::array<double, 2> y_bounds);

// Per-direction element extents: the segment length in 1D; in 2D the distance
// between the midpoints of the two edges orthogonal to each natural direction
// (equals the side lengths on axis-aligned meshes).
std::array<double, 2> element_sizes(const Mesh& mesh, int elem);

std::array<double, 2> element_center(const Mesh& mesh, int elem);

}  // namespace stabfem
