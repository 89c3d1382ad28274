#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/norms.hpp"

namespace stabfem {

// All writers print floating-point values with 17 significant digits so a
// reader recovers the exact doubles; identical inputs produce identical
// bytes. IO failures raise io_error naming the path.

std::string format_double(double v);  // %.17g, "nan"/"inf" spelled by libc

// Nodal solution along a 1D mesh: header "x,phi" plus a ",g" column for
// coupled-field schemes.
void write_solution_csv(const std::string& path, const Mesh& mesh,
                        const SolutionField& field);

// Per-step transported maxima: header "step,time,max_phi", one row per
// recorded step including step 0.
void write_hill_trace_csv(const std::string& path, const HillTrace& trace,
                          double dt);

// Legacy ASCII VTK unstructured grid: quad cells as type 9, line cells as
// type 3, one SCALARS block per named nodal array.
void write_vtk(const std::string& path, const Mesh& mesh,
               const std::vector<std::pair<std::string, std::vector<double>>>&
                   fields);

}  // namespace stabfem
