#include "stabfem/io.hpp"

#include <cstdio>
#include <fstream>

#include "stabfem/error.hpp"

namespace stabfem {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline translation
  if (!out) {
    fail(Status::io_error, "cannot open '" + path + "' for writing");
  }
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) {
    fail(Status::io_error, "write to '" + path + "' failed");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_solution_csv(const std::string& path, const Mesh& mesh,
                        const SolutionField& field) {
  if (mesh.dim != 1) {
    fail(Status::invalid_argument, "write_solution_csv: 1D meshes only");
  }
  if (static_cast<int>(field.phi.size()) != mesh.n_nodes()) {
    fail(Status::invalid_argument, "write_solution_csv: field/mesh mismatch");
  }
  const bool coupled = !field.g.empty();
  auto out = open_out(path);
  out << (coupled ? "x,phi,g\n" : "x,phi\n");
  for (int n = 0; n < mesh.n_nodes(); ++n) {
    out << format_double(mesh.nodes[n][0]) << ','
        << format_double(field.phi[n]);
    if (coupled) out << ',' << format_double(field.g[n][0]);
    out << '\n';
  }
  finish(out, path);
}

void write_hill_trace_csv(const std::string& path, const HillTrace& trace,
                          double dt) {
  auto out = open_out(path);
  out << "step,time,max_phi\n";
  for (size_t n = 0; n < trace.maxima.size(); ++n) {
    out << n << ',' << format_double(static_cast<double>(n) * dt) << ','
        << format_double(trace.maxima[n]) << '\n';
  }
  finish(out, path);
}

void write_vtk(const std::string& path, const Mesh& mesh,
               const std::vector<std::pair<std::string, std::vector<double>>>&
                   fields) {
  for (const auto& [name, values] : fields) {
    if (static_cast<int>(values.size()) != mesh.n_nodes()) {
      fail(Status::invalid_argument,
           "write_vtk: field '" + name + "' does not match the node count");
    }
  }
  auto out = open_out(path);
  out << "# vtk DataFile Version 3.0\n"
      << "stabfem solution\n"
      << "ASCII\n"
      << "DATASET UNSTRUCTURED_GRID\n"
      << "POINTS " << mesh.n_nodes() << " double\n";
  for (int n = 0; n < mesh.n_nodes(); ++n) {
    out << format_double(mesh.nodes[n][0]) << ' '
        << format_double(mesh.nodes[n][1]) << " 0\n";
  }
  const int npe = mesh.nodes_per_element();
  out << "CELLS " << mesh.n_elements() << ' '
      << mesh.n_elements() * (npe + 1) << '\n';
  for (int e = 0; e < mesh.n_elements(); ++e) {
    out << npe;
    for (int a = 0; a < npe; ++a) out << ' ' << mesh.elements[e][a];
    out << '\n';
  }
  const int cell_type = mesh.dim == 2 ? 9 : 3;
  out << "CELL_TYPES " << mesh.n_elements() << '\n';
  for (int e = 0; e < mesh.n_elements(); ++e) out << cell_type << '\n';
  out << "POINT_DATA " << mesh.n_nodes() << '\n';
  for (const auto& [name, values] : fields) {
    out << "SCALARS " << name << " double 1\n"
        << "LOOKUP_TABLE default\n";
    for (double v : values) out << format_double(v) << '\n';
  }
  finish(out, path);
}

}  // namespace stabfem
