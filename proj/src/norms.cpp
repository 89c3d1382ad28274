#include "stabfem/norms.hpp"

#include <cmath>

#include "stabfem/error.hpp"
#include "stabfem/quadrature.hpp"
#include "stabfem/shape.hpp"

namespace stabfem {

ErrorReport error_norms(const SolutionField& field, const ScalarFn& reference,
                        const Mesh& mesh) {
  if (!reference) {
    fail(Status::invalid_argument, "error_norms: reference is not set");
  }
  if (static_cast<int>(field.phi.size()) != mesh.n_nodes()) {
    fail(Status::invalid_argument, "error_norms: field does not match mesh");
  }
  double err2 = 0.0, ref2 = 0.0, err_max = 0.0, ref_max = 0.0;
  for (int n = 0; n < mesh.n_nodes(); ++n) {
    const double r = reference({mesh.nodes[n][0], mesh.nodes[n][1]});
    const double e = r - field.phi[n];
    err2 += e * e;
    ref2 += r * r;
    err_max = std::max(err_max, std::abs(e));
    ref_max = std::max(ref_max, std::abs(r));
  }
  if (ref2 == 0.0 || ref_max == 0.0) {
    fail(Status::invalid_argument,
         "error_norms: reference norm is zero, relative error undefined");
  }
  return {std::sqrt(err2) / std::sqrt(ref2), err_max / ref_max};
}

double l2_error_quadrature(const Mesh& mesh, const SolutionField& field,
                           const ScalarFn& reference) {
  if (!reference) {
    fail(Status::invalid_argument, "l2_error_quadrature: reference not set");
  }
  const QuadratureRule rule = gauss_rule(mesh.dim);
  const int npe = mesh.nodes_per_element();
  double total = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    for (size_t q = 0; q < rule.points.size(); ++q) {
      const ShapeEval s = eval_shape(mesh, e, rule.points[q]);
      double vh = 0.0;
      for (int a = 0; a < npe; ++a) {
        vh += s.values[a] * field.phi[mesh.elements[e][a]];
      }
      const double d = vh - reference(s.phys_point);
      total += rule.weights[q] * s.jac_det * d * d;
    }
  }
  return std::sqrt(total);
}

double gradient_error_quadrature(const Mesh& mesh, const SolutionField& field,
                                 const VelocityFn& reference_gradient) {
  if (!reference_gradient) {
    fail(Status::invalid_argument,
         "gradient_error_quadrature: reference not set");
  }
  const QuadratureRule rule = gauss_rule(mesh.dim);
  const int npe = mesh.nodes_per_element();
  double total = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    for (size_t q = 0; q < rule.points.size(); ++q) {
      const ShapeEval s = eval_shape(mesh, e, rule.points[q]);
      double gh[2] = {0.0, 0.0};
      for (int a = 0; a < npe; ++a) {
        const double v = field.phi[mesh.elements[e][a]];
        gh[0] += s.grads[a][0] * v;
        gh[1] += s.grads[a][1] * v;
      }
      const auto gref = reference_gradient(s.phys_point);
      const double dx = gh[0] - gref[0];
      const double dy = gh[1] - gref[1];
      total += rule.weights[q] * s.jac_det * (dx * dx + dy * dy);
    }
  }
  return std::sqrt(total);
}

TransientErrors transient_error_norms(const HillTrace& trace,
                                      const std::vector<double>& reference) {
  if (trace.maxima.size() != reference.size()) {
    fail(Status::invalid_argument,
         "transient_error_norms: trace and reference lengths differ");
  }
  double err2 = 0.0, ref2 = 0.0, err_max = 0.0, ref_max = 0.0;
  for (size_t n = 0; n < reference.size(); ++n) {
    const double e = reference[n] - trace.maxima[n];
    err2 += e * e;
    ref2 += reference[n] * reference[n];
    err_max = std::max(err_max, std::abs(e));
    ref_max = std::max(ref_max, std::abs(reference[n]));
  }
  if (ref2 == 0.0 || ref_max == 0.0) {
    fail(Status::invalid_argument,
         "transient_error_norms: reference trace is zero");
  }
  return {std::sqrt(err2) / std::sqrt(ref2), err_max / ref_max};
}

}  // namespace stabfem
