#include "stabfem/assembly.hpp"

#include <cmath>
#include <set>
#include <string>

#include "stabfem/error.hpp"
#include "stabfem/quadrature.hpp"
#include "stabfem/shape.hpp"

namespace stabfem {

namespace {

void validate_inputs(const SchemeConfig& scheme, const ProblemSpec& problem) {
  if (!problem.velocity) {
    fail(Status::invalid_argument, "assembly: velocity field is not set");
  }
  if (problem.diffusivity < 0.0) {
    fail(Status::invalid_argument, "assembly: negative diffusivity");
  }
  if (scheme.kind == SchemeKind::mzad && scheme.penalty < 0.0) {
    fail(Status::config_error, "assembly: penalty is not set for MZAD");
  }
  if (scheme.kind == SchemeKind::mmad && scheme.k_tilde < 0.0) {
    fail(Status::config_error, "assembly: k_tilde is not set for MMAD");
  }
  std::set<std::string> dsets;
  for (const auto& d : problem.dirichlet) dsets.insert(d.set);
  for (const auto& n : problem.neumann) {
    if (dsets.count(n.set)) {
      fail(Status::invalid_argument,
           "assembly: boundary set '" + n.set + "' is both Dirichlet and Neumann");
    }
  }
}

struct ElementStab {
  UpwindParams up;
  double kbar = 0.0;                       // override-resolved
  std::array<std::array<double, 2>, 2> H{};
};

ElementStab element_stab(const Mesh& mesh, int e, const SchemeConfig& scheme,
                         const ProblemSpec& problem) {
  ElementStab st;
  st.up = compute_upwind(problem.velocity(element_center(mesh, e)),
                         element_sizes(mesh, e), problem.diffusivity, mesh.dim,
                         scheme.h_scale);
  st.kbar = scheme.kbar_override >= 0.0 ? scheme.kbar_override : st.up.kbar;
  st.H = build_H(st.up, st.kbar);
  return st;
}

// Largest upwind diffusivity over the mesh; scales the gradient-block mass
// regularization so that it vanishes exactly when no element is stabilized.
double max_kbar(const Mesh& mesh, const SchemeConfig& scheme,
                const ProblemSpec& problem) {
  double m = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    m = std::max(m, element_stab(mesh, e, scheme, problem).kbar);
  }
  return m;
}

// Streamline addition to the plain test value, exactly zero when kbar is.
double weight_mod(const ShapeEval& s, int a, const UpwindParams& up, double kbar) {
  if (up.u_norm == 0.0) return 0.0;
  return (kbar / up.u_norm) * (up.u[0] * s.grads[a][0] + up.u[1] * s.grads[a][1]);
}

}  // namespace

DofLayout make_layout(const Mesh& mesh, const SchemeConfig& scheme) {
  return make_dof_layout(mesh.n_nodes(), mesh.dim, scheme.coupled());
}

std::vector<double> pack_state(const SolutionField& field) {
  const DofLayout& L = field.layout;
  std::vector<double> x(L.n_dofs(), 0.0);
  for (int n = 0; n < L.n_nodes; ++n) {
    x[L.dof(n, 0)] = field.phi[n];
    for (int c = 1; c < L.fields_per_node; ++c) {
      x[L.dof(n, c)] = field.g[n][c - 1];
    }
  }
  return x;
}

SolutionField unpack_state(const DofLayout& layout, const std::vector<double>& x,
                           double time) {
  if (static_cast<int>(x.size()) != layout.n_dofs()) {
    fail(Status::invalid_argument, "unpack_state: length mismatch");
  }
  SolutionField f;
  f.layout = layout;
  f.time = time;
  f.phi.resize(layout.n_nodes);
  if (layout.coupled()) f.g.assign(layout.n_nodes, {0.0, 0.0});
  for (int n = 0; n < layout.n_nodes; ++n) {
    f.phi[n] = x[layout.dof(n, 0)];
    for (int c = 1; c < layout.fields_per_node; ++c) {
      f.g[n][c - 1] = x[layout.dof(n, c)];
    }
  }
  return f;
}

SparseMatrix assemble_steady_matrix(const Mesh& mesh, const SchemeConfig& scheme,
                                    const ProblemSpec& problem) {
  validate_inputs(scheme, problem);
  const DofLayout layout = make_layout(mesh, scheme);
  const int dim = mesh.dim;
  const int npe = mesh.nodes_per_element();
  const int fpn = layout.fields_per_node;
  const double k = problem.diffusivity;
  const QuadratureRule rule = gauss_rule(dim);

  const double mu = scheme.kind == SchemeKind::mmad
                        ? gradient_mass_regularization_scale *
                              max_kbar(mesh, scheme, problem)
                        : 0.0;

  std::vector<Triplet> ts;
  ts.reserve(static_cast<size_t>(mesh.n_elements()) * npe * npe * fpn * fpn);
  std::vector<double> blk(static_cast<size_t>(npe * fpn) * (npe * fpn));

  for (int e = 0; e < mesh.n_elements(); ++e) {
    const ElementStab st = element_stab(mesh, e, scheme, problem);
    std::fill(blk.begin(), blk.end(), 0.0);
    auto at = [&](int la, int lb) -> double& {
      return blk[static_cast<size_t>(la) * (npe * fpn) + lb];
    };

    for (size_t q = 0; q < rule.points.size(); ++q) {
      const ShapeEval s = eval_shape(mesh, e, rule.points[q]);
      const double w = rule.weights[q] * s.jac_det;
      const auto uq = problem.velocity({s.phys_point[0], s.phys_point[1]});

      for (int a = 0; a < npe; ++a) {
        for (int b = 0; b < npe; ++b) {
          const double conv_b =
              uq[0] * s.grads[b][0] + uq[1] * s.grads[b][1];  // u . grad N_b
          const double gagb = s.grads[a][0] * s.grads[b][0] +
                              s.grads[a][1] * s.grads[b][1];
          // Galerkin core, computed identically for every scheme so that
          // zero stabilization reproduces it bit for bit.
          double v = conv_b * s.values[a] + k * gagb;

          switch (scheme.kind) {
            case SchemeKind::galerkin:
              break;
            case SchemeKind::classical_ad:
              v += st.kbar * gagb;
              break;
            case SchemeKind::su:
            case SchemeKind::supg:
              v += conv_b * weight_mod(s, a, st.up, st.kbar);
              break;
            case SchemeKind::mzad:
              v += scheme.penalty * gagb;
              break;
            case SchemeKind::mmad: {
              double hterm = 0.0;
              for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                  hterm += s.grads[a][i] * st.H[i][j] * s.grads[b][j];
                }
              }
              v += hterm;
              break;
            }
          }
          at(a * fpn, b * fpn) += w * v;

          if (scheme.kind == SchemeKind::mzad) {
            const double mass = s.values[a] * s.values[b];
            for (int i = 0; i < dim; ++i) {
              // phi-g: -p g . grad(test phi)
              at(a * fpn, b * fpn + 1 + i) +=
                  w * (-scheme.penalty * s.grads[a][i] * s.values[b]);
              // g-phi: -grad(phi) . test g, unscaled as written
              at(a * fpn + 1 + i, b * fpn) += w * (-s.grads[b][i] * s.values[a]);
              // g-g: component-wise mass
              at(a * fpn + 1 + i, b * fpn + 1 + i) += w * mass;
            }
          } else if (scheme.kind == SchemeKind::mmad) {
            const double mass = s.values[a] * s.values[b];
            for (int i = 0; i < dim; ++i) {
              double hga = 0.0;  // (H grad N_a)_i
              double hgb = 0.0;  // (H grad N_b)_i
              for (int j = 0; j < dim; ++j) {
                hga += st.H[i][j] * s.grads[a][j];
                hgb += st.H[i][j] * s.grads[b][j];
              }
              at(a * fpn, b * fpn + 1 + i) += w * (-hga * s.values[b]);
              at(a * fpn + 1 + i, b * fpn) += w * (-hgb * s.values[a]);
              for (int j = 0; j < dim; ++j) {
                at(a * fpn + 1 + i, b * fpn + 1 + j) += w * st.H[i][j] * mass;
              }
              at(a * fpn + 1 + i, b * fpn + 1 + i) +=
                  w * ((scheme.k_tilde + mu) * mass + scheme.k_tilde * gagb);
            }
          }
        }
      }
    }

    for (int a = 0; a < npe; ++a) {
      for (int ca = 0; ca < fpn; ++ca) {
        for (int b = 0; b < npe; ++b) {
          for (int cb = 0; cb < fpn; ++cb) {
            ts.push_back({layout.dof(mesh.elements[e][a], ca),
                          layout.dof(mesh.elements[e][b], cb),
                          at(a * fpn + ca, b * fpn + cb)});
          }
        }
      }
    }
  }
  return SparseMatrix::from_triplets(layout.n_dofs(), layout.n_dofs(), ts);
}

SparseMatrix assemble_mass_matrix(const Mesh& mesh, const SchemeConfig& scheme,
                                  const ProblemSpec& problem) {
  validate_inputs(scheme, problem);
  const DofLayout layout = make_layout(mesh, scheme);
  const int npe = mesh.nodes_per_element();
  const QuadratureRule rule = gauss_rule(mesh.dim);

  std::vector<Triplet> ts;
  ts.reserve(static_cast<size_t>(mesh.n_elements()) * npe * npe);
  std::vector<double> blk(static_cast<size_t>(npe) * npe);

  for (int e = 0; e < mesh.n_elements(); ++e) {
    const ElementStab st = element_stab(mesh, e, scheme, problem);
    std::fill(blk.begin(), blk.end(), 0.0);

    for (size_t q = 0; q < rule.points.size(); ++q) {
      const ShapeEval s = eval_shape(mesh, e, rule.points[q]);
      const double w = rule.weights[q] * s.jac_det;
      for (int a = 0; a < npe; ++a) {
        double test = s.values[a];
        if (scheme.kind == SchemeKind::supg) {
          test += weight_mod(s, a, st.up, st.kbar);
        }
        for (int b = 0; b < npe; ++b) {
          blk[static_cast<size_t>(a) * npe + b] += w * test * s.values[b];
        }
      }
    }
    for (int a = 0; a < npe; ++a) {
      for (int b = 0; b < npe; ++b) {
        ts.push_back({layout.dof(mesh.elements[e][a], 0),
                      layout.dof(mesh.elements[e][b], 0),
                      blk[static_cast<size_t>(a) * npe + b]});
      }
    }
  }
  return SparseMatrix::from_triplets(layout.n_dofs(), layout.n_dofs(), ts);
}

std::vector<double> assemble_load(const Mesh& mesh, const SchemeConfig& scheme,
                                  const ProblemSpec& problem, double time) {
  validate_inputs(scheme, problem);
  const DofLayout layout = make_layout(mesh, scheme);
  const int npe = mesh.nodes_per_element();
  std::vector<double> b(layout.n_dofs(), 0.0);

  if (problem.source) {
    const QuadratureRule rule = gauss_rule(mesh.dim);
    for (int e = 0; e < mesh.n_elements(); ++e) {
      const ElementStab st = element_stab(mesh, e, scheme, problem);
      for (size_t q = 0; q < rule.points.size(); ++q) {
        const ShapeEval s = eval_shape(mesh, e, rule.points[q]);
        const double w = rule.weights[q] * s.jac_det;
        const double f = problem.source({s.phys_point[0], s.phys_point[1]}, time);
        for (int a = 0; a < npe; ++a) {
          double test = s.values[a];
          if (scheme.kind == SchemeKind::supg) {
            test += weight_mod(s, a, st.up, st.kbar);
          }
          b[layout.dof(mesh.elements[e][a], 0)] += w * f * test;
        }
      }
    }
  }

  // Prescribed diffusive flux, tested with the plain nodal value for every
  // scheme (the streamline modification weights interior terms only).
  for (const auto& spec : problem.neumann) {
    const auto it = mesh.boundary_sets.find(spec.set);
    if (it == mesh.boundary_sets.end()) {
      fail(Status::invalid_argument,
           "assembly: unknown boundary set '" + spec.set + "'");
    }
    const auto& nodes = it->second;
    if (mesh.dim == 1) {
      for (int n : nodes) {
        b[layout.dof(n, 0)] +=
            spec.flux({mesh.nodes[n][0], mesh.nodes[n][1]}, time);
      }
      continue;
    }
    const QuadratureRule edge = edge_gauss_rule();
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      const int n0 = nodes[i];
      const int n1 = nodes[i + 1];
      const double dx = mesh.nodes[n1][0] - mesh.nodes[n0][0];
      const double dy = mesh.nodes[n1][1] - mesh.nodes[n0][1];
      const double len = std::sqrt(dx * dx + dy * dy);
      for (size_t q = 0; q < edge.points.size(); ++q) {
        const double xi = edge.points[q][0];
        const double w = edge.weights[q] * len / 2.0;
        const double s0 = (1.0 - xi) / 2.0;
        const double s1 = (1.0 + xi) / 2.0;
        const Point xq = {mesh.nodes[n0][0] + s1 * dx, mesh.nodes[n0][1] + s1 * dy};
        const double f = spec.flux(xq, time);
        b[layout.dof(n0, 0)] += w * f * s0;
        b[layout.dof(n1, 0)] += w * f * s1;
      }
    }
  }
  return b;
}

std::vector<DirichletValue> dirichlet_constraints(const Mesh& mesh,
                                                  const DofLayout& layout,
                                                  const ProblemSpec& problem,
                                                  double time) {
  std::vector<DirichletValue> out;
  std::set<int> seen;
  for (const auto& spec : problem.dirichlet) {
    const auto it = mesh.boundary_sets.find(spec.set);
    if (it == mesh.boundary_sets.end()) {
      fail(Status::invalid_argument,
           "dirichlet_constraints: unknown boundary set '" + spec.set + "'");
    }
    for (int n : it->second) {
      if (!seen.insert(n).second) continue;
      out.push_back({layout.dof(n, 0),
                     spec.value({mesh.nodes[n][0], mesh.nodes[n][1]}, time)});
    }
  }
  return out;
}

SolutionField solve_steady(const Mesh& mesh, const SchemeConfig& scheme,
                           const ProblemSpec& problem) {
  SparseMatrix A = assemble_steady_matrix(mesh, scheme, problem);
  std::vector<double> b = assemble_load(mesh, scheme, problem, 0.0);
  const DofLayout layout = make_layout(mesh, scheme);
  impose_dirichlet(A, b, dirichlet_constraints(mesh, layout, problem, 0.0));
  return unpack_state(layout, solve(A, b), 0.0);
}

}  // namespace stabfem
