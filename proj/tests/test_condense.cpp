#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/condense.hpp"
#include "stabfem/error.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/stabilization.hpp"

using namespace stabfem;

namespace {

ProblemSpec constant_flow(double ux, double uy, double k) {
  ProblemSpec p;
  p.velocity = [ux, uy](Point) { return std::array<double, 2>{ux, uy}; };
  p.diffusivity = k;
  return p;
}

void check_fields_match(const SolutionField& a, const SolutionField& b,
                        double tol) {
  REQUIRE(a.phi.size() == b.phi.size());
  REQUIRE(a.g.size() == b.g.size());
  double scale = 0.0;
  for (double v : a.phi) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  for (size_t n = 0; n < a.phi.size(); ++n) {
    CHECK(std::abs(a.phi[n] - b.phi[n]) <= tol * scale);
  }
  double gscale = 0.0;
  for (const auto& g : a.g) {
    gscale = std::max({gscale, std::abs(g[0]), std::abs(g[1])});
  }
  if (gscale == 0.0) gscale = 1.0;
  for (size_t n = 0; n < a.g.size(); ++n) {
    CHECK(std::abs(a.g[n][0] - b.g[n][0]) <= tol * gscale);
    CHECK(std::abs(a.g[n][1] - b.g[n][1]) <= tol * gscale);
  }
}

}  // namespace

TEST_CASE("condensed and coupled solves agree in 1d") {
  const Mesh m = build_line_mesh(40, 0.0, 1.0);
  SchemeConfig sc{SchemeKind::mzad};
  sc.penalty = 0.025;  // one element size
  auto prob = constant_flow(1.0, 0.0, 1e-3);
  prob.dirichlet = {{"left", [](Point, double) { return 0.0; }},
                    {"right", [](Point, double) { return 1.0; }}};
  const auto coupled = solve_steady(m, sc, prob);
  const auto condensed = solve_condensed_mzad(m, sc, prob);
  check_fields_match(coupled, condensed, 1e-8);
}

TEST_CASE("condensed and coupled solves agree in 2d") {
  const Mesh m = build_quad_mesh(6, 5, {0.0, 1.0}, {0.0, 1.0});
  SchemeConfig sc{SchemeKind::mzad};
  sc.penalty = 1.0 / 6.0;
  const double c = std::cos(0.7), s = std::sin(0.7);
  auto prob = constant_flow(c, s, 1e-4);
  prob.dirichlet = {{"bottom", [](Point, double) { return 1.0; }},
                    {"left", [](Point p, double) {
                       return p[1] <= 0.2 ? 1.0 : 0.0;
                     }}};
  const auto coupled = solve_steady(m, sc, prob);
  const auto condensed = solve_condensed_mzad(m, sc, prob);
  check_fields_match(coupled, condensed, 1e-8);
}

TEST_CASE("zero penalty condenses to the plain operator") {
  const Mesh m = build_quad_mesh(4, 3, {0.0, 1.0}, {0.0, 1.0});
  SchemeConfig sc{SchemeKind::mzad};
  sc.penalty = 0.0;
  const auto prob = constant_flow(1.0, -0.5, 0.05);
  const auto sys = condense_mzad(m, sc, prob);
  const auto A = assemble_steady_matrix(m, SchemeConfig{SchemeKind::galerkin},
                                        prob);
  const int n = sys.layout.n_dofs();
  REQUIRE(n == m.n_nodes());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CHECK(sys.matrix[i * n + j] == A.coeff(i, j));
    }
  }
}

TEST_CASE("projection correction cancels on a single element") {
  // with one element the gradient space reproduces the field gradient
  // exactly, so the eliminated system carries no added diffusion
  const double h = 1.0, k = 0.25, u = 1.0, p = 0.3;
  const Mesh m = build_line_mesh(1, 0.0, h);
  SchemeConfig sc{SchemeKind::mzad};
  sc.penalty = p;
  const auto prob = constant_flow(u, 0.0, k);
  const auto sys = condense_mzad(m, sc, prob);
  const auto A = assemble_steady_matrix(m, SchemeConfig{SchemeKind::galerkin},
                                        prob);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(sys.matrix[i * 2 + j] ==
            doctest::Approx(A.coeff(i, j)).scale(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("condensation rejects other schemes") {
  const Mesh m = build_line_mesh(4, 0.0, 1.0);
  const auto prob = constant_flow(1.0, 0.0, 0.1);
  CHECK_THROWS_AS(condense_mzad(m, SchemeConfig{SchemeKind::galerkin}, prob),
                  Error);
  SchemeConfig mmad{SchemeKind::mmad};
  mmad.k_tilde = 1.0;
  CHECK_THROWS_AS(condense_mzad(m, mmad, prob), Error);
}

TEST_CASE("condensed load and constraints mirror the coupled problem") {
  const Mesh m = build_line_mesh(5, 0.0, 1.0);
  SchemeConfig sc{SchemeKind::mzad};
  sc.penalty = 0.2;
  auto prob = constant_flow(1.0, 0.0, 0.1);
  prob.source = [](Point p, double) { return 2.0 * p[0]; };
  prob.dirichlet = {{"left", [](Point, double) { return 3.0; }}};
  const auto sys = condense_mzad(m, sc, prob);

  const auto b = assemble_load(m, sc, prob, 0.0);
  const DofLayout L = make_layout(m, sc);
  REQUIRE(static_cast<int>(sys.load.size()) == m.n_nodes());
  for (int n = 0; n < m.n_nodes(); ++n) {
    CHECK(sys.load[n] == b[L.dof(n, 0)]);
  }
  REQUIRE(sys.constraints.size() == 1u);
  CHECK(sys.constraints[0].dof == 0);
  CHECK(sys.constraints[0].value == 3.0);
}
