#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/diagnostics.hpp"
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

}  // namespace

TEST_CASE("pure diffusion two-field operator is positive definite") {
  const Mesh m = build_quad_mesh(4, 3, {0.0, 1.0}, {0.0, 1.0});
  SchemeConfig sc{SchemeKind::mmad};
  sc.k_tilde = 1.0;
  const auto rep = coercivity_check(m, sc, constant_flow(0.0, 0.0, 1.0));
  CHECK(rep.lambda_min > 0.0);
  // 20 nodes, 14 on the boundary; only the transported field is constrained
  CHECK(rep.n_free_dofs == 3 * 20 - 14);
  CHECK(rep.operator_norm > 0.0);
}

TEST_CASE("zero operator reports a zero spectrum") {
  const Mesh m = build_quad_mesh(3, 3, {0.0, 1.0}, {0.0, 1.0});
  const auto rep = coercivity_check(m, SchemeConfig{SchemeKind::galerkin},
                                    constant_flow(0.0, 0.0, 0.0));
  CHECK(rep.lambda_min == 0.0);
  CHECK(rep.operator_norm == 0.0);
  CHECK(rep.n_free_dofs == 4);
}

TEST_CASE("fuzz: nonnegative symmetric part for divergence-free flows") {
  // velocity (a + b y, c + d x) is divergence-free and affine, so the
  // constrained convection block is skew and cannot break coercivity
  std::mt19937 rng(4711);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> diff(0.0, 1.0);
  std::uniform_int_distribution<int> cells(2, 6);

  for (int trial = 0; trial < 20; ++trial) {
    const Mesh m = build_quad_mesh(cells(rng), cells(rng), {0.0, 1.3},
                                   {-0.4, 0.8});
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    ProblemSpec prob;
    prob.velocity = [a, b, c, d](Point p) {
      return std::array<double, 2>{a + b * p[1], c + d * p[0]};
    };
    prob.diffusivity = diff(rng);

    SchemeConfig schemes[3] = {SchemeConfig{SchemeKind::galerkin},
                               SchemeConfig{SchemeKind::su},
                               SchemeConfig{SchemeKind::mmad}};
    schemes[2].k_tilde = diff(rng);
    for (const auto& sc : schemes) {
      CAPTURE(trial);
      CAPTURE(scheme_name(sc.kind));
      const auto rep = coercivity_check(m, sc, prob);
      CHECK(rep.lambda_min >= -1e-10 * std::max(1.0, rep.operator_norm));
    }
  }
}

TEST_CASE("energy functional closed forms") {
  const Mesh m = build_quad_mesh(5, 4, {0.0, 1.0}, {0.0, 1.0});

  SUBCASE("zero field carries zero energy") {
    SolutionField f;
    f.layout = make_layout(m, SchemeConfig{SchemeKind::galerkin});
    f.phi.assign(m.n_nodes(), 0.0);
    CHECK(energy_functional(m, f, 1.0, EnergyTensors{}, nullptr) == 0.0);
  }

  SUBCASE("linear single-field state") {
    // phi = x: |grad phi|^2 = 1, integral of F phi = 1/2 on the unit square
    SolutionField f;
    f.layout = make_layout(m, SchemeConfig{SchemeKind::galerkin});
    for (int n = 0; n < m.n_nodes(); ++n) f.phi.push_back(m.nodes[n][0]);
    const double k = 2.0;
    const auto F = [](Point) { return 1.0; };
    CHECK(energy_functional(m, f, k, EnergyTensors{}, F) ==
          doctest::Approx(0.5 * k + 0.5).epsilon(1e-13));

    // a coupling tensor sees grad phi - g = (1, 0) when g is absent
    EnergyTensors t;
    t.H = {{{0.3, 0.1}, {0.1, 0.2}}};
    CHECK(energy_functional(m, f, k, t, nullptr) ==
          doctest::Approx(0.5 * k + 0.5 * 0.3).epsilon(1e-13));
  }

  SUBCASE("constant auxiliary gradient") {
    // phi = 0, g = (2, -1): grad phi - g = -g, grad g = 0
    SchemeConfig sc{SchemeKind::mmad};
    sc.k_tilde = 0.7;
    SolutionField f;
    f.layout = make_layout(m, sc);
    f.phi.assign(m.n_nodes(), 0.0);
    f.g.assign(m.n_nodes(), {2.0, -1.0});
    EnergyTensors t;
    t.H = {{{0.4, 0.0}, {0.0, 0.1}}};
    t.k_tilde = 0.7;
    const double hterm = 0.5 * (0.4 * 4.0 + 0.1 * 1.0);
    const double kterm = 0.5 * 0.7 * 5.0;
    CHECK(energy_functional(m, f, 1.0, t, nullptr) ==
          doctest::Approx(hterm + kterm).epsilon(1e-13));
  }
}

TEST_CASE("the two-field diffusion solution minimizes the energy") {
  const Mesh m = build_quad_mesh(5, 4, {0.0, 1.0}, {0.0, 1.0});
  SchemeConfig sc{SchemeKind::mmad};
  sc.k_tilde = 1.0;
  const double k = 1.0;
  const auto F = [](Point p) { return std::sin(2.0 * p[0]) + p[1]; };
  auto prob = constant_flow(0.0, 0.0, k);
  prob.source = [&](Point p, double) { return -F(p); };
  prob.dirichlet = {{"left", [](Point, double) { return 0.0; }},
                    {"right", [](Point, double) { return 0.0; }},
                    {"bottom", [](Point, double) { return 0.0; }},
                    {"top", [](Point, double) { return 0.0; }}};
  const auto sol = solve_steady(m, sc, prob);

  EnergyTensors t;
  t.k_tilde = sc.k_tilde;  // velocity is zero, so the coupling tensor is too
  const double J0 = energy_functional(m, sol, k, t, F);

  const DofLayout L = sol.layout;
  std::vector<bool> constrained(L.n_dofs(), false);
  for (const auto& c : dirichlet_constraints(m, L, prob, 0.0)) {
    constrained[c.dof] = true;
  }
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> bump(-0.1, 0.1);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = pack_state(sol);
    for (int d = 0; d < L.n_dofs(); ++d) {
      if (!constrained[d]) x[d] += bump(rng);
    }
    const auto pert = unpack_state(L, x, sol.time);
    CHECK(energy_functional(m, pert, k, t, F) >= J0);
  }
}
