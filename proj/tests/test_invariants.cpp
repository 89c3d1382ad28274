#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "stabfem/assembly.hpp"
#include "stabfem/benchmarks.hpp"
#include "stabfem/condense.hpp"
#include "stabfem/error.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/norms.hpp"
#include "stabfem/shape.hpp"
#include "stabfem/stabilization.hpp"

using namespace stabfem;

namespace {

constexpr double kPi = 3.14159265358979323846;

double manufactured(Point p) {
  return std::sin(kPi * p[0]) * std::sin(kPi * p[1]);
}

std::array<double, 2> manufactured_grad(Point p) {
  return {kPi * std::cos(kPi * p[0]) * std::sin(kPi * p[1]),
          kPi * std::sin(kPi * p[0]) * std::cos(kPi * p[1])};
}

// u = (1,1), D = 1, all edges clamped to the exact trace (zero).
ProblemSpec manufactured_problem() {
  ProblemSpec problem;
  problem.velocity = [](Point) { return std::array<double, 2>{1.0, 1.0}; };
  problem.diffusivity = 1.0;
  problem.source = [](Point p, double) {
    const auto g = manufactured_grad(p);
    return g[0] + g[1] + 2.0 * kPi * kPi * manufactured(p);
  };
  for (const char* edge : {"left", "right", "bottom", "top"}) {
    problem.dirichlet.push_back({edge, [](Point, double) { return 0.0; }});
  }
  return problem;
}

SchemeConfig mmad_scheme(double k_tilde) {
  SchemeConfig s;
  s.kind = SchemeKind::mmad;
  s.k_tilde = k_tilde;
  return s;
}

// Quadrature gradient-norm distance between two discrete fields.
double gradient_gap(const Mesh& mesh, const SolutionField& a,
                    const SolutionField& b) {
  SolutionField diff = a;
  for (size_t i = 0; i < diff.phi.size(); ++i) diff.phi[i] -= b.phi[i];
  return gradient_error_quadrature(
      mesh, diff, [](Point) { return std::array<double, 2>{0.0, 0.0}; });
}

struct TransientTriple {
  RunResult supg, mzad, mmad;
};

const TransientTriple& transient_results(const std::string& name) {
  static std::map<std::string, TransientTriple> cache;
  const auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const auto& bc = find_case(name);
  TransientTriple t;
  SchemeConfig s;
  s.kind = SchemeKind::supg;
  t.supg = run_benchmark(bc.make({}), s);
  s.kind = SchemeKind::mzad;
  t.mzad = run_benchmark(bc.make({}), s);
  s.kind = SchemeKind::mmad;
  t.mmad = run_benchmark(bc.make({}), s);
  return cache.emplace(name, std::move(t)).first->second;
}

}  // namespace

TEST_CASE("manufactured solution converges at the expected spatial orders") {
  const ProblemSpec problem = manufactured_problem();
  std::vector<double> e_l2, e_grad;
  for (int n : {10, 20, 40}) {
    const Mesh mesh = build_quad_mesh(n, n, {0.0, 1.0}, {0.0, 1.0});
    const auto field = solve_steady(mesh, mmad_scheme(1.0), problem);
    e_l2.push_back(l2_error_quadrature(mesh, field, manufactured));
    e_grad.push_back(gradient_error_quadrature(mesh, field, manufactured_grad));
  }
  for (size_t i = 0; i + 1 < e_l2.size(); ++i) {
    const double order_l2 = std::log2(e_l2[i] / e_l2[i + 1]);
    const double order_grad = std::log2(e_grad[i] / e_grad[i + 1]);
    CAPTURE(i);
    CHECK(order_l2 >= 1.9);
    CHECK(order_grad >= 0.95);
  }
}

TEST_CASE("shrinking the modelling tensor shrinks the gap to Galerkin") {
  const int n = 20;
  const Mesh mesh = build_quad_mesh(n, n, {0.0, 1.0}, {0.0, 1.0});
  const ProblemSpec problem = manufactured_problem();
  SchemeConfig galerkin;
  galerkin.kind = SchemeKind::galerkin;
  const auto base = solve_steady(mesh, galerkin, problem);

  const double kbar_full =
      compute_upwind({1.0, 1.0}, element_sizes(mesh, 0), problem.diffusivity, 2)
          .kbar;
  std::vector<double> gaps;
  for (double s : {1.0, 0.5, 0.25}) {
    SchemeConfig scheme = mmad_scheme(1.0);
    scheme.kbar_override = s * kbar_full;
    gaps.push_back(gradient_gap(mesh, solve_steady(mesh, scheme, problem), base));
  }
  CHECK(gaps[0] > 0.0);
  const double slack = 1e-14 * std::max(1.0, gaps[0]);
  CHECK(gaps[1] <= gaps[0] + slack);
  CHECK(gaps[2] <= gaps[1] + slack);
}

TEST_CASE("coupled and condensed penalty solves agree on the 1d benchmark") {
  const auto run = find_case("1d-steady").make({});
  SchemeConfig mz;
  mz.kind = SchemeKind::mzad;
  mz.penalty = element_sizes(run.mesh, 0)[0];
  const auto coupled = solve_steady(run.mesh, mz, run.problem);
  const auto condensed = solve_condensed_mzad(run.mesh, mz, run.problem);
  double worst = 0.0;
  for (int i = 0; i < run.mesh.n_nodes(); ++i) {
    worst = std::max(worst, std::abs(coupled.phi[i] - condensed.phi[i]));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("coupled and condensed penalty solves agree on 2d case I") {
  const auto run = find_case("2d-steady-case1").make({});
  SchemeConfig mz;
  mz.kind = SchemeKind::mzad;
  mz.penalty = element_sizes(run.mesh, 0)[0];
  const auto coupled = solve_steady(run.mesh, mz, run.problem);
  const auto condensed = solve_condensed_mzad(run.mesh, mz, run.problem);
  double worst = 0.0;
  for (int i = 0; i < run.mesh.n_nodes(); ++i) {
    worst = std::max(worst, std::abs(coupled.phi[i] - condensed.phi[i]));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("case I solutions reflect across the diagonal with the flow angle") {
  const int n = 40;
  BenchmarkKnobs knobs;
  knobs.theta_deg = 22.5;
  const auto original = find_case("2d-steady-case1").make(knobs);

  // The mirrored configuration: velocity components swapped, the unit inflow
  // moved to the left edge, the jump at 0.2 moved to the bottom edge.
  const double th = 22.5 * kPi / 180.0;
  ProblemSpec mirrored;
  mirrored.velocity = [th](Point) {
    return std::array<double, 2>{std::sin(th), std::cos(th)};
  };
  mirrored.diffusivity = original.problem.diffusivity;
  mirrored.dirichlet = {
      {"left", [](Point, double) { return 1.0; }},
      {"bottom", [](Point p, double) { return p[0] <= 0.2 ? 1.0 : 0.0; }}};

  const auto scheme = mmad_scheme(1.0);
  const auto a = solve_steady(original.mesh, scheme, original.problem);
  const auto b = solve_steady(original.mesh, scheme, mirrored);
  double worst = 0.0;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double va = a.phi[j * (n + 1) + i];
      const double vb = b.phi[i * (n + 1) + j];
      worst = std::max(worst, std::abs(va - vb));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("benchmark velocity fields are divergence free at element centers") {
  for (const auto& bc : catalog()) {
    const auto run = bc.make({});
    const auto& mesh = run.mesh;
    const auto sizes = element_sizes(mesh, 0);
    const double delta = 0.25 * std::min(sizes[0], sizes[1] > 0.0 ? sizes[1]
                                                                  : sizes[0]);
    double worst = 0.0;
    for (int e = 0; e < mesh.n_elements(); ++e) {
      Point c{0.0, 0.0};
      for (int a = 0; a < mesh.nodes_per_element(); ++a) {
        c[0] += mesh.nodes[mesh.elements[e][a]][0];
        c[1] += mesh.nodes[mesh.elements[e][a]][1];
      }
      c[0] /= mesh.nodes_per_element();
      c[1] /= mesh.nodes_per_element();
      const double dux =
          (run.problem.velocity({c[0] + delta, c[1]})[0] -
           run.problem.velocity({c[0] - delta, c[1]})[0]) /
          (2.0 * delta);
      const double duy =
          mesh.dim == 2 ? (run.problem.velocity({c[0], c[1] + delta})[1] -
                           run.problem.velocity({c[0], c[1] - delta})[1]) /
                              (2.0 * delta)
                        : 0.0;
      worst = std::max(worst, std::abs(dux + duy));
    }
    CAPTURE(bc.name);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("transported hill never overshoots for the modified model") {
  const auto& t = transient_results("2d-transient-irrotational");
  double trace_max = 0.0;
  for (double v : t.mmad.trace.maxima) trace_max = std::max(trace_max, v);
  CHECK(trace_max <= 1.02);
}

TEST_CASE("hill decay ordering on the 2d irrotational case") {
  const auto& t = transient_results("2d-transient-irrotational");
  CHECK(t.mmad.transient.e_t_l2 < t.supg.transient.e_t_l2);
  CHECK(t.mmad.transient.e_t_l2 < t.mzad.transient.e_t_l2);
}

TEST_CASE("hill decay ordering on the 2d rotational case") {
  const auto& t = transient_results("2d-transient-rotational");
  CHECK(t.mmad.transient.e_t_l2 < t.supg.transient.e_t_l2);
  CHECK(t.mmad.transient.e_t_l2 < t.mzad.transient.e_t_l2);
}

TEST_CASE("hill decay ordering on the 1d transient case") {
  const auto& t = transient_results("1d-transient-hill");
  CHECK(t.mmad.transient.e_t_l2 < t.mzad.transient.e_t_l2);
  // The streamline scheme edges out the modified model here by under one
  // percent of the decay error at every stable step size; this ordering is
  // the documented expectation, so the check stays, and stays red.
  CHECK_MESSAGE(t.mmad.transient.e_t_l2 < t.supg.transient.e_t_l2,
                "1d transient decay: modified-model e_t ",
                t.mmad.transient.e_t_l2, " is not below streamline e_t ",
                t.supg.transient.e_t_l2);
}
