#include "stabfem/benchmarks.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "stabfem/error.hpp"
#include "stabfem/time_stepping.hpp"

namespace stabfem {

namespace {

constexpr double kPi = std::numbers::pi;

double resolve_diffusivity(const BenchmarkKnobs& knobs, double default_d,
                           double u_norm, double length) {
  if (knobs.diffusivity >= 0.0) return knobs.diffusivity;
  if (knobs.peclet > 0.0) return u_norm * length / knobs.peclet;
  return default_d;
}

int resolve_elements(const BenchmarkKnobs& knobs, int default_n) {
  if (knobs.elements == 0 || knobs.elements < -1) {
    fail(Status::invalid_argument, "benchmark: element count must be >= 1");
  }
  return knobs.elements > 0 ? knobs.elements : default_n;
}

double hill(Point p, Point center, double sigma) {
  const double dx = p[0] - center[0];
  const double dy = p[1] - center[1];
  const double r = std::sqrt(dx * dx + dy * dy);
  if (r > sigma) return 0.0;
  return 0.5 * (1.0 + std::cos(kPi * r / sigma));
}

BenchmarkRun make_1d_steady(const BenchmarkKnobs& knobs) {
  BenchmarkRun run;
  run.name = "1d-steady";
  const int n = resolve_elements(knobs, 100);
  run.mesh = build_line_mesh(n, 0.0, 1.0);
  const double u = 1.0;
  const double d = resolve_diffusivity(knobs, u * 1.0 / 1e6, u, 1.0);
  run.problem.velocity = [](Point) { return std::array<double, 2>{1.0, 0.0}; };
  run.problem.diffusivity = d;
  run.problem.dirichlet = {{"left", [](Point, double) { return 0.0; }},
                           {"right", [](Point, double) { return 1.0; }}};
  if (d > 0.0) {
    run.has_exact = true;
    run.exact = [u, d](Point p, double) { return exact_1d_steady(p[0], u, d); };
  }
  run.k_tilde_default = 1.0;
  return run;
}

BenchmarkRun make_1d_transient_hill(const BenchmarkKnobs& knobs) {
  BenchmarkRun run;
  run.name = "1d-transient-hill";
  const int n = resolve_elements(knobs, 100);
  run.mesh = build_line_mesh(n, 0.0, 1.0);
  run.problem.velocity = [](Point) { return std::array<double, 2>{1.0, 0.0}; };
  run.problem.diffusivity = resolve_diffusivity(knobs, 1e-6, 1.0, 1.0);
  const auto profile = [](double x) {
    if (x < 0.0 || x > kPi / 10.0) return 0.0;
    const double s = std::sin(10.0 * x);
    return s * s;
  };
  run.problem.initial = [profile](Point p) { return profile(p[0]); };
  run.problem.dirichlet = {{"left", [](Point, double) { return 0.0; }},
                           {"right", [](Point, double) { return 0.0; }}};
  run.steady = false;
  run.dt = 0.005;
  run.n_steps = 120;
  run.snapshot_steps = {0, 60, 100};
  run.has_exact = true;
  run.exact = [profile](Point p, double t) { return profile(p[0] - t); };
  run.track_hill = true;
  run.k_tilde_default = 0.0;
  return run;
}

BenchmarkRun make_2d_steady(const BenchmarkKnobs& knobs, bool outflow_fixed) {
  BenchmarkRun run;
  run.name = outflow_fixed ? "2d-steady-case2" : "2d-steady-case1";
  const int n = resolve_elements(knobs, 40);
  run.mesh = build_quad_mesh(n, n, {0.0, 1.0}, {0.0, 1.0});
  run.has_theta = true;
  run.theta_deg = knobs.theta_deg >= 0.0 ? knobs.theta_deg : 45.0;
  if (run.theta_deg <= 0.0 || run.theta_deg >= 90.0) {
    fail(Status::invalid_argument,
         "benchmark: theta must lie strictly between 0 and 90 degrees");
  }
  const double th = run.theta_deg * kPi / 180.0;
  const double c = std::cos(th), s = std::sin(th);
  run.problem.velocity = [c, s](Point) { return std::array<double, 2>{c, s}; };
  run.problem.diffusivity = resolve_diffusivity(knobs, 1.0 / 1e6, 1.0, 1.0);
  // inflow data: 1 on the bottom, jump on the left edge at y = 0.2
  run.problem.dirichlet = {
      {"bottom", [](Point, double) { return 1.0; }},
      {"left", [](Point p, double) { return p[1] <= 0.2 ? 1.0 : 0.0; }}};
  if (outflow_fixed) {
    run.problem.dirichlet.push_back({"right", [](Point, double) { return 0.0; }});
    run.problem.dirichlet.push_back({"top", [](Point, double) { return 0.0; }});
  }
  run.has_exact = true;
  run.exact = [c, s](Point p, double) {
    return c * (p[1] - 0.2) - s * p[0] <= 0.0 ? 1.0 : 0.0;
  };
  run.k_tilde_default = 1.0;
  return run;
}

BenchmarkRun make_2d_irrotational(const BenchmarkKnobs& knobs) {
  BenchmarkRun run;
  run.name = "2d-transient-irrotational";
  // The hill half-width spans 12 elements at this resolution; the projection
  // based schemes need that to keep their gradient correction accurate.
  const int n = resolve_elements(knobs, 120);
  run.mesh = build_quad_mesh(n, n, {-5.0, 5.0}, {-5.0, 5.0});
  run.problem.velocity = [](Point) { return std::array<double, 2>{1.0, 0.0}; };
  run.problem.diffusivity = resolve_diffusivity(knobs, 1e-6, 1.0, 10.0);
  run.problem.initial = [](Point p) { return hill(p, {-3.0, 0.0}, 1.0); };
  run.problem.dirichlet = {{"left", [](Point, double) { return 0.0; }}};
  run.steady = false;
  run.dt = 0.1;
  run.n_steps = 80;
  run.snapshot_steps = {0, 40, 80};
  run.has_exact = true;
  run.exact = [](Point p, double t) {
    return hill(p, {-3.0 + t, 0.0}, 1.0);
  };
  run.track_hill = true;
  run.k_tilde_default = 0.0;
  return run;
}

BenchmarkRun make_2d_rotational(const BenchmarkKnobs& knobs) {
  BenchmarkRun run;
  run.name = "2d-transient-rotational";
  const int n = resolve_elements(knobs, 60);
  run.mesh = build_quad_mesh(n, n, {-1.0, 1.0}, {-1.0, 1.0});
  run.problem.velocity = [](Point p) {
    return std::array<double, 2>{-p[1], p[0]};
  };
  run.problem.diffusivity = resolve_diffusivity(knobs, 1e-6, 1.0, 2.0);
  run.problem.initial = [](Point p) { return hill(p, {-0.5, 0.0}, 0.25); };
  run.problem.dirichlet = {{"left", [](Point, double) { return 0.0; }}};
  run.steady = false;
  run.dt = 2.0 * kPi / 64.0;
  run.n_steps = 64;
  run.snapshot_steps = {0, 32, 64};
  run.has_exact = true;
  run.exact = [](Point p, double t) {
    const double c = std::cos(t), s = std::sin(t);
    const Point back{p[0] * c + p[1] * s, -p[0] * s + p[1] * c};
    return hill(back, {-0.5, 0.0}, 0.25);
  };
  run.track_hill = true;
  run.k_tilde_default = 0.0;
  return run;
}

BenchmarkRun make_2d_heat(const BenchmarkKnobs& knobs) {
  BenchmarkRun run;
  run.name = "2d-heat";
  const int nx = resolve_elements(knobs, 80);
  const int ny = std::max(1, nx / 4);
  run.mesh = build_quad_mesh(nx, ny, {0.0, 4.0}, {0.0, 1.0});
  run.problem.velocity = [](Point) { return std::array<double, 2>{1.0, 0.5}; };
  run.problem.diffusivity = resolve_diffusivity(knobs, 1e-6, std::sqrt(1.25), 4.0);
  run.problem.initial = [](Point) { return 0.0; };
  run.problem.dirichlet = {
      {"left", [](Point, double t) { return 100.0 * std::sin(2.0 * kPi * t / 5.0); }},
      {"bottom", [](Point, double) { return 0.0; }},
      {"top", [](Point, double) { return 0.0; }},
      {"right", [](Point, double) { return 0.0; }}};
  run.steady = false;
  run.dt = 0.05;
  run.n_steps = 200;
  run.snapshot_steps = {50, 100, 200};  // t = 2.5, 5, 10
  run.k_tilde_default = 1.0;
  return run;
}

}  // namespace

double exact_1d_steady(double x, double u, double diffusivity) {
  if (diffusivity <= 0.0) {
    fail(Status::invalid_argument, "exact_1d_steady: diffusivity must be > 0");
  }
  const double a = u / diffusivity;
  if (a == 0.0) return x;
  if (a > 0.0) {
    // (e^{ax} - 1)/(e^a - 1) = e^{a(x-1)} (1 - e^{-ax}) / (1 - e^{-a})
    return std::exp(a * (x - 1.0)) * (-std::expm1(-a * x)) / (-std::expm1(-a));
  }
  return std::expm1(a * x) / std::expm1(a);
}

const std::vector<BenchmarkCase>& catalog() {
  static const std::vector<BenchmarkCase> cases = {
      {"1d-steady", true, false, make_1d_steady},
      {"1d-transient-hill", false, false, make_1d_transient_hill},
      {"2d-steady-case1", true, true,
       [](const BenchmarkKnobs& k) { return make_2d_steady(k, false); }},
      {"2d-steady-case2", true, true,
       [](const BenchmarkKnobs& k) { return make_2d_steady(k, true); }},
      {"2d-transient-irrotational", false, false, make_2d_irrotational},
      {"2d-transient-rotational", false, false, make_2d_rotational},
      {"2d-heat", false, false, make_2d_heat},
  };
  return cases;
}

const BenchmarkCase& find_case(const std::string& name) {
  for (const auto& c : catalog()) {
    if (c.name == name) return c;
  }
  std::string msg = "unknown benchmark \"" + name + "\"; valid names:";
  for (const auto& c : catalog()) msg += " " + c.name;
  fail(Status::config_error, msg);
}

RunResult run_benchmark(const BenchmarkRun& run, const SchemeConfig& scheme) {
  SchemeConfig rs = scheme;
  if (rs.kind == SchemeKind::mzad && rs.penalty < 0.0) {
    rs.penalty = element_sizes(run.mesh, 0)[0];
  }
  if (rs.kind == SchemeKind::mmad && rs.k_tilde < 0.0) {
    rs.k_tilde = run.k_tilde_default;
  }

  RunResult result;
  result.benchmark = run.name;
  result.scheme = rs;
  result.has_theta = run.has_theta;
  result.theta_deg = run.theta_deg;
  result.mesh = run.mesh;

  const auto t0 = std::chrono::steady_clock::now();
  if (run.steady) {
    SnapshotResult snap;
    snap.step = 0;
    snap.field = solve_steady(run.mesh, rs, run.problem);
    if (run.has_exact) {
      const auto& exact = run.exact;
      snap.errors = error_norms(
          snap.field, [&exact](Point p) { return exact(p, 0.0); }, run.mesh);
      snap.has_errors = true;
      result.field_errors = snap.errors;
      result.has_field_errors = true;
    }
    result.snapshots.push_back(std::move(snap));
  } else {
    CrankNicolsonStepper stepper(run.mesh, rs, run.problem, run.dt);
    result.trace.maxima.reserve(run.n_steps + 1);
    result.trace.maxima.push_back(stepper.max_phi());

    const auto want_snapshot = [&](int step) {
      for (int s : run.snapshot_steps) {
        if (s == step) return true;
      }
      return false;
    };
    const auto record = [&](int step) {
      SnapshotResult snap;
      snap.step = step;
      snap.field = stepper.state();
      if (run.has_exact) {
        const auto& exact = run.exact;
        const double t = step * run.dt;
        snap.errors = error_norms(
            snap.field, [&exact, t](Point p) { return exact(p, t); },
            run.mesh);
        snap.has_errors = true;
        result.field_errors = snap.errors;
        result.has_field_errors = true;
      }
      result.snapshots.push_back(std::move(snap));
    };
    if (want_snapshot(0)) record(0);
    for (int step = 1; step <= run.n_steps; ++step) {
      stepper.step();
      result.trace.maxima.push_back(stepper.max_phi());
      if (want_snapshot(step)) record(step);
    }
    result.has_trace = true;
    if (run.track_hill) {
      const std::vector<double> ref(run.n_steps + 1, 1.0);
      result.transient = transient_error_norms(result.trace, ref);
      result.has_transient_errors = true;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  result.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
          t1 - t0)
          .count();
  return result;
}

}  // namespace stabfem
