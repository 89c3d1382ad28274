#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "stabfem/error.hpp"
#include "stabfem/mesh.hpp"
#include "stabfem/stabilization.hpp"

using namespace stabfem;

TEST_CASE("scheme names round-trip") {
  for (SchemeKind k : {SchemeKind::galerkin, SchemeKind::classical_ad,
                       SchemeKind::su, SchemeKind::supg, SchemeKind::mzad,
                       SchemeKind::mmad}) {
    CHECK(parse_scheme(scheme_name(k)) == k);
  }
  CHECK(parse_scheme("supg") == SchemeKind::supg);  // matching ignores case
  try {
    parse_scheme("nope");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.status() == Status::config_error);
  }
}

TEST_CASE("gamma_upwind closed form") {
  CHECK(gamma_upwind(0.5) == doctest::Approx(1.639534137386529e-01).epsilon(1e-14));
  CHECK(gamma_upwind(2.0) == doctest::Approx(5.373147207275482e-01).epsilon(1e-14));
  CHECK(gamma_upwind(5000.0) == doctest::Approx(9.998e-01).epsilon(1e-14));
}

TEST_CASE("gamma_upwind is odd and bounded") {
  for (double a : {1e-6, 1e-3, 0.1, 1.0, 10.0, 1e4}) {
    CHECK(gamma_upwind(-a) == doctest::Approx(-gamma_upwind(a)).epsilon(1e-15));
    CHECK(std::abs(gamma_upwind(a)) < 1.0);
    CHECK(gamma_upwind(a) > 0.0);
  }
  CHECK(gamma_upwind(0.0) == 0.0);
}

TEST_CASE("gamma_upwind series matches the closed form across the switch") {
  CHECK(gamma_upwind(1e-5) ==
        doctest::Approx(3.333333333311111414e-06).epsilon(1e-12));
  // continuity at the series cutoff
  const double below = gamma_upwind(0.9999e-4);
  const double above = gamma_upwind(1.0001e-4);
  CHECK(below == doctest::Approx(3.332999997778444783e-05).epsilon(1e-10));
  CHECK(above == doctest::Approx(3.333666791149880737e-05).epsilon(1e-10));
  CHECK(std::abs(above - below) < 1e-8);
}

TEST_CASE("upwind diffusivity in 1d") {
  // benchmark element: u = 1, h = 0.01, k = 1e-6
  const auto up = compute_upwind({1.0, 0.0}, {0.01, 0.0}, 1e-6, 1);
  CHECK(up.kbar == doctest::Approx(0.004999).epsilon(1e-14));
  CHECK(up.u_norm == 1.0);
  CHECK(up.u_hat[0] == 1.0);
  CHECK(up.u_hat[1] == 0.0);
}

TEST_CASE("upwind diffusivity in 2d") {
  const auto up = compute_upwind({2.0, -1.0}, {0.1, 0.2}, 0.05, 2);
  CHECK(up.kbar == doctest::Approx(0.10746294414550964).epsilon(1e-14));
  CHECK(up.u_norm == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("upwind pure-advection limit") {
  const auto up = compute_upwind({2.0, -1.0}, {0.1, 0.2}, 0.0, 2);
  // gamma_i = sign(u_i): kbar = (|2|*0.1 + |-1|*0.2) / 2
  CHECK(up.kbar == doctest::Approx(0.2).epsilon(1e-15));

  const auto rest = compute_upwind({0.0, 0.0}, {0.1, 0.2}, 0.0, 2);
  CHECK(rest.kbar == 0.0);
  CHECK(rest.u_norm == 0.0);
  CHECK(rest.u_hat[0] == 0.0);
}

TEST_CASE("upwind kbar is never negative") {
  for (double ux : {-3.0, -0.5, 0.0, 0.5, 3.0}) {
    for (double uy : {-2.0, 0.0, 1.0}) {
      for (double k : {0.0, 1e-6, 0.1, 10.0}) {
        const auto up = compute_upwind({ux, uy}, {0.05, 0.1}, k, 2);
        CHECK(up.kbar >= 0.0);
      }
    }
  }
}

TEST_CASE("h_scale shrinks the discrete diffusivity monotonically") {
  const std::array<double, 2> u{1.0, 0.5};
  const std::array<double, 2> h{0.1, 0.1};
  const double k1 = compute_upwind(u, h, 1e-6, 2, 1.0).kbar;
  const double k2 = compute_upwind(u, h, 1e-6, 2, 0.5).kbar;
  const double k3 = compute_upwind(u, h, 1e-6, 2, 0.25).kbar;
  CHECK(k1 > k2);
  CHECK(k2 > k3);
  // scaling h outside gives the same numbers
  const double k2b = compute_upwind(u, {0.05, 0.05}, 1e-6, 2, 1.0).kbar;
  CHECK(k2 == doctest::Approx(k2b).epsilon(1e-15));
}

TEST_CASE("streamline tensor") {
  const auto up = compute_upwind({3.0, 4.0}, {0.1, 0.1}, 0.0, 2);
  const auto H = build_H(up, 2.0);
  CHECK(H[0][0] == doctest::Approx(2.0 * 0.36).epsilon(1e-14));
  CHECK(H[0][1] == doctest::Approx(2.0 * 0.48).epsilon(1e-14));
  CHECK(H[1][0] == doctest::Approx(2.0 * 0.48).epsilon(1e-14));
  CHECK(H[1][1] == doctest::Approx(2.0 * 0.64).epsilon(1e-14));

  const auto zero = build_H(compute_upwind({0.0, 0.0}, {0.1, 0.1}, 0.0, 2), 1.0);
  CHECK(zero[0][0] == 0.0);
  CHECK(zero[1][1] == 0.0);
}

TEST_CASE("streamline weights modify along the flow only") {
  const Mesh m = build_line_mesh(10, 0.0, 1.0);
  const auto s = eval_shape(m, 0, {0.0, 0.0});
  // h = 0.1, grads are -10 and +10; with kbar = 0.05 and u = 1 the upwind
  // node weight drops by 0.5 and the downwind one gains 0.5
  const auto w = streamline_weights(s, {1.0, 0.0}, 1.0, 0.05);
  CHECK(w[0] == doctest::Approx(0.5 - 0.5).scale(1.0).epsilon(1e-13));
  CHECK(w[1] == doctest::Approx(0.5 + 0.5).epsilon(1e-13));

  const auto plain = streamline_weights(s, {0.0, 0.0}, 0.0, 0.05);
  CHECK(plain[0] == doctest::Approx(s.values[0]).epsilon(1e-15));
  CHECK(plain[1] == doctest::Approx(s.values[1]).epsilon(1e-15));
}

TEST_CASE("upwind rejects non-positive sizes") {
  CHECK_THROWS_AS(compute_upwind({1.0, 0.0}, {0.0, 0.1}, 0.1, 2), Error);
  CHECK_THROWS_AS(compute_upwind({1.0, 0.0}, {-0.1, 0.0}, 0.1, 1), Error);
  CHECK_THROWS_AS(compute_upwind({1.0, 0.0}, {0.1, 0.0}, -1.0, 1), Error);
}

TEST_CASE("gradient-equation tensors") {
  const auto t = build_KA(0.7);
  CHECK(t.K[0][0] == 0.7);
  CHECK(t.K[1][1] == 0.7);
  CHECK(t.K[0][1] == 0.0);
  CHECK(t.a_scale == 0.7);

  const auto zero = build_KA(0.0);
  CHECK(zero.K[0][0] == 0.0);
  CHECK(zero.a_scale == 0.0);
  CHECK_THROWS_AS(build_KA(-0.5), Error);
}

TEST_CASE("fuzz: kbar is nonnegative over random inputs") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> uval(-10.0, 10.0);
  std::uniform_real_distribution<double> hval(1e-4, 2.0);
  std::uniform_real_distribution<double> kval(0.0, 5.0);
  for (int i = 0; i < 100000; ++i) {
    const auto up = compute_upwind({uval(rng), uval(rng)}, {hval(rng), hval(rng)},
                                   kval(rng), 2);
    REQUIRE(up.kbar >= 0.0);
  }
}

TEST_CASE("fuzz: kbar is nondecreasing in |u_i| and h_i") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> uval(-5.0, 5.0);
  std::uniform_real_distribution<double> hval(0.01, 1.0);
  std::uniform_real_distribution<double> kval(1e-6, 2.0);
  std::uniform_real_distribution<double> bump(1.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const std::array<double, 2> u{uval(rng), uval(rng)};
    const std::array<double, 2> h{hval(rng), hval(rng)};
    const double k = kval(rng);
    const double base = compute_upwind(u, h, k, 2).kbar;

    auto u_up = u;
    u_up[i % 2] *= bump(rng);  // scaling a component grows its magnitude
    CHECK(compute_upwind(u_up, h, k, 2).kbar >= base - 1e-13);

    auto h_up = h;
    h_up[(i + 1) % 2] *= bump(rng);
    CHECK(compute_upwind(u, h_up, k, 2).kbar >= base - 1e-13);
  }
}

TEST_CASE("kbar vanishes in the diffusion-dominated limit") {
  for (double u : {0.3, 1.0, 7.0}) {
    const double h = 0.1;
    const double D = 1e6 * u * h;
    const auto up = compute_upwind({u, 0.0}, {h, h}, D, 2);
    CHECK(up.kbar <= 1e-6 * u * h);
  }
}

TEST_CASE("fuzz: H is symmetric positive semidefinite") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uval(-4.0, 4.0);
  std::uniform_real_distribution<double> kb(0.0, 3.0);
  for (int i = 0; i < 5000; ++i) {
    const auto up = compute_upwind({uval(rng), uval(rng)}, {0.1, 0.1}, 0.0, 2);
    const double kbar = kb(rng);
    const auto H = build_H(up, kbar);
    CHECK(H[0][1] == H[1][0]);
    // eigenvalues of a symmetric 2x2
    const double tr = H[0][0] + H[1][1];
    const double det = H[0][0] * H[1][1] - H[0][1] * H[1][0];
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    const double lam_min = tr / 2.0 - disc;
    CHECK(lam_min >= -1e-14 * kbar);
  }
}

TEST_CASE("scheme config flags") {
  SchemeConfig c;
  c.kind = SchemeKind::mzad;
  CHECK(c.coupled());
  c.kind = SchemeKind::mmad;
  CHECK(c.coupled());
  c.kind = SchemeKind::supg;
  CHECK(!c.coupled());
}
