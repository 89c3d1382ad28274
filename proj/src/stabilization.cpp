#include "stabfem/stabilization.hpp"

#include <cctype>
#include <cmath>

#include "stabfem/error.hpp"

namespace stabfem {

namespace {

std::string lowered(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const char* scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::galerkin: return "Galerkin";
    case SchemeKind::classical_ad: return "ClassicalAD";
    case SchemeKind::su: return "SU";
    case SchemeKind::supg: return "SUPG";
    case SchemeKind::mzad: return "MZAD";
    case SchemeKind::mmad: return "MMAD";
  }
  fail(Status::internal_error, "scheme_name: unknown kind");
}

SchemeKind parse_scheme(const std::string& name) {
  const std::string key = lowered(name);
  for (SchemeKind k : {SchemeKind::galerkin, SchemeKind::classical_ad,
                       SchemeKind::su, SchemeKind::supg, SchemeKind::mzad,
                       SchemeKind::mmad}) {
    if (key == lowered(scheme_name(k))) return k;
  }
  fail(Status::config_error,
       "unknown scheme '" + name +
           "' (valid: Galerkin, ClassicalAD, SU, SUPG, MZAD, MMAD)");
}

double gamma_upwind(double alpha) {
  if (std::abs(alpha) < 1e-4) {
    return alpha / 3.0 - alpha * alpha * alpha / 45.0;
  }
  return 1.0 / std::tanh(alpha) - 1.0 / alpha;
}

UpwindParams compute_upwind(const std::array<double, 2>& u_center,
                            std::array<double, 2> h, double diffusivity, int dim,
                            double h_scale) {
  if (diffusivity < 0.0) {
    fail(Status::invalid_argument, "compute_upwind: negative diffusivity");
  }
  UpwindParams up;
  up.u = u_center;
  up.u_norm = std::sqrt(u_center[0] * u_center[0] + u_center[1] * u_center[1]);
  if (up.u_norm > 0.0) {
    up.u_hat = {u_center[0] / up.u_norm, u_center[1] / up.u_norm};
  }
  double kbar = 0.0;
  for (int i = 0; i < dim; ++i) {
    if (h[i] <= 0.0) {
      fail(Status::invalid_argument, "compute_upwind: non-positive element size");
    }
    const double hi = h[i] * h_scale;
    double gi;
    if (diffusivity == 0.0) {
      gi = u_center[i] > 0.0 ? 1.0 : (u_center[i] < 0.0 ? -1.0 : 0.0);
    } else {
      gi = gamma_upwind(u_center[i] * hi / (2.0 * diffusivity));
    }
    kbar += u_center[i] * hi * gi / 2.0;
  }
  up.kbar = kbar;
  return up;
}

std::array<std::array<double, 2>, 2> build_H(const UpwindParams& up, double kbar) {
  std::array<std::array<double, 2>, 2> H{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // dyad first, scale second: keeps H exactly symmetric in floating point
      H[i][j] = (up.u_hat[i] * up.u_hat[j]) * kbar;
    }
  }
  return H;
}

StabTensors build_KA(double k_tilde) {
  if (k_tilde < 0.0) {
    fail(Status::invalid_argument, "build_KA: negative k_tilde");
  }
  StabTensors t;
  t.K[0][0] = k_tilde;
  t.K[1][1] = k_tilde;
  t.a_scale = k_tilde;
  return t;
}

std::array<double, 4> streamline_weights(const ShapeEval& s,
                                         const std::array<double, 2>& u,
                                         double u_norm, double kbar) {
  std::array<double, 4> w{};
  for (int a = 0; a < s.n; ++a) {
    w[a] = s.values[a];
    if (u_norm > 0.0) {
      w[a] += (kbar / u_norm) * (u[0] * s.grads[a][0] + u[1] * s.grads[a][1]);
    }
  }
  return w;
}

}  // namespace stabfem
