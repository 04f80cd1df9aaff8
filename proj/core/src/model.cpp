#include "cavitybec/model.hpp"

#include <cmath>
#include <string>

#include "cavitybec/error.hpp"

namespace cavitybec {

namespace {

void validate(const ModelParams& p) {
  if (!(p.omega_R > 0.0) || !std::isfinite(p.omega_R))
    throw Error(ErrorKind::InvalidParameter, "omega_R must be positive and finite");
  if (!std::isfinite(p.delta_C) || !std::isfinite(p.u))
    throw Error(ErrorKind::InvalidParameter, "delta_C and u must be finite");
  if (!(p.y >= 0.0) || !std::isfinite(p.y))
    throw Error(ErrorKind::InvalidParameter, "y must be finite and nonnegative");
  if (p.n_cutoff < 2)
    throw Error(ErrorKind::InvalidParameter,
                "n_cutoff must be at least 2, got " + std::to_string(p.n_cutoff));
}

}  // namespace

ModelParams ModelParams::make(double omega_R, double delta_C, double u, double y, int n_cutoff) {
  ModelParams p{omega_R, delta_C, u, y, n_cutoff};
  validate(p);
  return p;
}

ModelParams ModelParams::with_y(double new_y) const {
  return make(omega_R, delta_C, u, new_y, n_cutoff);
}

ModelParams ModelParams::with_u(double new_u) const {
  return make(omega_R, delta_C, new_u, y, n_cutoff);
}

ModelParams from_microscopic(double Delta_C, double U0, double eta_t, double N_c, double omega_R,
                             int n_cutoff) {
  if (!(N_c > 0.0)) throw Error(ErrorKind::InvalidParameter, "N_c must be positive");
  if (!(omega_R > 0.0)) throw Error(ErrorKind::InvalidParameter, "omega_R must be positive");
  const double delta_C = Delta_C - 0.5 * N_c * U0;
  const double u = 0.25 * N_c * U0;
  const double y = std::sqrt(2.0 * N_c) * eta_t;
  return ModelParams::make(omega_R, delta_C, u, y, n_cutoff);
}

SymmetricMatrix build_M(int j, int n_cutoff) {
  if (n_cutoff < 2)
    throw Error(ErrorKind::InvalidParameter, "n_cutoff must be at least 2");
  const auto dim = static_cast<std::size_t>(n_cutoff);
  SymmetricMatrix m(dim);
  switch (j) {
    case 0:
      for (std::size_t n = 0; n < dim; ++n) m.set(n, n, static_cast<double>(n * n));
      break;
    case 1:
      // cos(kx)·cos(nkx) couples n to n±1; the homogeneous mode carries √2.
      m.set(0, 1, 1.0);
      for (std::size_t n = 1; n + 1 < dim; ++n) m.set(n, n + 1, 1.0 / std::sqrt(2.0));
      break;
    case 2:
      // cos(2kx) couples n to n±2, and folds cos(kx) back onto itself.
      if (dim > 2) m.set(0, 2, std::sqrt(2.0));
      m.set(1, 1, 1.0);
      for (std::size_t n = 1; n + 2 < dim; ++n) m.set(n, n + 2, 1.0);
      break;
    default:
      throw Error(ErrorKind::InvalidParameter,
                  "coupling matrix index must be 0, 1 or 2, got " + std::to_string(j));
  }
  return m;
}

CouplingMatrices::CouplingMatrices(int n_cutoff)
    : M0(build_M(0, n_cutoff)), M1(build_M(1, n_cutoff)), M2(build_M(2, n_cutoff)) {}

void require_unit(std::span<const double> gamma, std::size_t expected_dim) {
  if (gamma.size() != expected_dim)
    throw Error(ErrorKind::InvalidParameter,
                "gamma has " + std::to_string(gamma.size()) + " components, expected " +
                    std::to_string(expected_dim));
  if (std::abs(dot(gamma, gamma) - 1.0) >= 1e-12)
    throw Error(ErrorKind::InvalidParameter, "gamma must be a unit vector");
}

double effective_frequency(const ModelParams& params, const CouplingMatrices& m,
                           std::span<const double> gamma) {
  return -params.delta_C + params.u * m.M2.quadratic_form(gamma);
}

double effective_frequency(const ModelParams& params, std::span<const double> gamma) {
  require_unit(gamma, params.dim());
  return effective_frequency(params, CouplingMatrices(params.n_cutoff), gamma);
}

SymmetricMatrix build_M_alpha(const ModelParams& params, const CouplingMatrices& m,
                              double alpha) {
  SymmetricMatrix out = m.M0;
  for (std::size_t i = 0; i < out.dim(); ++i) out.set(i, i, params.omega_R * out(i, i));
  out.add_scaled(m.M1, params.y * alpha);
  const double shift = params.u * alpha * alpha;
  out.add_scaled(m.M2, shift);
  for (std::size_t i = 0; i < out.dim(); ++i) out.set(i, i, out(i, i) + 2.0 * shift);
  return out;
}

SymmetricMatrix build_M_alpha(const ModelParams& params, double alpha) {
  return build_M_alpha(params, CouplingMatrices(params.n_cutoff), alpha);
}

SymmetricMatrix build_M_alpha_prime(const ModelParams& params, const CouplingMatrices& m,
                                    double alpha) {
  SymmetricMatrix out(m.M1.dim());
  out.add_scaled(m.M1, params.y);
  const double slope = 2.0 * params.u * alpha;
  out.add_scaled(m.M2, slope);
  for (std::size_t i = 0; i < out.dim(); ++i) out.set(i, i, out(i, i) + 2.0 * slope);
  return out;
}

SymmetricMatrix build_M_alpha_prime(const ModelParams& params, double alpha) {
  return build_M_alpha_prime(params, CouplingMatrices(params.n_cutoff), alpha);
}

double mean_field_energy(const ModelParams& params, double alpha, std::span<const double> gamma,
                         double mu) {
  require_unit(gamma, params.dim());
  const CouplingMatrices m(params.n_cutoff);
  return -params.delta_C * alpha * alpha + params.omega_R * m.M0.quadratic_form(gamma) +
         params.y * alpha * m.M1.quadratic_form(gamma) +
         params.u * alpha * alpha * m.M2.quadratic_form(gamma) - mu;
}

double critical_pump(const ModelParams& params) {
  if (!(params.delta_C < 0.0))
    throw Error(ErrorKind::InvalidParameter, "critical pump requires delta_C < 0");
  return std::sqrt(-params.delta_C * params.omega_R);
}

}  // namespace cavitybec
