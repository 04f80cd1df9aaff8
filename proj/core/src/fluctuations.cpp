#include "cavitybec/fluctuations.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cavitybec/error.hpp"
#include "cavitybec/linalg.hpp"

namespace cavitybec {

namespace {
constexpr double kGapTolerance = 1e-9;       // × ω_R
constexpr double kMarginalEigenvalue = 1e-9; // × ω_R²
}  // namespace

Vector coupling_vector(const ModelParams& params, const MeanFieldSolution& sol) {
  const SymmetricMatrix mp = build_M_alpha_prime(params, sol.alpha);
  const Vector w = mp.apply(sol.gamma);
  const std::size_t n = w.size();
  Vector g(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) g[j] += sol.O(i, j) * w[i];
  return g;
}

SymmetricMatrix build_S(const ModelParams& params, const MeanFieldSolution& sol,
                        std::span<const double> g) {
  const std::size_t n = sol.lambdas.size();
  if (g.size() != n)
    throw Error(ErrorKind::InvalidParameter, "coupling vector length does not match the basis");
  if (!(sol.Omega > 0.0))
    throw Error(ErrorKind::UnstableCavity, "S kernel needs Omega > 0, got " +
                                               std::to_string(sol.Omega));
  SymmetricMatrix s(n);
  s.set(0, 0, sol.Omega * sol.Omega);
  for (std::size_t k = 1; k < n; ++k) {
    const double gap = sol.lambdas[k] - sol.mu;
    if (!(gap > kGapTolerance * params.omega_R))
      throw Error(ErrorKind::DegenerateGap,
                  "excitation gap lambda_" + std::to_string(k) + " - mu = " + std::to_string(gap));
    s.set(k, k, gap * gap);
    s.set(0, k, g[k] * std::sqrt(sol.Omega * gap));
  }
  return s;
}

QuasiparticleSpectrum quasiparticle_spectrum(const SymmetricMatrix& S, double omega_R) {
  const EigenDecomposition eig = eigh(S);
  QuasiparticleSpectrum out{Vector(S.dim()), eig.eigenvectors, false};
  const double floor = -kMarginalEigenvalue * omega_R * omega_R;
  for (std::size_t j = 0; j < S.dim(); ++j) {
    const double w2 = eig.eigenvalues[j];
    if (w2 < floor)
      throw Error(ErrorKind::DynamicalInstability,
                  "negative squared quasiparticle frequency " + std::to_string(w2));
    if (w2 <= 0.0) {
      out.marginal = true;
      out.omegas[j] = 0.0;
    } else {
      out.omegas[j] = std::sqrt(w2);
    }
  }
  return out;
}

FluctuationResult analyze_fluctuations(const ModelParams& params, const MeanFieldSolution& sol) {
  FluctuationResult out;
  out.g = coupling_vector(params, sol);
  out.S = build_S(params, sol, out.g);
  auto spectrum = quasiparticle_spectrum(out.S, params.omega_R);
  out.omegas = std::move(spectrum.omegas);
  out.U = std::move(spectrum.U);
  out.marginal = spectrum.marginal;
  out.Omega = sol.Omega;
  out.gaps.reserve(sol.lambdas.size() - 1);
  for (std::size_t k = 1; k < sol.lambdas.size(); ++k) out.gaps.push_back(sol.lambdas[k] - sol.mu);
  return out;
}

std::pair<double, double> omega_pm_closed_form(const ModelParams& params) {
  if (!(params.delta_C < 0.0))
    throw Error(ErrorKind::InvalidParameter, "normal-phase frequencies need delta_C < 0");
  const double d2 = params.delta_C * params.delta_C;
  const double w2 = params.omega_R * params.omega_R;
  const double ycrit2 = -params.delta_C * params.omega_R;
  const double ratio = params.y * params.y / ycrit2;
  const double half_diff = 0.5 * (d2 - w2);
  const double plus2 = 0.5 * (d2 + w2) + std::sqrt(half_diff * half_diff + d2 * w2 * ratio);
  // ω₋² ω₊² is the determinant of the photon/cos(kx) block; dividing avoids
  // the cancellation in the difference form.
  const double det = d2 * w2 * (1.0 - ratio);
  if (det < 0.0)
    throw Error(ErrorKind::InvalidParameter,
                "pump above y_crit: the normal phase has no real soft-mode frequency");
  return {std::sqrt(det / plus2), std::sqrt(plus2)};
}

GoldstoneGrowth goldstone_phase_growth(const MeanFieldSolution& sol, double g0, double xx00,
                                       double N_c) {
  if (!(N_c > 0.0)) throw Error(ErrorKind::InvalidParameter, "N_c must be positive");
  // ⟨(a† + a)²⟩ = 2 Ω ⟨x₀²⟩
  const double field_variance = 2.0 * sol.Omega * xx00;
  GoldstoneGrowth out;
  out.coefficient = g0 * g0 / (4.0 * N_c) * field_variance;
  out.timescale = g0 == 0.0 ? std::numeric_limits<double>::infinity()
                            : std::numbers::pi * std::sqrt(N_c) / std::abs(g0);
  return out;
}

}  // namespace cavitybec
