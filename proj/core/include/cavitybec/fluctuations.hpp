#pragma once

#include <utility>

#include "cavitybec/matrix.hpp"
#include "cavitybec/meanfield.hpp"
#include "cavitybec/model.hpp"

namespace cavitybec {

// Quadratic fluctuations around a mean-field solution.
//
// Index convention for S, U and the quadratures: 0 is the photon, k ≥ 1 is the
// atomic mode b_k = v⁽ᵏ⁾ᵀ c. The Goldstone mode b₀ (parallel to the
// condensate) is eliminated and has no row in S.
struct FluctuationResult {
  Vector g;              // g_j = v⁽ʲ⁾ᵀ M′(α) γ, j = 0 .. dim-1 (g₀ kept for the Goldstone analysis)
  SymmetricMatrix S;     // arrowhead kernel, dim × dim
  Vector omegas;         // quasiparticle frequencies, ascending
  Matrix U;              // eigenvectors of S; column j pairs with omegas[j]
  Vector gaps;           // λ_k − μ for k = 1 .. dim-1; gaps[k-1]
  double Omega = 0.0;
  bool marginal = false; // some ω² was clamped from [−1e-9 ω_R², 0] to 0

  double gap(std::size_t k) const { return gaps.at(k - 1); }
  double omega_min() const { return omegas.front(); }
};

Vector coupling_vector(const ModelParams& params, const MeanFieldSolution& sol);

// S[0][0] = Ω², S[k][k] = (λ_k − μ)², S[0][k] = g_k √(Ω (λ_k − μ)).
// Throws UnstableCavity if Ω ≤ 0, DegenerateGap if λ_k − μ ≤ 1e-9 ω_R.
SymmetricMatrix build_S(const ModelParams& params, const MeanFieldSolution& sol,
                        std::span<const double> g);

struct QuasiparticleSpectrum {
  Vector omegas;
  Matrix U;
  bool marginal = false;
};

// ω_j = √eig_j(S). Throws DynamicalInstability if some eigenvalue is below
// −1e-9 ω_R²; eigenvalues in [−1e-9 ω_R², 0] become 0 and set `marginal`.
QuasiparticleSpectrum quasiparticle_spectrum(const SymmetricMatrix& S, double omega_R);

// Full pipeline: g, S, spectrum.
FluctuationResult analyze_fluctuations(const ModelParams& params, const MeanFieldSolution& sol);

// Normal-phase closed form of the two hybridized photon/cos(kx) frequencies.
// Returns (ω₋, ω₊). Throws InvalidParameter if y > y_crit or δ_C ≥ 0.
std::pair<double, double> omega_pm_closed_form(const ModelParams& params);

struct GoldstoneGrowth {
  double coefficient = 0.0;  // d⟨φ²⟩/d(Δt²), units 1/time²
  double timescale = 0.0;    // π √N_c / |g₀|; +inf when g₀ = 0
};

// Second-order growth of the condensate phase variance driven by g₀.
// xx00 = ⟨x₀²⟩ of the photon quadrature.
GoldstoneGrowth goldstone_phase_growth(const MeanFieldSolution& sol, double g0, double xx00,
                                       double N_c);

}  // namespace cavitybec
