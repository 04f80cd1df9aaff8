#pragma once

#include <optional>

#include "cavitybec/matrix.hpp"
#include "cavitybec/model.hpp"

namespace cavitybec {

struct SolverOptions {
  double tol = 1e-10;
  int max_iter = 10000;  // budget of M(α) diagonalizations
  double damping = 0.5;  // α ← (1−d) α_old + d α_new
  // Symmetry-breaking seed. The iteration starts at α = −seed_alpha, so a
  // positive seed selects the branch with γ₁ > 0; a negative one the mirror.
  double seed_alpha = 1e-3;

  void validate() const;  // throws InvalidParameter
};

struct MeanFieldSolution {
  double alpha = 0.0;   // ⟨a⟩/√N_c
  Vector gamma;         // condensate amplitudes per cosine mode, γ₀ > 0
  double mu = 0.0;      // lowest eigenvalue of M(α)
  Vector lambdas;       // full spectrum of M(α), ascending
  Matrix O;             // eigenvectors of M(α) as columns, column 0 == gamma
  double Omega = 0.0;   // Ω(γ)
  int iterations = 0;
  double residual = 0.0;

  bool trivial() const noexcept { return alpha == 0.0; }
};

// α = −(y/2) γᵀM⁽¹⁾γ / Ω(γ). Throws UnstableCavity if |Ω| < 1e-9 ω_R.
double update_alpha(const ModelParams& params, std::span<const double> gamma);

// Self-consistent solution of
//   Ω(γ) α + ½ y γᵀM⁽¹⁾γ = 0,   M(α) γ = μ γ  (μ lowest eigenvalue).
// `warm_alpha` replaces the seed for continuation along a sweep.
// Throws NoConvergence, UnstableCavity (Ω ≤ 0 at an accepted iterate),
// DegenerateGround (λ₁ − λ₀ < 1e-8 ω_R).
MeanFieldSolution solve_mean_field(const ModelParams& params, const SolverOptions& opts = {},
                                   std::optional<double> warm_alpha = std::nullopt);

// max(|Ω α + ½ y γᵀM⁽¹⁾γ|, ‖M(α)γ − μγ‖₂) / ω_R
double mean_field_residual(const ModelParams& params, double alpha, std::span<const double> gamma,
                           double mu);

inline constexpr double kOrderedAlpha = 1e-6;

// Onset pump strength by bisection on |α| > 1e-6 over [y_lo, y_hi] down to a
// bracket width of `width`. The y field of `params` is ignored.
// Throws BracketFailure if the indicator does not change across the range.
double detect_threshold(const ModelParams& params, double y_lo, double y_hi,
                        const SolverOptions& opts = {}, double width = 1e-6);

}  // namespace cavitybec
