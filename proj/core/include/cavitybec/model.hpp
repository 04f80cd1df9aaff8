#pragma once

#include <span>

#include "cavitybec/matrix.hpp"

namespace cavitybec {

// Thermodynamic-limit parameters of the pumped condensate–cavity system
// (ħ = 1, all quantities are angular frequencies).
//
//   delta_C  shifted cavity detuning Δ_C − N_c U₀/2
//   u        collective dispersive shift N_c U₀/4
//   y        collective pump strength √(2 N_c) η_t, y ≥ 0
//
// n_cutoff is the number of retained cosine modes cos(n k x), n = 0 .. n_cutoff-1.
// n_cutoff = 2 keeps the homogeneous mode and cos(kx) only, i.e. the two-mode
// (Dicke) model.
struct ModelParams {
  double omega_R = 1.0;
  double delta_C = 0.0;
  double u = 0.0;
  double y = 0.0;
  int n_cutoff = 10;

  // Validating constructor; throws ErrorKind::InvalidParameter.
  static ModelParams make(double omega_R, double delta_C, double u, double y, int n_cutoff);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(n_cutoff); }
  ModelParams with_y(double new_y) const;
  ModelParams with_u(double new_u) const;
};

inline constexpr int kDefaultCutoff = 10;

// Converts microscopic parameters to the reduced set.
ModelParams from_microscopic(double Delta_C, double U0, double eta_t, double N_c, double omega_R,
                             int n_cutoff);

// Coupling matrices of the cosine-mode expansion: j = 0 kinetic (diagonal n²),
// j = 1 pump scattering (tridiagonal), j = 2 dispersive cos² potential
// (pentadiagonal, without the 2I shift).
SymmetricMatrix build_M(int j, int n_cutoff);

// The three coupling matrices for one cutoff, built once per solve.
struct CouplingMatrices {
  SymmetricMatrix M0, M1, M2;
  explicit CouplingMatrices(int n_cutoff);
};

// Ω(γ) = −δ_C + u γᵀM⁽²⁾γ
double effective_frequency(const ModelParams& params, std::span<const double> gamma);
double effective_frequency(const ModelParams& params, const CouplingMatrices& m,
                           std::span<const double> gamma);

// M(α) = ω_R M⁽⁰⁾ + y α M⁽¹⁾ + u α² (M⁽²⁾ + 2I)
SymmetricMatrix build_M_alpha(const ModelParams& params, double alpha);
SymmetricMatrix build_M_alpha(const ModelParams& params, const CouplingMatrices& m, double alpha);

// dM/dα = y M⁽¹⁾ + 2 u α (M⁽²⁾ + 2I)
SymmetricMatrix build_M_alpha_prime(const ModelParams& params, double alpha);
SymmetricMatrix build_M_alpha_prime(const ModelParams& params, const CouplingMatrices& m,
                                    double alpha);

// Mean-field energy per condensate atom, K⁽⁰⁾/N_c.
double mean_field_energy(const ModelParams& params, double alpha, std::span<const double> gamma,
                         double mu);

// y_crit = √(−δ_C ω_R); requires δ_C < 0.
double critical_pump(const ModelParams& params);

// Throws InvalidParameter unless |γᵀγ − 1| < 1e-12.
void require_unit(std::span<const double> gamma, std::size_t expected_dim);

}  // namespace cavitybec
