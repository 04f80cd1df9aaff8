#pragma once

#include "cavitybec/fluctuations.hpp"
#include "cavitybec/matrix.hpp"
#include "cavitybec/meanfield.hpp"

namespace cavitybec {

// Symmetrically ordered second moments of the Gaussian ground state.
// ⟨x_k p_l⟩_sym vanishes identically and is not stored.
struct Covariances {
  SymmetricMatrix xx;
  SymmetricMatrix pp;
};

// ⟨x_k x_l⟩ = ½ Σ_j U_kj U_lj / ω_j,  ⟨p_k p_l⟩ = ½ Σ_j U_kj U_lj ω_j.
// Throws DynamicalInstability if some ω_j is 0.
Covariances covariances(const FluctuationResult& fluct);

// Incoherent photon number ⟨a†a⟩ (fluctuations only).
double incoherent_photons(const FluctuationResult& fluct, double Omega);

// ⟨b_k†b_k⟩ for k = 1 .. dim-1 (element k-1).
Vector populations_b(const FluctuationResult& fluct);

// ⟨c_n†c_n⟩ for n = 0 .. dim-1, rotated back to the cosine basis through O.
Vector populations_c(const MeanFieldSolution& sol, const FluctuationResult& fluct);

struct Entanglement {
  double chi = 1.0;    // 2 √(⟨x₀²⟩⟨p₀²⟩)
  double S_vn = 0.0;   // nats
  double S_lin = 0.0;
};

Entanglement entanglement(const FluctuationResult& fluct, const SymmetricMatrix& xx,
                          const SymmetricMatrix& pp);

// Entropies of a single-mode Gaussian state as functions of χ ≥ 1.
double von_neumann_entropy(double chi);
double linear_entropy(double chi);

struct GroundStateObservables {
  SymmetricMatrix xx;
  SymmetricMatrix pp;
  double n_photon = 0.0;
  Vector n_b;  // k = 1 .. dim-1
  Vector n_c;  // n = 0 .. dim-1
  double n_out = 0.0;
  double chi = 1.0;
  double S_vn = 0.0;
  double S_lin = 0.0;
};

GroundStateObservables compute_observables(const MeanFieldSolution& sol,
                                           const FluctuationResult& fluct);

}  // namespace cavitybec
