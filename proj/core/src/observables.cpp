#include "cavitybec/observables.hpp"

#include <cmath>

#include "cavitybec/error.hpp"

namespace cavitybec {

namespace {

void require_stable(const FluctuationResult& fluct) {
  for (double w : fluct.omegas)
    if (!(w > 0.0))
      throw Error(ErrorKind::DynamicalInstability,
                  "zero quasiparticle frequency: ground-state covariances diverge");
}

// ω/Δ + Δ/ω − 2 written as a square so every summand stays nonnegative.
double excess(double omega, double delta) {
  const double d = omega - delta;
  return d * d / (omega * delta);
}

}  // namespace

Covariances covariances(const FluctuationResult& fluct) {
  require_stable(fluct);
  const std::size_t n = fluct.omegas.size();
  Covariances c{SymmetricMatrix(n), SymmetricMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      double x = 0.0;
      double p = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double uu = fluct.U(k, j) * fluct.U(l, j);
        x += uu / fluct.omegas[j];
        p += uu * fluct.omegas[j];
      }
      c.xx.set(k, l, 0.5 * x);
      c.pp.set(k, l, 0.5 * p);
    }
  }
  return c;
}

double incoherent_photons(const FluctuationResult& fluct, double Omega) {
  require_stable(fluct);
  double s = 0.0;
  for (std::size_t j = 0; j < fluct.omegas.size(); ++j)
    s += fluct.U(0, j) * fluct.U(0, j) * excess(fluct.omegas[j], Omega);
  return 0.25 * s;
}

Vector populations_b(const FluctuationResult& fluct) {
  require_stable(fluct);
  const std::size_t n = fluct.omegas.size();
  Vector out(n - 1, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double gap = fluct.gap(k);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += fluct.U(k, j) * fluct.U(k, j) * excess(fluct.omegas[j], gap);
    out[k - 1] = 0.25 * s;
  }
  return out;
}

Vector populations_c(const MeanFieldSolution& sol, const FluctuationResult& fluct) {
  require_stable(fluct);
  const std::size_t n = fluct.omegas.size();
  // ⟨b_k† b_l⟩ for k, l ≥ 1; the Goldstone mode b₀ carries no population.
  SymmetricMatrix bb(n);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      const double dk = fluct.gap(k);
      const double dl = fluct.gap(l);
      const double geo = std::sqrt(dk * dl);
      const double cross = std::sqrt(dk / dl) + std::sqrt(dl / dk);
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double w = fluct.omegas[j];
        s += fluct.U(k, j) * fluct.U(l, j) * (geo / w + w / geo - cross);
      }
      bb.set(k, l, 0.25 * s);
    }
  }
  Vector out(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t l = 1; l < n; ++l) s += sol.O(c, k) * sol.O(c, l) * bb(k, l);
    out[c] = s;
  }
  return out;
}

double von_neumann_entropy(double chi) {
  if (!(chi >= 1.0 - 1e-9))
    throw Error(ErrorKind::InvalidParameter, "chi below 1 violates the uncertainty bound");
  const double plus = 0.5 * (chi + 1.0);
  const double minus = 0.5 * (chi - 1.0);
  const double tail = minus > 0.0 ? minus * std::log(minus) : 0.0;
  return std::max(0.0, plus * std::log(plus) - tail);
}

double linear_entropy(double chi) {
  if (!(chi >= 1.0 - 1e-9))
    throw Error(ErrorKind::InvalidParameter, "chi below 1 violates the uncertainty bound");
  return std::max(0.0, 1.0 - 1.0 / chi);
}

Entanglement entanglement(const FluctuationResult& fluct, const SymmetricMatrix& xx,
                          const SymmetricMatrix& pp) {
  require_stable(fluct);
  Entanglement e;
  e.chi = 2.0 * std::sqrt(xx(0, 0) * pp(0, 0));
  e.S_vn = von_neumann_entropy(e.chi);
  e.S_lin = linear_entropy(e.chi);
  return e;
}

GroundStateObservables compute_observables(const MeanFieldSolution& sol,
                                           const FluctuationResult& fluct) {
  GroundStateObservables out;
  Covariances cov = covariances(fluct);
  out.n_photon = incoherent_photons(fluct, fluct.Omega);
  out.n_b = populations_b(fluct);
  out.n_c = populations_c(sol, fluct);
  for (double nb : out.n_b) out.n_out += nb;
  const Entanglement e = entanglement(fluct, cov.xx, cov.pp);
  out.chi = e.chi;
  out.S_vn = e.S_vn;
  out.S_lin = e.S_lin;
  out.xx = std::move(cov.xx);
  out.pp = std::move(cov.pp);
  return out;
}

}  // namespace cavitybec
