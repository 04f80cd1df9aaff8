#include "cavitybec/meanfield.hpp"

#include <cmath>
#include <string>

#include "cavitybec/error.hpp"
#include "cavitybec/linalg.hpp"

namespace cavitybec {

void SolverOptions::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidParameter, "tol must be positive");
  if (max_iter < 1) throw Error(ErrorKind::InvalidParameter, "max_iter must be positive");
  if (!(damping > 0.0 && damping <= 1.0))
    throw Error(ErrorKind::InvalidParameter, "damping must lie in (0, 1]");
  if (!std::isfinite(seed_alpha) || seed_alpha == 0.0)
    throw Error(ErrorKind::InvalidParameter, "seed_alpha must be finite and nonzero");
}

double update_alpha(const ModelParams& params, std::span<const double> gamma) {
  require_unit(gamma, params.dim());
  const CouplingMatrices m(params.n_cutoff);
  const double omega = effective_frequency(params, m, gamma);
  if (std::abs(omega) < 1e-9 * params.omega_R)
    throw Error(ErrorKind::UnstableCavity, "effective cavity frequency vanishes");
  return -0.5 * params.y * m.M1.quadratic_form(gamma) / omega;
}

double mean_field_residual(const ModelParams& params, double alpha, std::span<const double> gamma,
                           double mu) {
  const CouplingMatrices m(params.n_cutoff);
  const double omega = effective_frequency(params, m, gamma);
  const double r_alpha = std::abs(omega * alpha + 0.5 * params.y * m.M1.quadratic_form(gamma));
  Vector r = build_M_alpha(params, m, alpha).apply(gamma);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= mu * gamma[i];
  return std::max(r_alpha, norm2(r)) / params.omega_R;
}

namespace {

// One evaluation of the alternating map at a given α: ground eigenvector of
// M(α), then the α it implies, then the damped mix.
struct MapPoint {
  double alpha = 0.0;
  EigenDecomposition eig;
  Vector gamma;
  double Omega = 0.0;
  double alpha_new = 0.0;
  double mixed = 0.0;
  double residual = 0.0;  // field equation for α; the eigen-equation holds to eigh accuracy
};

class AlternatingMap {
 public:
  AlternatingMap(const ModelParams& params, const SolverOptions& opts)
      : params_(params), opts_(opts), m_(params.n_cutoff) {}

  MapPoint operator()(double alpha) {
    ++evaluations_;
    MapPoint pt;
    pt.alpha = alpha;
    pt.eig = eigh(build_M_alpha(params_, m_, alpha));
    pt.gamma = pt.eig.eigenvectors.column(0);
    if (pt.gamma[0] < 0.0)
      for (double& x : pt.gamma) x = -x;
    pt.Omega = effective_frequency(params_, m_, pt.gamma);
    const double m1 = m_.M1.quadratic_form(pt.gamma);
    if (pt.Omega > 0.0) {
      pt.alpha_new = -0.5 * params_.y * m1 / pt.Omega;
      pt.mixed = (1.0 - opts_.damping) * alpha + opts_.damping * pt.alpha_new;
    }
    pt.residual = std::abs(pt.Omega * alpha + 0.5 * params_.y * m1) / params_.omega_R;
    return pt;
  }

  int evaluations() const noexcept { return evaluations_; }
  const CouplingMatrices& matrices() const noexcept { return m_; }

 private:
  const ModelParams& params_;
  const SolverOptions& opts_;
  CouplingMatrices m_;
  int evaluations_ = 0;
};

[[noreturn]] void throw_unstable(double alpha, double omega) {
  throw Error(ErrorKind::UnstableCavity, "effective cavity frequency " + std::to_string(omega) +
                                             " <= 0 at alpha = " + std::to_string(alpha));
}

// Per-particle energy with μ omitted (constant on the unit sphere).
double canonical_energy(const ModelParams& p, const CouplingMatrices& m, double alpha,
                        std::span<const double> gamma) {
  return -p.delta_C * alpha * alpha + p.omega_R * m.M0.quadratic_form(gamma) +
         p.y * alpha * m.M1.quadratic_form(gamma) +
         p.u * alpha * alpha * m.M2.quadratic_form(gamma);
}

MeanFieldSolution finish(const ModelParams& params, const MapPoint& pt, int evaluations) {
  MeanFieldSolution sol;
  sol.alpha = pt.alpha;
  sol.gamma = pt.gamma;
  sol.lambdas = pt.eig.eigenvalues;
  sol.mu = sol.lambdas.front();
  sol.O = pt.eig.eigenvectors;
  for (std::size_t i = 0; i < sol.gamma.size(); ++i) sol.O(i, 0) = sol.gamma[i];
  sol.Omega = pt.Omega;
  sol.iterations = evaluations;
  sol.residual = mean_field_residual(params, sol.alpha, sol.gamma, sol.mu);
  if (sol.lambdas.size() > 1 && sol.lambdas[1] - sol.lambdas[0] < 1e-8 * params.omega_R)
    throw Error(ErrorKind::DegenerateGround,
                "lowest eigenvalue of M(alpha) is degenerate; condensate mode is ambiguous");
  return sol;
}

}  // namespace

MeanFieldSolution solve_mean_field(const ModelParams& params, const SolverOptions& opts,
                                   std::optional<double> warm_alpha) {
  opts.validate();
  AlternatingMap map(params, opts);

  double alpha = warm_alpha.value_or(-opts.seed_alpha);
  // An extrapolated α is only a proposal; if the cavity is unstable there we
  // fall back to the plain damped iterate instead of aborting.
  bool proposal = false;
  double fallback = 0.0;

  while (map.evaluations() + 2 <= opts.max_iter) {
    MapPoint p0 = map(alpha);
    if (!(p0.Omega > 0.0)) {
      if (proposal) {
        alpha = fallback;
        proposal = false;
        continue;
      }
      throw_unstable(alpha, p0.Omega);
    }
    proposal = false;
    const double a0 = alpha;
    const double a1 = p0.mixed;
    MapPoint p1 = map(a1);
    if (!(p1.Omega > 0.0)) throw_unstable(a1, p1.Omega);
    const double a2 = p1.mixed;

    const double step1 = a1 - a0;
    const double step2 = a2 - a1;
    const double q = step1 != 0.0 ? step2 / step1 : 0.0;
    const double step_bound = (q >= 0.0 && q < 1.0) ? opts.tol * (1.0 - q) : opts.tol;

    if (p0.residual <= opts.tol && std::abs(step1) <= step_bound) {
      const CouplingMatrices& m = map.matrices();
      const bool trivial_is_lower =
          a0 == 0.0 || std::abs(a0) <= 100.0 * opts.tol ||
          canonical_energy(params, m, a0, p0.gamma) >= 0.0;
      if (trivial_is_lower && a0 != 0.0) {
        MapPoint trivial = map(0.0);
        if (!(trivial.Omega > 0.0)) throw_unstable(0.0, trivial.Omega);
        return finish(params, trivial, map.evaluations());
      }
      return finish(params, p0, map.evaluations());
    }

    const double curvature = a2 - 2.0 * a1 + a0;
    if (q >= 0.0 && q < 1.0 && curvature != 0.0) {
      // Aitken Δ² on the damped sequence.
      alpha = a0 - step1 * step1 / curvature;
      fallback = a2;
      proposal = true;
    } else if (q >= 1.0 && std::abs(a2) > std::abs(a1) && std::abs(a1) > std::abs(a0)) {
      // Leaving the unstable trivial point: the linear growth rate is
      // (y/y_crit)², which is close to 1 near threshold.
      alpha = 2.0 * a2;
      fallback = a2;
      proposal = true;
    } else {
      alpha = a2;
    }
  }
  throw Error(ErrorKind::NoConvergence,
              "mean-field iteration did not converge within " + std::to_string(opts.max_iter) +
                  " diagonalizations");
}

double detect_threshold(const ModelParams& params, double y_lo, double y_hi,
                        const SolverOptions& opts, double width) {
  if (!(y_lo >= 0.0 && y_hi > y_lo))
    throw Error(ErrorKind::InvalidParameter, "threshold search needs 0 <= y_lo < y_hi");
  if (!(width > 0.0)) throw Error(ErrorKind::InvalidParameter, "bisection width must be positive");
  auto ordered = [&](double y) {
    return std::abs(solve_mean_field(params.with_y(y), opts).alpha) > kOrderedAlpha;
  };
  if (ordered(y_lo) || !ordered(y_hi))
    throw Error(ErrorKind::BracketFailure, "order indicator does not change across [" +
                                               std::to_string(y_lo) + ", " + std::to_string(y_hi) +
                                               "]");
  double lo = y_lo;
  double hi = y_hi;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    (ordered(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cavitybec
