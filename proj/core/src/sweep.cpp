#include "cavitybec/sweep.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "cavitybec/error.hpp"
#include "cavitybec/fluctuations.hpp"
#include "cavitybec/meanfield.hpp"
#include "cavitybec/observables.hpp"

namespace cavitybec {

std::string_view to_string(PointStatus status) noexcept {
  switch (status) {
    case PointStatus::Ok: return "ok";
    case PointStatus::NearCritical: return "near-critical";
    case PointStatus::Unstable: return "unstable";
    case PointStatus::NoConverge: return "no-converge";
  }
  return "unknown";
}

int SweepResult::exit_code() const noexcept {
  if (unstable_at) return 3;
  if (no_converge > 0) return 2;
  return 0;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void blank_observables(SweepRecord& r, std::size_t dim) {
  r.n_photon = r.n_out = r.chi = r.S_vn = r.S_lin = kNaN;
  r.n_c.assign(dim, kNaN);
}

SweepRecord failed(PointStatus status, std::size_t dim) {
  SweepRecord r;
  r.status = status;
  r.alpha = r.mu = r.Omega = kNaN;
  r.gamma.assign(dim, kNaN);
  r.omegas.assign(dim, kNaN);
  blank_observables(r, dim);
  return r;
}

PointStatus status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnstableCavity:
    case ErrorKind::DynamicalInstability:
      return PointStatus::Unstable;
    default:
      return PointStatus::NoConverge;
  }
}

}  // namespace

SweepRecord evaluate_point(const ModelParams& params, const SolverOptions& opts,
                           std::optional<double>& warm_alpha) {
  const std::size_t dim = params.dim();
  MeanFieldSolution sol;
  try {
    std::optional<double> start;
    if (warm_alpha && *warm_alpha != 0.0) start = warm_alpha;
    sol = solve_mean_field(params, opts, start);
  } catch (const Error& e) {
    return failed(status_for(e.kind()), dim);
  }
  warm_alpha = sol.alpha;

  FluctuationResult fluct;
  try {
    fluct = analyze_fluctuations(params, sol);
  } catch (const Error& e) {
    SweepRecord r = failed(status_for(e.kind()), dim);
    r.alpha = sol.alpha;
    r.mu = sol.mu;
    r.Omega = sol.Omega;
    r.gamma = sol.gamma;
    return r;
  }

  SweepRecord r;
  r.alpha = sol.alpha;
  r.mu = sol.mu;
  r.Omega = sol.Omega;
  r.gamma = sol.gamma;
  r.omegas = fluct.omegas;
  const bool near = fluct.marginal || fluct.omega_min() < kNearCriticalOmega * params.omega_R;
  r.status = near ? PointStatus::NearCritical : PointStatus::Ok;
  if (fluct.omega_min() == 0.0) {
    blank_observables(r, dim);
    return r;
  }
  const GroundStateObservables obs = compute_observables(sol, fluct);
  r.n_photon = obs.n_photon;
  r.n_out = obs.n_out;
  r.chi = obs.chi;
  r.S_vn = obs.S_vn;
  r.S_lin = obs.S_lin;
  r.n_c = obs.n_c;
  return r;
}

SweepResult run_sweep(const RunConfig& config) {
  SweepResult result;
  std::optional<double> warm;
  for (int i = 0; i < config.sweep.steps; ++i) {
    const double v = config.sweep.value(i);
    SweepRecord rec = evaluate_point(config.params_at(v), config.solver, warm);
    rec.swept = v;
    result.records.push_back(std::move(rec));
    const PointStatus st = result.records.back().status;
    if (st == PointStatus::NoConverge) ++result.no_converge;
    if (st == PointStatus::Unstable) {
      result.unstable_at = v;
      break;
    }
  }

  if (config.sweep.axis == SweepAxis::Y) {
    auto solved = [](const SweepRecord& r) {
      return r.status == PointStatus::Ok || r.status == PointStatus::NearCritical;
    };
    for (std::size_t i = 0; i + 1 < result.records.size(); ++i) {
      const SweepRecord& a = result.records[i];
      const SweepRecord& b = result.records[i + 1];
      if (!solved(a) || !solved(b)) continue;
      const bool oa = std::abs(a.alpha) > kOrderedAlpha;
      const bool ob = std::abs(b.alpha) > kOrderedAlpha;
      if (oa == ob) continue;
      const double lo = std::min(a.swept, b.swept);
      const double hi = std::max(a.swept, b.swept);
      try {
        result.threshold = detect_threshold(config.params_at(lo), lo, hi, config.solver);
      } catch (const Error&) {
        // Bracket from the sweep did not survive a fresh seeded solve; leave
        // the threshold unreported rather than guess.
      }
      break;
    }
  }
  return result;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, end);
}

void write_csv(std::ostream& out, const RunConfig& config, const SweepResult& result) {
  const int dim = config.n_cutoff;
  out << "# cavitybec run " << config.echo() << '\n';
  out << "swept,alpha_abs,mu,Omega,n_photon,n_out,chi,S_vn,S_lin,status";
  for (const char* prefix : {"gamma_", "omega_", "nc_"})
    for (int i = 0; i < dim; ++i) out << ',' << prefix << i;
  out << '\n';
  for (const SweepRecord& r : result.records) {
    out << format_number(r.swept) << ',' << format_number(std::abs(r.alpha)) << ','
        << format_number(r.mu) << ',' << format_number(r.Omega) << ','
        << format_number(r.n_photon) << ',' << format_number(r.n_out) << ','
        << format_number(r.chi) << ',' << format_number(r.S_vn) << ','
        << format_number(r.S_lin) << ',' << to_string(r.status);
    for (const Vector* v : {&r.gamma, &r.omegas, &r.n_c})
      for (double x : *v) out << ',' << format_number(x);
    out << '\n';
  }
}

}  // namespace cavitybec
