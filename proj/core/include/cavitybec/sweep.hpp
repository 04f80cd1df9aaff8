#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "cavitybec/config.hpp"
#include "cavitybec/matrix.hpp"

namespace cavitybec {

enum class PointStatus { Ok, NearCritical, Unstable, NoConverge };

std::string_view to_string(PointStatus status) noexcept;

struct SweepRecord {
  double swept = 0.0;
  PointStatus status = PointStatus::Ok;
  double alpha = 0.0;  // signed; CSV reports |α|
  double mu = 0.0;
  double Omega = 0.0;
  double n_photon = 0.0;
  double n_out = 0.0;
  double chi = 1.0;
  double S_vn = 0.0;
  double S_lin = 0.0;
  Vector gamma;
  Vector omegas;
  Vector n_c;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  // Refined onset pump strength (y sweeps that cross the threshold).
  std::optional<double> threshold;
  int no_converge = 0;
  // Swept value at which the sweep stopped on an instability.
  std::optional<double> unstable_at;

  int exit_code() const noexcept;
};

inline constexpr double kNearCriticalOmega = 1e-6;  // × ω_R

// Solves one parameter point. `warm_alpha` continues from a neighbouring
// point; on return it holds this point's α when the solve succeeded.
SweepRecord evaluate_point(const ModelParams& params, const SolverOptions& opts,
                           std::optional<double>& warm_alpha);

SweepResult run_sweep(const RunConfig& config);

// Header comment, column names, one row per record.
void write_csv(std::ostream& out, const RunConfig& config, const SweepResult& result);

// 17 significant digits, '.' radix, locale independent.
std::string format_number(double value);

}  // namespace cavitybec
