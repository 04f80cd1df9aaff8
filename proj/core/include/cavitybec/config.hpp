#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cavitybec/meanfield.hpp"
#include "cavitybec/model.hpp"

namespace cavitybec {

enum class SweepAxis { Y, U };

struct SweepSpec {
  SweepAxis axis = SweepAxis::Y;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  // Grid value i of steps, endpoints included, in sweep order.
  double value(int i) const;
};

struct RunConfig {
  double omega_R = 1.0;
  double delta_C = 0.0;
  int n_cutoff = kDefaultCutoff;
  // The coupling that is not swept: u when sweeping y, y when sweeping u.
  double fixed_coupling = 0.0;
  SweepSpec sweep;
  SolverOptions solver;
  std::optional<double> N_c;
  std::string output;  // path prefix; empty if not given

  ModelParams params_at(double swept) const;
  // Single-line `key=value ...` rendering of every field, defaults included.
  std::string echo() const;
};

// Parses the run document:
//
//   # comment
//   omega_R   = 1
//   delta_C   = -100
//   u         = -20          # the fixed coupling (y when sweeping u)
//   n_cutoff  = 10
//   N_c       = 1e5          # optional
//   output    = threshold    # optional
//   tol       = 1e-10        # optional solver options: tol, max_iter,
//                            #   damping, seed_alpha
//   [sweep]
//   axis  = y                # y | u
//   start = 0
//   stop  = 20
//   steps = 201
//
// Unknown keys, duplicates, missing required keys and values violating an
// invariant are rejected with ErrorKind::MalformedConfig naming the line or
// field.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

}  // namespace cavitybec
