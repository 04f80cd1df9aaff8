#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cavitybec/config.hpp"
#include "cavitybec/observables.hpp"
#include "cavitybec/sweep.hpp"
#include "doctest.h"

using namespace cavitybec;

namespace {

RunConfig y_sweep(double start, double stop, int steps, int n = 10) {
  RunConfig c;
  c.omega_R = 1.0;
  c.delta_C = -100.0;
  c.fixed_coupling = -20.0;
  c.n_cutoff = n;
  c.sweep = {SweepAxis::Y, start, stop, steps};
  return c;
}

RunConfig u_sweep(double start, double stop, int steps, int n) {
  RunConfig c = y_sweep(0, 1, 2, n);
  c.fixed_coupling = 11.0;
  c.sweep = {SweepAxis::U, start, stop, steps};
  return c;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string csv(const RunConfig& c) {
  std::ostringstream os;
  write_csv(os, c, run_sweep(c));
  return os.str();
}

}  // namespace

TEST_CASE("decoupled two-point sweep") {
  RunConfig c = u_sweep(0.0, -10.0, 2, 4);
  c.fixed_coupling = 0.0;
  const SweepResult r = run_sweep(c);
  REQUIRE(r.records.size() == 2);
  CHECK(r.exit_code() == 0);
  for (const SweepRecord& rec : r.records) {
    CHECK(rec.status == PointStatus::Ok);
    CHECK(rec.alpha == 0.0);
    CHECK(rec.n_photon == doctest::Approx(0.0).scale(1e-14));
    CHECK(rec.n_out == doctest::Approx(0.0).scale(1e-14));
    CHECK(rec.chi == doctest::Approx(1.0));
    CHECK(rec.omegas == std::vector<double>{1.0, 4.0, 9.0, 100.0});
  }
}

TEST_CASE("y sweep locates the threshold") {
  for (int n : {2, 10}) {
    const SweepResult r = run_sweep(y_sweep(0.0, 20.0, 41, n));
    CHECK(r.exit_code() == 0);
    REQUIRE(r.threshold.has_value());
    CHECK(std::abs(*r.threshold - 10.0) < 1e-3);
    for (const SweepRecord& rec : r.records) {
      if (rec.swept < 10.0) CHECK(rec.alpha == 0.0);
      if (rec.swept > 10.0) CHECK(std::abs(rec.alpha) > 1e-3);
    }
  }
  const SweepResult none = run_sweep(y_sweep(0.0, 9.0, 4));
  CHECK_FALSE(none.threshold.has_value());
}

TEST_CASE("ok records satisfy the module invariants") {
  const SweepResult r = run_sweep(y_sweep(0.5, 18.0, 36, 6));
  for (const SweepRecord& rec : r.records) {
    if (rec.status != PointStatus::Ok) continue;
    CHECK(norm2(rec.gamma) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rec.Omega > 0.0);
    CHECK(rec.omegas.front() >= kNearCriticalOmega);
    double sum_c = 0.0;
    for (double v : rec.n_c) sum_c += v;
    CHECK(std::abs(sum_c - rec.n_out) <= 1e-10 * (1.0 + rec.n_out));
    CHECK(rec.chi >= 1.0 - 1e-12);
    CHECK(rec.S_lin < 1.0);
  }
}

TEST_CASE("forward and backward continuation agree away from threshold") {
  const SweepResult fwd = run_sweep(y_sweep(10.5, 16.0, 12));
  const SweepResult bwd = run_sweep(y_sweep(16.0, 10.5, 12));
  REQUIRE(fwd.records.size() == bwd.records.size());
  const std::size_t n = fwd.records.size();
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(std::abs(fwd.records[i].alpha) - std::abs(bwd.records[n - 1 - i].alpha)) < 1e-8);
}

TEST_CASE("u scan stops at the cavity instability") {
  const SweepResult two = run_sweep(u_sweep(0.0, -150.0, 601, 2));
  CHECK(two.exit_code() == 3);
  REQUIRE(two.unstable_at.has_value());
  CHECK(std::abs(*two.unstable_at + 100.0) <= 1.0);
  CHECK(two.records.back().status == PointStatus::Unstable);

  const SweepResult ten = run_sweep(u_sweep(0.0, -150.0, 601, 10));
  REQUIRE(ten.unstable_at.has_value());
  CHECK(std::abs(*ten.unstable_at) < std::abs(*two.unstable_at));
}

TEST_CASE("solver failures are counted, not fatal") {
  RunConfig c = y_sweep(11.0, 12.0, 3);
  c.solver.max_iter = 2;
  const SweepResult r = run_sweep(c);
  CHECK(r.records.size() == 3);
  CHECK(r.no_converge == 3);
  CHECK(r.exit_code() == 2);
  for (const SweepRecord& rec : r.records) {
    CHECK(rec.status == PointStatus::NoConverge);
    CHECK(std::isnan(rec.alpha));
  }
}

TEST_CASE("CSV layout and determinism") {
  const RunConfig c = y_sweep(9.0, 11.0, 5, 3);
  const std::string a = csv(c), b = csv(c);
  CHECK(a == b);
  const std::vector<std::string> ls = lines_of(a);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0].rfind("# cavitybec run ", 0) == 0);
  CHECK(ls[0].find("sweep.steps=5") != std::string::npos);
  CHECK(ls[1] ==
        "swept,alpha_abs,mu,Omega,n_photon,n_out,chi,S_vn,S_lin,status,"
        "gamma_0,gamma_1,gamma_2,omega_0,omega_1,omega_2,nc_0,nc_1,nc_2");
  for (std::size_t i = 2; i < ls.size(); ++i) {
    std::size_t commas = 0;
    for (char ch : ls[i]) commas += ch == ',';
    CHECK(commas == 18);
  }
  CHECK(ls[2].rfind("9,0,0,100,", 0) == 0);
  CHECK(a.back() == '\n');
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-100.0) == "-100");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}
