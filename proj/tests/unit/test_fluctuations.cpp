#include <cmath>
#include <limits>

#include "cavitybec/error.hpp"
#include "cavitybec/fluctuations.hpp"
#include "cavitybec/linalg.hpp"
#include "cavitybec/observables.hpp"
#include "doctest.h"

using namespace cavitybec;

namespace {

ModelParams point(double y, int n = 10, double u = -20.0) {
  return ModelParams::make(1.0, -100.0, u, y, n);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected cavitybec::Error");
  return ErrorKind::InvalidParameter;
}

}  // namespace

TEST_CASE("coupling vector in the normal phase is y e1") {
  const ModelParams p = point(7.0);
  const Vector g = coupling_vector(p, solve_mean_field(p));
  REQUIRE(g.size() == 10);
  for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[j] == doctest::Approx(j == 1 ? 7.0 : 0.0));
}

TEST_CASE("coupling vector above threshold") {
  for (double y : {10.5, 11.0, 15.0}) {
    const ModelParams p = point(y);
    const MeanFieldSolution s = solve_mean_field(p);
    const Vector g = coupling_vector(p, s);
    // Projection onto γ reduces to 2α(δ_C + 2u) once α obeys its field equation.
    CHECK(g[0] == doctest::Approx(2.0 * s.alpha * (p.delta_C + 2.0 * p.u)).epsilon(1e-8));
    CHECK(std::abs(g[0]) > 0.0);
    // g = Oᵀ M′ γ, recomputed directly.
    const Vector mg = build_M_alpha_prime(p, s.alpha).apply(s.gamma);
    for (std::size_t j = 0; j < g.size(); ++j)
      CHECK(g[j] == doctest::Approx(dot(s.O.column(j), mg)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("S kernel entries") {
  const ModelParams p = point(5.0, 4);
  const MeanFieldSolution s = solve_mean_field(p);
  const SymmetricMatrix S = build_S(p, s, coupling_vector(p, s));
  REQUIRE(S.dim() == 4);
  CHECK(S(0, 0) == doctest::Approx(1e4));
  CHECK(S(1, 1) == doctest::Approx(1.0));
  CHECK(S(0, 1) == doctest::Approx(50.0));
  for (std::size_t k = 2; k < 4; ++k) {
    CHECK(S(k, k) == doctest::Approx(double(k * k * k * k)));
    CHECK(S(0, k) == 0.0);
  }

  const ModelParams q = point(13.0);
  const MeanFieldSolution sq = solve_mean_field(q);
  const SymmetricMatrix Sq = build_S(q, sq, coupling_vector(q, sq));
  for (std::size_t i = 1; i < Sq.dim(); ++i)
    for (std::size_t j = 1; j < Sq.dim(); ++j)
      if (i != j) CHECK(Sq(i, j) == 0.0);
  CHECK(Sq(0, 0) == doctest::Approx(sq.Omega * sq.Omega));
}

TEST_CASE("S kernel preconditions") {
  const ModelParams p = point(5.0, 4);
  MeanFieldSolution s = solve_mean_field(p);
  const Vector g = coupling_vector(p, s);

  MeanFieldSolution dark = s;
  dark.Omega = 0.0;
  CHECK(kind_of([&] { build_S(p, dark, g); }) == ErrorKind::UnstableCavity);

  MeanFieldSolution closed = s;
  closed.lambdas[2] = closed.mu + 1e-12;
  CHECK(kind_of([&] { build_S(p, closed, g); }) == ErrorKind::DegenerateGap);
}

TEST_CASE("decoupled spectrum") {
  const ModelParams p = point(0.0, 4);
  const FluctuationResult f = analyze_fluctuations(p, solve_mean_field(p));
  REQUIRE(f.omegas.size() == 4);
  const double expected[] = {1.0, 4.0, 9.0, 100.0};
  for (std::size_t j = 0; j < 4; ++j) CHECK(f.omegas[j] == doctest::Approx(expected[j]).epsilon(1e-12));
  CHECK_FALSE(f.marginal);
  const auto [lo, hi] = omega_pm_closed_form(p);
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hi == doctest::Approx(100.0).epsilon(1e-14));
}

TEST_CASE("normal-phase closed form matches diagonalization") {
  for (double y : {1.0, 5.0, 9.0, 9.99}) {
    const ModelParams p = point(y);
    const FluctuationResult f = analyze_fluctuations(p, solve_mean_field(p));
    const auto [lo, hi] = omega_pm_closed_form(p);
    CAPTURE(y);
    CHECK(std::abs(f.omegas.front() - lo) <= 1e-10 * std::max(1.0, lo) + 1e-9);
    CHECK(std::abs(f.omegas.back() - hi) <= 1e-10 * hi);
    for (std::size_t k = 2; k < 10; ++k)
      CHECK(f.omegas[k - 1] == doctest::Approx(double(k * k)).epsilon(1e-10));
  }
  CHECK(omega_pm_closed_form(point(10.0)).first == 0.0);
  CHECK(kind_of([&] { omega_pm_closed_form(point(10.5)); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([&] { omega_pm_closed_form(ModelParams::make(1.0, 0.0, 0.0, 0.0, 3)); }) ==
        ErrorKind::InvalidParameter);
}

TEST_CASE("the trivial state above threshold is dynamically unstable") {
  const MeanFieldSolution trivial = solve_mean_field(point(5.0));
  const ModelParams p = point(11.0);
  const SymmetricMatrix S = build_S(p, trivial, coupling_vector(p, trivial));
  CHECK(kind_of([&] { quasiparticle_spectrum(S, p.omega_R); }) == ErrorKind::DynamicalInstability);
}

TEST_CASE("marginal eigenvalues are clamped") {
  SymmetricMatrix S(2);
  S.set(0, 0, 1.0);
  S.set(1, 1, -5e-10);
  const QuasiparticleSpectrum q = quasiparticle_spectrum(S, 1.0);
  CHECK(q.marginal);
  CHECK(q.omegas[0] == 0.0);
  CHECK(q.omegas[1] == 1.0);
}

TEST_CASE("spectrum properties") {
  for (double y : {3.0, 11.0, 16.0}) {
    const ModelParams p = point(y);
    const MeanFieldSolution s = solve_mean_field(p);
    const FluctuationResult f = analyze_fluctuations(p, s);
    double sum = 0.0, expected = s.Omega * s.Omega;
    for (double w : f.omegas) sum += w * w;
    for (std::size_t k = 1; k < s.lambdas.size(); ++k) {
      const double gap = s.lambdas[k] - s.mu;
      CHECK(f.gap(k) == gap);
      expected += gap * gap;
    }
    CHECK(std::abs(sum - expected) <= 1e-9 * f.S.max_abs() * double(f.S.dim()));
    CHECK(f.omega_min() > 0.0);
    for (std::size_t j = 1; j < f.omegas.size(); ++j) CHECK(f.omegas[j - 1] <= f.omegas[j]);
  }
}

TEST_CASE("soft mode closes at threshold and reopens above it") {
  double prev = std::numeric_limits<double>::infinity();
  for (double y = 0.0; y < 10.0; y += 0.25) {
    const ModelParams p = point(y);
    const double w = analyze_fluctuations(p, solve_mean_field(p)).omega_min();
    CHECK(w < prev);
    prev = w;
  }
  CHECK(prev < 0.25);
  const ModelParams above = point(11.0);
  CHECK(analyze_fluctuations(above, solve_mean_field(above)).omega_min() > 0.1);
}

TEST_CASE("goldstone phase growth") {
  const ModelParams below = point(5.0);
  const MeanFieldSolution sb = solve_mean_field(below);
  const FluctuationResult fb = analyze_fluctuations(below, sb);
  const GoldstoneGrowth none = goldstone_phase_growth(sb, fb.g[0], 0.01, 1e5);
  CHECK(none.coefficient == 0.0);
  CHECK(std::isinf(none.timescale));

  const ModelParams p = point(11.0);
  const MeanFieldSolution s = solve_mean_field(p);
  const FluctuationResult f = analyze_fluctuations(p, s);
  const double xx00 = covariances(f).xx(0, 0);
  const GoldstoneGrowth g1 = goldstone_phase_growth(s, f.g[0], xx00, 1e5);
  const GoldstoneGrowth g2 = goldstone_phase_growth(s, f.g[0], xx00, 2e5);
  CHECK(g1.coefficient > 0.0);
  CHECK(std::isfinite(g1.coefficient));
  CHECK(g1.coefficient == doctest::Approx(f.g[0] * f.g[0] / 4e5 * 2.0 * s.Omega * xx00));
  CHECK(g2.coefficient == doctest::Approx(g1.coefficient / 2.0));
  CHECK(g2.timescale == doctest::Approx(g1.timescale * std::sqrt(2.0)));
  CHECK(kind_of([&] { goldstone_phase_growth(s, f.g[0], xx00, 0.0); }) == ErrorKind::InvalidParameter);
}
