#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lrinv/propagator/propagator.hpp"
#include "lrinv/solutions/analytic.hpp"
#include "lrinv/solutions/oscillator.hpp"

using namespace lrinv;
using namespace std::complex_literals;

namespace {

constexpr double pi = std::numbers::pi;

Solution1D gaussian(double center = 0.0, double k0 = 0.0) {
  Solution1D s;
  s.evaluate = [=](const Solution1D::Point& p, double) {
    const double u = p[0] - center;
    return std::exp(-u * u / 2 + 1i * k0 * u) * std::pow(pi, -0.25);
  };
  return s;
}

EvolutionSpec cn_spec(double dt, std::size_t steps, std::size_t cadence) {
  return {dt, steps, cadence, Method::cn_1d};
}

EvolutionSpec split_spec(double dt, std::size_t steps, std::size_t cadence) {
  return {dt, steps, cadence, Method::split_yz};
}

SystemConfig parallel(double b = 1.0) { return natural_config(Geometry::parallel_eb, b); }

Grid2D landau_grid() { return {Grid1D(16.0, 128), Grid1D(8.0, 32)}; }

}  // namespace

TEST(EvolutionSpec, Validation) {
  EXPECT_THROW(cn_spec(0.0, 10, 1).validate(), DomainError);
  EXPECT_THROW(cn_spec(1e-3, 10, 0).validate(), DomainError);
  EXPECT_THROW(cn_spec(1e-3, 10, 3).validate(), DomainError);
  EXPECT_NO_THROW(cn_spec(1e-3, 0, 1).validate());
}

TEST(CrankNicolson, OneStepIsUnitary) {
  auto cfg = natural_config();
  const auto f = sample(gaussian(), Grid1D(20.0, 512, Boundary::dirichlet), 0.0);
  const auto g = step_crank_nicolson_1d(f, 1e-2, cfg);
  EXPECT_LT(std::abs(norm(g) - norm(f)), 1e-12);
  EXPECT_DOUBLE_EQ(g.time, 1e-2);
}

TEST(CrankNicolson, SolvesItsLinearSystem) {
  // (1 + iΔtH/2ħ) ψ' = (1 - iΔtH/2ħ) ψ, checked with the stepper's own H.
  auto cfg = natural_config();
  cfg.fields.electric = 0.8;
  const Grid1D grid(10.0, 128, Boundary::dirichlet);
  const CrankNicolson1D cn(grid, 0.05, cfg);
  const auto f = sample(gaussian(0.5, 1.0), grid, 0.0);
  const auto g = cn.step(f);
  const auto hf = cn.apply_h(f.values), hg = cn.apply_h(g.values);
  const cplx tau(0.0, 0.05 / 2);
  for (std::size_t i = 0; i < grid.points; ++i) EXPECT_LT(std::abs(g[i] + tau * hg[i] - f[i] + tau * hf[i]), 1e-13);
}

TEST(CrankNicolson, RejectsPeriodicGrid) {
  EXPECT_THROW(CrankNicolson1D(Grid1D(1.0, 32), 1e-3, natural_config()), DomainError);
}

TEST(CrankNicolson, FreePacketSpreads) {
  auto cfg = natural_config();
  cfg.fields.electric = 0.0;
  const Grid1D grid(40.0, 2048, Boundary::dirichlet);
  const auto ev = evolve(sample(gaussian(), grid, 0.0), cn_spec(1e-3, 2000, 500), cfg);
  for (const auto& row : ev.record.rows) EXPECT_NEAR(row[ev.record.column_index("x")], 0.0, 1e-12);
  // free spreading: σ²(t) = σ² + ħ²t²/(4m²σ²) with σ² = 1/2
  const auto& f = ev.final;
  double var = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) var += std::pow(grid.coordinate(i), 2) * std::norm(f[i]);
  var *= grid.spacing();
  const double t = f.time;
  EXPECT_NEAR(var, 0.5 + 0.5 * t * t, 1e-3);
}

TEST(CrankNicolson, MomentumGrowsLinearly) {
  auto cfg = natural_config();
  const Grid1D grid(30.0, 2048, Boundary::dirichlet);
  const auto ev = evolve(sample(gaussian(), grid, 0.0), cn_spec(1e-3, 1000, 100), cfg);
  const auto t = ev.record.series("t"), p = ev.record.series("px");
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_NEAR((p[i] - p[0]) / (cfg.force() * t[i]), 1.0, 1e-6);
}

TEST(CrankNicolson, VelocityIsMomentumOverMass) {
  // d⟨x⟩/dt = ⟨p⟩/m up to the dispersion of the three-point stencil,
  // which the fine grid pushes below the tolerance.
  auto cfg = natural_config();
  cfg.particle.mass = 1.5;
  const Grid1D grid(20.0, 16384, Boundary::dirichlet);
  const auto ev = evolve(sample(gaussian(-1.0), grid, 0.0), cn_spec(1e-3, 1000, 100), cfg);
  const auto t = ev.record.series("t"), x = ev.record.series("x"), p = ev.record.series("px");
  double scale = 0.0;
  for (double v : p) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const double v = (x[i + 1] - x[i - 1]) / (t[i + 1] - t[i - 1]);
    EXPECT_LT(std::abs(v - p[i] / cfg.mass()), 1e-6 * scale / cfg.mass());
  }
}

TEST(CrankNicolson, WindowedElectricSolutionFollowsAnalyticDrift) {
  // A wide real window on φ(x, t₁) keeps ⟨p⟩ = qEt₁; thereafter the
  // expectation values follow the classical drift of the analytic solution.
  auto cfg = natural_config();
  const double t1 = commensurate_time(1, cfg.hbar(), cfg.force(), cfg.box_length);
  Solution1D windowed;
  windowed.evaluate = [cfg](const Solution1D::Point& p, double t) {
    return phi_electric(p[0], t, cfg) * std::exp(-p[0] * p[0] / 8.0);
  };
  const Grid1D grid(40.0, 16384, Boundary::dirichlet);
  const auto f0 = sample(windowed, grid, t1);
  const auto ev = evolve(f0, cn_spec(1e-3, 1000, 250), cfg);
  const auto t = ev.record.series("t"), p = ev.record.series("px"), x = ev.record.series("x");
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(p[i], cfg.force() * t[i], 1e-5) << t[i];
    const double s = t[i] - t1;
    EXPECT_NEAR(x[i], x[0] + cfg.force() * t1 * s / cfg.mass() + 0.5 * cfg.force() * s * s / cfg.mass(), 1e-5);
  }
}

TEST(Evolve, ZeroStepsGiveInitialRow) {
  auto cfg = natural_config();
  const auto f0 = sample(gaussian(), Grid1D(20.0, 256, Boundary::dirichlet), 0.25);
  const auto ev = evolve(f0, cn_spec(1e-3, 0, 1), cfg);
  ASSERT_EQ(ev.record.rows.size(), 1u);
  EXPECT_EQ(ev.record.rows[0][0], 0.25);
  EXPECT_EQ(ev.final.values, f0.values);
}

TEST(Evolve, CadenceAndMonotoneTime) {
  auto cfg = natural_config();
  const auto ev = evolve(sample(gaussian(), Grid1D(20.0, 256, Boundary::dirichlet), 0.0), cn_spec(1e-3, 1000, 10), cfg);
  EXPECT_EQ(ev.record.rows.size(), 101u);
  const auto t = ev.record.series("t");
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t[i], t[i - 1]);
  EXPECT_DOUBLE_EQ(t.back(), 1.0);
  const auto n = ev.record.series("norm");
  for (double v : n) EXPECT_NEAR(v, n[0], 1e-10);
  EXPECT_FALSE(ev.record.has_column("fidelity"));
  EXPECT_THROW(ev.record.column_index("spin"), DomainError);
}

TEST(Evolve, MethodMustMatchDimension) {
  auto cfg = parallel();
  EXPECT_THROW(evolve(sample(gaussian(), Grid1D(20.0, 256, Boundary::dirichlet), 0.0), split_spec(1e-3, 1, 1), cfg),
               DomainError);
  EXPECT_THROW(evolve(Field2D(landau_grid(), 0.0), cn_spec(1e-3, 1, 1), cfg), DomainError);
}

TEST(CrankNicolson, NormOverTenThousandSteps) {
  auto cfg = natural_config();
  const auto ev = evolve(sample(gaussian(), Grid1D(20.0, 512, Boundary::dirichlet), 0.0), cn_spec(1e-3, 10000, 1000), cfg);
  for (double v : ev.record.series("norm")) EXPECT_LT(std::abs(v - 1.0), 1e-10);
}

TEST(SplitStep, FreePlaneWavesExact) {
  auto cfg = parallel(0.0);
  const Grid2D g{Grid1D(4.0, 32), Grid1D(6.0, 16)};
  const double ky = 2 * pi * 3 / 4.0, kz = -2 * pi * 2 / 6.0;
  Solution2D wave;
  wave.evaluate = [=](const Solution2D::Point& p, double t) {
    return std::exp(1i * (ky * p[0] + kz * p[1] - 0.5 * (ky * ky + kz * kz) * t));
  };
  const auto ev = evolve(sample(wave, g, 0.0), split_spec(0.01, 50, 50), cfg);
  const auto want = sample(wave, g, 0.5);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_LT(std::abs(ev.final[i] - want[i]), 1e-12);
}

TEST(SplitStep, RejectsNonPeriodicOrOddAxes) {
  auto cfg = parallel();
  EXPECT_THROW(SplitStepYZ(Grid2D{Grid1D(4.0, 32, Boundary::dirichlet), Grid1D(4.0, 32)}, 1e-3, cfg), DomainError);
  EXPECT_THROW(SplitStepYZ(Grid2D{Grid1D(4.0, 48), Grid1D(4.0, 32)}, 1e-3, cfg), DomainError);
}

TEST(SplitStep, EigenstateAfterOnePeriod) {
  auto cfg = parallel(1.0);
  const double period = 2 * pi / cyclotron_frequency(cfg);
  const auto sol = make_oscillator_family(Family::parallel_family_y, 0, 2 * pi / 8.0, cfg);
  const auto f0 = sample(sol, landau_grid(), 0.0);
  const auto ev = evolve(f0, split_spec(period / 512, 512, 64), cfg, &sol);
  const cplx overlap = inner_product(f0, ev.final) / std::pow(norm(f0), 2);
  EXPECT_GT(std::abs(overlap), 1 - 1e-6);
  const double expected = -landau_level(0, cfg) * period / cfg.hbar();
  EXPECT_LT(std::abs(std::remainder(std::arg(overlap) - expected, 2 * pi)), 1e-4);
  const auto e = ev.record.series("energy");
  for (double v : e) EXPECT_NEAR(v / e[0], 1.0, 1e-8);
}

TEST(SplitStep, FidelityOverTenPeriods) {
  auto cfg = parallel(1.3);
  const double period = 2 * pi / cyclotron_frequency(cfg);
  const double dy = 2 * pi * cfg.hbar() / (cfg.mass() * cyclotron_frequency(cfg) * 8.0);
  const auto sol = make_oscillator_family(Family::parallel_family_y, 0, dy, cfg);
  const auto ev = evolve(sample(sol, landau_grid(), 0.0), split_spec(period / 512, 5120, 512), cfg, &sol);
  for (double v : ev.record.series("fidelity")) EXPECT_GT(v, 1 - 1e-5);
}

TEST(Richardson, CrankNicolsonIsSecondOrder) {
  auto cfg = natural_config();
  const auto f0 = sample(gaussian(), Grid1D(20.0, 1024, Boundary::dirichlet), 0.0);
  EXPECT_NEAR(estimate_order(f0, 1.0, cfg, 16), 2.0, 0.2);
}

TEST(Richardson, SplitStepIsSecondOrder) {
  auto cfg = parallel(1.0);
  const auto g = landau_grid();
  Field2D f(g, 0.0);
  for (std::size_t iy = 0; iy < g.y.points; ++iy)
    for (std::size_t iz = 0; iz < g.z.points; ++iz) {
      const double y = g.y.coordinate(iy), z = g.z.coordinate(iz);
      f[g.index(iy, iz)] = std::exp(-(y - 1) * (y - 1) / 2) * (std::cos(pi * z / 4) + 0.3i * std::sin(pi * z / 2) + 0.5);
    }
  EXPECT_NEAR(estimate_order(f, 1.0, cfg, 16), 2.0, 0.2);
}

TEST(Richardson, StationaryFieldIsAlreadyConverged) {
  auto cfg = parallel(0.0);
  const Field2D constant(landau_grid(), std::vector<cplx>(landau_grid().size(), 0.25), 0.0);
  EXPECT_THROW(estimate_order(constant, 1.0, cfg), AlreadyConverged);
  const Field1D zero(Grid1D(10.0, 64, Boundary::dirichlet), 0.0);
  EXPECT_THROW(estimate_order(zero, 1.0, natural_config()), AlreadyConverged);
}
