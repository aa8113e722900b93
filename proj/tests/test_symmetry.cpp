#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lrinv/solutions/ladder.hpp"
#include "lrinv/symmetry/quantization.hpp"

using namespace lrinv;
using namespace std::complex_literals;

namespace {

constexpr double pi = std::numbers::pi;

SystemConfig parallel(double b = 1.0) { return natural_config(Geometry::parallel_eb, b); }

template <int Dim>
double max_pointwise_gap(const AnalyticSolution<Dim>& a, const AnalyticSolution<Dim>& b,
                         const std::vector<typename AnalyticSolution<Dim>::Point>& pts, double t) {
  double d = 0.0;
  for (const auto& p : pts) d = std::max(d, std::abs(a(p, t) - b(p, t)));
  return d;
}

std::vector<Solution1D::Point> line_points() {
  std::vector<Solution1D::Point> pts;
  for (double x = -3.7; x <= 3.7; x += 0.31) pts.push_back({x});
  return pts;
}

std::vector<Solution2D::Point> plane_points() {
  std::vector<Solution2D::Point> pts;
  for (double y = -3.0; y <= 3.0; y += 0.37)
    for (double z = -3.0; z <= 3.0; z += 0.53) pts.push_back({y, z});
  return pts;
}

// Grid on which the y family with δy = 2πk/8 is periodic in z.
const Grid2D family_y_grid{Grid1D(24.0, 256), Grid1D(8.0, 32)};
const Grid2D family_z_grid{Grid1D(8.0, 256, Boundary::dirichlet), Grid1D(16.0, 128)};

}  // namespace

TEST(Unitary, RejectsNonFiniteDisplacement) {
  EXPECT_THROW(Unitary::Ux(std::nan("")), DomainError);
  EXPECT_THROW(Unitary::Ut(INFINITY), DomainError);
  EXPECT_EQ(to_string(Unitary::Uy(1.0).phase_stripped()), "Uy(stripped)");
}

TEST(Unitary, ZeroDisplacementIsIdentity) {
  auto cfg = natural_config();
  const auto phi = make_phi_electric(cfg);
  for (auto u : {Unitary::Ux(0.0), Unitary::Ut(0.0)})
    for (double t : {-1.0, 0.0, 0.7, 2.4}) EXPECT_EQ(max_pointwise_gap(apply_unitary(u, phi, cfg), phi, line_points(), t), 0.0);
}

TEST(Unitary, TimeShiftOfPlaneWaveIsShiftedSolution) {
  auto cfg = natural_config();
  for (double dt : {-0.8, 0.3, 1.7}) {
    const auto a = apply_unitary(Unitary::Ut(dt), make_phi_electric(cfg), cfg);
    const auto b = make_psi_electric_shifted(cfg, dt);
    EXPECT_EQ(a.family, Family::electric_1d_shifted);
    for (double t : {-0.4, 0.0, 1.1}) EXPECT_EQ(max_pointwise_gap(a, b, line_points(), t), 0.0) << dt;
  }
}

TEST(Unitary, YShiftMovesLandauFamily) {
  auto cfg = parallel();
  const double dy = 2 * pi / 8.0;
  for (int n : {0, 1, 3}) {
    const auto moved = apply_unitary(Unitary::Uy(dy), make_oscillator_family(Family::parallel_family_y, n, 0.0, cfg), cfg);
    const auto direct = make_oscillator_family(Family::parallel_family_y, n, dy, cfg);
    const auto a = sample(moved, family_y_grid, 0.35);
    const auto b = sample(direct, family_y_grid, 0.35);
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
    EXPECT_LT(gap, 1e-10) << n;
  }
}

TEST(Unitary, ZShiftMovesSecondFamily) {
  auto cfg = parallel();
  const auto moved = apply_unitary(Unitary::Uz(0.5), make_oscillator_family(Family::parallel_family_z, 2, 0.0, cfg), cfg);
  const auto direct = make_oscillator_family(Family::parallel_family_z, 2, 0.5, cfg);
  EXPECT_LT(max_pointwise_gap(moved, direct, plane_points(), 0.2), 1e-12);
}

TEST(Unitary, ClosedFormModulusIsPreserved) {
  auto cfg = parallel();
  const auto psi = make_full_parallel(Family::parallel_family_z, 1, DisplacementParams{}, cfg);
  const auto moved = apply_unitary(Unitary::Ux(0.7), apply_unitary(Unitary::Uy(0.4), psi, cfg), cfg);
  // |Ux Uy ψ|(p) = |ψ|(p - δ)
  for (double y : {-1.0, 0.2, 1.3})
    for (double z : {-0.5, 0.9}) {
      const Solution3D::Point p{0.3, y, z}, q{0.3 - 0.7, y - 0.4, z};
      EXPECT_NEAR(std::abs(moved(p, 0.6)), std::abs(psi(q, 0.6)), 1e-15);
    }
}

TEST(Unitary, MissingCoordinateRejected) {
  auto cfg = parallel();
  EXPECT_THROW(apply_unitary(Unitary::Uy(1.0), make_phi_electric(natural_config()), cfg), DomainError);
  EXPECT_THROW(apply_unitary(Unitary::Ux(1.0), make_oscillator_family(Family::parallel_family_y, 0, 0.0, cfg), cfg),
               DomainError);
}

TEST(UnitaryGrid, TimeShiftOnBareFieldRejected) {
  auto cfg = natural_config();
  const Field1D f(Grid1D(8.0, 32), std::vector<cplx>(32, 1.0), 0.0);
  try {
    apply_unitary(Unitary::Ut(0.1), f, cfg);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "time shift requires analytic time dependence");
  }
}

TEST(UnitaryGrid, NormPreservedForRandomFieldsAndShifts) {
  auto cfg = parallel();
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    Field1D f(Grid1D(8.0, 64), 0.0);
    for (auto& v : f.values) v = {gauss(rng), gauss(rng)};
    const auto g = apply_unitary(Unitary::Ux(shift(rng)), f, cfg);
    EXPECT_NEAR(norm(g), norm(f), 1e-10 * norm(f));

    Field2D h(Grid2D{Grid1D(6.0, 32), Grid1D(4.0, 16)}, 0.0);
    for (auto& v : h.values) v = {gauss(rng), gauss(rng)};
    const auto k = trial % 2 ? apply_unitary(Unitary::Uy(shift(rng)), h, cfg) : apply_unitary(Unitary::Uz(shift(rng)), h, cfg);
    EXPECT_NEAR(norm(k), norm(h), 1e-10 * norm(h));
  }
}

TEST(UnitaryGrid, GroupLawInX) {
  auto cfg = natural_config();
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  const Grid1D g(8.0, 128);
  const double t = 0.9;
  const auto f = sample(make_phi_electric(cfg), g, 0.0);
  Field1D smooth(g, t);
  for (std::size_t i = 0; i < g.points; ++i) smooth[i] = std::exp(-g.coordinate(i) * g.coordinate(i)) * f[i];
  for (int trial = 0; trial < 10; ++trial) {
    const double a = shift(rng), b = shift(rng);
    const auto two = apply_unitary(Unitary::Ux(a), apply_unitary(Unitary::Ux(b), smooth, cfg), cfg);
    const auto one = apply_unitary(Unitary::Ux(a + b), smooth, cfg);
    double gap = 0.0;
    for (std::size_t i = 0; i < g.points; ++i) gap = std::max(gap, std::abs(two[i] - one[i]));
    EXPECT_LT(gap, 1e-10) << a << " " << b;
  }
}

TEST(UnitaryGrid, GroupLawInXClosedForm) {
  auto cfg = natural_config();
  const auto psi = make_psi_electric_shifted(cfg, 0.4);
  const auto two = apply_unitary(Unitary::Ux(0.3), apply_unitary(Unitary::Ux(-1.1), psi, cfg), cfg);
  const auto one = apply_unitary(Unitary::Ux(-0.8), psi, cfg);
  for (double t : {-0.5, 1.2}) EXPECT_LT(max_pointwise_gap(two, one, line_points(), t), 1e-10);
}

TEST(UnitaryGrid, WholeCellShiftOnDirichletZeroFills) {
  auto cfg = natural_config();
  Field1D f(Grid1D(4.0, 16, Boundary::dirichlet), 0.0);
  for (std::size_t i = 0; i < 16; ++i) f[i] = double(i + 1);
  const auto g = translate(f, Axis::x, 2 * f.grid.spacing());
  EXPECT_EQ(g[0], 0.0);
  EXPECT_EQ(g[1], 0.0);
  EXPECT_EQ(g[2], 1.0);
  EXPECT_EQ(g[15], 14.0);
  EXPECT_THROW(translate(f, Axis::x, 0.3 * f.grid.spacing()), DomainError);
  (void)cfg;
}

TEST(UnitaryGrid, FourierShiftMatchesClosedForm) {
  const Grid1D g(14.0, 128);
  Field1D f(g, 0.0);
  for (std::size_t i = 0; i < g.points; ++i) f[i] = std::exp(-g.coordinate(i) * g.coordinate(i));
  const auto h = translate(f, Axis::x, 2.713);
  for (std::size_t i = 0; i < g.points; ++i) {
    // the shift is periodic, so the oracle sums the neighbouring images
    double expected = 0.0;
    for (int image = -1; image <= 1; ++image) {
      const double x = g.coordinate(i) - 2.713 + image * g.length;
      expected += std::exp(-x * x);
    }
    EXPECT_NEAR(std::abs(h[i] - expected), 0.0, 1e-12);
  }
}

TEST(Conjugation, XShiftOnPlaneWave) {
  auto cfg = natural_config();
  const Grid1D g(cfg.box_length, 256);
  for (int k = 1; k <= 3; ++k) {
    const double t = commensurate_time(k, cfg.hbar(), cfg.force(), g.length);
    for (int cells : {1, 7, 40}) {
      const double r = conjugation_symmetry_check(Unitary::Ux(cells * g.spacing()), make_phi_electric(cfg), g, t, 1e-4, cfg);
      EXPECT_LT(r, 1e-6) << k << " " << cells;
    }
  }
}

TEST(Conjugation, TimeShiftOnPlaneWave) {
  auto cfg = natural_config();
  const Grid1D g(cfg.box_length, 256);
  const double t1 = commensurate_time(1, cfg.hbar(), cfg.force(), g.length);
  const double t2 = commensurate_time(2, cfg.hbar(), cfg.force(), g.length);
  // the shifted state at t must also be commensurate: t - δt = t1
  EXPECT_LT(conjugation_symmetry_check(Unitary::Ut(t2 - t1), make_phi_electric(cfg), g, t2, 1e-4, cfg), 1e-6);
}

TEST(Conjugation, YShiftOnLandauFamily) {
  auto cfg = parallel();
  for (int n : {0, 1, 2}) {
    const auto psi = make_oscillator_family(Family::parallel_family_y, n, 2 * pi / 8.0, cfg);
    EXPECT_LT(conjugation_symmetry_check(Unitary::Uy(2 * pi / 8.0), psi, family_y_grid, 0.3, 1e-4, cfg), 1e-6) << n;
  }
}

TEST(Conjugation, ZShiftOnSecondFamily) {
  auto cfg = parallel();
  const auto psi = make_oscillator_family(Family::parallel_family_z, 1, 0.25, cfg);
  const double dz = 4 * family_z_grid.z.spacing();
  EXPECT_LT(conjugation_symmetry_check(Unitary::Uz(dz), psi, family_z_grid, 0.3, 1e-4, cfg), 1e-6);
}

TEST(Conjugation, StrippedTranslationBreaksSymmetry) {
  auto cfg = parallel();
  const auto psi = make_oscillator_family(Family::parallel_family_y, 0, 0.0, cfg);
  const auto u = Unitary::Uy(2 * pi / 8.0).phase_stripped();
  EXPECT_GT(conjugation_symmetry_check(u, psi, family_y_grid, 0.3, 1e-4, cfg), 1e-2);
}

TEST(Conjugation, StrippedXShiftBreaksSymmetryAtLaterTimes) {
  auto cfg = natural_config();
  const Grid1D g(cfg.box_length, 256);
  const double t = commensurate_time(2, cfg.hbar(), cfg.force(), g.length);
  EXPECT_GT(conjugation_symmetry_check(Unitary::Ux(16 * g.spacing()).phase_stripped(), make_phi_electric(cfg), g, t, 1e-4, cfg),
            1e-2);
}

TEST(InvariancePhase, ZeroTimeShiftGivesOne) {
  auto cfg = natural_config();
  for (double dx : {0.3, 2.0, -5.0}) EXPECT_LT(std::abs(invariance_phase(dx, 0.0, cfg) - 1.0), 1e-15);
}

TEST(InvariancePhase, FullTurnAndHalfTurn) {
  auto cfg = natural_config();
  EXPECT_LT(std::abs(invariance_phase(2 * pi, 1.0, cfg) - 1.0), 1e-8);
  EXPECT_LT(std::abs(invariance_phase(pi, 1.0, cfg) + 1.0), 1e-8);
  EXPECT_LT(std::abs(invariance_phase(0.5, 4 * pi, cfg) - 1.0), 1e-8);
}

TEST(InvariancePhase, MatchesExpectedForRandomShifts) {
  auto cfg = natural_config();
  cfg.fields.electric = 0.7;
  cfg.particle.charge = -1.3;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> d(-4.0, 4.0);
  for (int i = 0; i < 30; ++i) {
    const double dx = d(rng), dt = d(rng);
    EXPECT_LT(std::abs(invariance_phase(dx, dt, cfg) - std::polar(1.0, cfg.force() * dx * dt)), 1e-10);
  }
}

TEST(InvariancePhase, NonEigenstateRejected) {
  auto cfg = natural_config();
  auto mixed = make_phi_electric(cfg);
  const auto shifted = make_psi_electric_shifted(cfg, 0.9);
  auto base = mixed.evaluate;
  mixed.evaluate = [base, shifted](const Solution1D::Point& p, double t) { return base(p, t) + shifted(p, t); };
  try {
    measure_invariance_phase(mixed, 0.6, cfg);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "state is not a Ux eigenvector");
  }
}

TEST(InvariancePhase, ResolvedForAnElectronInSiUnits) {
  // probe points sit on the electric scales, so the phase stays representable
  SystemConfig cfg = natural_config();
  cfg.units = UnitSystem::si();
  cfg.particle.mass = constants::si::electron_mass.value;
  cfg.particle.charge = -constants::si::elementary_charge.value;
  cfg.fields.electric = 1e3;
  cfg.box_length = 1e-6;
  const double tau = electric_time(cfg);
  const double dx = cfg.units.h() / (cfg.force() * tau);
  for (double k : {0.25, 1.0, 2.5}) {
    const cplx phase = invariance_phase(dx, k * tau, cfg);
    EXPECT_NEAR(std::abs(phase - std::polar(1.0, 2 * pi * k)), 0.0, 1e-8) << k;
  }
}

TEST(InvariancePhase, LadderStateIsNotAnEigenvector) {
  auto cfg = natural_config();
  EXPECT_THROW(measure_invariance_phase(make_ladder_state(1, cfg), 0.6, cfg), DomainError);
}

TEST(Quantization, NaturalUnitsUnitWinding) {
  auto cfg = natural_config();
  const auto r = quantization_report(2 * pi, 1.0, cfg);
  EXPECT_NEAR(r.n_real, 1.0, 1e-15);
  EXPECT_EQ(r.n, 1);
  EXPECT_TRUE(r.is_quantized);
  EXPECT_NEAR(r.voltage, 2 * pi, 1e-15);
  EXPECT_EQ(r.current, 1.0);
  EXPECT_NEAR(r.resistance, resistance_quantum(cfg), 1e-14);
  EXPECT_LE(ulp_distance(r.resistance, r.resistance_from_quantum), 4);
}

TEST(Quantization, LinearInDisplacements) {
  auto cfg = natural_config();
  const auto one = quantization_report(2 * pi, 1.0, cfg);
  const auto three = quantization_report(6 * pi, 1.0, cfg);
  const auto three_t = quantization_report(2 * pi, 3.0, cfg);
  EXPECT_NEAR(three.n_real, 3.0, 1e-14);
  EXPECT_NEAR(three.resistance, 3 * one.resistance, 1e-13);
  EXPECT_NEAR(three_t.resistance, 3 * one.resistance, 1e-13);
  EXPECT_TRUE(three.is_quantized);
}

TEST(Quantization, SiResistanceIsVonKlitzing) {
  auto cfg = natural_config();
  cfg.units = UnitSystem::si();
  cfg.particle.charge = constants::si::elementary_charge.value;
  cfg.particle.mass = constants::si::electron_mass.value;
  cfg.fields.electric = 1.0;
  const double dt = 1e-9;
  const double dx = cfg.units.h() / (cfg.charge() * cfg.electric() * dt);
  const auto r = quantization_report(dx, dt, cfg);
  EXPECT_TRUE(r.is_quantized);
  EXPECT_EQ(r.n, 1);
  const auto& rk = constants::si::von_klitzing;
  EXPECT_NEAR(r.resistance / rk.value, 1.0, rk.relative_precision);
  EXPECT_LE(ulp_distance(r.resistance, r.resistance_from_quantum), 4);
}

TEST(Quantization, ZeroTimeShiftIsUndefined) {
  try {
    quantization_report(1.0, 0.0, natural_config());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "undefined current");
  }
}

TEST(Quantization, ResistanceSignFollowsWinding) {
  auto cfg = natural_config();
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double dx = d(rng), dt = d(rng);
    if (dt == 0.0) continue;
    const auto r = quantization_report(dx, dt, cfg);
    EXPECT_EQ(r.resistance >= 0.0, r.n_real >= 0.0);
    EXPECT_LE(ulp_distance(r.resistance, r.resistance_from_quantum), 4) << dx << " " << dt;
    if (r.is_quantized) {
      EXPECT_NEAR(r.resistance_in_klitzing, double(r.n), 1e-8 * (std::abs(r.n_real) + 1));
    }
  }
}

TEST(Quantization, EigenSignChangesOnlyBookkeeping) {
  auto cfg = natural_config();
  auto flipped = cfg;
  flipped.displacements.eigen_sign = EigenSign::plus;
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> d(-6.0, 6.0);
  for (int i = 0; i < 50; ++i) {
    const double dx = d(rng), dt = d(rng);
    const auto a = quantization_report(dx, dt, cfg);
    const auto b = quantization_report(dx, dt, flipped);
    EXPECT_EQ(a.n_real, b.n_real);
    EXPECT_EQ(a.n, b.n);
    EXPECT_EQ(a.is_quantized, b.is_quantized);
    EXPECT_EQ(a.voltage, b.voltage);
    EXPECT_EQ(a.current, b.current);
    EXPECT_EQ(a.resistance, b.resistance);
    EXPECT_EQ(a.resistance_in_klitzing, b.resistance_in_klitzing);
    EXPECT_NE(a.eigen_sign, b.eigen_sign);
    EXPECT_EQ(a.conventional_dt, -b.conventional_dt);
    EXPECT_EQ(invariance_phase(dx, dt, cfg), invariance_phase(dx, dt, flipped));
  }
}

TEST(Quantization, LargeWindingUsesScaledTolerance) {
  auto cfg = natural_config();
  const double n = 1e6;
  EXPECT_TRUE(quantization_report(2 * pi * n * (1 + 1e-12), 1.0, cfg).is_quantized);
  EXPECT_FALSE(quantization_report(2 * pi * (1 + 1e-6), 1.0, cfg).is_quantized);
}

TEST(Scan, PhaseIsOneExactlyAtIntegerWindings) {
  auto cfg = natural_config();
  const double dx = 2 * pi / 4.0;  // n_real = δt / 4
  const auto rows = quantization_scan(dx, -8.0, 8.0, 65, cfg);
  ASSERT_EQ(rows.size(), 65u);
  int hits = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      EXPECT_EQ(row.dt, 0.0);
      EXPECT_EQ(row.error, "undefined current");
      continue;
    }
    const bool one = std::abs(*row.phase - 1.0) < 1e-8;
    EXPECT_EQ(one, row.report->is_quantized) << row.dt;
    hits += row.report->is_quantized;
  }
  EXPECT_EQ(hits, 4);  // δt = ±4, ±8
}

TEST(Scan, RejectsEmptyOrReversedRange) {
  auto cfg = natural_config();
  EXPECT_THROW(quantization_scan(1.0, 0.0, 1.0, 0, cfg), DomainError);
  EXPECT_THROW(quantization_scan(1.0, 2.0, 1.0, 4, cfg), DomainError);
  EXPECT_EQ(quantization_scan(1.0, 2.0, 2.0, 1, cfg).size(), 1u);
}

TEST(Superposition, SingleTermIsComposedUnitaries) {
  auto cfg = parallel();
  const DisplacementParams s{0.4, 2 * pi / 8.0, 0.0, 0.6};
  const auto psi = build_parallel_superposition({1.0}, {}, s, 0, cfg, family_y_grid);
  const auto zeta = make_full_parallel(Family::parallel_family_y, 0, DisplacementParams{}, cfg);
  const auto ref = apply_unitary(Unitary::Ut(s.dt), apply_unitary(Unitary::Ux(s.dx), apply_unitary(Unitary::Uy(s.dy), zeta, cfg), cfg), cfg);
  // equal up to the window normalization, a positive constant
  const Solution3D::Point p0{0.0, 0.5, 0.0};
  const cplx scale = psi(p0, 0.0) / ref(p0, 0.0);
  EXPECT_LT(std::abs(scale.imag()), 1e-12);
  EXPECT_NEAR(scale.real(), 1.0 / std::sqrt(family_y_grid.z.length), 1e-6);
  for (double t : {0.0, 0.6, 1.5})
    for (double y : {-1.0, 0.3, 0.9})
      for (double z : {-2.0, 0.1}) {
        const Solution3D::Point p{0.5, y, z};
        EXPECT_LT(std::abs(psi(p, t) - scale * ref(p, t)), 1e-12);
      }
}

TEST(Superposition, InvariancePhaseOfParallelState) {
  auto cfg = parallel();
  const DisplacementParams s{2 * pi / 3.0, 2 * pi / 8.0, 0.5, 3.0};
  const auto psi = build_parallel_superposition({0.6, 0.0, 0.3i}, {0.5, -0.2}, s, 4, cfg, family_y_grid);
  const cplx phase = measure_invariance_phase(psi, s.dx, cfg);
  EXPECT_LT(std::abs(phase - expected_invariance_phase(s.dx, s.dt, cfg)), 1e-8);
  EXPECT_LT(std::abs(phase - 1.0), 1e-8);  // 2π/3 · 3 = 2π
  const cplx half = measure_invariance_phase(psi, s.dx / 2, cfg);
  EXPECT_LT(std::abs(half + 1.0), 1e-8);
}

TEST(Superposition, MixedFamiliesNormalizedOnGrid) {
  auto cfg = parallel();
  const DisplacementParams s{0.2, 2 * pi / 8.0, 0.5, 0.7};
  // periodic in z needs the second family's z shift on grid as well
  const Grid2D window{Grid1D(16.0, 128), Grid1D(16.0, 128)};
  const auto psi = build_parallel_superposition({1.0, 0.5}, {0.8i}, s, 2, cfg, window);
  for (double t : {0.7, 1.4, 3.0}) {
    auto slice = sample_slice(psi, window, 0.1, t);
    for (auto& v : slice.values) v *= std::sqrt(cfg.box_length);
    EXPECT_NEAR(norm(slice), 1.0, 1e-6) << t;
  }
}

TEST(Superposition, RejectsBadInput) {
  auto cfg = parallel();
  try {
    build_parallel_superposition({}, {}, {}, 3, cfg, family_y_grid);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "empty coefficients");
  }
  EXPECT_THROW(build_parallel_superposition({0.0}, {0.0}, {}, 3, cfg, family_y_grid), DomainError);
  EXPECT_THROW(build_parallel_superposition({1.0}, {}, {}, 17, cfg, family_y_grid), DomainError);
  EXPECT_THROW(build_parallel_superposition({1.0, 1.0, 1.0}, {}, {}, 1, cfg, family_y_grid), DomainError);
  EXPECT_THROW(build_parallel_superposition({cplx(NAN)}, {}, {}, 1, cfg, family_y_grid), DomainError);
}
