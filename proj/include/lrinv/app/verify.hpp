#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "lrinv/algebra/hamiltonians.hpp"
#include "lrinv/config.hpp"
#include "lrinv/grid/ladder_check.hpp"
#include "lrinv/grid/operators.hpp"
#include "lrinv/observables/current.hpp"
#include "lrinv/propagator/propagator.hpp"
#include "lrinv/solutions/ladder.hpp"
#include "lrinv/solutions/oscillator.hpp"
#include "lrinv/symmetry/quantization.hpp"
#include "lrinv/symmetry/unitary.hpp"

namespace lrinv::app {

enum class Relation { below, at_most, above, equal };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::below: return "<";
    case Relation::at_most: return "<=";
    case Relation::above: return ">";
    default: return "==";
  }
}

/// One named check. `anchor` states the identity being tested.
struct Check {
  int criterion = 0;
  std::string group;
  std::string name;
  std::string anchor;
  Relation relation = Relation::below;
  double tolerance = 0.0;
  double measured = std::numeric_limits<double>::quiet_NaN();
  bool pass = false;
  std::string note;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
  }
};

/// Group names in suite order, with the criterion each one covers.
struct SuiteInfo {
  const char* group;
  int criterion;
  const char* title;
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list{
      {"symbolic", 1, "symbolic conservation"},
      {"symbolic", 2, "commutator ladder"},
      {"residual", 3, "PDE residual of the plane-wave solution"},
      {"ladder", 4, "degeneracy ladder on grid"},
      {"resummation", 5, "resummation identity"},
      {"landau", 6, "Landau spectrum"},
      {"symmetry", 7, "symmetry conjugation"},
      {"quantization", 8, "quantization"},
      {"newton", 9, "Newton recovery"},
      {"propagator", 10, "propagator orders"},
  };
  return list;
}

inline bool known_filter(const std::string& f) {
  for (const auto& s : suites())
    if (f == s.group || f == std::to_string(s.criterion)) return true;
  return false;
}

/// Natural scales of a configuration: the length, time and energy of the
/// electric problem, and the magnetic length, cyclotron period and Landau
/// spacing. Checks are run in these units so that they hold in any system.
struct Scales {
  double length;
  double time;
  double energy;
  double magnetic_length;
  double period;
  double cyclotron_energy;
  SystemConfig parallel;
};

inline Scales scales_of(const SystemConfig& cfg) {
  Scales s;
  s.length = electric_length(cfg);
  s.time = electric_time(cfg);
  s.energy = cfg.hbar() / s.time;
  s.parallel = cfg;
  s.parallel.fields.geometry = Geometry::parallel_eb;
  if (!(s.parallel.fields.magnetic > 0.0)) {
    // without a configured field, pick B so that the magnetic length is ℓ
    s.parallel.fields.magnetic = cfg.hbar() * cfg.units.field_coupling() / (cfg.charge() * s.length * s.length);
    s.parallel.fields.magnetic = std::abs(s.parallel.fields.magnetic);
  }
  const double wc = std::abs(cyclotron_frequency(s.parallel));
  s.magnetic_length = std::sqrt(cfg.hbar() / (cfg.mass() * wc));
  s.period = 2 * std::numbers::pi / wc;
  s.cyclotron_energy = cfg.hbar() * wc;
  return s;
}

namespace detail {

class Suite {
 public:
  Suite(const std::set<std::string>& filters, VerifyReport& report) : filters_(filters), report_(report) {}

  bool wanted(const char* group, int criterion) const {
    return filters_.empty() || filters_.count(group) || filters_.count(std::to_string(criterion));
  }

  void add(int criterion, const char* group, std::string name, std::string anchor, Relation rel, double tol,
           const std::function<double()>& measure) {
    if (!wanted(group, criterion)) return;
    Check c;
    c.criterion = criterion;
    c.group = group;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.relation = rel;
    c.tolerance = tol;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.measured = measure();
      switch (rel) {
        case Relation::below: c.pass = c.measured < tol; break;
        case Relation::at_most: c.pass = c.measured <= tol; break;
        case Relation::above: c.pass = c.measured > tol; break;
        case Relation::equal: c.pass = c.measured == tol; break;
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.note = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(c));
  }

 private:
  const std::set<std::string>& filters_;
  VerifyReport& report_;
};

inline Solution1D gaussian_packet(double width, double center = 0.0, double k0 = 0.0) {
  Solution1D s;
  const double amp = std::pow(std::numbers::pi * width * width, -0.25);
  s.evaluate = [=](const Solution1D::Point& p, double) {
    const double u = (p[0] - center) / width;
    return amp * std::exp(cplx(-u * u / 2, k0 * (p[0] - center)));
  };
  return s;
}

/// φ with the cubic phase reversed: not a solution.
inline Solution1D reversed_cubic_phase(const SystemConfig& cfg) {
  Solution1D s = make_phi_electric(cfg);
  const double amp = electric_amplitude(cfg);
  s.evaluate = [cfg, amp](const Solution1D::Point& p, double t) {
    const double f = cfg.force();
    return std::polar(amp, (f * f * t * t * t / (6 * cfg.mass()) + f * t * p[0]) / cfg.hbar());
  };
  s.gradient = nullptr;
  return s;
}

}  // namespace detail

/// Runs every check whose group or criterion number is in `filters` (all
/// when empty). A failing or throwing check never stops the suite.
inline VerifyReport run_verify(const SystemConfig& cfg, const std::set<std::string>& filters = {}) {
  using namespace algebra;
  VerifyReport report;
  detail::Suite suite(filters, report);
  const double pi = std::numbers::pi;

  // symbolic
  const auto h1d = effective_hamiltonian_1d(cfg);
  const auto hpar = effective_hamiltonian_parallel(cfg);
  for (const auto& pair : conserved_pairs(h1d, hpar))
    suite.add(1, "symbolic", "conserved: " + pair.name, "(1/i hbar)[f, H] + df/dt = 0", Relation::equal, 0.0,
              [&] { return static_cast<double>(heisenberg_residual(pair.op, pair.hamiltonian).size()); });
  suite.add(1, "symbolic", "px alone is not conserved under H_1d", "(1/i hbar)[px, H] = qE", Relation::above, 0.0,
            [&] { return static_cast<double>(heisenberg_residual(ops::gen(Generator::Px), h1d).size()); });
  const unsigned depth = static_cast<unsigned>(std::max(cfg.ladder_depth, 5));
  for (unsigned j = 0; j <= 5; ++j)
    suite.add(2, "symbolic", "commutator ladder j=" + std::to_string(j), "[f, E^(j+1)] = i hbar qE (j+1) E^j",
              Relation::equal, 0.0, [=] { return static_cast<double>(eigen_ladder_check(j, depth).size()); });

  const double box = cfg.box_length;
  const Scales sc = scales_of(cfg);
  // half-width of the time stencils, small against both τ and the fastest
  // phase rate |qE|L/ħ on the box
  const double step =
      1e-4 * (cfg.force() == 0.0 ? sc.time : std::min(sc.time, cfg.hbar() / std::abs(cfg.force() * box)));
  const auto commensurate = [&](int k) { return std::abs(commensurate_time(k, cfg.hbar(), cfg.force(), box)); };

  // residual
  {
    const Grid1D grid(box, 256);
    for (int k = 1; k <= 4; ++k)
      suite.add(3, "residual", "phi residual at t" + std::to_string(k), "(H - i hbar d/dt) phi = 0", Relation::below, 1e-6,
                [&, k] { return schrodinger_residual(make_phi_electric(cfg), grid, commensurate(k), step, cfg) / sc.energy; });
    suite.add(3, "residual", "reversed cubic phase is rejected", "(H - i hbar d/dt) psi != 0 for a non-solution",
              Relation::above, 1e-1,
              [&] {
                return schrodinger_residual(detail::reversed_cubic_phase(cfg), grid, commensurate(2), step, cfg) / sc.energy;
              });
  }

  // ladder
  {
    const Grid1D grid(box, 256, Boundary::dirichlet);
    for (int j = 0; j <= 4; ++j) {
      suite.add(4, "ladder", "P_j phi residual j=" + std::to_string(j), "(H - i hbar d/dt) E^j phi = 0", Relation::below,
                1e-5, [&, j] { return schrodinger_residual(make_ladder_state(j, cfg), grid, commensurate(1), step, cfg) / sc.energy; });
      suite.add(4, "ladder", "lowering identity j=" + std::to_string(j), "f E (E^j phi) = i hbar qE (j+1) E^j phi",
                Relation::below, 1e-6, [&, j] { return ladder_grid_error(j, grid, commensurate(1), step, cfg); });
    }
  }

  // resummation
  {
    auto deep = cfg;
    deep.ladder_depth = std::max(cfg.ladder_depth, 10);
    const double dt = 0.1 * sc.time;
    const double amp = electric_amplitude(deep);
    auto sup_error = [&, dt](int order) {
      const TaylorResummation sum(deep, dt, order);
      double worst = 0.0;
      for (int i = -8; i <= 8; ++i)
        for (int k = 0; k <= 6; ++k) {
          const double x = 0.25 * i * sc.length, t = 0.25 * k * sc.time;
          worst = std::max(worst, std::abs(sum(x, t) - psi_electric_shifted(x, t, dt, deep)) / amp);
        }
      return worst;
    };
    suite.add(5, "resummation", "relative sup error at J=10, dt=0.1", "sum_j c_j E^j phi = phi(x, t - dt)", Relation::below, 1e-6,
              [&] { return sup_error(10); });
    suite.add(5, "resummation", "error nonincreasing in J (count of increases)", "partial sums approach phi(x, t - dt)",
              Relation::equal, 0.0, [&] {
                double previous = std::numeric_limits<double>::infinity(), increases = 0;
                for (int order = 0; order <= 10; ++order) {
                  const double e = sup_error(order);
                  if (e > previous * (1 + 1e-12) + 1e-15) ++increases;
                  previous = e;
                }
                return increases;
              });
  }

  // landau
  const bool need_landau = suite.wanted("landau", 6) || suite.wanted("symmetry", 7) || suite.wanted("propagator", 10);
  if (need_landau) {
    const auto& pc = sc.parallel;
    const double ell = sc.magnetic_length;
    const double wc = cyclotron_frequency(pc);
    const Grid2D grid_y{Grid1D(24 * ell, 256), Grid1D(8 * ell, 32)};
    const Grid2D grid_z{Grid1D(8 * ell, 256, Boundary::dirichlet), Grid1D(16 * ell, 128)};
    const double dy = 2 * pi * pc.hbar() / (pc.mass() * wc * grid_y.z.length);
    const double dz = 4 * grid_z.z.spacing();
    for (int n = 0; n <= 3; ++n) {
      suite.add(6, "landau", "family y level n=" + std::to_string(n), "<H_yz> = hbar wc (n + 1/2)", Relation::below, 1e-6,
                [&, n] {
                  const auto f = sample(make_oscillator_family(Family::parallel_family_y, n, dy, pc), grid_y, 0.0);
                  return std::abs(expectation(Observable::energy_yz, f, pc) - landau_level(n, pc)) / sc.cyclotron_energy;
                });
      suite.add(6, "landau", "family z level n=" + std::to_string(n), "<H_yz> = hbar wc (n + 1/2)", Relation::below, 1e-6,
                [&, n] {
                  const auto f = sample(make_oscillator_family(Family::parallel_family_z, n, dz, pc), grid_z, 0.0);
                  return std::abs(expectation(Observable::energy_yz, f, pc) - landau_level(n, pc)) / sc.cyclotron_energy;
                });
    }
    suite.add(6, "landau", "split-step infidelity over 10 periods", "Landau state evolves by its phase only", Relation::below,
              1e-5, [&] {
                const auto sol = make_oscillator_family(Family::parallel_family_y, 0, dy, pc);
                const EvolutionSpec spec{sc.period / 512, 5120, 512, Method::split_yz};
                const auto ev = evolve(sample(sol, grid_y, 0.0), spec, pc, &sol);
                double worst = 0.0;
                for (double v : ev.record.series("fidelity")) worst = std::max(worst, 1.0 - v);
                return worst;
              });

    // symmetry
    const Grid1D line(box, 256);
    for (int cells : {1, 40})
      suite.add(7, "symmetry", "Ux conjugation, " + std::to_string(cells) + " cells", "H - E = U^+ (H - E) U", Relation::below,
                1e-6, [&, cells] {
                  return conjugation_symmetry_check(Unitary::Ux(cells * line.spacing()), make_phi_electric(cfg), line,
                                                    commensurate(2), step, cfg) /
                         sc.energy;
                });
    suite.add(7, "symmetry", "Ut conjugation", "H - E = U^+ (H - E) U", Relation::below, 1e-6, [&] {
      return conjugation_symmetry_check(Unitary::Ut(commensurate(1)), make_phi_electric(cfg), line, commensurate(2), step, cfg) /
             sc.energy;
    });
    suite.add(7, "symmetry", "Uy conjugation", "H - E = U^+ (H - E) U", Relation::below, 1e-6, [&] {
      return conjugation_symmetry_check(Unitary::Uy(dy), make_oscillator_family(Family::parallel_family_y, 0, dy, pc), grid_y,
                                        0.05 * sc.period, 1e-4 * sc.period, pc) /
             sc.cyclotron_energy;
    });
    suite.add(7, "symmetry", "Uz conjugation", "H - E = U^+ (H - E) U", Relation::below, 1e-6, [&] {
      return conjugation_symmetry_check(Unitary::Uz(dz), make_oscillator_family(Family::parallel_family_z, 1, 0.0, pc), grid_z,
                                        0.05 * sc.period, 1e-4 * sc.period, pc) /
             sc.cyclotron_energy;
    });
    suite.add(7, "symmetry", "Uy without its phase breaks the symmetry", "a bare y translation is not a symmetry",
              Relation::above, 1e-2, [&] {
                return conjugation_symmetry_check(Unitary::Uy(dy).phase_stripped(),
                                                  make_oscillator_family(Family::parallel_family_y, 0, 0.0, pc), grid_y,
                                                  0.05 * sc.period, 1e-4 * sc.period, pc) /
             sc.cyclotron_energy;
              });
  }

  // quantization
  {
    const double h = cfg.units.h();
    const double unit_dt = commensurate(1);
    const double dx = h / (cfg.force() * unit_dt);  // n_real = δt / unit_dt
    std::vector<ScanRow> rows;
    auto scan = [&]() -> const std::vector<ScanRow>& {
      if (rows.empty()) rows = quantization_scan(dx, unit_dt / 100, 10 * unit_dt, 1000, cfg);
      return rows;
    };
    suite.add(8, "quantization", "scan rows where phase = 1 and integer n disagree", "Ux Psi = Psi iff qE dx dt = 2 pi hbar n",
              Relation::equal, 0.0, [&] {
                double mismatches = 0;
                for (const auto& r : scan()) {
                  if (!r.report) {
                    ++mismatches;
                    continue;
                  }
                  const bool one = std::abs(*r.phase - 1.0) < 1e-8;
                  if (one != r.report->is_quantized) ++mismatches;
                }
                return mismatches;
              });
    suite.add(8, "quantization", "integer hits in a 1000-point scan", "n = 1..10 hit exactly once each", Relation::equal, 10.0,
              [&] {
                double hits = 0;
                for (const auto& r : scan()) hits += r.report && r.report->is_quantized;
                return hits;
              });
    suite.add(8, "quantization", "max ulp gap R vs (h/q^2) n", "R = (h/q^2) n", Relation::at_most, 4.0, [&] {
      double worst = 0;
      for (const auto& r : scan())
        if (r.report && r.report->is_quantized)
          worst = std::max(worst, static_cast<double>(ulp_distance(r.report->resistance,
                                                                   resistance_quantum(cfg) * static_cast<double>(r.report->n))));
      return worst;
    });
    suite.add(8, "quantization", "SI resistance quantum vs tabulated R_K (relative)", "R_K = h/e^2", Relation::below,
              constants::si::von_klitzing.relative_precision, [] {
                SystemConfig si = natural_config();
                si.units = UnitSystem::si();
                si.particle.charge = constants::si::elementary_charge.value;
                si.particle.mass = constants::si::electron_mass.value;
                const double dt = 1e-9;
                const auto r = quantization_report(si.units.h() / (si.charge() * si.electric() * dt), dt, si);
                if (!r.is_quantized || r.n != 1) throw DomainError("SI scan point is not at n = 1");
                return std::abs(r.resistance / constants::si::von_klitzing.value - 1.0);
              });
  }

  // newton
  {
    suite.add(9, "newton", "max relative residual of m dv/dt - qE", "m dv/dt = qE", Relation::below, 1e-6, [&] {
      const Grid1D grid(30 * sc.length, 2048, Boundary::dirichlet);
      const EvolutionSpec spec{1e-3 * sc.time, 1000, 100, Method::cn_1d};
      const auto ev = evolve(sample(detail::gaussian_packet(sc.length), grid, 0.0), spec, cfg);
      return newton_check(ev.record, cfg).max_residual;
    });
    suite.add(9, "newton", "closed-form current vs (qEt/m)|phi|^2 (relative)", "J = (qEt/m) |phi|^2", Relation::below, 1e-10,
              [&] {
                double worst = 0;
                for (double t : {0.5, 1.0, 2.0}) {
                  const double tt = t * sc.time;
                  const auto j = probability_current_1d(make_phi_electric(cfg), Grid1D(box, 64), tt, cfg);
                  const double v = cfg.force() * tt / cfg.mass();
                  for (std::size_t i = 0; i < j.current.size(); ++i)
                    worst = std::max(worst, std::abs(j.current[i] - v * j.density[i]) / std::abs(v * j.density[i]));
                }
                return worst;
              });
  }

  // propagator
  {
    suite.add(10, "propagator", "Crank-Nicolson Richardson order (|order - 2|)", "second order in time", Relation::below, 0.2,
              [&] {
                const auto f0 = sample(detail::gaussian_packet(sc.length), Grid1D(20 * sc.length, 1024, Boundary::dirichlet), 0.0);
                return std::abs(estimate_order(f0, sc.time, cfg, 16) - 2.0);
              });
    suite.add(10, "propagator", "split-step Richardson order (|order - 2|)", "second order in time", Relation::below, 0.2, [&] {
      const auto& pc = sc.parallel;
      const double ell = sc.magnetic_length;
      const Grid2D g{Grid1D(16 * ell, 128), Grid1D(8 * ell, 32)};
      Field2D f(g, 0.0);
      for (std::size_t iy = 0; iy < g.y.points; ++iy)
        for (std::size_t iz = 0; iz < g.z.points; ++iz) {
          const double y = g.y.coordinate(iy) / ell - 1, z = g.z.coordinate(iz) / ell;
          f[g.index(iy, iz)] = std::exp(-y * y / 2) * (std::cos(pi * z / 4) + cplx(0.0, 0.3) * std::sin(pi * z / 2) + 0.5);
        }
      return std::abs(estimate_order(f, sc.period / (2 * pi), pc, 16) - 2.0);
    });
    suite.add(10, "propagator", "Crank-Nicolson norm drift over 1e4 steps", "the Cayley step is unitary", Relation::below, 1e-10,
              [&] {
                const Grid1D grid(20 * sc.length, 512, Boundary::dirichlet);
                const EvolutionSpec spec{1e-3 * sc.time, 10000, 1000, Method::cn_1d};
                const auto ev = evolve(sample(detail::gaussian_packet(sc.length), grid, 0.0), spec, cfg);
                const double n0 = ev.record.rows.front()[1];
                double worst = 0;
                for (double v : ev.record.series("norm")) worst = std::max(worst, std::abs(v - n0) / n0);
                return worst;
              });
  }
  return report;
}

}  // namespace lrinv::app
