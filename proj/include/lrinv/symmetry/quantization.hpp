#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lrinv/config.hpp"
#include "lrinv/solutions/analytic.hpp"
#include "lrinv/solutions/oscillator.hpp"
#include "lrinv/symmetry/unitary.hpp"

namespace lrinv {

/// exp(iqEδxδt/ħ), the phase a time-shifted solution picks up under Ux.
inline cplx expected_invariance_phase(double dx, double dt, const SystemConfig& cfg) {
  return std::polar(1.0, cfg.force() * dx * dt / cfg.hbar());
}

namespace detail {

/// Probe points in units of the electric length along x and the magnetic
/// length (electric length without a field) along y and z.
template <int Dim>
std::vector<typename AnalyticSolution<Dim>::Point> probe_points(const SystemConfig& cfg) {
  using Point = typename AnalyticSolution<Dim>::Point;
  const double lx = electric_length(cfg);
  double lt = lx;
  if (cfg.fields.geometry == Geometry::parallel_eb && cfg.fields.magnetic != 0.0)
    lt = std::sqrt(cfg.hbar() / (cfg.mass() * std::abs(cyclotron_frequency(cfg))));
  const std::vector<double> axis{-1.9, -1.3, -0.7, -0.2, 0.0, 0.35, 0.8, 1.45, 2.1};
  std::vector<Point> pts;
  if constexpr (Dim == 1) {
    for (double a : axis) pts.push_back({a * lx});
  } else if constexpr (Dim == 2) {
    for (double a : axis)
      for (double b : axis) pts.push_back({a * lt, b * lt});
  } else {
    for (double a : {-1.3, 0.0, 0.8})
      for (double b : axis)
        for (double c : axis) pts.push_back({a * lx, b * lt, c * lt});
  }
  return pts;
}

}  // namespace detail

/// Measured global phase (Ûx ψ)/ψ. The ratio is taken at the largest
/// sample and must agree, within `tol`, at every sample above 1e-6 of that
/// amplitude; otherwise ψ is not an eigenvector of Ûx. `times` are in units
/// of the electric time.
template <int Dim>
cplx measure_invariance_phase(const AnalyticSolution<Dim>& psi, double dx, const SystemConfig& cfg,
                              const std::vector<double>& times = {-0.6, 0.0, 0.45, 1.3}, double tol = 1e-8) {
  const auto shifted = apply_unitary(Unitary::Ux(dx), psi, cfg);
  struct Sample {
    cplx original, transformed;
  };
  std::vector<Sample> samples;
  double peak = 0.0;
  std::size_t peak_at = 0;
  const double unit = electric_time(cfg);
  for (double t : times)
    for (const auto& p : detail::probe_points<Dim>(cfg)) {
      samples.push_back({psi(p, t * unit), shifted(p, t * unit)});
      if (std::abs(samples.back().original) > peak) {
        peak = std::abs(samples.back().original);
        peak_at = samples.size() - 1;
      }
    }
  if (peak == 0.0) throw DomainError("state vanishes at every probe point");
  const cplx ref = samples[peak_at].transformed / samples[peak_at].original;
  for (const auto& s : samples) {
    if (std::abs(s.original) < 1e-6 * peak) continue;
    if (std::abs(s.transformed / s.original - ref) > tol) throw DomainError("state is not a Ux eigenvector");
  }
  return ref;
}

/// Global phase of Ûx on the time-shifted solution φ(x, t - δt).
inline cplx invariance_phase(double dx, double dt, const SystemConfig& cfg) {
  return measure_invariance_phase(make_psi_electric_shifted(cfg, dt), dx, cfg);
}

struct QuantizationReport {
  double dx = 0.0;
  double dt = 0.0;
  double electric = 0.0;
  double charge = 0.0;
  double n_real = 0.0;
  std::int64_t n = 0;
  bool is_quantized = false;
  double voltage = 0.0;
  double current = 0.0;
  double resistance = 0.0;
  double resistance_in_klitzing = 0.0;
  /// (h/q²)·n_real, the same resistance through the quantum unit.
  double resistance_from_quantum = 0.0;
  /// Sign bookkeeping only: the eigenvalue symbol tied to δt.
  EigenSign eigen_sign = EigenSign::minus;
  double conventional_dt = 0.0;
};

inline std::int64_t ulp_distance(double a, double b) {
  if (a == b) return 0;
  if (std::signbit(a) != std::signbit(b)) return std::numeric_limits<std::int64_t>::max();
  std::int64_t ia, ib;
  std::memcpy(&ia, &a, sizeof a);
  std::memcpy(&ib, &b, sizeof b);
  return ia > ib ? ia - ib : ib - ia;
}

/// Voltage Eδx, current q/δt, resistance V/I = Eδxδt/q and the winding
/// number n_real = qEδxδt/h. Quantized when n_real is within
/// tol·(|n_real| + 1) of an integer.
inline QuantizationReport quantization_report(double dx, double dt, const SystemConfig& cfg, double tol = 1e-8) {
  if (dt == 0.0) throw DomainError("undefined current");
  if (!std::isfinite(dx) || !std::isfinite(dt)) throw DomainError("displacements must be finite");
  QuantizationReport r;
  r.dx = dx;
  r.dt = dt;
  r.electric = cfg.electric();
  r.charge = cfg.charge();
  const double h = cfg.units.h();
  const double q = cfg.charge();
  const double flux = cfg.electric() * dx * dt;  // V·δt
  r.n_real = q * flux / h;
  r.n = static_cast<std::int64_t>(std::llround(r.n_real));
  r.is_quantized = std::abs(r.n_real - static_cast<double>(r.n)) <= tol * (std::abs(r.n_real) + 1.0);
  r.voltage = cfg.electric() * dx;
  r.current = q / dt;
  r.resistance = flux / q;
  r.resistance_in_klitzing = r.n_real;
  r.resistance_from_quantum = h / (q * q) * r.n_real;
  r.eigen_sign = cfg.displacements.eigen_sign;
  r.conventional_dt = conventional_shift(cfg, dt);
  return r;
}

/// h/q² for the configured charge and units.
inline double resistance_quantum(const SystemConfig& cfg) {
  return cfg.units.h() / (cfg.charge() * cfg.charge());
}

struct ScanRow {
  double dt = 0.0;
  std::optional<QuantizationReport> report;
  std::optional<cplx> phase;
  std::string error;
};

/// Evenly spaced δt from dt_min to dt_max inclusive. Rows that cannot be
/// evaluated (δt = 0) carry an error message instead of a report.
inline std::vector<ScanRow> quantization_scan(double dx, double dt_min, double dt_max, std::size_t steps,
                                              const SystemConfig& cfg, double tol = 1e-8, bool with_phase = true) {
  if (steps == 0) throw DomainError("empty scan range");
  if (!(dt_max >= dt_min)) throw DomainError("scan range is reversed");
  std::vector<ScanRow> rows;
  rows.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    ScanRow row;
    row.dt = steps == 1 ? dt_min : dt_min + (dt_max - dt_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    try {
      row.report = quantization_report(dx, row.dt, cfg, tol);
      if (with_phase) row.phase = invariance_phase(dx, row.dt, cfg);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline constexpr int max_superposition_index = 16;

/// Ψ = Σ a_n Ût Ûx Ûy ζ_n + Σ ā_n Ût Ûx Ûz ζ̄_n with ζ_n = φ₁ φ₂ for the y
/// family and ζ̄_n for the z family, both unshifted. The result is scaled
/// to unit norm on `window` (the x factor has unit norm over the box), using
/// the window's Gram matrix of the terms, since the two families overlap.
inline Solution3D build_parallel_superposition(const std::vector<cplx>& a, const std::vector<cplx>& abar,
                                               const DisplacementParams& shifts, int n_max, const SystemConfig& cfg,
                                               const Grid2D& window) {
  if (n_max < 0 || n_max > max_superposition_index) throw DomainError("superposition index bound out of range");
  if (static_cast<int>(a.size()) > n_max + 1 || static_cast<int>(abar.size()) > n_max + 1)
    throw DomainError("more coefficients than the index bound allows");
  std::vector<cplx> coeffs;
  std::vector<Solution3D> terms;
  auto add = [&](const std::vector<cplx>& c, Family family, const Unitary& shift) {
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (!std::isfinite(c[n].real()) || !std::isfinite(c[n].imag())) throw DomainError("coefficient is not finite");
      if (c[n] == cplx(0.0)) continue;
      auto zeta = make_full_parallel(family, static_cast<int>(n), DisplacementParams{}, cfg);
      auto moved = apply_unitary(Unitary::Ut(shifts.dt),
                                 apply_unitary(Unitary::Ux(shifts.dx), apply_unitary(shift, zeta, cfg), cfg), cfg);
      coeffs.push_back(c[n]);
      terms.push_back(std::move(moved));
    }
  };
  add(a, Family::parallel_family_y, Unitary::Uy(shifts.dy));
  add(abar, Family::parallel_family_z, Unitary::Uz(shifts.dz));
  if (terms.empty()) throw DomainError("empty coefficients");

  // Gram matrix of the (y, z) profiles at t = δt, where every Landau phase
  // is 1; the common x factor contributes its unit norm.
  const double root_l = std::sqrt(cfg.box_length);
  std::vector<Field2D> slices;
  for (const auto& term : terms) {
    auto s = sample_slice(term, window, shifts.dx, shifts.dt);
    for (auto& v : s.values) v *= root_l;
    slices.push_back(std::move(s));
  }
  cplx norm2 = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = 0; j < terms.size(); ++j)
      norm2 += std::conj(coeffs[i]) * coeffs[j] * inner_product(slices[i], slices[j]);
  if (!(norm2.real() > 0.0)) throw DomainError("superposition vanishes on the window");
  const double scale = 1.0 / std::sqrt(norm2.real());

  Solution3D out;
  out.family = Family::parallel_superposition;
  out.quantum_number = n_max;
  out.shifts = shifts;
  out.label = "parallel_superposition";
  out.drift = electric_drift(cfg, shifts.dt);
  out.evaluate = [coeffs, terms, scale](const Solution3D::Point& p, double t) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) sum += coeffs[i] * terms[i](p, t);
    return scale * sum;
  };
  return out;
}

}  // namespace lrinv
