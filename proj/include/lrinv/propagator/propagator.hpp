#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lrinv/config.hpp"
#include "lrinv/grid/operators.hpp"

namespace lrinv {

enum class Method { cn_1d, split_yz };

inline const char* to_string(Method m) { return m == Method::cn_1d ? "cn_1d" : "split_yz"; }

struct EvolutionSpec {
  double dt = 1e-3;
  std::size_t steps = 0;
  std::size_t cadence = 1;
  Method method = Method::cn_1d;

  void validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("time step must be positive");
    if (cadence == 0) throw DomainError("recorder cadence must be positive");
    if (steps % cadence != 0) throw DomainError("recorder cadence must divide the step count");
  }
};

/// Time series of expectation values, one row per recorded instant.
struct TrajectoryRecord {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return i;
    throw DomainError("trajectory has no column '" + name + "'");
  }
  bool has_column(const std::string& name) const {
    for (const auto& c : columns)
      if (c == name) return true;
    return false;
  }
  std::vector<double> series(const std::string& name) const {
    const std::size_t c = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
  }
};

template <class G>
struct Evolution {
  TrajectoryRecord record;
  WaveField<G> final;
};

/// Crank–Nicolson stepper for p²/2m - qEx with the three-point kinetic
/// stencil on a dirichlet grid. The system matrix is fixed, so its
/// elimination coefficients are computed once.
class CrankNicolson1D {
 public:
  CrankNicolson1D(const Grid1D& grid, double dt, const SystemConfig& cfg) : grid_(grid), dt_(dt) {
    if (grid.boundary != Boundary::dirichlet) throw DomainError("Crank-Nicolson needs a dirichlet grid");
    if (!(dt > 0.0)) throw DomainError("time step must be positive");
    const std::size_t n = grid.points;
    const double h = grid.spacing();
    off_ = -cfg.hbar() * cfg.hbar() / (2.0 * cfg.mass() * h * h);
    diag_.resize(n);
    for (std::size_t i = 0; i < n; ++i) diag_[i] = -2.0 * off_ - cfg.force() * grid.coordinate(i);
    const cplx tau(0.0, dt / (2.0 * cfg.hbar()));
    // (1 + iτH) x = d, sub/super diagonal tau·off, diagonal 1 + tau·diag.
    a_ = tau * off_;
    tau_ = tau;
    inv_pivot_.resize(n);
    c_prime_.resize(n);
    cplx prev_c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx pivot = 1.0 + tau * diag_[i] - (i == 0 ? cplx(0.0) : a_ * prev_c);
      if (std::abs(pivot) < 1e-300) throw DomainError("singular tridiagonal system");
      inv_pivot_[i] = 1.0 / pivot;
      prev_c = c_prime_[i] = a_ * inv_pivot_[i];
    }
  }

  const Grid1D& grid() const { return grid_; }
  double dt() const { return dt_; }

  /// Tridiagonal H applied to f (zero outside the grid).
  std::vector<cplx> apply_h(const std::vector<cplx>& f) const {
    const std::size_t n = f.size();
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      cplx v = diag_[i] * f[i];
      if (i > 0) v += off_ * f[i - 1];
      if (i + 1 < n) v += off_ * f[i + 1];
      out[i] = v;
    }
    return out;
  }

  Field1D step(const Field1D& f) const {
    if (!(f.grid == grid_)) throw DomainError("field grid does not match stepper");
    const std::size_t n = grid_.points;
    const auto hf = apply_h(f.values);
    std::vector<cplx> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = f[i] - tau_ * hf[i];
    // forward sweep then back substitution
    for (std::size_t i = 0; i < n; ++i) d[i] = (d[i] - (i == 0 ? cplx(0.0) : a_ * d[i - 1])) * inv_pivot_[i];
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c_prime_[i] * d[i + 1];
    return Field1D(grid_, std::move(d), f.time + dt_);
  }

 private:
  Grid1D grid_;
  double dt_;
  double off_;
  std::vector<double> diag_;
  cplx a_, tau_;
  std::vector<cplx> inv_pivot_, c_prime_;
};

inline Field1D step_crank_nicolson_1d(const Field1D& f, double dt, const SystemConfig& cfg) {
  return CrankNicolson1D(f.grid, dt, cfg).step(f);
}

/// Strang splitting of H = A + B with A = p_y²/2m (diagonal in k_y) and
/// B = (ħk_z - mω_c y)²/2m (diagonal in y, k_z).
class SplitStepYZ {
 public:
  SplitStepYZ(const Grid2D& grid, double dt, const SystemConfig& cfg) : grid_(grid), dt_(dt) {
    if (grid.y.boundary != Boundary::periodic || grid.z.boundary != Boundary::periodic)
      throw DomainError("split-step needs a periodic grid");
    if (!is_power_of_two(grid.y.points) || !is_power_of_two(grid.z.points))
      throw DomainError("split-step needs power-of-two axes");
    if (!(dt > 0.0)) throw DomainError("time step must be positive");
    const double hbar = cfg.hbar(), m = cfg.mass(), wc = cyclotron_frequency(cfg);
    const auto ky = fft::wavenumbers(grid.y);
    const auto kz = fft::wavenumbers(grid.z);
    half_a_.resize(ky.size());
    for (std::size_t j = 0; j < ky.size(); ++j) half_a_[j] = std::polar(1.0, -dt * hbar * ky[j] * ky[j] / (4.0 * m));
    full_b_.resize(grid.size());
    for (std::size_t iy = 0; iy < grid.y.points; ++iy) {
      const double y = grid.y.coordinate(iy);
      for (std::size_t iz = 0; iz < grid.z.points; ++iz) {
        const double p = hbar * kz[iz] - m * wc * y;
        full_b_[grid.index(iy, iz)] = std::polar(1.0, -dt * p * p / (2.0 * m * hbar));
      }
    }
  }

  const Grid2D& grid() const { return grid_; }
  double dt() const { return dt_; }

  Field2D step(const Field2D& f) const {
    if (!(f.grid == grid_)) throw DomainError("field grid does not match stepper");
    std::vector<cplx> v = f.values;
    kinetic_half(v);
    const std::size_t ny = grid_.y.points, nz = grid_.z.points;
    fft::transform(v, ny, nz, 1, fft::Direction::forward);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= full_b_[i];
    fft::transform(v, ny, nz, 1, fft::Direction::backward);
    kinetic_half(v);
    return Field2D(grid_, std::move(v), f.time + dt_);
  }

 private:
  void kinetic_half(std::vector<cplx>& v) const {
    const std::size_t ny = grid_.y.points, nz = grid_.z.points;
    fft::transform(v, ny, nz, 0, fft::Direction::forward);
    for (std::size_t iy = 0; iy < ny; ++iy)
      for (std::size_t iz = 0; iz < nz; ++iz) v[iy * nz + iz] *= half_a_[iy];
    fft::transform(v, ny, nz, 0, fft::Direction::backward);
  }

  Grid2D grid_;
  double dt_;
  std::vector<cplx> half_a_, full_b_;
};

inline Field2D step_split_yz(const Field2D& f, double dt, const SystemConfig& cfg) {
  return SplitStepYZ(f.grid, dt, cfg).step(f);
}

/// ⟨p⟩ by the exact Fourier derivative. On a dirichlet grid the field is
/// read as one period of a periodic function, which is accurate as long as
/// it has decayed at the walls.
inline double measured_momentum(const Field1D& f, double hbar) {
  Grid1D periodic = f.grid;
  periodic.boundary = Boundary::periodic;
  const Field1D g(periodic, f.values, f.time);
  const auto p = apply_momentum(g, Axis::x, Scheme::spectral, hbar);
  return std::real(inner_product(g, p)) / std::real(inner_product(g, g));
}

namespace detail {

inline double fidelity(const cplx& overlap, double na, double nb) { return std::abs(overlap) / (na * nb); }

inline std::vector<double> record_row(const Field1D& f, const CrankNicolson1D& cn, const SystemConfig& cfg,
                                      const Solution1D* reference) {
  const double n = norm(f);
  double x = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) x += f.grid.coordinate(i) * std::norm(f[i]);
  x *= f.grid.spacing() / (n * n);
  const auto hf = cn.apply_h(f.values);
  const double energy = std::real(inner_product(f, Field1D(f.grid, hf, f.time))) / (n * n);
  std::vector<double> row{f.time, n, x, measured_momentum(f, cfg.hbar()), energy};
  if (reference) {
    const auto r = sample(*reference, f.grid, f.time);
    row.push_back(fidelity(inner_product(r, f), norm(r), n));
  }
  return row;
}

inline std::vector<double> record_row(const Field2D& f, const SplitStepYZ&, const SystemConfig& cfg,
                                      const Solution2D* reference) {
  const double n = norm(f);
  std::vector<double> row{f.time, n};
  for (auto o : {Observable::y, Observable::z, Observable::py, Observable::pz, Observable::energy_yz})
    row.push_back(expectation(o, f, cfg));
  if (reference) {
    const auto r = sample(*reference, f.grid, f.time);
    row.push_back(fidelity(inner_product(r, f), norm(r), n));
  }
  return row;
}

template <class Stepper, class G, class Ref>
Evolution<G> run(const WaveField<G>& f0, const EvolutionSpec& spec, const SystemConfig& cfg, const Ref* reference,
                 std::vector<std::string> columns) {
  const Stepper stepper(f0.grid, spec.dt, cfg);
  if (reference) columns.push_back("fidelity");
  Evolution<G> out{{columns, {}}, f0};
  out.record.rows.push_back(record_row(f0, stepper, cfg, reference));
  for (std::size_t k = 1; k <= spec.steps; ++k) {
    out.final = stepper.step(out.final);
    // Accumulating t += Δt drifts; stamp the exact multiple instead.
    out.final.time = f0.time + static_cast<double>(k) * spec.dt;
    if (k % spec.cadence == 0) out.record.rows.push_back(record_row(out.final, stepper, cfg, reference));
  }
  return out;
}

}  // namespace detail

/// Repeated Crank–Nicolson steps; columns t, norm, x, px, energy and,
/// with a reference solution, fidelity.
inline Evolution<Grid1D> evolve(const Field1D& f0, const EvolutionSpec& spec, const SystemConfig& cfg,
                                const Solution1D* reference = nullptr) {
  spec.validate();
  if (spec.method != Method::cn_1d) throw DomainError("a 1D field needs the cn_1d method");
  return detail::run<CrankNicolson1D>(f0, spec, cfg, reference, {"t", "norm", "x", "px", "energy"});
}

/// Repeated split steps; columns t, norm, y, z, py, pz, energy and,
/// with a reference solution, fidelity.
inline Evolution<Grid2D> evolve(const Field2D& f0, const EvolutionSpec& spec, const SystemConfig& cfg,
                                const Solution2D* reference = nullptr) {
  spec.validate();
  if (spec.method != Method::split_yz) throw DomainError("a (y, z) field needs the split_yz method");
  return detail::run<SplitStepYZ>(f0, spec, cfg, reference, {"t", "norm", "y", "z", "py", "pz", "energy"});
}

namespace detail {

template <class G>
WaveField<G> advance(const WaveField<G>& f0, double total, std::size_t steps, const SystemConfig& cfg) {
  EvolutionSpec spec;
  spec.dt = total / static_cast<double>(steps);
  spec.steps = steps;
  spec.cadence = steps;
  spec.method = std::is_same_v<G, Grid1D> ? Method::cn_1d : Method::split_yz;
  return evolve(f0, spec, cfg).final;
}

}  // namespace detail

/// Richardson estimate log₂(‖ψ_Δt - ψ_Δt/2‖ / ‖ψ_Δt/2 - ψ_Δt/4‖) with
/// Δt = T/base_steps; the method follows the field's dimension.
template <class G>
double estimate_order(const WaveField<G>& f0, double total, const SystemConfig& cfg, std::size_t base_steps = 16) {
  if (!(total > 0.0) || base_steps == 0) throw DomainError("order estimate needs a positive horizon");
  const auto coarse = detail::advance(f0, total, base_steps, cfg);
  const auto mid = detail::advance(f0, total, 2 * base_steps, cfg);
  const auto fine = detail::advance(f0, total, 4 * base_steps, cfg);
  const double d1 = norm(coarse - mid);
  const double d2 = norm(mid - fine);
  const double floor = 64 * std::numeric_limits<double>::epsilon() * std::max(norm(f0), 1e-300);
  if (d1 <= floor || d2 <= floor) throw AlreadyConverged();
  return std::log2(d1 / d2);
}

}  // namespace lrinv
