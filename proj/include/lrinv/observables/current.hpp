#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "lrinv/config.hpp"
#include "lrinv/grid/operators.hpp"
#include "lrinv/propagator/propagator.hpp"
#include "lrinv/solutions/analytic.hpp"

namespace lrinv {

/// Samples of the 1D probability current J = (ħ/m) Im(ψ* ∂ψ/∂x), the
/// density ρ = |ψ|² and the velocity v = J/ρ, which is absent where ρ is
/// below 1e-12 of its maximum.
struct CurrentProfile {
  std::vector<double> x;
  std::vector<double> current;
  std::vector<double> density;
  std::vector<std::optional<double>> velocity;
  double time = 0.0;
};

inline constexpr double density_floor = 1e-12;

namespace detail {

inline CurrentProfile assemble_current(std::vector<double> x, const std::vector<cplx>& psi,
                                       const std::vector<cplx>& dpsi, double t, const SystemConfig& cfg) {
  CurrentProfile out;
  out.x = std::move(x);
  out.time = t;
  const double scale = cfg.hbar() / cfg.mass();
  double peak = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    // (iħ/2m)(ψ ∂ψ* - ψ* ∂ψ) = (ħ/m) Im(ψ* ∂ψ)
    out.current.push_back(scale * std::imag(std::conj(psi[i]) * dpsi[i]));
    out.density.push_back(std::norm(psi[i]));
    peak = std::max(peak, out.density.back());
  }
  if (!(peak > 0.0)) throw DomainError("vanishing density");
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (out.density[i] > density_floor * peak) out.velocity.push_back(out.current[i] / out.density[i]);
    else out.velocity.push_back(std::nullopt);
  }
  return out;
}

}  // namespace detail

/// Current of a closed-form solution at the grid's cell centres, with the
/// derivative taken from the solution's own gradient.
inline CurrentProfile probability_current_1d(const Solution1D& psi, const Grid1D& grid, double t,
                                             const SystemConfig& cfg) {
  if (!psi.gradient) throw DomainError("solution has no closed-form gradient");
  std::vector<double> x;
  std::vector<cplx> v, d;
  for (std::size_t i = 0; i < grid.points; ++i) {
    const Solution1D::Point p{grid.coordinate(i)};
    x.push_back(p[0]);
    v.push_back(psi(p, t));
    d.push_back(psi.gradient(p, t));
  }
  return detail::assemble_current(std::move(x), v, d, t, cfg);
}

/// Current of a grid field with the fourth-order derivative.
inline CurrentProfile probability_current_1d(const Field1D& f, const SystemConfig& cfg) {
  const auto d = derivative(f, Axis::x, 1, Scheme::fd4);
  std::vector<double> x;
  for (std::size_t i = 0; i < f.grid.points; ++i) x.push_back(f.grid.coordinate(i));
  return detail::assemble_current(std::move(x), f.values, d.values, f.time, cfg);
}

/// Classical velocity qEt/m reached from rest.
inline double drift_velocity(double t, const SystemConfig& cfg) {
  if (cfg.fields.geometry != Geometry::electric_1d) throw GeometryError("drift velocity needs the electric_1d geometry");
  return cfg.force() * t / cfg.mass();
}

struct NewtonCheck {
  double max_residual = 0.0;
  std::size_t rows_used = 0;
};

/// Compares d⟨p⟩/dt, by central differences over interior record rows,
/// with the force qE. The residual is relative to |qE|, or absolute when
/// the field vanishes.
inline NewtonCheck newton_check(const TrajectoryRecord& record, const SystemConfig& cfg) {
  if (record.rows.size() < 3) throw DomainError("Newton check needs at least 3 trajectory rows");
  const auto t = record.series("t");
  const auto p = record.series("px");
  const double force = cfg.force();
  const double scale = force != 0.0 ? std::abs(force) : 1.0;
  NewtonCheck out;
  for (std::size_t k = 1; k + 1 < t.size(); ++k) {
    const double dpdt = (p[k + 1] - p[k - 1]) / (t[k + 1] - t[k - 1]);
    out.max_residual = std::max(out.max_residual, std::abs(dpdt - force) / scale);
    ++out.rows_used;
  }
  return out;
}

/// max |∂ρ/∂t + ∂J/∂x| over interior points at the middle of three equally
/// spaced fields, with a central time difference and fourth-order space
/// derivatives.
inline double continuity_residual(const Field1D& before, const Field1D& now, const Field1D& after,
                                  const SystemConfig& cfg) {
  require_same_grid(before, now);
  require_same_grid(now, after);
  const double dt = after.time - before.time;
  if (!(dt > 0.0)) throw DomainError("fields must be ordered in time");
  const auto profile = probability_current_1d(now, cfg);
  const Field1D j(now.grid, std::vector<cplx>(profile.current.begin(), profile.current.end()), now.time);
  const auto djdx = derivative(j, Axis::x, 1, Scheme::fd4);
  double worst = 0.0;
  for (std::size_t i = 0; i < now.size(); ++i) {
    if (!now.grid.is_interior(i)) continue;
    const double drho = (std::norm(after[i]) - std::norm(before[i])) / dt;
    worst = std::max(worst, std::abs(drho + std::real(djdx[i])));
  }
  return worst;
}

}  // namespace lrinv
