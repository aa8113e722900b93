#pragma once

#include "lrinv/config.hpp"
#include "lrinv/grid/operators.hpp"
#include "lrinv/grid/quadrature.hpp"
#include "lrinv/solutions/ladder.hpp"

namespace lrinv {

/// Relative interior error of f̂Ê(P_jφ) = iħqE(j+1)(P_jφ) on a grid, with
/// Ê = iħ∂t as a central time difference of half-width `dt` and
/// f̂ = p̂x - qEt with the fourth-order momentum.
inline double ladder_grid_error(int j, const Grid1D& grid, double t, double dt, const SystemConfig& cfg) {
  const auto state = make_ladder_state(j, cfg);
  const auto before = sample(state, grid, t - dt);
  const auto after = sample(state, grid, t + dt);
  Field1D e_psi = cplx(0.0, cfg.hbar() / (2 * dt)) * (after - before);
  e_psi.time = t;
  auto lhs = apply_momentum(e_psi, Axis::x, Scheme::fd4, cfg.hbar());
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= cfg.force() * t * e_psi[i];
  const auto psi = sample(state, grid, t);
  const auto rhs = cplx(0.0, cfg.hbar() * cfg.force() * (j + 1)) * psi;
  return interior_norm(lhs - rhs) / interior_norm(rhs);
}

}  // namespace lrinv
