#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "lrinv/solutions/analytic.hpp"

namespace lrinv {

inline constexpr int max_hermite_degree = 64;

inline void check_hermite_degree(int n) {
  if (n < 0) throw DomainError("Hermite degree must be nonnegative");
  if (n > max_hermite_degree)
    throw DomainError("Hermite degree " + std::to_string(n) + " exceeds overflow guard of " +
                      std::to_string(max_hermite_degree));
}

/// Physicists' Hermite polynomial H_n(ξ).
inline double hermite_poly(int n, double xi) {
  check_hermite_degree(n);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * xi;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * xi * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Normalized Hermite function (2ⁿn!√π)^(-1/2) exp(-ξ²/2) H_n(ξ), computed
/// by its own three-term recurrence so large n neither overflows nor
/// cancels catastrophically.
inline double hermite_function(int n, double xi) {
  check_hermite_degree(n);
  const double gauss = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(std::numbers::pi));
  double prev = gauss;
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * xi * gauss;
  for (int k = 1; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * xi * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double checked_cyclotron_frequency(const SystemConfig& cfg) {
  const double wc = cyclotron_frequency(cfg);
  if (wc == 0.0) throw DomainError("oscillator families need a nonzero magnetic field");
  return wc;
}

/// sqrt(mω_c/ħ), the inverse magnetic length.
inline double oscillator_scale(const SystemConfig& cfg) {
  return std::sqrt(cfg.mass() * std::abs(checked_cyclotron_frequency(cfg)) / cfg.hbar());
}

/// (mω_c/ħ)^(1/4) times the Hermite function: unit norm in the physical
/// coordinate ξ/oscillator_scale.
inline double oscillator_eigenfunction(int n, double xi, const SystemConfig& cfg) {
  return std::sqrt(oscillator_scale(cfg)) * hermite_function(n, xi);
}

/// E_n = ħ|ω_c|(n + 1/2), whatever the sign of the charge.
inline double landau_level(int n, const SystemConfig& cfg) {
  if (n < 0) throw DomainError("Landau index must be nonnegative");
  return cfg.hbar() * std::abs(checked_cyclotron_frequency(cfg)) * (n + 0.5);
}

/// exp(i mω_c z δy/ħ) φ_n(√(mω_c/ħ)(y - δy)).
inline cplx phi2_family_y(double y, double z, double dy, int n, const SystemConfig& cfg) {
  const double mw = cfg.mass() * checked_cyclotron_frequency(cfg);
  const double amp = oscillator_eigenfunction(n, oscillator_scale(cfg) * (y - dy), cfg);
  return std::polar(1.0, mw * z * dy / cfg.hbar()) * amp;
}

/// exp(i mω_c y(z - δz)/ħ) φ_n(√(mω_c/ħ)(z - δz)).
inline cplx phi2_family_z(double y, double z, double dz, int n, const SystemConfig& cfg) {
  const double mw = cfg.mass() * checked_cyclotron_frequency(cfg);
  const double amp = oscillator_eigenfunction(n, oscillator_scale(cfg) * (z - dz), cfg);
  return std::polar(1.0, mw * y * (z - dz) / cfg.hbar()) * amp;
}

/// φ₂(y, z, t) = exp(-iE_n t/ħ) times the static family profile.
inline Solution2D make_oscillator_family(Family family, int n, double shift, const SystemConfig& cfg) {
  const double energy = landau_level(n, cfg);
  check_hermite_degree(n);
  Solution2D s;
  s.family = family;
  s.quantum_number = n;
  const double hbar = cfg.hbar();
  if (family == Family::parallel_family_y) {
    s.shifts.dy = shift;
    s.label = "phi2_family_y";
    s.evaluate = [cfg, n, shift, energy, hbar](const Solution2D::Point& p, double t) {
      return std::polar(1.0, -energy * t / hbar) * phi2_family_y(p[0], p[1], shift, n, cfg);
    };
  } else if (family == Family::parallel_family_z) {
    s.shifts.dz = shift;
    s.label = "phi2_family_z";
    s.evaluate = [cfg, n, shift, energy, hbar](const Solution2D::Point& p, double t) {
      return std::polar(1.0, -energy * t / hbar) * phi2_family_z(p[0], p[1], shift, n, cfg);
    };
  } else {
    throw DomainError(std::string("not an oscillator family: ") + to_string(family));
  }
  return s;
}

/// φ₁(x, t)·φ₂(y, z, t). The family's shift is read from `shifts.dy` or
/// `shifts.dz`.
inline cplx full_parallel_solution(double x, double y, double z, double t, Family family, int n,
                                   const DisplacementParams& shifts, const SystemConfig& cfg) {
  cplx profile;
  if (family == Family::parallel_family_y) {
    profile = phi2_family_y(y, z, shifts.dy, n, cfg);
  } else if (family == Family::parallel_family_z) {
    profile = phi2_family_z(y, z, shifts.dz, n, cfg);
  } else {
    throw DomainError(std::string("unknown parallel family: ") + to_string(family));
  }
  const double energy = landau_level(n, cfg);
  return phi_electric(x, t, cfg) * std::polar(1.0, -energy * t / cfg.hbar()) * profile;
}

inline Solution3D make_full_parallel(Family family, int n, const DisplacementParams& shifts,
                                     const SystemConfig& cfg) {
  if (family != Family::parallel_family_y && family != Family::parallel_family_z)
    throw DomainError(std::string("unknown parallel family: ") + to_string(family));
  check_hermite_degree(n);
  Solution3D s;
  s.family = family;
  s.quantum_number = n;
  s.shifts = shifts;
  s.label = family == Family::parallel_family_y ? "parallel_family_y" : "parallel_family_z";
  s.evaluate = [=](const Solution3D::Point& p, double t) {
    return full_parallel_solution(p[0], p[1], p[2], t, family, n, shifts, cfg);
  };
  s.drift = electric_drift(cfg);
  return s;
}

}  // namespace lrinv
