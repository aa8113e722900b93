#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "lrinv/config.hpp"
#include "lrinv/error.hpp"

namespace lrinv {

using cplx = std::complex<double>;

enum class Family {
  electric_1d_fundamental,
  electric_1d_shifted,
  electric_1d_ladder,
  electric_1d_superposition,
  parallel_family_y,
  parallel_family_z,
  parallel_product,
  parallel_superposition,
  transformed,
};

inline const char* to_string(Family f) {
  switch (f) {
    case Family::electric_1d_fundamental: return "electric_1d_fundamental";
    case Family::electric_1d_shifted: return "electric_1d_shifted";
    case Family::electric_1d_ladder: return "electric_1d_ladder";
    case Family::electric_1d_superposition: return "electric_1d_superposition";
    case Family::parallel_family_y: return "parallel_family_y";
    case Family::parallel_family_z: return "parallel_family_z";
    case Family::parallel_product: return "parallel_product";
    case Family::parallel_superposition: return "parallel_superposition";
    case Family::transformed: return "transformed";
  }
  return "unknown";
}

/// Plane-wave factor exp(i k(t) x) with k(t) = rate·(t - t0) along the
/// first coordinate; used to refuse sampling that would alias.
struct PlaneWaveDrift {
  double rate = 0.0;
  double t0 = 0.0;
  double wavenumber(double t) const { return rate * (t - t0); }
};

/// Closed-form wavefunction over `Dim` spatial coordinates and time.
/// Coordinates are (x) for Dim = 1, (y, z) for Dim = 2, (x, y, z) for Dim = 3.
template <int Dim>
struct AnalyticSolution {
  using Point = std::array<double, Dim>;
  using Evaluator = std::function<cplx(const Point&, double)>;

  Family family = Family::transformed;
  int quantum_number = 0;
  DisplacementParams shifts;
  std::string label;
  Evaluator evaluate;
  /// Closed-form derivative along the first coordinate, when known.
  Evaluator gradient;
  std::optional<PlaneWaveDrift> drift;

  cplx operator()(const Point& p, double t) const { return evaluate(p, t); }
};

using Solution1D = AnalyticSolution<1>;
using Solution2D = AnalyticSolution<2>;
using Solution3D = AnalyticSolution<3>;

/// 1/sqrt(L), or 1/L when inverse_length_normalization is set.
inline double electric_amplitude(const SystemConfig& cfg) {
  return cfg.inverse_length_normalization ? 1.0 / cfg.box_length : 1.0 / std::sqrt(cfg.box_length);
}

/// φ(x, t) = A exp(-i q²E²t³/(6mħ) + i qEtx/ħ).
inline cplx phi_electric(double x, double t, const SystemConfig& cfg) {
  const double qe = cfg.force();
  const double hbar = cfg.hbar();
  const double phase = -qe * qe * t * t * t / (6.0 * cfg.mass() * hbar) + qe * t * x / hbar;
  return std::polar(electric_amplitude(cfg), phase);
}

/// ψ(x, t) = φ(x, t - δt).
inline cplx psi_electric_shifted(double x, double t, double dt, const SystemConfig& cfg) {
  return phi_electric(x, t - dt, cfg);
}

/// Momentum-space drift of φ: k(t) = qEt/ħ.
inline PlaneWaveDrift electric_drift(const SystemConfig& cfg, double dt = 0.0) {
  return {cfg.force() / cfg.hbar(), dt};
}

inline Solution1D make_psi_electric_shifted(const SystemConfig& cfg, double dt) {
  Solution1D s;
  s.family = dt == 0.0 ? Family::electric_1d_fundamental : Family::electric_1d_shifted;
  s.shifts.dt = dt;
  s.label = dt == 0.0 ? "phi_electric" : "psi_electric_shifted";
  s.evaluate = [cfg, dt](const Solution1D::Point& p, double t) { return psi_electric_shifted(p[0], t, dt, cfg); };
  const double k_rate = cfg.force() / cfg.hbar();
  s.gradient = [cfg, dt, k_rate](const Solution1D::Point& p, double t) {
    return cplx(0.0, k_rate * (t - dt)) * psi_electric_shifted(p[0], t, dt, cfg);
  };
  s.drift = electric_drift(cfg, dt);
  return s;
}

inline Solution1D make_phi_electric(const SystemConfig& cfg) { return make_psi_electric_shifted(cfg, 0.0); }

}  // namespace lrinv
