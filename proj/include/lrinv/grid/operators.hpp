#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lrinv/config.hpp"
#include "lrinv/grid/fft.hpp"
#include "lrinv/grid/quadrature.hpp"
#include "lrinv/solutions/analytic.hpp"
#include "lrinv/solutions/oscillator.hpp"

namespace lrinv {

enum class Scheme { spectral, fd4 };
enum class Axis { x, y, z };

inline const char* to_string(Scheme s) { return s == Scheme::spectral ? "spectral" : "fd4"; }
inline const char* to_string(Axis a) { return a == Axis::x ? "x" : a == Axis::y ? "y" : "z"; }

/// Spectral on periodic axes, fd4 on dirichlet ones.
inline Scheme default_scheme(const Grid1D& g) {
  return g.boundary == Boundary::periodic ? Scheme::spectral : Scheme::fd4;
}

namespace detail {

struct Layout {
  std::size_t rows, cols;
  int axis;
  const Grid1D* line;
};

inline Layout layout(const Grid1D& g, Axis a) {
  if (a != Axis::x) throw DomainError(std::string("axis ") + to_string(a) + " is not on a 1D grid");
  return {1, g.points, 1, &g};
}

inline Layout layout(const Grid2D& g, Axis a) {
  if (a == Axis::y) return {g.y.points, g.z.points, 0, &g.y};
  if (a == Axis::z) return {g.y.points, g.z.points, 1, &g.z};
  throw DomainError("axis x is not on a (y, z) grid");
}

inline void fd4_axis(const std::vector<cplx>& in, std::vector<cplx>& out, const Layout& l, int order) {
  const Grid1D& g = *l.line;
  const long n = static_cast<long>(g.points);
  const bool periodic = g.boundary == Boundary::periodic;
  const double h = g.spacing();
  const std::size_t lines = l.axis == 1 ? l.rows : l.cols;
  const std::size_t stride = l.axis == 1 ? 1 : l.cols;
  for (std::size_t line = 0; line < lines; ++line) {
    const std::size_t base = l.axis == 1 ? line * l.cols : line;
    auto at = [&](long i) -> cplx {
      if (periodic) i = ((i % n) + n) % n;
      else if (i < 0 || i >= n) return 0.0;
      return in[base + static_cast<std::size_t>(i) * stride];
    };
    for (long i = 0; i < n; ++i) {
      cplx d;
      if (order == 1)
        d = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h);
      else
        d = (-at(i + 2) + 16.0 * at(i + 1) - 30.0 * at(i) + 16.0 * at(i - 1) - at(i - 2)) / (12.0 * h * h);
      out[base + static_cast<std::size_t>(i) * stride] = d;
    }
  }
}

inline void spectral_axis(const std::vector<cplx>& in, std::vector<cplx>& out, const Layout& l, int order) {
  const Grid1D& g = *l.line;
  if (g.boundary != Boundary::periodic) throw DomainError("spectral scheme requires a periodic axis");
  out = in;
  fft::transform(out, l.rows, l.cols, l.axis, fft::Direction::forward);
  auto k = fft::wavenumbers(g);
  std::vector<cplx> symbol(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (order == 1) symbol[j] = j == g.points / 2 ? cplx(0.0) : cplx(0.0, k[j]);
    else symbol[j] = -k[j] * k[j];
  }
  for (std::size_t r = 0; r < l.rows; ++r)
    for (std::size_t c = 0; c < l.cols; ++c) out[r * l.cols + c] *= symbol[l.axis == 1 ? c : r];
  fft::transform(out, l.rows, l.cols, l.axis, fft::Direction::backward);
}

}  // namespace detail

/// First (order 1) or second (order 2) derivative along an axis.
template <class G>
WaveField<G> derivative(const WaveField<G>& f, Axis axis, int order, Scheme scheme) {
  if (order != 1 && order != 2) throw DomainError("derivative order must be 1 or 2");
  const auto l = detail::layout(f.grid, axis);
  WaveField<G> out(f.grid, f.time);
  if (scheme == Scheme::spectral) detail::spectral_axis(f.values, out.values, l, order);
  else detail::fd4_axis(f.values, out.values, l, order);
  return out;
}

template <class G>
Scheme default_scheme(const G& g, Axis axis) {
  return default_scheme(*detail::layout(g, axis).line);
}

/// -iħ ∂/∂axis.
template <class G>
WaveField<G> apply_momentum(const WaveField<G>& f, Axis axis, Scheme scheme, double hbar) {
  return cplx(0.0, -hbar) * derivative(f, axis, 1, scheme);
}

template <class G>
WaveField<G> apply_momentum(const WaveField<G>& f, Axis axis, double hbar) {
  return apply_momentum(f, axis, default_scheme(f.grid, axis), hbar);
}

/// p²/2m - qEx on a 1D grid.
inline Field1D apply_hamiltonian_1d(const Field1D& f, const SystemConfig& cfg, std::optional<Scheme> scheme = {}) {
  const Scheme s = scheme.value_or(default_scheme(f.grid));
  auto out = derivative(f, Axis::x, 2, s);
  const double kinetic = -cfg.hbar() * cfg.hbar() / (2.0 * cfg.mass());
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = kinetic * out[i] - cfg.force() * f.grid.coordinate(i) * f[i];
  return out;
}

/// (p_y² + (p_z - mω_c y)²)/2m on a (y, z) grid.
inline Field2D apply_hamiltonian_yz(const Field2D& f, const SystemConfig& cfg, std::optional<Scheme> scheme_y = {},
                                    std::optional<Scheme> scheme_z = {}) {
  const Scheme sy = scheme_y.value_or(default_scheme(f.grid.y));
  const Scheme sz = scheme_z.value_or(default_scheme(f.grid.z));
  const auto dyy = derivative(f, Axis::y, 2, sy);
  const auto dzz = derivative(f, Axis::z, 2, sz);
  const auto dz = derivative(f, Axis::z, 1, sz);
  const double hbar = cfg.hbar(), m = cfg.mass(), wc = cyclotron_frequency(cfg);
  Field2D out(f.grid, f.time);
  for (std::size_t iy = 0; iy < f.grid.y.points; ++iy) {
    const double y = f.grid.y.coordinate(iy);
    for (std::size_t iz = 0; iz < f.grid.z.points; ++iz) {
      const std::size_t i = f.grid.index(iy, iz);
      out[i] = -hbar * hbar / (2.0 * m) * (dyy[i] + dzz[i]) + cplx(0.0, hbar * wc * y) * dz[i] +
               0.5 * m * wc * wc * y * y * f[i];
    }
  }
  return out;
}

inline Field1D apply_hamiltonian(const Field1D& f, const SystemConfig& cfg) { return apply_hamiltonian_1d(f, cfg); }
inline Field2D apply_hamiltonian(const Field2D& f, const SystemConfig& cfg) { return apply_hamiltonian_yz(f, cfg); }

/// Throws when the plane-wave factor of `drift` would exceed half the
/// Nyquist wavenumber of a grid with the given spacing at time t.
inline void check_nyquist(const std::optional<PlaneWaveDrift>& drift, double spacing, double t) {
  if (!drift || drift->rate == 0.0) return;
  const double limit = 0.5 * std::numbers::pi / spacing;
  if (std::abs(drift->wavenumber(t)) <= limit) return;
  const double max_t = drift->t0 + limit / std::abs(drift->rate);
  auto text = [](double v) {
    char buf[32];
    return std::string(buf, std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6).ptr);
  };
  throw NyquistError(max_t, "sampling at t = " + text(t) + " would alias; maximum admissible t is " + text(max_t));
}

/// Evaluates a closed-form solution at the cell centres.
inline Field1D sample(const Solution1D& s, const Grid1D& g, double t) {
  check_nyquist(s.drift, g.spacing(), t);
  Field1D f(g, t);
  for (std::size_t i = 0; i < g.points; ++i) f[i] = s({g.coordinate(i)}, t);
  return f;
}

inline Field2D sample(const Solution2D& s, const Grid2D& g, double t) {
  Field2D f(g, t);
  for (std::size_t iy = 0; iy < g.y.points; ++iy)
    for (std::size_t iz = 0; iz < g.z.points; ++iz)
      f[g.index(iy, iz)] = s({g.y.coordinate(iy), g.z.coordinate(iz)}, t);
  return f;
}

/// (y, z) slice of a three-dimensional solution at fixed x.
inline Field2D sample_slice(const Solution3D& s, const Grid2D& g, double x, double t) {
  Field2D f(g, t);
  for (std::size_t iy = 0; iy < g.y.points; ++iy)
    for (std::size_t iz = 0; iz < g.z.points; ++iz)
      f[g.index(iy, iz)] = s({x, g.y.coordinate(iy), g.z.coordinate(iz)}, t);
  return f;
}

template <int Dim>
using GridFor = std::conditional_t<Dim == 1, Grid1D, Grid2D>;

/// iħ(ψ(t+Δt) - ψ(t-Δt))/(2Δt) - Ĥψ(t) on the grid.
template <int Dim>
WaveField<GridFor<Dim>> residual_field(const AnalyticSolution<Dim>& s, const GridFor<Dim>& g, double t, double dt,
                                       const SystemConfig& cfg) {
  if (!(dt > 0.0)) throw DomainError("stencil time step must be positive");
  const auto later = sample(s, g, t + dt);
  const auto earlier = sample(s, g, t - dt);
  const auto now = sample(s, g, t);
  auto out = apply_hamiltonian(now, cfg);
  const cplx factor(0.0, cfg.hbar() / (2.0 * dt));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = factor * (later[i] - earlier[i]) - out[i];
  return out;
}

/// ‖iħ∂tψ - Ĥψ‖ / ‖ψ‖ over interior points.
template <int Dim>
double schrodinger_residual(const AnalyticSolution<Dim>& s, const GridFor<Dim>& g, double t, double dt,
                            const SystemConfig& cfg) {
  const auto r = residual_field(s, g, t, dt, cfg);
  return interior_norm(r) / interior_norm(sample(s, g, t));
}

enum class Observable { x, px, energy, pi_x, y, z, py, pz, energy_yz, pi_y, pi_z };

inline const char* to_string(Observable o) {
  switch (o) {
    case Observable::x: return "x";
    case Observable::px: return "px";
    case Observable::energy: return "H";
    case Observable::pi_x: return "pi_x";
    case Observable::y: return "y";
    case Observable::z: return "z";
    case Observable::py: return "py";
    case Observable::pz: return "pz";
    case Observable::energy_yz: return "H_yz";
    case Observable::pi_y: return "pi_y";
    case Observable::pi_z: return "pi_z";
  }
  return "?";
}

inline Observable parse_observable(const std::string& name) {
  for (auto o : {Observable::x, Observable::px, Observable::energy, Observable::pi_x, Observable::y, Observable::z,
                 Observable::py, Observable::pz, Observable::energy_yz, Observable::pi_y, Observable::pi_z})
    if (name == to_string(o)) return o;
  throw DomainError("unknown observable '" + name + "'");
}

/// Ô f on a 1D grid. π̂x = p̂x - qEt uses the field's time stamp.
inline Field1D apply_observable(Observable o, const Field1D& f, const SystemConfig& cfg) {
  switch (o) {
    case Observable::x: {
      Field1D out = f;
      for (std::size_t i = 0; i < f.size(); ++i) out[i] *= f.grid.coordinate(i);
      return out;
    }
    case Observable::px: return apply_momentum(f, Axis::x, cfg.hbar());
    case Observable::energy: return apply_hamiltonian_1d(f, cfg);
    case Observable::pi_x: return apply_momentum(f, Axis::x, cfg.hbar()) - cplx(cfg.force() * f.time) * f;
    default: throw DomainError(std::string("observable ") + to_string(o) + " is not defined on a 1D grid");
  }
}

inline Field2D apply_observable(Observable o, const Field2D& f, const SystemConfig& cfg) {
  const double mw = o == Observable::pi_y ? cfg.mass() * cyclotron_frequency(cfg) : 0.0;
  Field2D out = f;
  switch (o) {
    case Observable::y:
    case Observable::z:
    case Observable::pi_y:
      for (std::size_t iy = 0; iy < f.grid.y.points; ++iy)
        for (std::size_t iz = 0; iz < f.grid.z.points; ++iz) {
          const double c = o == Observable::y ? f.grid.y.coordinate(iy) : f.grid.z.coordinate(iz);
          out[f.grid.index(iy, iz)] *= o == Observable::pi_y ? mw * c : c;
        }
      if (o == Observable::pi_y) return apply_momentum(f, Axis::y, cfg.hbar()) - out;
      return out;
    case Observable::py: return apply_momentum(f, Axis::y, cfg.hbar());
    case Observable::pz:
    case Observable::pi_z: return apply_momentum(f, Axis::z, cfg.hbar());
    case Observable::energy_yz: return apply_hamiltonian_yz(f, cfg);
    default: throw DomainError(std::string("observable ") + to_string(o) + " is not defined on a (y, z) grid");
  }
}

/// Re⟨f|Ôf⟩/⟨f|f⟩ over interior points (the stencil band of a dirichlet
/// axis is excluded so derivative observables never see the zero padding).
template <class G>
double expectation(Observable o, const WaveField<G>& f, const SystemConfig& cfg) {
  const auto of = apply_observable(o, f, cfg);
  const double den = std::real(interior_inner_product(f, f));
  if (!(den > 0.0)) throw DomainError("expectation of a vanishing field");
  return std::real(interior_inner_product(f, of)) / den;
}

template <class G>
double expectation(const std::string& name, const WaveField<G>& f, const SystemConfig& cfg) {
  return expectation(parse_observable(name), f, cfg);
}

}  // namespace lrinv
