#pragma once

#include <cmath>
#include <string>

#include "lrinv/config.hpp"
#include "lrinv/grid/operators.hpp"
#include "lrinv/solutions/analytic.hpp"

namespace lrinv {

/// One of the displacement unitaries. A phase-stripped unitary performs the
/// bare translation without its compensating phase; it is not a symmetry
/// and serves as a negative control.
struct Unitary {
  enum class Kind { x, y, z, t };
  Kind kind = Kind::x;
  double delta = 0.0;
  bool strip_phase = false;

  static Unitary Ux(double d) { return make(Kind::x, d); }
  static Unitary Uy(double d) { return make(Kind::y, d); }
  static Unitary Uz(double d) { return make(Kind::z, d); }
  static Unitary Ut(double d) { return make(Kind::t, d); }

  Unitary phase_stripped() const {
    Unitary u = *this;
    u.strip_phase = true;
    return u;
  }

 private:
  static Unitary make(Kind k, double d) {
    if (!std::isfinite(d)) throw DomainError("unitary displacement must be finite");
    return {k, d, false};
  }
};

inline std::string to_string(const Unitary& u) {
  const char* names[] = {"Ux", "Uy", "Uz", "Ut"};
  return std::string(names[static_cast<int>(u.kind)]) + (u.strip_phase ? "(stripped)" : "");
}

namespace detail {

/// Index of a named coordinate in a Dim-dimensional point, or -1.
template <int Dim>
constexpr int coordinate_index(Unitary::Kind k) {
  if constexpr (Dim == 1) return k == Unitary::Kind::x ? 0 : -1;
  else if constexpr (Dim == 2) return k == Unitary::Kind::y ? 0 : k == Unitary::Kind::z ? 1 : -1;
  else return k == Unitary::Kind::x ? 0 : k == Unitary::Kind::y ? 1 : k == Unitary::Kind::z ? 2 : -1;
}

inline const char* axis_name(Unitary::Kind k) {
  return k == Unitary::Kind::x ? "x" : k == Unitary::Kind::y ? "y" : k == Unitary::Kind::z ? "z" : "t";
}

}  // namespace detail

/// Closed-form transform of a solution:
///   Ux ψ = exp(iqEtδx/ħ) ψ(x - δx)     Uy ψ = exp(imω_c zδy/ħ) ψ(y - δy, z)
///   Uz ψ = ψ(z - δz)                    Ut ψ = ψ(t - δt)
template <int Dim>
AnalyticSolution<Dim> apply_unitary(const Unitary& u, const AnalyticSolution<Dim>& psi, const SystemConfig& cfg) {
  using Point = typename AnalyticSolution<Dim>::Point;
  AnalyticSolution<Dim> out = psi;
  const double d = u.delta;
  if (u.kind == Unitary::Kind::t) {
    auto inner = psi.evaluate;
    out.evaluate = [inner, d](const Point& p, double t) { return inner(p, t - d); };
    if (psi.gradient) {
      auto g = psi.gradient;
      out.gradient = [g, d](const Point& p, double t) { return g(p, t - d); };
    }
    if (out.drift) out.drift->t0 += d;
    out.shifts.dt += d;
    if (out.family == Family::electric_1d_fundamental) out.family = Family::electric_1d_shifted;
    return out;
  }
  const int axis = detail::coordinate_index<Dim>(u.kind);
  if (axis < 0)
    throw DomainError(std::string("solution has no ") + detail::axis_name(u.kind) + " coordinate");
  double rate = 0.0;  // phase = rate · (time or z coordinate)
  int phase_axis = -1;
  if (!u.strip_phase) {
    if (u.kind == Unitary::Kind::x) rate = cfg.force() * d / cfg.hbar();
    if (u.kind == Unitary::Kind::y) {
      rate = cfg.mass() * cyclotron_frequency(cfg) * d / cfg.hbar();
      phase_axis = detail::coordinate_index<Dim>(Unitary::Kind::z);
      if (phase_axis < 0) throw DomainError("Uy needs a z coordinate");
    }
  }
  auto phase = [rate, phase_axis](const Point& p, double t) {
    if (rate == 0.0) return cplx(1.0);
    return std::polar(1.0, rate * (phase_axis < 0 ? t : p[phase_axis]));
  };
  auto inner = psi.evaluate;
  out.evaluate = [inner, phase, axis, d](const Point& p, double t) {
    Point q = p;
    q[axis] -= d;
    return phase(p, t) * inner(q, t);
  };
  out.gradient = nullptr;
  if (psi.gradient && axis == 0 && u.kind == Unitary::Kind::x) {
    auto g = psi.gradient;
    out.gradient = [g, phase, d](const Point& p, double t) {
      Point q = p;
      q[0] -= d;
      return phase(p, t) * g(q, t);
    };
  }
  if (u.kind == Unitary::Kind::x) out.shifts.dx += d;
  if (u.kind == Unitary::Kind::y) out.shifts.dy += d;
  if (u.kind == Unitary::Kind::z) out.shifts.dz += d;
  if (u.strip_phase) out.family = Family::transformed;
  return out;
}

/// Translation of grid samples by δ along one axis: an index roll when δ
/// is a whole number of cells, a Fourier phase shift on a periodic axis
/// otherwise. Cells shifted in across a dirichlet wall are zero.
template <class G>
WaveField<G> translate(const WaveField<G>& f, Axis axis, double delta) {
  const auto l = detail::layout(f.grid, axis);
  const Grid1D& line = *l.line;
  const double cells = delta / line.spacing();
  const double whole = std::round(cells);
  WaveField<G> out(f.grid, f.time);
  const long n = static_cast<long>(line.points);
  const std::size_t lines = l.axis == 1 ? l.rows : l.cols;
  const std::size_t stride = l.axis == 1 ? 1 : l.cols;
  if (std::abs(cells - whole) <= 1e-9 * std::max(1.0, std::abs(cells))) {
    const long s = static_cast<long>(whole);
    for (std::size_t k = 0; k < lines; ++k) {
      const std::size_t base = l.axis == 1 ? k * l.cols : k;
      for (long i = 0; i < n; ++i) {
        long src = i - s;
        if (line.boundary == Boundary::periodic) src = ((src % n) + n) % n;
        else if (src < 0 || src >= n) continue;
        out[base + static_cast<std::size_t>(i) * stride] = f[base + static_cast<std::size_t>(src) * stride];
      }
    }
    return out;
  }
  if (line.boundary != Boundary::periodic) throw DomainError("off-grid shift on a dirichlet axis");
  out.values = f.values;
  fft::transform(out.values, l.rows, l.cols, l.axis, fft::Direction::forward);
  const auto k = fft::wavenumbers(line);
  for (std::size_t r = 0; r < l.rows; ++r)
    for (std::size_t c = 0; c < l.cols; ++c) {
      const std::size_t j = l.axis == 1 ? c : r;
      out.values[r * l.cols + c] *= std::polar(1.0, -k[j] * delta);
    }
  fft::transform(out.values, l.rows, l.cols, l.axis, fft::Direction::backward);
  return out;
}

inline Field1D apply_unitary(const Unitary& u, const Field1D& f, const SystemConfig& cfg) {
  if (u.kind == Unitary::Kind::t) throw DomainError("time shift requires analytic time dependence");
  if (u.kind != Unitary::Kind::x) throw DomainError("a 1D field has only an x coordinate");
  auto out = translate(f, Axis::x, u.delta);
  if (!u.strip_phase) {
    const cplx phase = std::polar(1.0, cfg.force() * f.time * u.delta / cfg.hbar());
    for (auto& v : out.values) v *= phase;
  }
  return out;
}

inline Field2D apply_unitary(const Unitary& u, const Field2D& f, const SystemConfig& cfg) {
  if (u.kind == Unitary::Kind::t) throw DomainError("time shift requires analytic time dependence");
  if (u.kind == Unitary::Kind::x) throw DomainError("a (y, z) field has no x coordinate");
  if (u.kind == Unitary::Kind::z) return translate(f, Axis::z, u.delta);
  auto out = translate(f, Axis::y, u.delta);
  if (!u.strip_phase) {
    const double rate = cfg.mass() * cyclotron_frequency(cfg) * u.delta / cfg.hbar();
    for (std::size_t iy = 0; iy < f.grid.y.points; ++iy)
      for (std::size_t iz = 0; iz < f.grid.z.points; ++iz)
        out[f.grid.index(iy, iz)] *= std::polar(1.0, rate * f.grid.z.coordinate(iz));
  }
  return out;
}

/// ‖(Ĥ - iħ∂t)(Ûψ) - Û((Ĥ - iħ∂t)ψ)‖ / ‖ψ‖ over interior points, with the
/// grid Hamiltonian and a central time stencil of half-width `dt`.
template <int Dim>
double conjugation_symmetry_check(const Unitary& u, const AnalyticSolution<Dim>& psi, const GridFor<Dim>& grid,
                                  double t, double dt, const SystemConfig& cfg) {
  const auto transformed = apply_unitary(u, psi, cfg);
  const auto lhs = residual_field(transformed, grid, t, dt, cfg);
  const auto rhs = u.kind == Unitary::Kind::t ? residual_field(psi, grid, t - u.delta, dt, cfg)
                                              : apply_unitary(u, residual_field(psi, grid, t, dt, cfg), cfg);
  auto diff = lhs - rhs;
  diff.time = t;
  return interior_norm(diff) / interior_norm(sample(psi, grid, t));
}

}  // namespace lrinv
