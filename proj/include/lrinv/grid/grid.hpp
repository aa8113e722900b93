#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "lrinv/error.hpp"

namespace lrinv {

using cplx = std::complex<double>;

enum class Boundary { periodic, dirichlet };

inline const char* to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "dirichlet"; }

/// Width of the boundary band excluded from dirichlet residuals; the
/// footprint of the five-point stencil plus one spare cell.
inline constexpr std::size_t interior_band = 4;

inline constexpr std::size_t min_grid_points = 16;

/// Uniform cell-centred grid on [-L/2, L/2].
struct Grid1D {
  double length = 1.0;
  std::size_t points = min_grid_points;
  Boundary boundary = Boundary::periodic;

  Grid1D() = default;
  Grid1D(double length_, std::size_t points_, Boundary boundary_ = Boundary::periodic)
      : length(length_), points(points_), boundary(boundary_) {
    if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("grid length must be positive");
    if (points < min_grid_points)
      throw DomainError("grid needs at least " + std::to_string(min_grid_points) + " points");
  }

  double spacing() const { return length / static_cast<double>(points); }
  double coordinate(std::size_t i) const { return -0.5 * length + (static_cast<double>(i) + 0.5) * spacing(); }
  bool is_interior(std::size_t i) const {
    return boundary == Boundary::periodic || (i >= interior_band && i + interior_band < points);
  }
  std::size_t size() const { return points; }

  bool operator==(const Grid1D&) const = default;
};

/// Product grid over (y, z); samples are stored with z contiguous.
struct Grid2D {
  Grid1D y;
  Grid1D z;

  std::size_t size() const { return y.points * z.points; }
  std::size_t index(std::size_t iy, std::size_t iz) const { return iy * z.points + iz; }
  double cell_area() const { return y.spacing() * z.spacing(); }
  bool is_interior(std::size_t iy, std::size_t iz) const { return y.is_interior(iy) && z.is_interior(iz); }

  bool operator==(const Grid2D&) const = default;
};

inline double cell_measure(const Grid1D& g) { return g.spacing(); }
inline double cell_measure(const Grid2D& g) { return g.cell_area(); }

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Complex samples of a wavefunction on a grid at one instant.
template <class G>
struct WaveField {
  G grid;
  std::vector<cplx> values;
  double time = 0.0;

  WaveField() = default;
  WaveField(G g, double t) : grid(std::move(g)), values(grid.size()), time(t) {}
  WaveField(G g, std::vector<cplx> v, double t) : grid(std::move(g)), values(std::move(v)), time(t) {
    if (values.size() != grid.size()) throw DomainError("sample count does not match grid");
    for (const cplx& c : values)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("non-finite sample");
  }

  std::size_t size() const { return values.size(); }
  cplx& operator[](std::size_t i) { return values[i]; }
  const cplx& operator[](std::size_t i) const { return values[i]; }
};

using Field1D = WaveField<Grid1D>;
using Field2D = WaveField<Grid2D>;

template <class G>
void require_same_grid(const WaveField<G>& a, const WaveField<G>& b) {
  if (!(a.grid == b.grid)) throw DomainError("fields live on different grids");
}

template <class G>
WaveField<G> operator+(WaveField<G> a, const WaveField<G>& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class G>
WaveField<G> operator-(WaveField<G> a, const WaveField<G>& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class G>
WaveField<G> operator*(cplx s, WaveField<G> a) {
  for (auto& v : a.values) v *= s;
  return a;
}

/// Times at which exp(iqEtx/ħ) is an exact Fourier mode of a periodic
/// grid of length L: t_k = 2πħk/(qEL).
inline double commensurate_time(int k, double hbar, double force, double length) {
  return 2.0 * std::numbers::pi * hbar * k / (force * length);
}

}  // namespace lrinv
