#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "lrinv/grid/grid.hpp"

namespace lrinv {

/// Pairwise (cascade) summation: fixed association order, O(log n) error growth.
template <class T>
T pairwise_sum(std::span<const T> v) {
  constexpr std::size_t block = 32;
  if (v.size() <= block) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

/// Riemann sum of conj(a)·b over the grid.
template <class G>
cplx inner_product(const WaveField<G>& a, const WaveField<G>& b) {
  require_same_grid(a, b);
  std::vector<cplx> terms(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) terms[i] = std::conj(a[i]) * b[i];
  return pairwise_sum(terms) * cell_measure(a.grid);
}

/// L² norm, sqrt(Σ|f|² ΔV).
template <class G>
double norm(const WaveField<G>& f) {
  std::vector<double> terms(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) terms[i] = std::norm(f[i]);
  return std::sqrt(pairwise_sum(terms) * cell_measure(f.grid));
}

inline bool interior_at(const Grid1D& g, std::size_t i) { return g.is_interior(i); }
inline bool interior_at(const Grid2D& g, std::size_t i) {
  return g.is_interior(i / g.z.points, i % g.z.points);
}

/// L² norm restricted to the interior (the whole grid when periodic).
template <class G>
double interior_norm(const WaveField<G>& f) {
  std::vector<double> terms;
  terms.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (interior_at(f.grid, i)) terms.push_back(std::norm(f[i]));
  return std::sqrt(pairwise_sum(terms) * cell_measure(f.grid));
}

/// Interior inner product, matching interior_norm.
template <class G>
cplx interior_inner_product(const WaveField<G>& a, const WaveField<G>& b) {
  require_same_grid(a, b);
  std::vector<cplx> terms;
  terms.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (interior_at(a.grid, i)) terms.push_back(std::conj(a[i]) * b[i]);
  return pairwise_sum(terms) * cell_measure(a.grid);
}

}  // namespace lrinv
