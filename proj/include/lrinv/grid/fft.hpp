#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include <fftw3.h>

#include "lrinv/error.hpp"
#include "lrinv/grid/grid.hpp"

namespace lrinv::fft {

enum class Direction { forward, backward };

/// Batched transforms along one axis of a row-major (rows × cols) array.
/// axis 0 transforms each column (length rows), axis 1 each row.
class AxisPlan {
 public:
  AxisPlan(std::size_t rows, std::size_t cols, int axis, Direction dir) {
    const bool along_rows = axis == 1;
    const int n = static_cast<int>(along_rows ? cols : rows);
    const int howmany = static_cast<int>(along_rows ? rows : cols);
    const int stride = along_rows ? 1 : static_cast<int>(cols);
    const int dist = along_rows ? static_cast<int>(cols) : 1;
    std::vector<std::complex<double>> scratch(rows * cols);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    plan_ = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, stride, dist, buf, nullptr, stride, dist,
                               dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw DomainError("FFT planning failed");
  }
  AxisPlan(const AxisPlan&) = delete;
  AxisPlan& operator=(const AxisPlan&) = delete;
  ~AxisPlan() { fftw_destroy_plan(plan_); }

  /// In place; unnormalized.
  void execute(std::complex<double>* data) const {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan_, p, p);
  }

 private:
  fftw_plan plan_;
};

/// Plans are built once per shape and reused. The FFTW planner is not
/// reentrant, so plan creation is serialized; execution is not.
inline const AxisPlan& plan_for(std::size_t rows, std::size_t cols, int axis, Direction dir) {
  using Key = std::tuple<std::size_t, std::size_t, int, Direction>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<AxisPlan>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[Key{rows, cols, axis, dir}];
  if (!slot) slot = std::make_unique<AxisPlan>(rows, cols, axis, dir);
  return *slot;
}

/// Transforms along `axis` of a rows × cols array; the backward transform
/// is divided by the transform length so the pair is an identity.
inline void transform(std::vector<std::complex<double>>& data, std::size_t rows, std::size_t cols, int axis,
                      Direction dir) {
  const std::size_t n = axis == 1 ? cols : rows;
  if (!is_power_of_two(n)) throw DomainError("transform axis length must be a power of two");
  if (data.size() != rows * cols) throw DomainError("transform shape does not match data");
  plan_for(rows, cols, axis, dir).execute(data.data());
  if (dir == Direction::backward) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : data) v *= scale;
  }
}

/// Angular wavenumbers in FFT order: 2π/L · (0, 1, .., N/2-1, -N/2, .., -1).
inline std::vector<double> wavenumbers(const Grid1D& g) {
  std::vector<double> k(g.points);
  const long n = static_cast<long>(g.points);
  for (long j = 0; j < n; ++j) k[j] = 2.0 * std::numbers::pi / g.length * static_cast<double>(j < n / 2 ? j : j - n);
  return k;
}

}  // namespace lrinv::fft
