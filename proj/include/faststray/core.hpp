#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "faststray/trajectory.hpp"

namespace faststray {

/// Variance below which a coordinate is treated as constant over a window.
inline constexpr double kVarianceTolerance = 1e-12;
/// Lower clamp on the squared correlation, keeps 1/r^2 finite.
inline constexpr double kMinSquaredCorrelation = 1e-8;
/// Lower clamp on 1 + cos(v1, v2) for the direction coefficient.
inline constexpr double kMinDirectionDenominator = 1e-8;

/// Inclusive index range [lo, hi] of half-width h around `center`, clamped
/// to [0, n - 1].
struct NeighborhoodWindow {
  std::size_t center;
  std::size_t lo;
  std::size_t hi;

  std::size_t size() const noexcept { return hi - lo + 1; }
};

inline NeighborhoodWindow clamped_window(std::size_t center,
                                         std::size_t halfwidth,
                                         std::size_t n) noexcept {
  const std::size_t lo = center > halfwidth ? center - halfwidth : 0;
  const std::size_t hi = center + halfwidth < n - 1 ? center + halfwidth : n - 1;
  return {center, lo, hi};
}

// Pipeline kernels. The per-point loops run under OpenMP; results are
// bitwise identical to the serial:: reference versions.

/// Unweighted mean over the clamped window of half-width alpha. Timestamps
/// are copied unchanged; alpha == 0 returns the input.
Trajectory moving_average_filter(const Trajectory& input, int alpha);

/// Sum over coordinates of 1 / r_d^2, where r_d is the Pearson correlation
/// between coordinate d and time over the clamped window of half-width beta.
///
/// A coordinate with variance below kVarianceTolerance contributes 1;
/// r_d^2 is clamped to [kMinSquaredCorrelation, 1]. The result lies in
/// [D, D / kMinSquaredCorrelation]. Throws WindowTooSmall if the clamped
/// window holds fewer than 3 samples.
double correlation_coefficient(const Trajectory& filtered, int beta,
                               std::size_t index);

/// 1 / (1 + cos(v1, v2)) with v1 = p[i] - p[i-1], v2 = p[i+1] - p[i].
/// The denominator is clamped at kMinDirectionDenominator; a zero-length
/// segment counts as straight continuation (0.5). Endpoints score 0.
double direction_coefficient(const Trajectory& filtered, std::size_t index);

CoefficientSeries compute_coefficients(const Trajectory& filtered,
                                       const SimplifyParams& params);

/// Indices kept by non-maxima suppression: interior i survives iff
/// coefs[i] equals the maximum over its clamped gamma-window (ties are all
/// kept). Indices 0 and n - 1 are always present. Sorted ascending.
std::vector<std::size_t> nms_select(std::span<const double> coefs, int gamma);

SimplifyResult select_points(const Trajectory& filtered,
                             const CoefficientSeries& coefs, int gamma);

/// Filter, score and select. Linear in N for fixed parameters.
SimplifyResult simplify(const Trajectory& input, const SimplifyParams& params);

namespace serial {

// Single-threaded reference implementations, kept for tests and benchmarks.

Trajectory moving_average_filter(const Trajectory& input, int alpha);
CoefficientSeries compute_coefficients(const Trajectory& filtered,
                                       const SimplifyParams& params);
/// Sliding-window maximum with a monotone deque, O(n) independent of gamma.
std::vector<std::size_t> nms_select(std::span<const double> coefs, int gamma);
SimplifyResult simplify(const Trajectory& input, const SimplifyParams& params);

}  // namespace serial

}  // namespace faststray
