#pragma once

// Per-point kernels shared by the OpenMP and serial drivers. Each output
// element is computed by exactly one call with a fixed summation order,
// which is what makes the two drivers bitwise identical.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>

#include "faststray/core.hpp"

namespace faststray::detail {

// Small inputs skip libgomp entirely; even a one-thread team costs
// about as much as the loop body on a few hundred points.
inline constexpr std::int64_t kParallelMin = 2048;

template <typename Body>
void parallel_for(std::int64_t begin, std::int64_t end, Body&& body) {
  if (end - begin < kParallelMin) {
    for (std::int64_t i = begin; i < end; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = begin; i < end; ++i) body(static_cast<std::size_t>(i));
}

inline void window_mean(const Trajectory& in, std::size_t i, std::size_t alpha,
                        std::span<double> out) noexcept {
  const auto w = clamped_window(i, alpha, in.size());
  const std::size_t dim = in.dimension();
  for (std::size_t d = 0; d < dim; ++d) {
    double sum = 0.0;
    for (std::size_t j = w.lo; j <= w.hi; ++j) sum += in.point(j)[d];
    out[d] = sum / static_cast<double>(w.size());
  }
}

// Caller guarantees the window holds >= 3 samples.
inline double correlation_score(const Trajectory& tr,
                                const NeighborhoodWindow& w) noexcept {
  const double n = static_cast<double>(w.size());
  const auto times = tr.timestamps();

  double t_mean = 0.0;
  for (std::size_t j = w.lo; j <= w.hi; ++j) t_mean += times[j];
  t_mean /= n;
  double stt = 0.0;
  for (std::size_t j = w.lo; j <= w.hi; ++j) {
    const double dt = times[j] - t_mean;
    stt += dt * dt;
  }

  double score = 0.0;
  for (std::size_t d = 0; d < tr.dimension(); ++d) {
    double a_mean = 0.0;
    for (std::size_t j = w.lo; j <= w.hi; ++j) a_mean += tr.point(j)[d];
    a_mean /= n;
    double saa = 0.0;
    double sat = 0.0;
    for (std::size_t j = w.lo; j <= w.hi; ++j) {
      const double da = tr.point(j)[d] - a_mean;
      saa += da * da;
      sat += da * (times[j] - t_mean);
    }
    double r2 = 1.0;
    if (saa / n >= kVarianceTolerance) {
      r2 = (sat * sat) / (saa * stt);
      r2 = std::clamp(r2, kMinSquaredCorrelation, 1.0);
    }
    score += 1.0 / r2;
  }
  return score;
}

inline double direction_score(const Trajectory& tr, std::size_t i) noexcept {
  if (i == 0 || i + 1 >= tr.size()) return 0.0;
  const auto prev = tr.point(i - 1);
  const auto cur = tr.point(i);
  const auto next = tr.point(i + 1);
  double dot = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  for (std::size_t d = 0; d < tr.dimension(); ++d) {
    const double v1 = cur[d] - prev[d];
    const double v2 = next[d] - cur[d];
    dot += v1 * v2;
    n1 += v1 * v1;
    n2 += v2 * v2;
  }
  double cosine = 1.0;
  if (n1 > 0.0 && n2 > 0.0) cosine = dot / (std::sqrt(n1) * std::sqrt(n2));
  return 1.0 / std::max(1.0 + cosine, kMinDirectionDenominator);
}

inline bool is_window_max(std::span<const double> coefs, std::size_t i,
                          std::size_t gamma) noexcept {
  const auto w = clamped_window(i, gamma, coefs.size());
  double best = coefs[w.lo];
  for (std::size_t j = w.lo + 1; j <= w.hi; ++j) best = std::max(best, coefs[j]);
  return coefs[i] == best;
}

inline void require_correlation_window(std::size_t n, std::size_t beta) {
  // Smallest clamped window is at the endpoints: min(n, beta + 1) samples.
  if (std::min(n, beta + 1) < 3) {
    throw Error(ErrorKind::WindowTooSmall,
                "correlation window needs at least 3 samples (n = " +
                    std::to_string(n) + ", beta = " + std::to_string(beta) + ")");
  }
}

}  // namespace faststray::detail
