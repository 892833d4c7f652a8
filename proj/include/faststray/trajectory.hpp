#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "faststray/error.hpp"

namespace faststray {

/// Ordered (position, timestamp) samples of dimension 2 or 3.
///
/// Only obtainable through validate_trajectory() (or operations on an
/// existing Trajectory), so every instance satisfies:
///   * at least two samples,
///   * strictly increasing timestamps,
///   * finite coordinates, one dimension shared by all points.
///
/// Coordinates are stored row-major: point i occupies
/// coordinates()[i * dimension() .. (i + 1) * dimension()).
class Trajectory {
 public:
  std::size_t size() const noexcept { return times_.size(); }
  std::size_t dimension() const noexcept { return dim_; }

  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  double time(std::size_t i) const noexcept { return times_[i]; }

  std::span<const double> coordinates() const noexcept { return coords_; }
  std::span<const double> timestamps() const noexcept { return times_; }

  /// Samples at the given strictly increasing indices.
  Trajectory subset(std::span<const std::size_t> indices) const;

  /// Same timestamps, replaced coordinates (same dimension). The caller
  /// guarantees finiteness; used by kernels that derive new positions.
  Trajectory with_coordinates(std::vector<double> coords) const;

  /// Timestamps shifted so that the first sample is at t = 0.
  Trajectory rebased() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  friend Trajectory validate_trajectory(std::size_t, std::vector<double>,
                                        std::vector<double>);

  Trajectory(std::size_t dim, std::vector<double> coords,
             std::vector<double> times)
      : dim_(dim), coords_(std::move(coords)), times_(std::move(times)) {}

  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> times_;
};

/// Validates flat row-major coordinates of dimension `dim` against
/// `times`. Duplicate or decreasing timestamps are rejected, never merged.
Trajectory validate_trajectory(std::size_t dim, std::vector<double> coords,
                               std::vector<double> times);

/// Same as above for a list of position vectors.
Trajectory validate_trajectory(const std::vector<std::vector<double>>& points,
                               std::vector<double> times);

enum class CoefficientKind { Correlation, Direction };

const char* to_string(CoefficientKind kind) noexcept;
CoefficientKind parse_coefficient_kind(const std::string& name);

/// Neighborhood half-widths of the pipeline: moving-average filter (alpha),
/// correlation window (beta) and non-maxima suppression (gamma).
struct SimplifyParams {
  int alpha = 1;
  int beta = 2;
  int gamma = 2;
  CoefficientKind coefficient = CoefficientKind::Correlation;

  friend bool operator==(const SimplifyParams&,
                         const SimplifyParams&) = default;
};

/// Throws Error(InvalidParameter) unless alpha >= 0, beta >= 1, gamma >= 1.
void validate(const SimplifyParams& params);

/// Non-fatal notes: parameters above 10 usually over-simplify.
std::vector<std::string> advisory_warnings(const SimplifyParams& params);

/// Per-point information scores aligned with a filtered trajectory.
struct CoefficientSeries {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const noexcept { return values[i]; }
};

struct SimplifyResult {
  Trajectory simplified;
  std::vector<std::size_t> kept_indices;
  CoefficientSeries coefficients;
};

}  // namespace faststray
