#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "faststray/trajectory.hpp"

namespace faststray {

/// Tridiagonal system A x = rhs. Row i reads
///   sub[i-1] * x[i-1] + diag[i] * x[i] + super[i] * x[i+1] = rhs[i].
struct TridiagonalSystem {
  std::vector<double> sub;    // M - 1
  std::vector<double> diag;   // M
  std::vector<double> super;  // M - 1
  std::vector<double> rhs;    // M
};

/// Thomas algorithm, O(M). Throws SingularSystem when a pivot's magnitude
/// drops below 1e-14, InvalidParameter on inconsistent sizes.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

/// Natural cubic spline through M >= 2 knots, one piecewise cubic per
/// dimension. Segment k covers [knots[k], knots[k+1]] and is stored as
///   a + b s + c s^2 + d s^3,  s = t - knots[k].
class CubicSpline {
 public:
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t segment_count() const noexcept { return knots_.size() - 1; }
  std::span<const double> knots() const noexcept { return knots_; }

  /// {a, b, c, d} of segment k in dimension d.
  std::array<double, 4> segment(std::size_t d, std::size_t k) const noexcept;

  /// Segment used for time t: binary search, clamped to the first/last
  /// segment outside the knot range.
  std::size_t segment_index(double t) const noexcept;

  /// Value (order 0) or derivative (order 1..3) of segment k's polynomial
  /// in dimension d at time t, without any segment lookup.
  double segment_value(std::size_t d, std::size_t k, double t,
                       int order = 0) const noexcept;

  std::vector<double> evaluate(double t) const;
  void evaluate_into(double t, std::span<double> out) const noexcept;

  /// Pointwise evaluate() over ascending `times` using a merged sweep,
  /// O(|times| + M). Row-major result: times.size() * dimension().
  std::vector<double> evaluate_batch(std::span<const double> times) const;

 private:
  friend CubicSpline fit_spline(const Trajectory& kept);

  CubicSpline(std::size_t dim, std::vector<double> knots,
              std::vector<double> coeffs)
      : dim_(dim), knots_(std::move(knots)), coeffs_(std::move(coeffs)) {}

  void eval_segment(std::size_t k, double t, std::span<double> out) const noexcept;

  std::size_t dim_;
  std::vector<double> knots_;
  // [(d * segment_count() + k) * 4 + j]
  std::vector<double> coeffs_;
};

/// Fits the natural cubic spline through the kept samples. The second
/// derivatives at the knots are the solution of an M x M tridiagonal
/// system (end rows pin them to zero), solved with solve_tridiagonal().
CubicSpline fit_spline(const Trajectory& kept);

/// Dense samples for plotting: `count` uniform times spanning the knots.
struct SplineSamples {
  std::vector<double> times;
  std::vector<double> positions;  // row-major, times.size() * dimension
  std::size_t dimension = 0;

  bool empty() const noexcept { return times.empty(); }
};

SplineSamples sample_uniform(const CubicSpline& spline, std::size_t count);

}  // namespace faststray
