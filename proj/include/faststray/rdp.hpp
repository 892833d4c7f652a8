#pragma once

#include "faststray/trajectory.hpp"

namespace faststray {

/// Ramer-Douglas-Peucker baseline on the unfiltered input.
///
/// Splits at the point farthest (point-to-segment distance) from the chord
/// of the current range while that distance exceeds epsilon; ties go to the
/// lower index. Uses an explicit stack. `coefficients` holds, per point, the
/// deviation that decided it: the split distance for kept interior points,
/// the distance to the final enclosing chord for dropped ones, 0 at the
/// endpoints.
SimplifyResult rdp_simplify(const Trajectory& input, double epsilon);

/// Euclidean distance from p to the segment [a, b] (any dimension).
double point_segment_distance(std::span<const double> p,
                              std::span<const double> a,
                              std::span<const double> b) noexcept;

}  // namespace faststray
