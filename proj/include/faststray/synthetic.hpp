#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "faststray/io.hpp"
#include "faststray/trajectory.hpp"

namespace faststray::synthetic {

/// Smooth 3-D motion resembling tracked hand demonstrations: each axis is a
/// sum of a few random low-frequency sinusoids (C-infinity), sampled
/// uniformly, plus Gaussian measurement noise.
struct SmoothOptions {
  double sample_rate_hz = 30.0;
  double amplitude_m = 0.15;
  double min_frequency_hz = 0.05;
  double max_frequency_hz = 0.25;
  int harmonics = 3;
  double noise_sigma_m = 0.0005;
};

Trajectory smooth_trajectory(std::uint64_t seed, std::size_t n,
                             const SmoothOptions& options = {});

/// City-driving GPS track: straight streets joined by rounded turns,
/// varying speed, 1-3 s sampling, a few meters of position noise. Starts
/// near (39.9 N, 116.3 E).
struct GpsOptions {
  double noise_sigma_m = 2.0;
  double min_interval_s = 1.0;
  double max_interval_s = 3.0;
};

std::vector<GeoPoint> gps_track(std::uint64_t seed, std::size_t n,
                                const GpsOptions& options = {});

}  // namespace faststray::synthetic
