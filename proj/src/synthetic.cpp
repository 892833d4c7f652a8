#include "faststray/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace faststray::synthetic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Trajectory smooth_trajectory(std::uint64_t seed, std::size_t n,
                             const SmoothOptions& options) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, options.noise_sigma_m);

  struct Harmonic {
    double amplitude, frequency, phase;
  };
  std::vector<Harmonic> harmonics;
  for (int axis = 0; axis < 3; ++axis) {
    for (int k = 0; k < options.harmonics; ++k) {
      const double f = options.min_frequency_hz +
                       (options.max_frequency_hz - options.min_frequency_hz) * unit(rng);
      harmonics.push_back({options.amplitude_m * (0.3 + 0.7 * unit(rng)) /
                               static_cast<double>(k + 1),
                           f, kTwoPi * unit(rng)});
    }
  }

  std::vector<double> coords(n * 3);
  std::vector<double> times(n);
  const std::size_t per_axis = static_cast<std::size_t>(options.harmonics);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / options.sample_rate_hz;
    times[i] = t;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      double value = 0.0;
      for (std::size_t k = 0; k < per_axis; ++k) {
        const auto& h = harmonics[axis * per_axis + k];
        value += h.amplitude * std::sin(kTwoPi * h.frequency * t + h.phase);
      }
      coords[i * 3 + axis] = value + noise(rng);
    }
  }
  return validate_trajectory(3, std::move(coords), std::move(times));
}

std::vector<GeoPoint> gps_track(std::uint64_t seed, std::size_t n,
                                const GpsOptions& options) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, options.noise_sigma_m);

  // Piecewise path: straight legs joined by circular turns. Each leg has a
  // cruise speed; turns are driven slower and sometimes preceded by a stop.
  struct Piece {
    double length;
    double curvature;  // signed 1/radius, 0 for straight
    double speed;
    double stop_seconds;
  };

  double x = 0.0;
  double y = 0.0;
  double heading = kTwoPi * unit(rng);
  double t = 0.0;
  std::vector<GeoPoint> out;
  out.reserve(n);

  const double lat0 = 39.9;
  const double lon0 = 116.3;
  const double m_lat = kMetersPerDegree;
  const double m_lon = kMetersPerDegree * std::cos(lat0 * std::numbers::pi / 180.0);

  auto next_piece = [&, straight = false]() mutable {
    straight = !straight;
    if (straight) {
      return Piece{150.0 + 650.0 * unit(rng), 0.0, 6.0 + 8.0 * unit(rng), 0.0};
    }
    const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
    const double angle = unit(rng) < 0.75
                             ? std::numbers::pi / 2.0
                             : (20.0 + 40.0 * unit(rng)) * std::numbers::pi / 180.0;
    const double radius = 12.0 + 10.0 * unit(rng);
    const double stop = unit(rng) < 0.3 ? 10.0 + 30.0 * unit(rng) : 0.0;
    return Piece{angle * radius, sign / radius, 4.0 + 2.0 * unit(rng), stop};
  };

  Piece piece = next_piece();
  double along = 0.0;
  double wait = 0.0;
  while (out.size() < n) {
    out.push_back({lat0 + (y + noise(rng)) / m_lat, lon0 + (x + noise(rng)) / m_lon,
                   50.0, t});
    double dt = options.min_interval_s +
                (options.max_interval_s - options.min_interval_s) * unit(rng);
    t += dt;
    // Advance along the path for dt seconds, crossing pieces as needed.
    while (dt > 0.0) {
      if (wait > 0.0) {
        const double w = std::min(wait, dt);
        wait -= w;
        dt -= w;
        continue;
      }
      const double remaining = piece.length - along;
      const double step = std::min(remaining, piece.speed * dt);
      if (piece.curvature == 0.0) {
        x += step * std::cos(heading);
        y += step * std::sin(heading);
      } else {
        // Exact arc update.
        const double turn = step * piece.curvature;
        const double r = 1.0 / piece.curvature;
        x += r * (std::sin(heading + turn) - std::sin(heading));
        y -= r * (std::cos(heading + turn) - std::cos(heading));
        heading += turn;
      }
      along += step;
      dt -= step / piece.speed;
      if (along >= piece.length) {
        piece = next_piece();
        along = 0.0;
        wait = piece.stop_seconds;
      }
    }
  }
  return out;
}

}  // namespace faststray::synthetic
