#include "faststray/trajectory.hpp"

#include <cmath>

namespace faststray {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyTrajectory: return "EmptyTrajectory";
    case ErrorKind::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OutOfRangeCoordinate: return "OutOfRangeCoordinate";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(line ? message + " (line " + std::to_string(*line) + ")"
                              : message),
      kind_(kind),
      line_(line) {}

Trajectory validate_trajectory(std::size_t dim, std::vector<double> coords,
                               std::vector<double> times) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension must be 2 or 3, got " + std::to_string(dim));
  }
  if (coords.size() != dim * times.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "coordinate count does not match timestamps x dimension");
  }
  if (times.size() < 2) {
    throw Error(ErrorKind::EmptyTrajectory,
                "trajectory needs at least 2 samples, got " +
                    std::to_string(times.size()));
  }
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::NonFiniteValue, "non-finite coordinate");
    }
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) {
      throw Error(ErrorKind::NonFiniteValue,
                  "non-finite timestamp at sample " + std::to_string(i));
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw Error(ErrorKind::NonMonotonicTime,
                  "timestamp at sample " + std::to_string(i) +
                      " does not exceed its predecessor");
    }
  }
  return Trajectory(dim, std::move(coords), std::move(times));
}

Trajectory validate_trajectory(const std::vector<std::vector<double>>& points,
                               std::vector<double> times) {
  if (points.size() != times.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "point and timestamp counts differ");
  }
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  std::vector<double> coords;
  coords.reserve(points.size() * dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "point " + std::to_string(i) + " has dimension " +
                      std::to_string(points[i].size()) + ", expected " +
                      std::to_string(dim));
    }
    coords.insert(coords.end(), points[i].begin(), points[i].end());
  }
  if (points.size() < 2) {
    throw Error(ErrorKind::EmptyTrajectory,
                "trajectory needs at least 2 samples");
  }
  return validate_trajectory(dim, std::move(coords), std::move(times));
}

Trajectory Trajectory::subset(std::span<const std::size_t> indices) const {
  std::vector<double> coords;
  std::vector<double> times;
  coords.reserve(indices.size() * dim_);
  times.reserve(indices.size());
  for (std::size_t idx : indices) {
    const auto p = point(idx);
    coords.insert(coords.end(), p.begin(), p.end());
    times.push_back(times_[idx]);
  }
  return validate_trajectory(dim_, std::move(coords), std::move(times));
}

Trajectory Trajectory::with_coordinates(std::vector<double> coords) const {
  if (coords.size() != coords_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate count changed");
  }
  return Trajectory(dim_, std::move(coords), times_);
}

Trajectory Trajectory::rebased() const {
  std::vector<double> times(times_.size());
  const double t0 = times_.front();
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = times_[i] - t0;
  return validate_trajectory(dim_, coords_, std::move(times));
}

const char* to_string(CoefficientKind kind) noexcept {
  return kind == CoefficientKind::Correlation ? "correlation" : "direction";
}

CoefficientKind parse_coefficient_kind(const std::string& name) {
  if (name == "correlation") return CoefficientKind::Correlation;
  if (name == "direction") return CoefficientKind::Direction;
  throw Error(ErrorKind::InvalidParameter,
              "unknown coefficient kind '" + name + "'");
}

void validate(const SimplifyParams& params) {
  if (params.alpha < 0) {
    throw Error(ErrorKind::InvalidParameter, "alpha must be >= 0");
  }
  if (params.beta < 1) {
    throw Error(ErrorKind::InvalidParameter, "beta must be >= 1");
  }
  if (params.gamma < 1) {
    throw Error(ErrorKind::InvalidParameter, "gamma must be >= 1");
  }
}

std::vector<std::string> advisory_warnings(const SimplifyParams& params) {
  std::vector<std::string> out;
  auto check = [&](const char* name, int value) {
    if (value > 10) {
      out.push_back(std::string(name) + " = " + std::to_string(value) +
                    " is above the usual range [1, 10]");
    }
  };
  check("alpha", params.alpha);
  check("beta", params.beta);
  check("gamma", params.gamma);
  return out;
}

}  // namespace faststray
