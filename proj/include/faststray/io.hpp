#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faststray/metrics.hpp"
#include "faststray/spline.hpp"
#include "faststray/trajectory.hpp"

namespace faststray {

/// Zero-based CSV column indices. Without z the trajectory is planar.
struct ColumnSpec {
  std::size_t t = 0;
  std::size_t x = 1;
  std::size_t y = 2;
  std::optional<std::size_t> z;
};

/// Parses "t:x:y" or "t:x:y:z" (column indices), e.g. "0:1:2:3".
ColumnSpec parse_column_spec(std::string_view text);

struct CsvOptions {
  ColumnSpec columns;
  bool has_header = false;
};

/// Comma-separated numeric records; blank lines are skipped. Every field
/// of every record is converted first (ParseError names the first bad
/// line), then columns are mapped. Timestamps are rebased to start at 0.
Trajectory parse_csv(std::istream& in, const CsvOptions& options);
Trajectory parse_csv(std::string_view text, const CsvOptions& options);

/// Writes "t,x,y[,z]" rows with 17 significant digits (no header).
void write_csv(std::ostream& out, const Trajectory& trajectory);

struct GeoPoint {
  double latitude = 0.0;   // degrees
  double longitude = 0.0;  // degrees
  std::optional<double> altitude;  // meters
  double timestamp = 0.0;  // seconds
};

/// GeoLife PLT: 6 header lines, then "lat,lon,0,alt_ft,days,date,time".
/// Timestamps come from the fractional-day field, rebased to 0 at the
/// first record. Altitude is read as given (-777 is kept, not interpreted).
std::vector<GeoPoint> parse_plt(std::istream& in);
std::vector<GeoPoint> parse_plt(std::string_view text);

/// Writes a PLT file in GeoLife layout; `base_days` is the day number of
/// t = 0.
void write_plt(std::ostream& out, std::span<const GeoPoint> points,
               double base_days = 39882.0);

/// Drops every record whose timestamp does not exceed its predecessor's.
std::vector<GeoPoint> drop_repeated_timestamps(std::span<const GeoPoint> points);

inline constexpr double kMetersPerDegree = 111320.0;

struct LocalProjection {
  double origin_latitude = 0.0;
  double origin_longitude = 0.0;
  double meters_per_degree_lat = kMetersPerDegree;
  double meters_per_degree_lon = kMetersPerDegree;
};

LocalProjection make_local_projection(const GeoPoint& origin);

/// Equirectangular projection about the first point into a planar
/// trajectory in meters. Timestamps are kept exactly.
Trajectory project_to_local(std::span<const GeoPoint> geo);

/// Great-circle distance in meters (mean Earth radius 6371008.8 m).
double haversine_distance(const GeoPoint& a, const GeoPoint& b);

/// JSON result document; layout in docs/formats.md. Samples are omitted
/// when `samples` is null or empty. Throws IoError if the stream fails.
void write_result(std::ostream& out, const SimplifyResult& result,
                  const SplineSamples* samples, const EvaluationReport& report);

/// Columnar overlay: "t x.. spline_x.." at every original timestamp.
void write_plot_data(std::ostream& out, const Trajectory& original,
                     const CubicSpline& spline);

}  // namespace faststray
