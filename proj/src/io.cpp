#include "faststray/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace faststray {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> to_double(std::string_view field) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::size_t to_index(std::string_view field) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::InvalidParameter,
                "column index '" + std::string(field) + "' is not a non-negative integer");
  }
  return value;
}

// Howard Hinnant's days_from_civil inverse; z counts days since 1970-01-01.
void civil_from_days(long long z, int& year, unsigned& month, unsigned& day) {
  z += 719468;
  const long long era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = doy - (153 * mp + 2) / 5 + 1;
  month = mp < 10 ? mp + 3 : mp - 9;
  year = static_cast<int>(yoe + era * 400) + (month <= 2 ? 1 : 0);
}

// Day 0 of the PLT day count is 1899-12-30.
constexpr long long kPltEpochToUnixDays = 25569;

void write_number_array(std::ostream& out, std::span<const double> values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << format_number(values[i]);
  }
  out << ']';
}

void write_point_rows(std::ostream& out, std::span<const double> flat,
                      std::size_t dim, const char* indent) {
  out << '[';
  const std::size_t rows = dim ? flat.size() / dim : 0;
  for (std::size_t i = 0; i < rows; ++i) {
    out << (i ? ",\n" : "\n") << indent;
    write_number_array(out, flat.subspan(i * dim, dim));
  }
  if (rows) out << '\n' << std::string_view(indent).substr(2);
  out << ']';
}

}  // namespace

ColumnSpec parse_column_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(trim(text.substr(start, colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw Error(ErrorKind::InvalidParameter,
                "column spec must be t:x:y or t:x:y:z, got '" +
                    std::string(text) + "'");
  }
  ColumnSpec spec;
  spec.t = to_index(parts[0]);
  spec.x = to_index(parts[1]);
  spec.y = to_index(parts[2]);
  if (parts.size() == 4) spec.z = to_index(parts[3]);
  return spec;
}

Trajectory parse_csv(std::istream& in, const CsvOptions& options) {
  struct Row {
    std::size_t line;
    std::vector<double> fields;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = options.has_header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    Row row{line_no, {}};
    for (auto field : split_fields(line)) {
      const auto value = to_double(field);
      if (!value) {
        throw Error(ErrorKind::ParseError,
                    "field '" + std::string(field) + "' is not a number",
                    line_no);
      }
      row.fields.push_back(*value);
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw Error(ErrorKind::IoError, "failed reading CSV input");

  const auto& cols = options.columns;
  const std::size_t dim = cols.z ? 3 : 2;
  std::vector<double> coords;
  std::vector<double> times;
  coords.reserve(rows.size() * dim);
  times.reserve(rows.size());
  for (const auto& row : rows) {
    auto get = [&](std::size_t col) {
      if (col >= row.fields.size()) {
        throw Error(ErrorKind::ParseError,
                    "record has no column " + std::to_string(col), row.line);
      }
      return row.fields[col];
    };
    times.push_back(get(cols.t));
    coords.push_back(get(cols.x));
    coords.push_back(get(cols.y));
    if (cols.z) coords.push_back(get(*cols.z));
  }
  if (!times.empty()) {
    const double t0 = times.front();
    for (double& t : times) t -= t0;
  }
  return validate_trajectory(dim, std::move(coords), std::move(times));
}

Trajectory parse_csv(std::string_view text, const CsvOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_csv(in, options);
}

void write_csv(std::ostream& out, const Trajectory& trajectory) {
  char buf[32];
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", trajectory.time(i));
    out << buf;
    for (double c : trajectory.point(i)) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out << ',' << buf;
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorKind::IoError, "failed writing CSV output");
}

std::vector<GeoPoint> parse_plt(std::istream& in) {
  constexpr std::size_t kHeaderLines = 6;
  std::vector<GeoPoint> points;
  std::vector<double> days;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no <= kHeaderLines || trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() < 5) {
      throw Error(ErrorKind::ParseError,
                  "PLT record needs lat,lon,0,altitude,days[,date,time]",
                  line_no);
    }
    auto number = [&](std::size_t idx, const char* what) {
      const auto value = to_double(fields[idx]);
      if (!value || !std::isfinite(*value)) {
        throw Error(ErrorKind::ParseError,
                    std::string("invalid ") + what + " '" +
                        std::string(fields[idx]) + "'",
                    line_no);
      }
      return *value;
    };
    GeoPoint p;
    p.latitude = number(0, "latitude");
    p.longitude = number(1, "longitude");
    p.altitude = number(3, "altitude");
    const double day = number(4, "day count");
    if (p.latitude < -90.0 || p.latitude > 90.0 || p.longitude < -180.0 ||
        p.longitude > 180.0) {
      throw Error(ErrorKind::OutOfRangeCoordinate,
                  "coordinate out of range", line_no);
    }
    points.push_back(p);
    days.push_back(day);
  }
  if (in.bad()) throw Error(ErrorKind::IoError, "failed reading PLT input");
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].timestamp = (days[i] - days.front()) * 86400.0;
  }
  return points;
}

std::vector<GeoPoint> parse_plt(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_plt(in);
}

void write_plt(std::ostream& out, std::span<const GeoPoint> points,
               double base_days) {
  out << "Geolife trajectory\nWGS 84\nAltitude is in Feet\nReserved 3\n"
         "0,2,255,My Track,0,0,2,8421376\n0\n";
  char buf[160];
  for (const auto& p : points) {
    const double day = base_days + p.timestamp / 86400.0;
    const double whole = std::floor(day);
    auto secs = static_cast<long long>(std::llround((day - whole) * 86400.0));
    auto day_index = static_cast<long long>(whole);
    if (secs >= 86400) {
      secs -= 86400;
      ++day_index;
    }
    int year = 0;
    unsigned month = 0;
    unsigned dom = 0;
    civil_from_days(day_index - kPltEpochToUnixDays, year, month, dom);
    std::snprintf(buf, sizeof buf,
                  "%.6f,%.6f,0,%.0f,%.10f,%04d-%02u-%02u,%02lld:%02lld:%02lld\n",
                  p.latitude, p.longitude, p.altitude.value_or(-777.0), day,
                  year, month, dom, secs / 3600, (secs / 60) % 60, secs % 60);
    out << buf;
  }
  if (!out) throw Error(ErrorKind::IoError, "failed writing PLT output");
}

std::vector<GeoPoint> drop_repeated_timestamps(std::span<const GeoPoint> points) {
  std::vector<GeoPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (out.empty() || p.timestamp > out.back().timestamp) out.push_back(p);
  }
  return out;
}

LocalProjection make_local_projection(const GeoPoint& origin) {
  LocalProjection proj;
  proj.origin_latitude = origin.latitude;
  proj.origin_longitude = origin.longitude;
  proj.meters_per_degree_lat = kMetersPerDegree;
  proj.meters_per_degree_lon =
      kMetersPerDegree * std::cos(origin.latitude * std::numbers::pi / 180.0);
  return proj;
}

Trajectory project_to_local(std::span<const GeoPoint> geo) {
  if (geo.empty()) {
    throw Error(ErrorKind::EmptyTrajectory, "no GPS points to project");
  }
  const auto proj = make_local_projection(geo.front());
  std::vector<double> coords;
  std::vector<double> times;
  coords.reserve(geo.size() * 2);
  times.reserve(geo.size());
  for (const auto& p : geo) {
    coords.push_back((p.longitude - proj.origin_longitude) *
                     proj.meters_per_degree_lon);
    coords.push_back((p.latitude - proj.origin_latitude) *
                     proj.meters_per_degree_lat);
    times.push_back(p.timestamp);
  }
  return validate_trajectory(2, std::move(coords), std::move(times));
}

double haversine_distance(const GeoPoint& a, const GeoPoint& b) {
  constexpr double kEarthRadius = 6371008.8;
  constexpr double kRad = std::numbers::pi / 180.0;
  const double dlat = (b.latitude - a.latitude) * kRad;
  const double dlon = (b.longitude - a.longitude) * kRad;
  const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a.latitude * kRad) * std::cos(b.latitude * kRad) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadius * std::asin(std::min(1.0, std::sqrt(s)));
}

void write_result(std::ostream& out, const SimplifyResult& result,
                  const SplineSamples* samples, const EvaluationReport& report) {
  const auto& traj = result.simplified;
  const auto& p = report.params;
  out << "{\n"
      << "  \"format\": \"faststray-result\",\n"
      << "  \"version\": 1,\n"
      << "  \"parameters\": {\"alpha\": " << p.alpha << ", \"beta\": " << p.beta
      << ", \"gamma\": " << p.gamma << ", \"coefficient\": \""
      << to_string(p.coefficient) << "\"},\n"
      << "  \"metrics\": {\n"
      << "    \"original_count\": " << report.original_count << ",\n"
      << "    \"simplified_count\": " << report.simplified_count << ",\n"
      << "    \"reduction_percent\": " << format_number(report.reduction_percent) << ",\n"
      << "    \"synchronous_error\": " << format_number(report.synchronous_error) << ",\n"
      << "    \"relative_error_percent\": "
      << format_number(report.relative_error_percent) << ",\n"
      << "    \"diameter_approximate\": "
      << (report.diameter_approximate ? "true" : "false") << ",\n"
      << "    \"simplify_seconds\": " << format_number(report.simplify_seconds) << ",\n"
      << "    \"spline_seconds\": " << format_number(report.spline_seconds) << "\n"
      << "  },\n"
      << "  \"dimension\": " << traj.dimension() << ",\n"
      << "  \"kept_indices\": [";
  for (std::size_t i = 0; i < result.kept_indices.size(); ++i) {
    out << (i ? ", " : "") << result.kept_indices[i];
  }
  out << "],\n  \"kept_times\": ";
  write_number_array(out, traj.timestamps());
  out << ",\n  \"kept_points\": ";
  write_point_rows(out, traj.coordinates(), traj.dimension(), "    ");
  if (samples && !samples->empty()) {
    out << ",\n  \"samples\": {\n    \"times\": ";
    write_number_array(out, samples->times);
    out << ",\n    \"positions\": ";
    write_point_rows(out, samples->positions, samples->dimension, "      ");
    out << "\n  }";
  }
  out << "\n}\n";
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing result document");
}

void write_plot_data(std::ostream& out, const Trajectory& original,
                     const CubicSpline& spline) {
  static constexpr const char* kAxes[] = {"x", "y", "z"};
  const std::size_t dim = original.dimension();
  out << "# t";
  for (std::size_t d = 0; d < dim; ++d) out << ' ' << kAxes[d];
  for (std::size_t d = 0; d < dim; ++d) out << " spline_" << kAxes[d];
  out << '\n';
  const auto fitted = spline.evaluate_batch(original.timestamps());
  for (std::size_t i = 0; i < original.size(); ++i) {
    out << format_number(original.time(i));
    for (double c : original.point(i)) out << ' ' << format_number(c);
    for (std::size_t d = 0; d < dim; ++d) {
      out << ' ' << format_number(fitted[i * dim + d]);
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing plot data");
}

}  // namespace faststray
