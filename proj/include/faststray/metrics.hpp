#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <span>
#include <vector>

#include "faststray/spline.hpp"
#include "faststray/trajectory.hpp"

namespace faststray {

/// Above this many points the diameter falls back to the bounding-box
/// diagonal and the report is flagged approximate.
inline constexpr std::size_t kExactDiameterLimit = 20000;

struct EvaluationReport {
  SimplifyParams params;
  std::size_t original_count = 0;
  std::size_t simplified_count = 0;
  double reduction_percent = 0.0;
  double synchronous_error = 0.0;
  double relative_error_percent = 0.0;
  bool diameter_approximate = false;
  double simplify_seconds = 0.0;  // filter + coefficients + selection
  double spline_seconds = 0.0;    // spline fit only
};

/// Mean over all original samples of ||P[i] - spline(t_i)||.
double synchronous_error(const Trajectory& original, const CubicSpline& spline);

/// 100 * (1 - simplified / original).
double reduction_percent(std::size_t original_count,
                         std::size_t simplified_count);

struct Diameter {
  double value = 0.0;
  bool approximate = false;
};

/// Largest pairwise distance. Exact O(N^2) scan (OpenMP, stops early once
/// the bounding-box diagonal is reached) up to kExactDiameterLimit points,
/// the bounding-box diagonal beyond that.
Diameter trajectory_diameter(const Trajectory& trajectory);

/// 100 * error / diameter; 0 when all points coincide.
double relative_error_percent(const Trajectory& original, double error);
double relative_error_percent(const Diameter& diameter, double error);

/// Everything produced by one end-to-end run.
struct PipelineRun {
  SimplifyResult result;
  CubicSpline spline;
  EvaluationReport report;
};

PipelineRun run_pipeline(const Trajectory& input, const SimplifyParams& params);

/// One report per gamma, in the order given; other parameters fixed.
std::vector<EvaluationReport> sweep_gamma(const Trajectory& input,
                                          SimplifyParams params,
                                          std::span<const int> gammas);

/// RDP evaluated on the same metrics: a natural spline is fitted through
/// the RDP-kept input points.
struct BaselineReport {
  double epsilon = 0.0;
  std::size_t simplified_count = 0;
  double reduction_percent = 0.0;
  double synchronous_error = 0.0;
  double relative_error_percent = 0.0;
  double seconds = 0.0;
};

BaselineReport evaluate_rdp(const Trajectory& input, double epsilon);

/// Comma-separated sweep table with a fixed header row; see docs/formats.md.
void write_sweep_table(std::ostream& out,
                       std::span<const EvaluationReport> reports,
                       const std::optional<BaselineReport>& baseline);

/// Seconds per simplify() call: calls are batched until a batch takes at
/// least 20 ms, and the fastest of `repeats` batches is reported.
double time_simplify(const Trajectory& input, const SimplifyParams& params,
                     int repeats);

struct ScalingSample {
  std::size_t n = 0;
  double seconds = 0.0;
};

/// time_simplify() over several inputs, interleaved: `repeats` rounds each
/// time every input once and the fastest round per input is kept, so a
/// stretch of machine noise lands on all sizes rather than one.
std::vector<ScalingSample> measure_scaling(std::span<const Trajectory> inputs,
                                           const SimplifyParams& params,
                                           int repeats);

/// Least-squares slope of log(seconds) against log(n). Needs >= 2 samples
/// with distinct n and positive times.
double growth_exponent(std::span<const ScalingSample> samples);

/// "%.9g" rendering used by every text output of the library.
std::string format_number(double value);

}  // namespace faststray
