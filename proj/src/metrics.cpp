#include "faststray/metrics.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>

#include "faststray/core.hpp"
#include "faststray/rdp.hpp"

namespace faststray {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

double synchronous_error(const Trajectory& original, const CubicSpline& spline) {
  if (spline.dimension() != original.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "spline and trajectory dimensions differ");
  }
  const auto fitted = spline.evaluate_batch(original.timestamps());
  const std::size_t dim = original.dimension();
  double total = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    total += std::sqrt(squared_distance(original.point(i),
                                        {fitted.data() + i * dim, dim}));
  }
  return total / static_cast<double>(original.size());
}

double reduction_percent(std::size_t original_count,
                         std::size_t simplified_count) {
  if (original_count == 0 || simplified_count > original_count) {
    throw Error(ErrorKind::InvalidParameter,
                "simplified count must not exceed a nonzero original count");
  }
  return 100.0 * (1.0 - static_cast<double>(simplified_count) /
                            static_cast<double>(original_count));
}

Diameter trajectory_diameter(const Trajectory& trajectory) {
  const std::size_t n = trajectory.size();
  const std::size_t dim = trajectory.dimension();
  std::vector<double> lo(trajectory.point(0).begin(), trajectory.point(0).end());
  std::vector<double> hi = lo;
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = trajectory.point(i);
    for (std::size_t d = 0; d < dim; ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  }
  // No pair can be farther apart than the box corners; a pair reaching the
  // box diagonal reproduces it bit for bit, so stopping there is exact.
  const double box2 = squared_distance(lo, hi);
  if (n > kExactDiameterLimit) return {std::sqrt(box2), true};

  double best = 0.0;
  std::atomic<bool> reached{false};
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) reduction(max : best)
  for (std::int64_t i = 0; i < count; ++i) {
    if (reached.load(std::memory_order_relaxed)) continue;
    const auto p = trajectory.point(static_cast<std::size_t>(i));
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
      best = std::max(best, squared_distance(p, trajectory.point(j)));
    }
    if (best >= box2) reached.store(true, std::memory_order_relaxed);
  }
  return {std::sqrt(best), false};
}

double relative_error_percent(const Diameter& diameter, double error) {
  if (diameter.value <= 0.0) return 0.0;
  return 100.0 * error / diameter.value;
}

double relative_error_percent(const Trajectory& original, double error) {
  return relative_error_percent(trajectory_diameter(original), error);
}

namespace {

PipelineRun run_with_diameter(const Trajectory& input,
                              const SimplifyParams& params,
                              const Diameter& diameter) {
  auto start = Clock::now();
  auto result = simplify(input, params);
  const double simplify_seconds = seconds_since(start);

  start = Clock::now();
  auto spline = fit_spline(result.simplified);
  const double spline_seconds = seconds_since(start);

  EvaluationReport report;
  report.params = params;
  report.original_count = input.size();
  report.simplified_count = result.simplified.size();
  report.reduction_percent =
      reduction_percent(report.original_count, report.simplified_count);
  report.synchronous_error = synchronous_error(input, spline);
  report.relative_error_percent =
      relative_error_percent(diameter, report.synchronous_error);
  report.diameter_approximate = diameter.approximate;
  report.simplify_seconds = simplify_seconds;
  report.spline_seconds = spline_seconds;
  return {std::move(result), std::move(spline), report};
}

}  // namespace

PipelineRun run_pipeline(const Trajectory& input, const SimplifyParams& params) {
  validate(params);
  return run_with_diameter(input, params, trajectory_diameter(input));
}

std::vector<EvaluationReport> sweep_gamma(const Trajectory& input,
                                          SimplifyParams params,
                                          std::span<const int> gammas) {
  if (gammas.empty()) {
    throw Error(ErrorKind::InvalidParameter, "gamma list is empty");
  }
  for (int g : gammas) {
    params.gamma = g;
    validate(params);
  }
  const auto diameter = trajectory_diameter(input);
  std::vector<EvaluationReport> reports;
  reports.reserve(gammas.size());
  for (int g : gammas) {
    params.gamma = g;
    reports.push_back(run_with_diameter(input, params, diameter).report);
  }
  return reports;
}

BaselineReport evaluate_rdp(const Trajectory& input, double epsilon) {
  const auto start = Clock::now();
  const auto result = rdp_simplify(input, epsilon);
  const double seconds = seconds_since(start);
  const auto spline = fit_spline(result.simplified);

  BaselineReport report;
  report.epsilon = epsilon;
  report.simplified_count = result.simplified.size();
  report.reduction_percent =
      reduction_percent(input.size(), report.simplified_count);
  report.synchronous_error = synchronous_error(input, spline);
  report.relative_error_percent =
      relative_error_percent(input, report.synchronous_error);
  report.seconds = seconds;
  return report;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_sweep_table(std::ostream& out,
                       std::span<const EvaluationReport> reports,
                       const std::optional<BaselineReport>& baseline) {
  out << "gamma,alpha,beta,coefficient,original_count,simplified_count,"
         "reduction_percent,synchronous_error,relative_error_percent,"
         "simplify_seconds,spline_seconds";
  if (baseline) {
    out << ",rdp_epsilon,rdp_simplified_count,rdp_reduction_percent,"
           "rdp_synchronous_error,rdp_relative_error_percent";
  }
  out << '\n';
  for (const auto& r : reports) {
    out << r.params.gamma << ',' << r.params.alpha << ',' << r.params.beta
        << ',' << to_string(r.params.coefficient) << ',' << r.original_count
        << ',' << r.simplified_count << ','
        << format_number(r.reduction_percent) << ','
        << format_number(r.synchronous_error) << ','
        << format_number(r.relative_error_percent) << ','
        << format_number(r.simplify_seconds) << ','
        << format_number(r.spline_seconds);
    if (baseline) {
      out << ',' << format_number(baseline->epsilon) << ','
          << baseline->simplified_count << ','
          << format_number(baseline->reduction_percent) << ','
          << format_number(baseline->synchronous_error) << ','
          << format_number(baseline->relative_error_percent);
    }
    out << '\n';
  }
}

double time_simplify(const Trajectory& input, const SimplifyParams& params,
                     int repeats) {
  if (repeats < 1) {
    throw Error(ErrorKind::InvalidParameter, "repeats must be >= 1");
  }
  // Calls per batch, sized so one batch lasts about kMinBatchSeconds.
  constexpr double kMinBatchSeconds = 0.02;
  std::size_t calls = 1;
  for (;;) {
    const auto start = Clock::now();
    for (std::size_t c = 0; c < calls; ++c) simplify(input, params);
    if (seconds_since(start) >= kMinBatchSeconds || calls >= (1u << 20)) break;
    calls *= 2;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    for (std::size_t c = 0; c < calls; ++c) simplify(input, params);
    best = std::min(best, seconds_since(start) / static_cast<double>(calls));
  }
  return best;
}

std::vector<ScalingSample> measure_scaling(std::span<const Trajectory> inputs,
                                           const SimplifyParams& params,
                                           int repeats) {
  if (repeats < 1) {
    throw Error(ErrorKind::InvalidParameter, "repeats must be >= 1");
  }
  std::vector<ScalingSample> samples;
  for (const auto& in : inputs) {
    samples.push_back({in.size(), std::numeric_limits<double>::infinity()});
  }
  for (int r = 0; r < repeats; ++r) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      samples[i].seconds = std::min(samples[i].seconds, time_simplify(inputs[i], params, 1));
    }
  }
  return samples;
}

double growth_exponent(std::span<const ScalingSample> samples) {
  if (samples.size() < 2) {
    throw Error(ErrorKind::InvalidParameter,
                "growth exponent needs at least two sizes");
  }
  double mx = 0.0;
  double my = 0.0;
  for (const auto& s : samples) {
    if (s.n == 0 || !(s.seconds > 0.0)) {
      throw Error(ErrorKind::InvalidParameter,
                  "growth exponent needs positive sizes and times");
    }
    mx += std::log(static_cast<double>(s.n));
    my += std::log(s.seconds);
  }
  mx /= static_cast<double>(samples.size());
  my /= static_cast<double>(samples.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& s : samples) {
    const double dx = std::log(static_cast<double>(s.n)) - mx;
    sxy += dx * (std::log(s.seconds) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) {
    throw Error(ErrorKind::InvalidParameter,
                "growth exponent needs at least two distinct sizes");
  }
  return sxy / sxx;
}

}  // namespace faststray
