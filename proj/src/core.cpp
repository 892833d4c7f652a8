#include "faststray/core.hpp"

#include <cstdint>
#include <stdexcept>

#include "kernels.hpp"

namespace faststray {

namespace {

std::size_t as_size(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Trajectory moving_average_filter(const Trajectory& input, int alpha) {
  if (alpha < 0) throw Error(ErrorKind::InvalidParameter, "alpha must be >= 0");
  if (alpha == 0) return input;
  const std::size_t n = input.size();
  const std::size_t dim = input.dimension();
  const std::size_t a = as_size(alpha);
  std::vector<double> coords(n * dim);
  detail::parallel_for(0, static_cast<std::int64_t>(n), [&](std::size_t u) {
    detail::window_mean(input, u, a, {coords.data() + u * dim, dim});
  });
  return input.with_coordinates(std::move(coords));
}

double correlation_coefficient(const Trajectory& filtered, int beta,
                               std::size_t index) {
  if (beta < 1) throw Error(ErrorKind::InvalidParameter, "beta must be >= 1");
  if (index >= filtered.size()) throw std::out_of_range("index past trajectory end");
  const auto w = clamped_window(index, as_size(beta), filtered.size());
  if (w.size() < 3) {
    throw Error(ErrorKind::WindowTooSmall,
                "correlation window around index " + std::to_string(index) +
                    " has " + std::to_string(w.size()) + " samples");
  }
  return detail::correlation_score(filtered, w);
}

double direction_coefficient(const Trajectory& filtered, std::size_t index) {
  if (index >= filtered.size()) throw std::out_of_range("index past trajectory end");
  return detail::direction_score(filtered, index);
}

CoefficientSeries compute_coefficients(const Trajectory& filtered,
                                       const SimplifyParams& params) {
  validate(params);
  const std::size_t n = filtered.size();
  std::vector<double> values(n);
  const auto count = static_cast<std::int64_t>(n);
  if (params.coefficient == CoefficientKind::Correlation) {
    const std::size_t beta = as_size(params.beta);
    detail::require_correlation_window(n, beta);
    detail::parallel_for(0, count, [&](std::size_t u) {
      values[u] = detail::correlation_score(filtered, clamped_window(u, beta, n));
    });
  } else {
    detail::parallel_for(0, count, [&](std::size_t u) {
      values[u] = detail::direction_score(filtered, u);
    });
  }
  return {std::move(values)};
}

std::vector<std::size_t> nms_select(std::span<const double> coefs, int gamma) {
  if (gamma < 1) throw Error(ErrorKind::InvalidParameter, "gamma must be >= 1");
  const std::size_t n = coefs.size();
  if (n == 0) return {};
  if (n == 1) return {0};
  const std::size_t g = as_size(gamma);
  std::vector<std::uint8_t> keep(n, 0);
  keep.front() = 1;
  keep.back() = 1;
  detail::parallel_for(1, static_cast<std::int64_t>(n) - 1, [&](std::size_t u) {
    keep[u] = detail::is_window_max(coefs, u, g) ? 1 : 0;
  });
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) kept.push_back(i);
  }
  return kept;
}

SimplifyResult select_points(const Trajectory& filtered,
                             const CoefficientSeries& coefs, int gamma) {
  if (coefs.size() != filtered.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "coefficient series is not aligned with the trajectory");
  }
  auto kept = nms_select(coefs.values, gamma);
  auto simplified = filtered.subset(kept);
  return {std::move(simplified), std::move(kept), coefs};
}

SimplifyResult simplify(const Trajectory& input, const SimplifyParams& params) {
  validate(params);
  const auto filtered = moving_average_filter(input, params.alpha);
  auto coefs = compute_coefficients(filtered, params);
  auto kept = nms_select(coefs.values, params.gamma);
  auto simplified = filtered.subset(kept);
  return {std::move(simplified), std::move(kept), std::move(coefs)};
}

}  // namespace faststray
