#include <deque>

#include "faststray/core.hpp"
#include "kernels.hpp"

namespace faststray::serial {

Trajectory moving_average_filter(const Trajectory& input, int alpha) {
  if (alpha < 0) throw Error(ErrorKind::InvalidParameter, "alpha must be >= 0");
  if (alpha == 0) return input;
  const std::size_t dim = input.dimension();
  std::vector<double> coords(input.size() * dim);
  for (std::size_t i = 0; i < input.size(); ++i) {
    detail::window_mean(input, i, static_cast<std::size_t>(alpha),
                        {coords.data() + i * dim, dim});
  }
  return input.with_coordinates(std::move(coords));
}

CoefficientSeries compute_coefficients(const Trajectory& filtered,
                                       const SimplifyParams& params) {
  validate(params);
  const std::size_t n = filtered.size();
  std::vector<double> values(n);
  if (params.coefficient == CoefficientKind::Correlation) {
    const auto beta = static_cast<std::size_t>(params.beta);
    detail::require_correlation_window(n, beta);
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = detail::correlation_score(filtered, clamped_window(i, beta, n));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = detail::direction_score(filtered, i);
    }
  }
  return {std::move(values)};
}

std::vector<std::size_t> nms_select(std::span<const double> coefs, int gamma) {
  if (gamma < 1) throw Error(ErrorKind::InvalidParameter, "gamma must be >= 1");
  const std::size_t n = coefs.size();
  if (n == 0) return {};
  if (n == 1) return {0};
  const auto g = static_cast<std::size_t>(gamma);

  // Front of `window` is the index of the maximum of coefs[i-g .. i+g].
  std::deque<std::size_t> window;
  std::size_t pushed = 0;
  std::vector<std::size_t> kept{0};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t hi = std::min(i + g, n - 1);
    for (; pushed <= hi; ++pushed) {
      while (!window.empty() && coefs[window.back()] <= coefs[pushed]) {
        window.pop_back();
      }
      window.push_back(pushed);
    }
    const std::size_t lo = i > g ? i - g : 0;
    while (window.front() < lo) window.pop_front();
    if (coefs[i] == coefs[window.front()]) kept.push_back(i);
  }
  kept.push_back(n - 1);
  return kept;
}

SimplifyResult simplify(const Trajectory& input, const SimplifyParams& params) {
  validate(params);
  const auto filtered = serial::moving_average_filter(input, params.alpha);
  auto coefs = serial::compute_coefficients(filtered, params);
  auto kept = serial::nms_select(coefs.values, params.gamma);
  auto simplified = filtered.subset(kept);
  return {std::move(simplified), std::move(kept), std::move(coefs)};
}

}  // namespace faststray::serial
