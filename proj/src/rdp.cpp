#include "faststray/rdp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace faststray {

double point_segment_distance(std::span<const double> p,
                              std::span<const double> a,
                              std::span<const double> b) noexcept {
  double len2 = 0.0;
  double proj = 0.0;
  for (std::size_t d = 0; d < p.size(); ++d) {
    const double ab = b[d] - a[d];
    len2 += ab * ab;
    proj += (p[d] - a[d]) * ab;
  }
  double u = 0.0;
  if (len2 > 0.0) u = std::clamp(proj / len2, 0.0, 1.0);
  double dist2 = 0.0;
  for (std::size_t d = 0; d < p.size(); ++d) {
    const double diff = p[d] - (a[d] + u * (b[d] - a[d]));
    dist2 += diff * diff;
  }
  return std::sqrt(dist2);
}

SimplifyResult rdp_simplify(const Trajectory& input, double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::InvalidParameter, "epsilon must be finite and >= 0");
  }
  const std::size_t n = input.size();
  std::vector<double> deviation(n, 0.0);
  std::vector<bool> keep(n, false);
  keep.front() = true;
  keep.back() = true;

  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
  while (!stack.empty()) {
    const auto [first, last] = stack.back();
    stack.pop_back();
    if (last <= first + 1) continue;
    const auto a = input.point(first);
    const auto b = input.point(last);
    std::size_t split = first;
    double worst = -1.0;
    for (std::size_t i = first + 1; i < last; ++i) {
      const double dist = point_segment_distance(input.point(i), a, b);
      deviation[i] = dist;
      if (dist > worst) {
        worst = dist;
        split = i;
      }
    }
    if (worst > epsilon) {
      keep[split] = true;
      stack.emplace_back(split, last);
      stack.emplace_back(first, split);
    }
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) kept.push_back(i);
  }
  auto simplified = input.subset(kept);
  return {std::move(simplified), std::move(kept), {std::move(deviation)}};
}

}  // namespace faststray
