#include "faststray/spline.hpp"

#include <algorithm>
#include <cmath>

namespace faststray {

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
  const std::size_t m = system.diag.size();
  if (m == 0 || system.rhs.size() != m || system.sub.size() + 1 != m ||
      system.super.size() + 1 != m) {
    throw Error(ErrorKind::InvalidParameter, "inconsistent tridiagonal sizes");
  }
  constexpr double kMinPivot = 1e-14;

  std::vector<double> upper(m, 0.0);  // modified super-diagonal
  std::vector<double> x(m);
  double pivot = system.diag[0];
  if (std::abs(pivot) < kMinPivot) {
    throw Error(ErrorKind::SingularSystem, "zero pivot in row 0");
  }
  if (m > 1) upper[0] = system.super[0] / pivot;
  x[0] = system.rhs[0] / pivot;
  for (std::size_t i = 1; i < m; ++i) {
    pivot = system.diag[i] - system.sub[i - 1] * upper[i - 1];
    if (std::abs(pivot) < kMinPivot) {
      throw Error(ErrorKind::SingularSystem,
                  "zero pivot in row " + std::to_string(i));
    }
    if (i + 1 < m) upper[i] = system.super[i] / pivot;
    x[i] = (system.rhs[i] - system.sub[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = m - 1; i-- > 0;) x[i] -= upper[i] * x[i + 1];
  return x;
}

CubicSpline fit_spline(const Trajectory& kept) {
  const std::size_t m = kept.size();
  const std::size_t dim = kept.dimension();
  const std::size_t segments = m - 1;
  const auto t = kept.timestamps();
  std::vector<double> knots(t.begin(), t.end());

  std::vector<double> h(segments);
  for (std::size_t k = 0; k < segments; ++k) h[k] = t[k + 1] - t[k];

  // Rows 0 and M-1 pin the end accelerations to zero. Interior rows are
  // divided by h[i-1] + h[i], giving diagonal 2 and off-diagonals in (0, 1).
  TridiagonalSystem sys;
  sys.sub.assign(segments, 0.0);
  sys.diag.assign(m, 1.0);
  sys.super.assign(segments, 0.0);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double span = h[i - 1] + h[i];
    sys.sub[i - 1] = h[i - 1] / span;
    sys.diag[i] = 2.0;
    sys.super[i] = h[i] / span;
  }

  std::vector<double> coeffs(dim * segments * 4);
  std::vector<double> y(m);
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t i = 0; i < m; ++i) y[i] = kept.point(i)[d];
    sys.rhs.assign(m, 0.0);
    for (std::size_t i = 1; i + 1 < m; ++i) {
      const double slope_jump =
          (y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1];
      sys.rhs[i] = 6.0 * slope_jump / (h[i - 1] + h[i]);
    }
    const auto acc = solve_tridiagonal(sys);
    for (std::size_t k = 0; k < segments; ++k) {
      double* c = &coeffs[(d * segments + k) * 4];
      c[0] = y[k];
      c[1] = (y[k + 1] - y[k]) / h[k] - h[k] * (2.0 * acc[k] + acc[k + 1]) / 6.0;
      c[2] = acc[k] / 2.0;
      c[3] = (acc[k + 1] - acc[k]) / (6.0 * h[k]);
    }
  }
  return CubicSpline(dim, std::move(knots), std::move(coeffs));
}

std::array<double, 4> CubicSpline::segment(std::size_t d,
                                           std::size_t k) const noexcept {
  const double* c = &coeffs_[(d * segment_count() + k) * 4];
  return {c[0], c[1], c[2], c[3]};
}

std::size_t CubicSpline::segment_index(double t) const noexcept {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const auto pos = static_cast<std::size_t>(it - knots_.begin());
  if (pos == 0) return 0;
  return std::min(pos - 1, segment_count() - 1);
}

double CubicSpline::segment_value(std::size_t d, std::size_t k, double t,
                                  int order) const noexcept {
  const auto [a, b, c, e] = segment(d, k);
  const double s = t - knots_[k];
  switch (order) {
    case 0: return a + s * (b + s * (c + s * e));
    case 1: return b + s * (2.0 * c + s * 3.0 * e);
    case 2: return 2.0 * c + 6.0 * e * s;
    case 3: return 6.0 * e;
    default: return 0.0;
  }
}

void CubicSpline::eval_segment(std::size_t k, double t,
                               std::span<double> out) const noexcept {
  const double s = t - knots_[k];
  const std::size_t segments = segment_count();
  for (std::size_t d = 0; d < dim_; ++d) {
    const double* c = &coeffs_[(d * segments + k) * 4];
    out[d] = c[0] + s * (c[1] + s * (c[2] + s * c[3]));
  }
}

void CubicSpline::evaluate_into(double t, std::span<double> out) const noexcept {
  eval_segment(segment_index(t), t, out);
}

std::vector<double> CubicSpline::evaluate(double t) const {
  std::vector<double> out(dim_);
  evaluate_into(t, out);
  return out;
}

std::vector<double> CubicSpline::evaluate_batch(std::span<const double> times) const {
  std::vector<double> out(times.size() * dim_);
  const std::size_t last = segment_count() - 1;
  std::size_t k = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    while (k < last && times[i] >= knots_[k + 1]) ++k;
    eval_segment(k, times[i], {out.data() + i * dim_, dim_});
  }
  return out;
}

SplineSamples sample_uniform(const CubicSpline& spline, std::size_t count) {
  SplineSamples samples;
  samples.dimension = spline.dimension();
  if (count == 0) return samples;
  const auto knots = spline.knots();
  const double t0 = knots.front();
  const double t1 = knots.back();
  samples.times.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    samples.times[j] =
        count == 1 ? t0 : t0 + (t1 - t0) * static_cast<double>(j) /
                                   static_cast<double>(count - 1);
  }
  if (count > 1) samples.times.back() = t1;
  samples.positions = spline.evaluate_batch(samples.times);
  return samples;
}

}  // namespace faststray
