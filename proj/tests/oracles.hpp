#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numeric paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(Matrix a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (a[piv][col] == 0.0) throw std::runtime_error("singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Natural cubic spline built from the unscaled textbook system and
/// evaluated with the second-derivative (moment) form.
struct DenseSpline {
  std::vector<double> t, y, m;

  explicit DenseSpline(std::vector<double> knots, std::vector<double> values)
      : t(std::move(knots)), y(std::move(values)) {
    const std::size_t n = t.size();
    Matrix a(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n, 0.0);
    a[0][0] = 1.0;
    a[n - 1][n - 1] = 1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = t[i] - t[i - 1];
      const double h1 = t[i + 1] - t[i];
      a[i][i - 1] = h0;
      a[i][i] = 2.0 * (h0 + h1);
      a[i][i + 1] = h1;
      b[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    }
    m = dense_solve(a, b);
  }

  double operator()(double x) const {
    std::size_t k = 0;
    while (k + 2 < t.size() && x > t[k + 1]) ++k;
    const double h = t[k + 1] - t[k];
    const double l = t[k + 1] - x;
    const double r = x - t[k];
    return m[k] * l * l * l / (6 * h) + m[k + 1] * r * r * r / (6 * h) +
           (y[k] / h - m[k] * h / 6) * l + (y[k + 1] / h - m[k + 1] * h / 6) * r;
  }
};

/// Keep rule by definition: interior i kept iff coefs[i] equals the max of
/// its clamped window; endpoints always kept.
inline std::vector<std::size_t> brute_nms(std::span<const double> c, int gamma) {
  const std::size_t n = c.size();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || i + 1 == n) {
      kept.push_back(i);
      continue;
    }
    bool is_max = true;
    for (std::size_t j = 0; j < n; ++j) {
      const long diff = static_cast<long>(j) - static_cast<long>(i);
      if (std::abs(diff) <= gamma && c[j] > c[i]) is_max = false;
    }
    if (is_max) kept.push_back(i);
  }
  return kept;
}

/// Textbook Pearson correlation.
inline double pearson(std::span<const double> a, std::span<const double> t) {
  const double n = static_cast<double>(a.size());
  double sa = 0, st = 0, saa = 0, stt = 0, sat = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    st += t[i];
  }
  const double ma = sa / n, mt = st / n;
  for (std::size_t i = 0; i < a.size(); ++i) {
    saa += (a[i] - ma) * (a[i] - ma);
    stt += (t[i] - mt) * (t[i] - mt);
    sat += (a[i] - ma) * (t[i] - mt);
  }
  return sat / std::sqrt(saa * stt);
}

/// Largest pairwise Euclidean distance over row-major points.
inline double brute_diameter(std::span<const double> flat, std::size_t dim) {
  const std::size_t n = flat.size() / dim;
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = flat[i * dim + d] - flat[j * dim + d];
        s += diff * diff;
      }
      best = std::max(best, std::sqrt(s));
    }
  }
  return best;
}

}  // namespace oracle
