// OpenMP kernels against their serial references on synthetic trajectories.
//
//   bench_kernels [n] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <omp.h>

#include "faststray/core.hpp"
#include "faststray/metrics.hpp"
#include "faststray/synthetic.hpp"

namespace fs = faststray;

template <typename F>
double best_of(int repeats, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    best = std::min(best, dt.count());
  }
  return best;
}

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
  const auto input = fs::synthetic::smooth_trajectory(7, n);
  fs::SimplifyParams corr{2, 3, 2, fs::CoefficientKind::Correlation};
  fs::SimplifyParams dir{2, 3, 2, fs::CoefficientKind::Direction};
  const auto filtered = fs::moving_average_filter(input, corr.alpha);
  const auto coefs = fs::compute_coefficients(filtered, corr);

  std::cout << "n=" << n << " threads=" << omp_get_max_threads() << '\n'
            << "kernel,serial_seconds,parallel_seconds,speedup\n";
  auto row = [&](const char* name, auto&& serial, auto&& parallel) {
    const double s = best_of(repeats, serial);
    const double p = best_of(repeats, parallel);
    std::cout << name << ',' << s << ',' << p << ',' << s / p << '\n';
  };
  row("moving_average",
      [&] { (void)fs::serial::moving_average_filter(input, corr.alpha); },
      [&] { (void)fs::moving_average_filter(input, corr.alpha); });
  row("correlation_coefficients",
      [&] { (void)fs::serial::compute_coefficients(filtered, corr); },
      [&] { (void)fs::compute_coefficients(filtered, corr); });
  row("direction_coefficients",
      [&] { (void)fs::serial::compute_coefficients(filtered, dir); },
      [&] { (void)fs::compute_coefficients(filtered, dir); });
  row("nms_gamma2",
      [&] { (void)fs::serial::nms_select(coefs.values, 2); },
      [&] { (void)fs::nms_select(coefs.values, 2); });
  row("simplify_correlation",
      [&] { (void)fs::serial::simplify(input, corr); },
      [&] { (void)fs::simplify(input, corr); });

  const auto small = fs::synthetic::smooth_trajectory(7, std::min<std::size_t>(n, 15000));
  const double diam = best_of(repeats, [&] { (void)fs::trajectory_diameter(small); });
  std::cout << "diameter_n" << small.size() << ",," << diam << ",\n";
  return 0;
}
