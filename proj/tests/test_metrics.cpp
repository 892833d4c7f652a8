#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "faststray/core.hpp"
#include "faststray/io.hpp"
#include "faststray/metrics.hpp"
#include "faststray/synthetic.hpp"
#include "oracles.hpp"

using namespace faststray;

namespace {

Trajectory random_cloud(std::uint64_t seed, std::size_t n, std::size_t dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 10.0);
  std::vector<double> coords(n * dim);
  std::vector<double> times(n);
  for (auto& c : coords) c = g(rng);
  for (std::size_t i = 0; i < n; ++i) times[i] = static_cast<double>(i);
  return validate_trajectory(dim, std::move(coords), std::move(times));
}

}  // namespace

TEST_CASE("reduction percent") {
  CHECK(std::abs(reduction_percent(3189, 420) - 86.83) <= 0.01);
  CHECK(std::abs(reduction_percent(334, 31) - 90.72) <= 0.01);
  CHECK(reduction_percent(50, 50) == 0.0);
  CHECK_THROWS_AS(reduction_percent(5, 6), Error);
  CHECK_THROWS_AS(reduction_percent(0, 0), Error);
}

TEST_CASE("synchronous error") {
  SUBCASE("all points kept gives zero") {
    const auto tr = random_cloud(1, 50, 3);
    CHECK(synchronous_error(tr, fit_spline(tr)) <= 1e-9);
  }
  SUBCASE("straight line under any simplification") {
    std::vector<std::vector<double>> pts;
    std::vector<double> ts;
    for (int i = 0; i < 40; ++i) {
      ts.push_back(0.3 * i + 0.01 * (i % 3));
      pts.push_back({2.0 * ts.back() - 1.0, -ts.back()});
    }
    const auto tr = validate_trajectory(pts, ts);
    for (std::vector<std::size_t> keep : {std::vector<std::size_t>{0, 39},
                                          std::vector<std::size_t>{0, 5, 17, 39}}) {
      CHECK(synchronous_error(tr, fit_spline(tr.subset(keep))) <= 1e-9);
    }
  }
  SUBCASE("zigzag against the dense oracle") {
    const auto tr = validate_trajectory({{0, 0}, {1, 1}, {2, 2}, {3, 1}, {4, 0}}, {0, 1, 2, 3, 4});
    const std::vector<std::size_t> keep{0, 2, 4};
    const oracle::DenseSpline sx({0, 2, 4}, {0, 2, 4});
    const oracle::DenseSpline sy({0, 2, 4}, {0, 2, 0});
    double expected = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      const double t = tr.time(i);
      expected += std::hypot(tr.point(i)[0] - sx(t), tr.point(i)[1] - sy(t));
    }
    expected /= 5.0;
    CHECK(expected == doctest::Approx(0.15));
    CHECK(synchronous_error(tr, fit_spline(tr.subset(keep))) == doctest::Approx(0.15));
  }
  SUBCASE("translation invariant") {
    const auto tr = synthetic::smooth_trajectory(8, 200);
    const auto res = simplify(tr, {});
    const double base = synchronous_error(tr, fit_spline(res.simplified));
    std::vector<double> c(tr.coordinates().begin(), tr.coordinates().end());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += (i % 3 == 0 ? 12.5 : -3.0);
    const auto moved = tr.with_coordinates(c);
    const auto res2 = simplify(moved, {});
    CHECK(res2.kept_indices == res.kept_indices);
    CHECK(synchronous_error(moved, fit_spline(res2.simplified)) ==
          doctest::Approx(base).epsilon(1e-6));
  }
}

TEST_CASE("relative error") {
  const auto square = validate_trajectory({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 1, 2, 3});
  CHECK(relative_error_percent(square, 0.1) == doctest::Approx(100.0 * 0.1 / std::sqrt(2.0)));
  CHECK(relative_error_percent(square, 0.1) == doctest::Approx(7.0710678).epsilon(1e-7));
  CHECK(relative_error_percent(square, std::sqrt(2.0)) == doctest::Approx(100.0));
  CHECK(relative_error_percent(square, 0.0) == 0.0);
  const auto still = validate_trajectory({{3, 3}, {3, 3}}, {0, 1});
  CHECK(relative_error_percent(still, 0.0) == 0.0);
}

TEST_CASE("diameter equals brute-force pairwise maximum") {
  for (std::size_t n : {2u, 3u, 17u, 250u, 1200u, 2000u}) {
    for (std::size_t dim : {2u, 3u}) {
      const auto tr = random_cloud(n * 7 + dim, n, dim);
      const auto d = trajectory_diameter(tr);
      CHECK_FALSE(d.approximate);
      CHECK(d.value == oracle::brute_diameter(tr.coordinates(), dim));
    }
  }
  // Box corners present: the early guard fires on the first row.
  const auto box = validate_trajectory({{0, 0}, {0.5, 0.2}, {3, 4}, {1, 1}}, {0, 1, 2, 3});
  CHECK(trajectory_diameter(box).value == 5.0);

  const auto big = random_cloud(3, kExactDiameterLimit + 1, 2);
  const auto approx = trajectory_diameter(big);
  CHECK(approx.approximate);
  CHECK(approx.value >= oracle::brute_diameter(
                            big.coordinates().subspan(0, 2 * 3000), 2));
}

TEST_CASE("pipeline report") {
  const auto tr = synthetic::smooth_trajectory(2, 300);
  const SimplifyParams p{1, 2, 2, CoefficientKind::Correlation};
  const auto run = run_pipeline(tr, p);
  const auto& r = run.report;
  CHECK(r.params == p);
  CHECK(r.original_count == 300);
  CHECK(r.simplified_count == run.result.kept_indices.size());
  CHECK(r.reduction_percent ==
        100.0 * (1.0 - static_cast<double>(r.simplified_count) / 300.0));
  CHECK(r.synchronous_error == synchronous_error(tr, run.spline));
  CHECK(r.relative_error_percent == relative_error_percent(tr, r.synchronous_error));
  CHECK(r.simplify_seconds >= 0.0);
  CHECK(r.spline_seconds >= 0.0);
  CHECK(r.reduction_percent >= 0.0);
  CHECK(r.reduction_percent < 100.0);
}

TEST_CASE("gamma sweep") {
  const auto tr = synthetic::smooth_trajectory(4, 300);
  SimplifyParams p{1, 2, 1, CoefficientKind::Correlation};
  const std::vector<int> one{3};
  const auto single = sweep_gamma(tr, p, one);
  REQUIRE(single.size() == 1);
  CHECK(single[0].params.gamma == 3);

  const std::vector<int> gammas{1, 2, 3, 4, 5, 6};
  const auto reports = sweep_gamma(tr, p, gammas);
  REQUIRE(reports.size() == 6);
  int non_decreasing = 0;
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    CHECK(reports[i].params.gamma == gammas[i]);
    CHECK(reports[i + 1].simplified_count <= reports[i].simplified_count);
    non_decreasing += reports[i + 1].synchronous_error >= reports[i].synchronous_error;
  }
  CHECK(non_decreasing >= 4);

  const auto gps = project_to_local(synthetic::gps_track(9, 2500));
  p.coefficient = CoefficientKind::Direction;
  p.alpha = 2;
  const auto g = sweep_gamma(gps, p, gammas);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    CHECK(g[i + 1].simplified_count <= g[i].simplified_count);
  }

  CHECK_THROWS_AS(sweep_gamma(tr, p, std::vector<int>{}), Error);
  CHECK_THROWS_AS(sweep_gamma(tr, p, std::vector<int>{2, 0}), Error);
}

TEST_CASE("sweep table") {
  const auto tr = synthetic::smooth_trajectory(5, 200);
  const std::vector<int> gammas{1, 2};
  const auto reports = sweep_gamma(tr, {}, gammas);
  std::ostringstream out;
  write_sweep_table(out, reports, std::nullopt);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header ==
        "gamma,alpha,beta,coefficient,original_count,simplified_count,"
        "reduction_percent,synchronous_error,relative_error_percent,"
        "simplify_seconds,spline_seconds");
  std::getline(lines, row);
  CHECK(row.rfind("1,1,2,correlation,200,", 0) == 0);

  const auto baseline = evaluate_rdp(tr, 0.01);
  CHECK(baseline.simplified_count >= 2);
  CHECK(baseline.synchronous_error >= 0.0);
  std::ostringstream with;
  write_sweep_table(with, reports, baseline);
  std::getline(std::istringstream(with.str()) >> std::ws, header);
  CHECK(header.find(",rdp_epsilon,rdp_simplified_count,rdp_reduction_percent,"
                    "rdp_synchronous_error,rdp_relative_error_percent") != std::string::npos);
}

TEST_CASE("growth exponent") {
  std::vector<ScalingSample> linear{{1000, 0.002}, {2000, 0.004}, {4000, 0.008}};
  CHECK(growth_exponent(linear) == doctest::Approx(1.0));
  std::vector<ScalingSample> quad{{10, 1.0}, {20, 4.0}, {40, 16.0}};
  CHECK(growth_exponent(quad) == doctest::Approx(2.0));
  CHECK_THROWS_AS(growth_exponent(std::vector<ScalingSample>{{10, 1.0}}), Error);
  CHECK_THROWS_AS(growth_exponent(std::vector<ScalingSample>{{10, 1.0}, {10, 2.0}}), Error);
  CHECK_THROWS_AS(growth_exponent(std::vector<ScalingSample>{{10, 0.0}, {20, 2.0}}), Error);
}

TEST_CASE("number formatting uses nine significant digits") {
  CHECK(format_number(90.71856287425149) == "90.7185629");
  CHECK(format_number(3.0) == "3");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
  CHECK(format_number(1.5e-7) == "1.5e-07");
}

TEST_CASE("timing helpers") {
  std::vector<Trajectory> inputs{synthetic::smooth_trajectory(3, 500),
                                 synthetic::smooth_trajectory(3, 1500)};
  const auto samples = measure_scaling(inputs, SimplifyParams{}, 2);
  REQUIRE(samples.size() == 2);
  CHECK(samples[0].n == 500);
  CHECK(samples[1].n == 1500);
  for (const auto& s : samples) CHECK(s.seconds > 0.0);
  CHECK(time_simplify(inputs[0], SimplifyParams{}, 1) > 0.0);
  CHECK_THROWS_AS(time_simplify(inputs[0], SimplifyParams{}, 0), Error);
  CHECK_THROWS_AS(measure_scaling(inputs, SimplifyParams{}, 0), Error);
}
