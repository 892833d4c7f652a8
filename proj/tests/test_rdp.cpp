#include <doctest.h>

#include <cmath>
#include <random>

#include "faststray/rdp.hpp"

using namespace faststray;

namespace {

Trajectory random_polyline(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> step(0.0, 1.0);
  std::vector<double> coords(2 * n);
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i) {
    times[i] = static_cast<double>(i);
    coords[2 * i] = (i ? coords[2 * i - 2] : 0.0) + step(rng);
    coords[2 * i + 1] = (i ? coords[2 * i - 1] : 0.0) + step(rng);
  }
  return validate_trajectory(2, std::move(coords), std::move(times));
}

}  // namespace

TEST_CASE("point to segment distance") {
  const std::vector<double> a{0, 0}, b{2, 0};
  CHECK(point_segment_distance(std::vector<double>{1, 3}, a, b) == doctest::Approx(3));
  CHECK(point_segment_distance(std::vector<double>{-3, 4}, a, b) == doctest::Approx(5));
  CHECK(point_segment_distance(std::vector<double>{1, 1}, a, a) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("collinear points reduce to endpoints") {
  std::vector<std::vector<double>> pts;
  std::vector<double> ts;
  for (int i = 0; i < 20; ++i) {
    pts.push_back({0.5 * i, 2.0 * i, -1.0 * i});
    ts.push_back(i);
  }
  const auto res = rdp_simplify(validate_trajectory(pts, ts), 0.01);
  CHECK(res.kept_indices == std::vector<std::size_t>{0, 19});
}

TEST_CASE("triangle apex kept when above epsilon") {
  const auto tr = validate_trajectory({{0, 0}, {1, 0.2}, {2, 1.5}, {3, 0.1}, {4, 0}},
                                      {0, 1, 2, 3, 4});
  CHECK(rdp_simplify(tr, 1.0).kept_indices == std::vector<std::size_t>{0, 2, 4});
  CHECK(rdp_simplify(tr, 2.0).kept_indices == std::vector<std::size_t>{0, 4});
}

TEST_CASE("epsilon zero keeps every deviating point") {
  const auto tr = random_polyline(3, 200);
  CHECK(rdp_simplify(tr, 0.0).kept_indices.size() == 200);
}

TEST_CASE("farthest-point ties break toward the lower index") {
  const auto tr = validate_trajectory({{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 0}},
                                      {0, 1, 2, 3, 4});
  const auto res = rdp_simplify(tr, 0.5);
  CHECK(res.kept_indices.size() == 5);
  CHECK(res.coefficients[1] == doctest::Approx(1.0));
}

TEST_CASE("invalid epsilon") {
  CHECK_THROWS_AS(rdp_simplify(random_polyline(1, 5), -1.0), Error);
}

TEST_CASE("every dropped point lies within epsilon of its chord") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto tr = random_polyline(seed, 400);
    for (double eps : {0.5, 2.0, 8.0}) {
      const auto res = rdp_simplify(tr, eps);
      REQUIRE(res.kept_indices.front() == 0);
      REQUIRE(res.kept_indices.back() == tr.size() - 1);
      for (std::size_t k = 0; k + 1 < res.kept_indices.size(); ++k) {
        const auto a = tr.point(res.kept_indices[k]);
        const auto b = tr.point(res.kept_indices[k + 1]);
        for (std::size_t i = res.kept_indices[k] + 1; i < res.kept_indices[k + 1]; ++i) {
          const double dist = point_segment_distance(tr.point(i), a, b);
          REQUIRE(dist <= eps);
          REQUIRE(res.coefficients[i] == doctest::Approx(dist));
        }
      }
    }
  }
}

TEST_CASE("deep inputs do not overflow the stack") {
  // A spiral forces a split at nearly every point.
  std::vector<double> coords;
  std::vector<double> times;
  for (int i = 0; i < 100000; ++i) {
    const double r = 1.0 + i * 0.01;
    coords.push_back(r * std::cos(i * 0.05));
    coords.push_back(r * std::sin(i * 0.05));
    times.push_back(i);
  }
  const auto res = rdp_simplify(validate_trajectory(2, coords, times), 1e-6);
  CHECK(res.kept_indices.size() > 1000);
}
