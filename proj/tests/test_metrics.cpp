#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mpma/metrics.hpp"
#include "mpma/module_io.hpp"
#include "oracles.hpp"

using namespace mpma;

TEST_CASE("recthull") {
  Box b = recthull({{0, 3}, {2, 1}, {1, 5}});
  CHECK(b.low == Point{0, 1});
  CHECK(b.high == Point{2, 5});
  Box inf = recthull({{0, 0}, {kInf, 1}});
  CHECK(inf.high == Point{kInf, 1});
  CHECK_THROWS_AS(recthull({}), std::invalid_argument);
}

TEST_CASE("interval bar of a rectangle") {
  auto I = IntervalModule::from_points(1, {{1, 2}}, {{4, 3}});
  auto b = interval_bar(I, {0, 0});
  REQUIRE(b);
  CHECK(b->first == 2);
  CHECK(b->second == 3);
  CHECK_FALSE(interval_bar(I, {5, 0}));
  auto q = IntervalModule::from_points(1, {{1, 1}}, {{kInf, kInf}});
  auto bq = interval_bar(q, {0.5, 0});
  REQUIRE(bq);
  CHECK(bq->first == 1);
  CHECK(std::isinf(bq->second));
}

TEST_CASE("fibered barcode agrees with a membership scan") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> off(-8, 8);
  for (int k = 0; k < 200; ++k) {
    auto I = oracle::random_interval(rng, 2);
    Point base{off(rng), 0};
    auto b = interval_bar(I, base);
    auto scan = oracle::scan_bar(I, base, -20, 40, 1e-3);
    if (!b) {
      CHECK(std::isinf(scan.first));
      continue;
    }
    if (std::isinf(scan.first)) {
      CHECK(b->second - b->first < 2e-3);  // thinner than the scan step
      continue;
    }
    CHECK(std::fabs(b->first - scan.first) <= 1e-3 + 1e-9);
    CHECK(std::fabs(b->second - scan.second) <= 1e-3 + 1e-9);
  }
}

TEST_CASE("dimension and raster") {
  std::vector<IntervalModule> M = {IntervalModule::from_points(1, {{0, 0}}, {{2, 2}}),
                                   IntervalModule::from_points(1, {{1, 1}}, {{3, 3}})};
  CHECK(dimension_at(M, {1.5, 1.5}) == 2);
  CHECK(dimension_at(M, {0.5, 0.5}) == 1);
  CHECK(dimension_at(M, {5, 5}) == 0);
  Raster r = rasterize(M, {{0, 0}, {4, 4}}, 4);
  CHECK(r.values == std::vector<int>{1, 1, 0, 0, 1, 2, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0});
  CHECK(r.center(5) == Point{1.5, 1.5});
  Raster e = rasterize({}, {{0, 0}, {4, 4}}, 8);
  CHECK(std::count(e.values.begin(), e.values.end(), 0) == 64);
  CHECK(frobenius(r, r) == 0);
  CHECK(frobenius(rasterize(M, {{0, 0}, {4, 4}}, 4), rasterize({}, {{0, 0}, {4, 4}}, 4)) == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("coarse raster is a subsample of the fine one at shared centers") {
  std::mt19937_64 rng(6);
  std::vector<IntervalModule> M;
  for (int k = 0; k < 4; ++k) M.push_back(oracle::random_interval(rng, 2));
  const Box box{{0, 0}, {12, 12}};
  Raster coarse = rasterize(M, box, 20), fine = rasterize(M, box, 60);
  // Coarse pixel (i, j) has the same center as fine pixel (3i+1, 3j+1).
  for (int j = 0; j < 20; ++j)
    for (int i = 0; i < 20; ++i) CHECK(coarse.values[j * 20 + i] == fine.values[(3 * j + 1) * 60 + 3 * i + 1]);
}

TEST_CASE("parallel kernels equal their serial references") {
  std::mt19937_64 rng(7);
  std::vector<IntervalModule> M;
  for (int k = 0; k < 6; ++k) M.push_back(oracle::random_interval(rng, 2));
  const Box box{{-1, -1}, {15, 15}};
  CHECK(rasterize(M, box, 64).values == rasterize_serial(M, box, 64).values);
  auto lines = probe_lines(box, 0.1);
  for (const auto& I : M) {
    auto a = probe_bars(I, box, lines, 0.1), b = probe_bars_serial(I, box, lines, 0.1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK((a[i].first == b[i].first || (std::isnan(a[i].first) && std::isnan(b[i].first))));
      CHECK((a[i].second == b[i].second || (std::isnan(a[i].second) && std::isnan(b[i].second))));
    }
  }
}

TEST_CASE("interleaving estimates on known pairs") {
  const double res = 0.01;
  auto rect = IntervalModule::from_points(1, {{0, 0}}, {{2, 1}});
  const Box probe = default_probe({rect}, {});
  CHECK(estimate_interleaving(rect, rect, probe, res) == 0);
  CHECK(estimate_interleaving_zero(rect, probe, res) == doctest::Approx(0.5).epsilon(0.02));
  CHECK(bottleneck_estimate({rect}, {}, probe, res) == doctest::Approx(0.5).epsilon(0.02));
  CHECK(estimate_interleaving(std::vector<IntervalModule>{rect}, std::vector<IntervalModule>{rect}, probe, res) == 0);

  for (double delta : {1.0, 0.5}) {
    auto a = fig12_module(true, delta).intervals, b = fig12_module(false, delta).intervals;
    const Box p = default_probe(a, b);
    const double r = delta / 20;
    CHECK(std::fabs(estimate_interleaving(a, b, p, r) - delta / 2) <= r + 1e-12);
    CHECK(std::fabs(bottleneck_estimate(a, b, p, r) - delta / 2) <= r + 1e-12);
  }
}

TEST_CASE("shifted rectangle") {
  auto a = IntervalModule::from_points(1, {{0, 0}}, {{4, 4}});
  auto b = IntervalModule::from_points(1, {{0.5, 0.5}}, {{4.5, 4.5}});
  const Box p = default_probe({a}, {b});
  CHECK(estimate_interleaving(a, b, p, 0.05) == doctest::Approx(0.5));
  CHECK(triangle_identities_hold(a, b, 0.5, p, 0.05));
  CHECK_FALSE(triangle_identities_hold(a, b, 0.45, p, 0.05));
}

TEST_CASE("estimator soundness and d_I <= d_b") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    auto a = oracle::random_interval(rng, 2), b = oracle::random_interval(rng, 2);
    const Box p = default_probe({a}, {b});
    const double res = 0.25;
    const double eps = estimate_interleaving(a, b, p, res);
    if (std::isinf(eps)) continue;
    CHECK(triangle_identities_hold(a, b, eps, p, res));
    if (eps >= res) CHECK_FALSE(triangle_identities_hold(a, b, eps - res, p, res));
    CHECK(estimate_interleaving(std::vector<IntervalModule>{a}, std::vector<IntervalModule>{b}, p, res) <=
          bottleneck_estimate({a}, {b}, p, res) + 1e-12);
  }
  for (int k = 0; k < 20; ++k) {
    std::vector<IntervalModule> A, B;
    for (int i = 0; i < 3; ++i) A.push_back(oracle::random_interval(rng, 2));
    for (int i = 0; i < 2; ++i) B.push_back(oracle::random_interval(rng, 2));
    const Box p = default_probe(A, B);
    CHECK(estimate_interleaving(A, B, p, 0.25) <= bottleneck_estimate(A, B, p, 0.25) + 1e-12);
  }
}

TEST_CASE("bottleneck assignment") {
  // Two summands against two: the cheap diagonal wins.
  CHECK(bottleneck_assignment({{1, 5}, {5, 2}}, {4, 4}, {4, 4}) == 2);
  // Leaving both unmatched is cheaper than the cross pairing.
  CHECK(bottleneck_assignment({{9}}, {1}, {2}) == 2);
  CHECK(bottleneck_assignment({}, {}, {}) == 0);
  CHECK(bottleneck_assignment({}, {}, {3}) == 3);
}

TEST_CASE("degree mismatch is never matched") {
  auto a = IntervalModule::from_points(0, {{0, 0}}, {{1, 1}});
  auto b = IntervalModule::from_points(1, {{0, 0}}, {{1, 1}});
  const Box p = default_probe({a}, {b});
  // Each unit square goes to zero; the estimate lands within one resolution of ½.
  const double db = bottleneck_estimate({a}, {b}, p, 0.05);
  CHECK(db >= 0.5);
  CHECK(db <= 0.55 + 1e-12);
}
