#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cluster_forge/errors.hpp"
#include "cluster_forge/metric.hpp"
#include "oracles.hpp"

using namespace cluster_forge;

namespace {

constexpr Metric kAll[] = {Metric::kEuclidean, Metric::kChebyshev, Metric::kManhattan};

SampledSet set_of(std::vector<Point> pts, double res = 0.01) {
  return SampledSet(std::move(pts), res);
}

}  // namespace

TEST(Metric, DistanceExamples) {
  EXPECT_DOUBLE_EQ(dist({0, 0}, {3, 4}, Metric::kEuclidean), 5.0);
  EXPECT_DOUBLE_EQ(dist({0, 0}, {3, 4}, Metric::kChebyshev), 4.0);
  EXPECT_DOUBLE_EQ(dist({0, 0}, {3, 4}, Metric::kManhattan), 7.0);
  for (Metric m : kAll) EXPECT_EQ(dist({0.3, -2}, {0.3, -2}, m), 0.0);
}

TEST(Metric, DimensionMismatchIsInputError) {
  EXPECT_THROW(dist({0, 0}, {1}), InputError);
  EXPECT_THROW(SampledSet({{0, 0}, {1}}, 0.1), InputError);
}

TEST(Metric, PointRejectsNonFinite) {
  EXPECT_THROW(Point({std::nan("")}), InputError);
  EXPECT_THROW(Point({INFINITY, 0.0}), InputError);
}

TEST(Metric, SampledSetRejectsDuplicatesAndBadResolution) {
  EXPECT_THROW(SampledSet({{0.5}, {0.5}}, 0.1), InputError);
  EXPECT_THROW(SampledSet({{0.5}}, 0.0), InputError);
  const SampledSet d = SampledSet::deduplicated({{0.5}, {0.2}, {0.5}}, 0.1);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], Point{0.5});
  EXPECT_EQ(d[1], Point{0.2});
}

TEST(Metric, DistToSetExamples) {
  const SampledSet s = set_of({{1, 0}, {2, 0}});
  EXPECT_DOUBLE_EQ(dist_to_set({0, 0}, s), 1.0);
  EXPECT_EQ(dist_to_set({2, 0}, s), 0.0);
  EXPECT_THROW(dist_to_set({0, 0}, SampledSet{}), InputError);
}

TEST(Metric, DistToSampledCircleMatchesBruteForce) {
  std::vector<Point> circle;
  for (int i = 0; i < 63; ++i) {
    const double t = 0.1 * i;
    circle.push_back({std::cos(t), std::sin(t)});
  }
  const SampledSet s = set_of(circle, 0.1);
  const Point p{0.5, 0.0};
  const double d = dist_to_set(p, s);
  EXPECT_EQ(d, oracle::dist_to_set(p, circle));
  EXPECT_NEAR(d, 0.5, 0.1);
}

TEST(Metric, BallFilterOpenAndClosed) {
  const SampledSet s = set_of({{0.0}, {0.5}, {1.0}});
  EXPECT_EQ(ball_filter(s, {0.0}, 0.5, false).size(), 1u);
  EXPECT_EQ(ball_filter(s, {0.0}, 0.5, true).size(), 2u);
  EXPECT_EQ(ball_filter(s, {0.5}, 0.6, false).size(), 3u);
  EXPECT_THROW(ball_filter(s, {0.0}, -1.0, false), InputError);
}

TEST(Metric, HausdorffExamples) {
  const std::vector<Point> a{{0.0}, {1.0}};
  EXPECT_EQ(hausdorff(std::span<const Point>(a), std::span<const Point>(a)), 0.0);
  const std::vector<Point> p{{0.0}}, q{{1.0}};
  EXPECT_EQ(hausdorff(std::span<const Point>(p), std::span<const Point>(q)), 1.0);
}

// The midpoint 0.5 sits 0.5 away from both ends of {0, 1}.
TEST(Metric, HausdorffMidpointGap) {
  const std::vector<Point> a{{0.0}, {1.0}};
  const std::vector<Point> b{{0.0}, {0.5}, {1.0}};
  const double h = hausdorff(std::span<const Point>(a), std::span<const Point>(b));
  EXPECT_EQ(h, oracle::hausdorff(a, b));
  EXPECT_EQ(h, 0.5);
  EXPECT_EQ(directed_hausdorff(a, b), 0.0);
  EXPECT_EQ(directed_hausdorff(b, a), 0.5);
}

TEST(Metric, DiameterExamples) {
  EXPECT_EQ(diameter(set_of({{0.3, 0.3}})), 0.0);
  EXPECT_DOUBLE_EQ(diameter(set_of({{0, 0}, {3, 4}})), 5.0);
  const std::vector<Point> grid = box_lattice(Box{{0, 0}, {1, 1}}, 0.01);
  EXPECT_EQ(grid.size(), 101u * 101u);
  const double d = diameter(set_of(grid));
  EXPECT_NEAR(d, std::sqrt(2.0), 0.03);
  EXPECT_EQ(d, oracle::dist({0, 0}, {1, 1}, Metric::kEuclidean));
}

TEST(Metric, DistToBoxIsExact) {
  const Box b{{0, 0}, {1, 0}};
  EXPECT_DOUBLE_EQ(dist_to_box({0.5, 0.3}, b, Metric::kEuclidean), 0.3);
  EXPECT_DOUBLE_EQ(dist_to_box({2, 1}, b, Metric::kEuclidean), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(dist_to_box({2, 1}, b, Metric::kManhattan), 2.0);
  EXPECT_EQ(dist_to_box({0.25, 0}, b, Metric::kChebyshev), 0.0);
}

TEST(Metric, BoxLatticeIncludesBothEnds) {
  const auto pts = box_lattice(Box{{0}, {1}}, 0.3);
  ASSERT_GE(pts.size(), 2u);
  EXPECT_EQ(pts.front(), Point{0.0});
  EXPECT_EQ(pts.back(), Point{1.0});
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LE(pts[i][0] - pts[i - 1][0], 0.3);
}

TEST(MetricProperty, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d = 1 + trial % 3;
    auto rnd = [&] {
      std::vector<double> c(d);
      for (double& x : c) x = u(rng);
      return Point(std::move(c));
    };
    const Point a = rnd(), b = rnd(), c = rnd();
    for (Metric m : kAll) {
      EXPECT_EQ(dist(a, b, m), dist(b, a, m));
      EXPECT_GE(dist(a, b, m), 0.0);
      EXPECT_EQ(dist(a, a, m), 0.0);
      // Rounding can push a collinear triple past equality by an ulp or two.
      const double ab_bc = dist(a, b, m) + dist(b, c, m);
      EXPECT_LE(dist(a, c, m), ab_bc * (1.0 + 1e-15));
      EXPECT_EQ(dist(a, b, m), oracle::dist(a, b, m));
    }
  }
}

TEST(MetricProperty, SetDistancesAgainstBruteForce) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const auto a = oracle::random_cloud(rng, 1 + trial % 17, d);
    const auto b = oracle::random_cloud(rng, 1 + trial % 11, d);
    const Metric m = kAll[trial % 3];
    const std::span<const Point> sa(a), sb(b);
    EXPECT_EQ(hausdorff(sa, sb, m), oracle::hausdorff(a, b, m));
    EXPECT_EQ(diameter(sa, m), oracle::diameter(a, m));
    EXPECT_EQ(hausdorff(sa, sa, m), 0.0);
    // Zero distance only between equal sets.
    if (oracle::hausdorff(a, b, m) == 0.0) {
      EXPECT_EQ(oracle::directed(a, b, m), 0.0);
    } else {
      EXPECT_GT(hausdorff(sa, sb, m), 0.0);
    }
    for (const Point& p : a) {
      const double ds = dist_to_set(p, sb, m);
      EXPECT_EQ(ds, oracle::dist_to_set(p, b, m));
      for (const Point& q : b) EXPECT_LE(ds, dist(p, q, m));
    }
    // Monotone under inclusion.
    std::vector<Point> sub(a.begin(), a.begin() + static_cast<long>((a.size() + 1) / 2));
    EXPECT_LE(diameter(std::span<const Point>(sub), m), diameter(sa, m));
  }
}
