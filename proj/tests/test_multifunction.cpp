#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cluster_forge/errors.hpp"
#include "cluster_forge/multifunction.hpp"
#include "oracles.hpp"

using namespace cluster_forge;

namespace {

const Box kUnit{{0.0}, {1.0}};

MultifunctionTable table_1d(const std::vector<double>& keys,
                            const std::vector<std::vector<Point>>& values, Box space = kUnit) {
  std::vector<Point> k;
  std::vector<SampledSet> v;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    k.push_back(Point{keys[i]});
    v.emplace_back(values[i], 0.01);
  }
  return MultifunctionTable(std::move(k), std::move(v), std::move(space), 0.01);
}

template <typename F>
FunctionSample sample_function(const std::vector<Point>& xs, F fn) {
  std::vector<FunctionPair> pairs;
  for (const Point& x : xs) pairs.push_back({x, Point{fn(x[0])}, std::nullopt});
  return FunctionSample(std::move(pairs));
}

std::vector<Point> values_near(const std::vector<Point>& xs, double (*fn)(double), double x0,
                               double delta) {
  std::vector<Point> out;
  for (const Point& x : xs)
    if (std::fabs(x[0] - x0) < delta) out.push_back(Point{fn(x[0])});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double sin_inv(double z) { return std::sin(1.0 / z); }

std::vector<Point> open_unit_grid() {
  std::vector<Point> zs;
  for (int k = 1; k <= 10000; ++k) zs.push_back(Point{k * 1e-4});
  return zs;
}

}  // namespace

TEST(Multifunction, TableValidation) {
  EXPECT_THROW(table_1d({0.0, 0.0}, {{{0.1}}, {{0.2}}}), InputError);
  EXPECT_THROW(table_1d({0.0}, {{}}), InputError);
  EXPECT_THROW(table_1d({0.0}, {{{2.0}}}), InputError);  // outside the value box
}

TEST(Multifunction, NearestKeyLookup) {
  const auto phi = table_1d({0.0, 1.0}, {{{0.1}}, {{0.9}}});
  EXPECT_EQ(phi.at(Point{0.4}).points(), (std::vector<Point>{{0.1}}));
  EXPECT_EQ(phi.at(Point{0.6}).points(), (std::vector<Point>{{0.9}}));
  EXPECT_EQ(phi.nearest_key(Point{0.5}), 0u);  // lowest index on ties
  EXPECT_EQ(phi.find_key(Point{1.0}), std::optional<std::size_t>(1));
  EXPECT_FALSE(phi.find_key(Point{0.5}));
}

TEST(Usc, ConstantMultifunctionPasses) {
  std::vector<double> keys;
  std::vector<std::vector<Point>> values;
  for (int i = 0; i <= 20; ++i) {
    keys.push_back(i * 0.05);
    values.push_back(oracle::line_grid(0.0, 1.0, 0.1));
  }
  const auto phi = table_1d(keys, values);
  EXPECT_TRUE(usc_check(phi, 0.1, 0.01).pass);
  EXPECT_EQ(usc_modulus(phi, 0.1), 0.0);
}

TEST(Usc, ContinuousSingletonMapPasses) {
  std::vector<double> keys;
  std::vector<std::vector<Point>> values;
  for (int i = 0; i <= 100; ++i) {
    keys.push_back(i * 0.01);
    values.push_back({Point{i * 0.01}});
  }
  const auto phi = table_1d(keys, values);
  // Brute force: worst value gap over key pairs closer than 0.1.
  double worst = 0.0;
  for (double a : keys)
    for (double b : keys)
      if (std::fabs(a - b) < 0.1) worst = std::max(worst, std::fabs(a - b));
  EXPECT_LT(worst, 0.2);
  EXPECT_TRUE(usc_check(phi, 0.1, 0.2).pass);
  EXPECT_DOUBLE_EQ(usc_modulus(phi, 0.1), worst);
}

TEST(Usc, JumpFailsWithStraddlingWitness) {
  std::vector<double> keys;
  std::vector<std::vector<Point>> values;
  for (int i = 0; i <= 20; ++i) {
    keys.push_back(i * 0.05);
    values.push_back({Point{i * 0.05 < 0.5 ? 0.0 : 1.0}});
  }
  const auto phi = table_1d(keys, values);
  const UscReport r = usc_check(phi, 0.1, 0.5);
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.witness);
  const double a = phi.keys()[r.witness->key][0], b = phi.keys()[r.witness->near_key][0];
  EXPECT_LT(std::min(a, b), 0.5);
  EXPECT_GE(std::max(a, b), 0.5);
  EXPECT_EQ(r.witness->gap, 1.0);
}

TEST(Usc, ModulusLadderDecreases) {
  std::vector<double> keys;
  std::vector<std::vector<Point>> values;
  for (int i = 0; i <= 100; ++i) {
    keys.push_back(i * 0.01);
    values.push_back({Point{i * 0.01}});
  }
  const auto rows = usc_modulus_ladder(table_1d(keys, values), 0.05, 2, 3);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_DOUBLE_EQ(rows.front().delta, 0.2);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i].modulus, rows[i - 1].modulus);
}

TEST(ClusterSet, ConstantFunction) {
  const auto xs = oracle::line_grid(0.0, 1.0, 0.01);
  const auto f = sample_function(xs, [](double) { return 0.25; });
  const std::vector<double> deltas{0.2, 0.1, 0.05};
  for (const auto& e : empirical_cluster_set(f, Point{0.5}, deltas))
    EXPECT_EQ(e.points(), (std::vector<Point>{{0.25}}));
  EXPECT_EQ(oscillation(f, Point{0.5}, 0.1), 0.0);
}

TEST(ClusterSet, IdentityNearZero) {
  std::vector<Point> xs;
  for (int k = 1; k <= 1000; ++k) xs.push_back(Point{k * 1e-3});
  const auto f = sample_function(xs, [](double z) { return z; });
  const std::vector<double> deltas{0.1};
  const SampledSet e = empirical_cluster_set(f, Point{0.0}, deltas).back();
  for (const Point& y : e.points()) {
    EXPECT_GT(y[0], 0.0);
    EXPECT_LT(y[0], 0.1);
  }
  const std::vector<Point> zero{{0.0}};
  EXPECT_LT(hausdorff(e.points(), zero), 0.1);
}

// Brute-force value sets of sin(1/z) on the 1e-4 grid of (0, 1] at 0, compared
// with a 0.001 grid of [-1, 1]. Near z = 0 the grid samples sin(1/z) too
// sparsely for small balls: only delta = 0.1 comes within 0.02.
TEST(ClusterSet, SinInverseMatchesBruteForce) {
  const auto zs = open_unit_grid();
  const auto f = sample_function(zs, sin_inv);
  const auto target = oracle::line_grid(-1.0, 1.0, 0.001);
  for (double delta : {0.1, 0.01, 0.001}) {
    const std::vector<double> schedule{delta};
    const SampledSet e = empirical_cluster_set(f, Point{0.0}, schedule).back();
    const auto expected = values_near(zs, sin_inv, 0.0, delta);
    EXPECT_EQ(e.points(), expected);
    const double h = hausdorff(e.points(), target);
    EXPECT_EQ(h, oracle::hausdorff(expected, target));
    if (delta == 0.1) {
      EXPECT_LE(h, 0.02);
    } else {
      EXPECT_GT(h, 0.02);
    }
  }
  const double osc = oscillation(f, Point{0.0}, 0.01);
  EXPECT_NEAR(osc, 2.0, 0.05);
  EXPECT_EQ(osc, oracle::diameter(values_near(zs, sin_inv, 0.0, 0.01)));
}

TEST(ClusterSet, EmptyBallRaisesDomainGap) {
  const auto f = sample_function({Point{0.5}}, [](double) { return 0.0; });
  const std::vector<double> deltas{0.1};
  EXPECT_THROW(empirical_cluster_set(f, Point{0.0}, deltas), DomainGapError);
  EXPECT_THROW(oscillation(f, Point{0.0}, 0.1), DomainGapError);
}

TEST(ClusterSet, ScheduleMustDecrease) {
  const auto f = sample_function({Point{0.5}}, [](double) { return 0.0; });
  const std::vector<double> deltas{0.1, 0.2};
  EXPECT_THROW(empirical_cluster_set(f, Point{0.5}, deltas), InputError);
}

TEST(ClusterSetProperty, NestedAndOscillationMonotone) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FunctionPair> pairs;
    for (const Point& x : oracle::random_cloud(rng, 400, 1)) pairs.push_back({x, Point{u(rng)}, std::nullopt});
    const FunctionSample f(std::move(pairs));
    const Point x{u(rng)};
    const auto deltas = geometric_schedule(0.02, 4);
    const auto sets = empirical_cluster_set(f, x, deltas);
    for (std::size_t i = 1; i < sets.size(); ++i) {
      for (const Point& y : sets[i].points()) EXPECT_TRUE(sets[i - 1].contains(y));
      EXPECT_LE(oscillation(f, x, deltas[i]), oscillation(f, x, deltas[i - 1]));
    }
    EXPECT_EQ(oscillation(f, x, deltas[0]), oracle::diameter(sets[0].points()));
  }
}

// Values near x' at scale delta - delta' sit inside the values near x at
// scale delta whenever dist(x, x') < delta'.
TEST(ClusterSetProperty, ShiftedBallsNest) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FunctionPair> pairs;
    for (const Point& x : oracle::random_cloud(rng, 300, 2))
      pairs.push_back({x, Point{u(rng)}, std::nullopt});
    const FunctionSample f(std::move(pairs));
    const Point x{u(rng), u(rng)};
    const double delta = 0.1 + 0.2 * u(rng), delta_p = delta * u(rng) * 0.9;
    const Point xp{x[0] + delta_p * 0.6, x[1] - delta_p * 0.6};
    ASSERT_LT(dist(x, xp), delta_p);
    const auto outer = f.values_in_ball(x, delta, Metric::kEuclidean);
    for (const Point& y : f.values_in_ball(xp, delta - delta_p, Metric::kEuclidean))
      EXPECT_TRUE(std::binary_search(outer.begin(), outer.end(), y));
  }
}

// The value-set map of a 1-Lipschitz function at scale 0.05 is upper
// continuous with eps = delta * Lip.
TEST(ClusterSetProperty, LipschitzValueSetsAreUsc) {
  std::vector<Point> xs;
  for (int k = 0; k <= 1000; ++k) xs.push_back(Point{k * 1e-3});
  const auto f = sample_function(xs, [](double z) { return 0.5 * z + 0.25 * std::sin(2 * z); });
  std::vector<Point> keys;
  std::vector<SampledSet> values;
  for (int i = 0; i <= 50; ++i) {
    const Point x{i * 0.02};
    keys.push_back(x);
    values.emplace_back(f.values_in_ball(x, 0.05, Metric::kEuclidean), 0.01);
  }
  const MultifunctionTable phi(keys, values, kUnit, 0.01);
  EXPECT_TRUE(usc_check(phi, 0.02, 0.05).pass);
}

TEST(Schedule, Geometric) {
  EXPECT_EQ(geometric_schedule(0.01, 3), (std::vector<double>{0.04, 0.02, 0.01}));
  EXPECT_THROW(geometric_schedule(0.0, 3), InputError);
}
