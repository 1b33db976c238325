#include <gtest/gtest.h>

#include <random>

#include "cluster_forge/errors.hpp"
#include "cluster_forge/lemma2.hpp"

using namespace cluster_forge;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t count_downsets(const DirectedOrder& o) {
  std::size_t count = 0;
  const std::size_t n = o.size();
  for (ElementSet s = 0; s < (ElementSet{1} << n); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (o.leq(i, j) && (s >> j & 1u) && !(s >> i & 1u)) closed = false;
    count += closed;
  }
  return count;
}

// Random directed order on n elements: a random relation on a topological
// labeling, closed transitively, with n-1 on top of everything.
DirectedOrder random_order(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.4);
  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = ElementSet{1} << i | ElementSet{1} << (n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) up[i] |= ElementSet{1} << j;
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up[i] >> j & 1u) up[i] |= up[j];
  return DirectedOrder(up);
}

// Random decreasing family over `universe` elements: each element gets a
// random downset of the order as its membership pattern.
std::vector<ElementSet> random_family(std::mt19937_64& rng, const DirectedOrder& o,
                                      std::size_t universe) {
  const auto downs = o.downsets();
  std::uniform_int_distribution<std::size_t> pick(0, downs.size() - 1);
  std::vector<ElementSet> fam(o.size(), 0);
  for (std::size_t e = 0; e < universe; ++e) {
    const ElementSet d = downs[pick(rng)];
    for (std::size_t m = 0; m < o.size(); ++m)
      if (d >> m & 1u) fam[m] |= ElementSet{1} << e;
  }
  return fam;
}

bool brute_force_inclusion(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b,
                           std::size_t universe) {
  for (std::size_t e = 0; e < universe; ++e) {
    bool in_all_unions = true, in_all_a = true, in_all_b = true;
    for (std::size_t m = 0; m < a.size(); ++m) {
      const bool ia = a[m] >> e & 1u, ib = b[m] >> e & 1u;
      in_all_unions = in_all_unions && (ia || ib);
      in_all_a = in_all_a && ia;
      in_all_b = in_all_b && ib;
    }
    if (in_all_unions && !in_all_a && !in_all_b) return false;
  }
  return true;
}

}  // namespace

TEST(Lemma2, ChainWithDecreasingFamilies) {
  const DirectedOrder chain = DirectedOrder::chain(3);
  const std::vector<ElementSet> a{0b111, 0b011, 0b001}, b{0b110, 0b110, 0b100};
  EXPECT_TRUE(lemma2_oracle(chain, a, b));
}

TEST(Lemma2, ConstantFamilies) {
  const DirectedOrder chain = DirectedOrder::chain(4);
  const std::vector<ElementSet> a(4, 0b0101), b(4, 0b0011);
  EXPECT_TRUE(lemma2_oracle(chain, a, b));
}

TEST(Lemma2, NonDirectedOrderIsInputError) {
  // Two incomparable elements with no common upper bound.
  EXPECT_THROW(DirectedOrder({0b01, 0b10}), InputError);
}

TEST(Lemma2, MalformedOrdersAreInputErrors) {
  EXPECT_THROW(DirectedOrder({0b10, 0b10}), InputError);    // not reflexive
  EXPECT_THROW(DirectedOrder({0b11, 0b11}), InputError);    // not antisymmetric
  EXPECT_THROW(DirectedOrder({0b011, 0b110, 0b100}), InputError);  // not transitive
  EXPECT_THROW(DirectedOrder(std::vector<ElementSet>{}), InputError);
}

TEST(Lemma2, IncreasingFamilyIsInputError) {
  const DirectedOrder chain = DirectedOrder::chain(2);
  const std::vector<ElementSet> a{0b01, 0b11}, b{0b1, 0b1};
  EXPECT_THROW(lemma2_oracle(chain, a, b), InputError);
}

TEST(Lemma2, DownsetsOfChain) {
  const auto d = DirectedOrder::chain(3).downsets();
  EXPECT_EQ(d, (std::vector<ElementSet>{0b000, 0b001, 0b011, 0b111}));
}

// A directed finite order has a top element; removing it leaves an arbitrary
// finite order. The counts are therefore those of unlabeled posets on
// 0, 1, 2, 3 elements: 1, 1, 2, 5.
TEST(Lemma2, DirectedOrdersUpToIsomorphism) {
  const auto orders = directed_orders_up_to_iso(4);
  std::size_t by_size[5] = {0, 0, 0, 0, 0};
  for (const auto& o : orders) ++by_size[o.size()];
  EXPECT_EQ(by_size[1], 1u);
  EXPECT_EQ(by_size[2], 1u);
  EXPECT_EQ(by_size[3], 2u);
  EXPECT_EQ(by_size[4], 5u);
}

TEST(Lemma2, SmallSweepCountsAndPasses) {
  const Lemma2Sweep sweep = lemma2_exhaustive_sweep(3, 3);
  EXPECT_EQ(sweep.failures, 0u);
  std::uint64_t expected = 0;
  for (const auto& o : directed_orders_up_to_iso(3)) {
    const std::uint64_t p = count_downsets(o) * count_downsets(o);
    expected += binomial(p + 3 - 1, 3);
  }
  EXPECT_EQ(sweep.orders, 4u);
  EXPECT_EQ(sweep.instances, expected);
}

TEST(Lemma2Property, RandomOrdersAndFamilies) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::size_t> size(1, 5), uni(1, 6);
  for (int trial = 0; trial < 3000; ++trial) {
    const DirectedOrder o = random_order(rng, size(rng));
    const std::size_t u = uni(rng);
    const auto a = random_family(rng, o, u), b = random_family(rng, o, u);
    const bool holds = lemma2_oracle(o, a, b);
    EXPECT_EQ(holds, brute_force_inclusion(a, b, u));
    EXPECT_TRUE(holds);
  }
}

// Without directedness the inclusion can fail: two incomparable indices,
// A = ({e}, {}) and B = ({}, {e}).
TEST(Lemma2, DirectednessIsNeeded) {
  const std::vector<ElementSet> a{0b1, 0b0}, b{0b0, 0b1};
  EXPECT_FALSE(brute_force_inclusion(a, b, 1));
}
