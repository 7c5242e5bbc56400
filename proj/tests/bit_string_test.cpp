#include "mahh/bit_string.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mahh {
namespace {

TEST(BitString, ParseAndCount) {
  const BitString x = BitString::parse("101101");
  EXPECT_EQ(x.size(), 6u);
  EXPECT_EQ(x.one_count(), 4u);
  EXPECT_EQ(x.to_string(), "101101");
  EXPECT_TRUE(x[0]);
  EXPECT_FALSE(x[1]);
}

TEST(BitString, RejectsBadInput) {
  EXPECT_THROW(BitString(0), std::invalid_argument);
  EXPECT_THROW(BitString::parse(""), std::invalid_argument);
  EXPECT_THROW(BitString::parse("10a1"), std::invalid_argument);
}

TEST(BitString, FlipKeepsCountInSync) {
  Rng rng(5);
  BitString x = BitString::uniform(37, rng);
  for (int i = 0; i < 500; ++i) {
    x.flip(uniform_index(rng, x.size()));
    std::size_t ones = 0;
    for (std::size_t j = 0; j < x.size(); ++j) ones += x[j] ? 1 : 0;
    ASSERT_EQ(x.one_count(), ones);
  }
}

TEST(BitString, WithLevelHasRequestedCount) {
  Rng rng(11);
  for (std::size_t level = 0; level <= 9; ++level) {
    const BitString x = BitString::with_level(9, level, rng);
    EXPECT_EQ(x.one_count(), level);
  }
  EXPECT_THROW(BitString::with_level(4, 5, rng), std::invalid_argument);
}

TEST(BitString, WithLevelIsUniformOverPositions) {
  // Each position holds a one with probability level/n.
  Rng rng(3);
  const int draws = 40000;
  std::vector<int> hits(6, 0);
  for (int t = 0; t < draws; ++t) {
    const BitString x = BitString::with_level(6, 2, rng);
    for (std::size_t i = 0; i < 6; ++i) hits[i] += x[i] ? 1 : 0;
  }
  const double q = 2.0 / 6.0;
  const double se = std::sqrt(q * (1 - q) / draws);
  for (int h : hits) EXPECT_NEAR(h / static_cast<double>(draws), q, 4 * se);
}

TEST(BitString, HammingDistance) {
  EXPECT_EQ(hamming_distance(BitString::parse("0000"), BitString::parse("1011")), 3u);
  EXPECT_THROW(hamming_distance(BitString(3), BitString(4)), std::invalid_argument);
}

TEST(BitString, AllOnes) {
  const BitString x = BitString::all_ones(7);
  EXPECT_EQ(x.one_count(), 7u);
  EXPECT_EQ(x.to_string(), "1111111");
}

TEST(Rng, SeedDerivationIsStableAndDistinct) {
  EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Rng, UniformIndexStaysInRange) {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_index(rng, 7), 7u);
}

}  // namespace
}  // namespace mahh
