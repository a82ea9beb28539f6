#include <random>

#include <gtest/gtest.h>

#include "rookbraid/error.hpp"
#include "rookbraid/oracle.hpp"

using namespace rookbraid;
using namespace rookbraid::oracle;

namespace {
QPoly q(int e, int c = 1) { return QPoly::monomial(e, c); }
}  // namespace

// Reference values from standard knot tables, written in t = q^2.
TEST(KauffmanOracle, KnotTable) {
  EXPECT_EQ(kauffman_jones(BraidWord(1)), QPoly(1));
  EXPECT_EQ(kauffman_jones(BraidWord(2, {1})), QPoly(1));
  EXPECT_EQ(kauffman_jones(BraidWord(2, {-1})), QPoly(1));
  // right trefoil t + t^3 - t^4
  EXPECT_EQ(kauffman_jones(BraidWord(2, {1, 1, 1})), q(2) + q(6) - q(8));
  // figure-eight t^-2 - t^-1 + 1 - t + t^2
  EXPECT_EQ(kauffman_jones(BraidWord(3, {1, -2, 1, -2})),
            q(-4) - q(-2) + 1 - q(2) + q(4));
  // cinquefoil t^2 + t^4 - t^5 + t^6 - t^7
  EXPECT_EQ(kauffman_jones(BraidWord(2, {1, 1, 1, 1, 1})),
            q(4) + q(8) - q(10) + q(12) - q(14));
}

TEST(KauffmanOracle, LinkTable) {
  // two-component unlink -(t^1/2 + t^-1/2) with t^1/2 = -q
  EXPECT_EQ(kauffman_jones(BraidWord(2)), q(-1) + q(1));
  EXPECT_EQ(kauffman_jones(BraidWord(3)), (q(-1) + q(1)).pow(2));
  // positive Hopf link -t^1/2 - t^5/2
  EXPECT_EQ(kauffman_jones(BraidWord(2, {1, 1})), q(1) + q(5));
  // Borromean rings -t^3 + 3t^2 - 2t + 4 - 2t^-1 + 3t^-2 - t^-3
  EXPECT_EQ(kauffman_jones(BraidWord(3, {1, -2, 1, -2, 1, -2})),
            -q(-6) + q(-4, 3) - q(-2, 2) + 4 - q(2, 2) + q(4, 3) - q(6));
}

TEST(KauffmanOracle, MarkovInvariance) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const auto w = random_word(3, 6, rng);
    const auto base = kauffman_jones(w);
    EXPECT_EQ(kauffman_jones(w.rotated(1 + i % 5)), base);
    EXPECT_EQ(kauffman_jones(w.stabilized(1)), base);
    EXPECT_EQ(kauffman_jones(w.stabilized(-1)), base);
  }
}

TEST(KauffmanOracle, CrossingCap) {
  const BraidWord big(2, std::vector<int>(kMaxStateSumCrossings + 1, 1));
  try {
    kauffman_jones(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyCrossings);
  }
}

TEST(BurauOracle, Table) {
  EXPECT_TRUE(equal_up_to_units(burau_alexander(BraidWord(2, {1})), QPoly(1), false));
  EXPECT_TRUE(equal_up_to_units(burau_alexander(BraidWord(2, {1, 1, 1})),
                                q(2) - 1 + q(-2), false));
  EXPECT_TRUE(equal_up_to_units(burau_alexander(BraidWord(3, {1, -2, 1, -2})),
                                q(2) - 3 + q(-2), false));
  EXPECT_TRUE(burau_alexander(BraidWord(2)).is_zero());
}

TEST(BurauOracle, BraidRelationsInMatrices) {
  const auto lhs = reduced_burau(BraidWord(4, {1, 2, 1}));
  const auto rhs = reduced_burau(BraidWord(4, {2, 1, 2}));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(reduced_burau(BraidWord(4, {2, 3, 2})), reduced_burau(BraidWord(4, {3, 2, 3})));
  EXPECT_EQ(reduced_burau(BraidWord(4, {1, 3})), reduced_burau(BraidWord(4, {3, 1})));
  EXPECT_EQ(reduced_burau(BraidWord(5, {2, 3, 2, -3, -2, -3})), reduced_burau(BraidWord(5)));
  EXPECT_EQ(reduced_burau(BraidWord(3, {1, -1, 2, -2})), reduced_burau(BraidWord(3)));
}

TEST(BurauOracle, MirrorInverts) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 30; ++i) {
    const auto w = random_word(3, 6, rng);
    EXPECT_TRUE(equal_up_to_units(burau_alexander(w.mirrored()),
                                  burau_alexander(w).inverted(), false));
  }
}

TEST(UnitEquality, Examples) {
  EXPECT_TRUE(equal_up_to_units(q(-2) - 1 + q(2), q(2) - 1 + q(-2), false));
  const QPoly p = QPoly(1) - q(1, 3);
  EXPECT_TRUE(equal_up_to_units(q(1) * p, p, false));
  EXPECT_TRUE(equal_up_to_units(-p, p, false));
  EXPECT_FALSE(equal_up_to_units(QPoly(1) + q(1), QPoly(1) + q(2), true));
  EXPECT_FALSE(equal_up_to_units(QPoly(1) + q(1, 2), QPoly(2) + q(1), false));
  EXPECT_TRUE(equal_up_to_units(QPoly(1) + q(1, 2), QPoly(2) + q(1), true));
}
