#include <random>

#include <gtest/gtest.h>

#include "rookbraid/element.hpp"
#include "rookbraid/error.hpp"
#include "test_oracles.hpp"

using namespace rookbraid;
using P = LaurentPoly;

namespace {

const PlanarDiagram& d(int j) { return p2_basis()[j - 1]; }

// Product computed on plain maps with the test oracle's composition.
std::map<test_oracle::PartialMap, P> oracle_product(const AlgebraElement& a,
                                                    const AlgebraElement& b) {
  std::map<test_oracle::PartialMap, P> out;
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      test_oracle::PartialMap ma, mb;
      for (const auto& e : da.edges()) ma[e.bottom] = e.top;
      for (const auto& e : db.edges()) mb[e.bottom] = e.top;
      out[test_oracle::compose_maps(ma, mb)] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::map<test_oracle::PartialMap, P> as_maps(const AlgebraElement& x) {
  std::map<test_oracle::PartialMap, P> out;
  for (const auto& [diagram, coef] : x.terms()) {
    test_oracle::PartialMap m;
    for (const auto& e : diagram.edges()) m[e.bottom] = e.top;
    out[m] = coef;
  }
  return out;
}

}  // namespace

TEST(Element, SumOfVerticalsSquared) {
  const AlgebraElement x = AlgebraElement(d(2)) + AlgebraElement(d(5));
  AlgebraElement expected = x;
  expected.add_term(d(1), 2);  // d2 d5 = d5 d2 = empty
  EXPECT_EQ(x * x, expected);
}

TEST(Element, IdentityAndScalars) {
  std::mt19937_64 rng(1);
  const AlgebraElement x = random_element(3, 5, rng);
  EXPECT_EQ(AlgebraElement::identity(3) * x, x);
  EXPECT_EQ(x * AlgebraElement::identity(3), x);
  const AlgebraElement a(d(6), P::U());
  const AlgebraElement b(d(6), P::V());
  EXPECT_EQ(a * b, AlgebraElement(d(6), P::UV(1)));
}

TEST(Element, ZeroCoefficientsArePruned) {
  AlgebraElement x(d(3), P::U());
  x.add_term(d(3), -P::U());
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x, AlgebraElement(2));
  EXPECT_EQ(x.to_string(), "0\n");
}

TEST(Element, ProductMatchesOracle) {
  std::mt19937_64 rng(21);
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 40; ++i) {
      const AlgebraElement a = random_element(n, 5, rng);
      const AlgebraElement b = random_element(n, 5, rng);
      EXPECT_EQ(as_maps(a * b), oracle_product(a, b));
    }
  }
}

TEST(Element, AlgebraAxioms) {
  std::mt19937_64 rng(8);
  for (int n : {2, 3}) {
    for (int i = 0; i < 30; ++i) {
      const auto a = random_element(n, 4, rng);
      const auto b = random_element(n, 4, rng);
      const auto c = random_element(n, 4, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
    }
  }
}

TEST(Element, SizeMismatch) {
  try {
    (void)(AlgebraElement::identity(2) * AlgebraElement::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
  EXPECT_THROW(AlgebraElement::identity(2) + AlgebraElement::identity(3), Error);
}

TEST(Element, TensorExamples) {
  EXPECT_EQ(tensor(AlgebraElement::identity(1), AlgebraElement::identity(1)),
            AlgebraElement::identity(2));
  std::mt19937_64 rng(4);
  const auto x = random_element(2, 4, rng);
  EXPECT_EQ(tensor(x, AlgebraElement::identity(0)), x);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_element(2, 3, rng);
    const auto b = random_element(1, 2, rng);
    const auto c = random_element(1, 2, rng);
    EXPECT_EQ(tensor(a, b + c), tensor(a, b) + tensor(a, c));
    EXPECT_EQ(tensor(b + c, a), tensor(b, a) + tensor(c, a));
  }
}

TEST(Element, EmbedExamples) {
  EXPECT_EQ(embed_p2(AlgebraElement(d(3)), 1, 3),
            AlgebraElement(PlanarDiagram(3, {{1, 2}, {3, 3}})));
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(embed_p2(AlgebraElement(d(6)), i, n), AlgebraElement::identity(n));
    }
  }
  EXPECT_EQ(embed_p2(AlgebraElement(d(5)), 2, 3),
            AlgebraElement(PlanarDiagram(3, {{1, 1}, {3, 3}})));
}

TEST(Element, EmbedErrors) {
  try {
    embed_p2(AlgebraElement(d(1)), 3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW(embed_p2(AlgebraElement(d(1)), 0, 3), Error);
  EXPECT_THROW(embed_p2(AlgebraElement::identity(3), 1, 4), Error);
}

TEST(Element, FarEmbeddingsCommute) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_element(2, 3, rng);
    const auto h = random_element(2, 3, rng);
    const auto a = embed_p2(g, 1, 4);
    const auto b = embed_p2(h, 3, 4);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Element, TextRendering) {
  AlgebraElement x(d(6), P::U(2));
  x.add_term(d(1), -1);
  EXPECT_EQ(x.to_string(), "(-1) * 2;\n(U^2) * 2; 1->1, 2->2\n");
}
