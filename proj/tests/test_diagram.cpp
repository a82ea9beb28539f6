#include <random>
#include <set>

#include <gtest/gtest.h>

#include "rookbraid/diagram.hpp"
#include "rookbraid/error.hpp"
#include "test_oracles.hpp"

using namespace rookbraid;

namespace {

test_oracle::PartialMap as_map(const PlanarDiagram& d) {
  test_oracle::PartialMap m;
  for (const auto& e : d.edges()) m[e.bottom] = e.top;
  return m;
}

PlanarDiagram from_map(int n, const test_oracle::PartialMap& m) {
  std::vector<Edge> edges;
  for (const auto& [b, t] : m) edges.push_back({b, t});
  return PlanarDiagram(n, edges);
}

const auto& basis() { return p2_basis(); }

}  // namespace

TEST(Diagram, RejectsCrossingsAndBadLabels) {
  EXPECT_THROW(PlanarDiagram(2, {{1, 2}, {2, 1}}), Error);
  EXPECT_THROW(PlanarDiagram(2, {{1, 1}, {2, 1}}), Error);
  EXPECT_THROW(PlanarDiagram(2, {{3, 1}}), Error);
  EXPECT_FALSE(is_planar(3, {{1, 3}, {2, 2}}));
  EXPECT_TRUE(is_planar(3, {{3, 3}, {1, 2}}));  // order of input is irrelevant
}

TEST(Diagram, ComposeStackingExample) {
  const PlanarDiagram d1(3, {{1, 2}, {3, 3}});
  const PlanarDiagram d2(3, {{3, 1}});
  EXPECT_EQ(compose(d1, d2), PlanarDiagram(3, {{3, 2}}));
}

TEST(Diagram, IdentityAndEmptyLaws) {
  for (const auto& d : enumerate_planar(3)) {
    EXPECT_EQ(compose(PlanarDiagram::identity(3), d), d);
    EXPECT_EQ(compose(d, PlanarDiagram::identity(3)), d);
    EXPECT_EQ(compose(PlanarDiagram::empty(3), d), PlanarDiagram::empty(3));
  }
}

TEST(Diagram, ComposeSizeMismatch) {
  try {
    compose(PlanarDiagram::identity(2), PlanarDiagram::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
}

TEST(Diagram, ComposeMatchesMapCompositionExhaustivelyInP3) {
  const auto all = enumerate_planar(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(as_map(compose(a, b)), test_oracle::compose_maps(as_map(a), as_map(b)));
    }
  }
}

TEST(Diagram, AssociativityOnP2AndRandomTriples) {
  const auto p2 = enumerate_planar(2);
  for (const auto& a : p2)
    for (const auto& b : p2)
      for (const auto& c : p2) EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));

  std::mt19937_64 rng(3);
  for (int n : {3, 4}) {
    const auto all = enumerate_planar(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 300; ++i) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto& c = all[pick(rng)];
      EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
  }
}

TEST(Diagram, VerticalLineCountIsCyclic) {
  const auto p3 = enumerate_planar(3);
  for (const auto& a : p3)
    for (const auto& b : p3)
      EXPECT_EQ(compose(a, b).vertical_line_count(), compose(b, a).vertical_line_count());

  std::mt19937_64 rng(9);
  const auto p4 = enumerate_planar(4);
  std::uniform_int_distribution<std::size_t> pick(0, p4.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const auto& a = p4[pick(rng)];
    const auto& b = p4[pick(rng)];
    EXPECT_EQ(compose(a, b).vertical_line_count(), compose(b, a).vertical_line_count());
  }
}

TEST(Diagram, VerticalLineCountExamples) {
  EXPECT_EQ(PlanarDiagram::identity(4).vertical_line_count(), 4);
  EXPECT_EQ(basis()[4].vertical_line_count(), 1);
  EXPECT_EQ(PlanarDiagram(3, {{3, 2}}).vertical_line_count(), 0);
}

TEST(Diagram, TensorExamples) {
  EXPECT_EQ(tensor(PlanarDiagram::identity(1), PlanarDiagram::identity(1)),
            PlanarDiagram::identity(2));
  EXPECT_EQ(tensor(basis()[2], PlanarDiagram::identity(1)),
            PlanarDiagram(3, {{1, 2}, {3, 3}}));
  EXPECT_EQ(tensor(PlanarDiagram::empty(1), PlanarDiagram::identity(1)), basis()[4]);
  EXPECT_EQ(tensor(basis()[3], PlanarDiagram::empty(0)), basis()[3]);
}

TEST(Diagram, EnumerationMatchesBruteForce) {
  for (int n = 0; n <= 5; ++n) {
    const auto all = enumerate_planar(n);
    EXPECT_EQ(static_cast<long long>(all.size()), test_oracle::binomial(2 * n, n));
    std::set<test_oracle::PartialMap> mine;
    for (const auto& d : all) mine.insert(as_map(d));
    const auto brute = test_oracle::all_planar_maps(n);
    EXPECT_EQ(mine, std::set<test_oracle::PartialMap>(brute.begin(), brute.end()));
  }
  EXPECT_EQ(enumerate_planar(1).size(), 2u);
  EXPECT_EQ(enumerate_planar(3).size(), 20u);
}

TEST(Diagram, EnumerationCap) {
  EXPECT_THROW(enumerate_planar(7), Error);
  EXPECT_EQ(enumerate_planar(7, 7).size(), 3432u);
}

TEST(Diagram, ClosureUnderComposition) {
  const auto p4 = enumerate_planar(4);
  for (std::size_t i = 0; i < p4.size(); i += 3) {
    for (std::size_t j = 0; j < p4.size(); j += 5) {
      const auto c = compose(p4[i], p4[j]);
      EXPECT_TRUE(is_planar(4, c.edges()));
    }
  }
}

TEST(Diagram, P2BasisOrdering) {
  EXPECT_EQ(basis()[0], PlanarDiagram::empty(2));
  EXPECT_EQ(basis()[1], from_map(2, {{1, 1}}));
  EXPECT_EQ(basis()[2], from_map(2, {{1, 2}}));
  EXPECT_EQ(basis()[3], from_map(2, {{2, 1}}));
  EXPECT_EQ(basis()[4], from_map(2, {{2, 2}}));
  EXPECT_EQ(basis()[5], PlanarDiagram::identity(2));
  const auto p2 = enumerate_planar(2);
  std::set<PlanarDiagram> all(p2.begin(), p2.end());
  EXPECT_EQ(all, std::set<PlanarDiagram>(basis().begin(), basis().end()));
}

TEST(Diagram, P2CompositionExamples) {
  EXPECT_EQ(compose(basis()[2], basis()[3]), basis()[4]);
  EXPECT_EQ(compose(basis()[1], basis()[4]), basis()[0]);
}

TEST(Diagram, TextForm) {
  EXPECT_EQ(PlanarDiagram(3, {{1, 2}, {3, 3}}).to_string(), "3; 1->2, 3->3");
  EXPECT_EQ(PlanarDiagram::empty(2).to_string(), "2;");
}
