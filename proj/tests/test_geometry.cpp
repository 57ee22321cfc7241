#include <gtest/gtest.h>

#include <limits>

#include "arcdeg/geometry.hpp"
#include "arcdeg/poset.hpp"
#include "support.hpp"

namespace arcdeg {
namespace {

const Partition kTenBeta{4, 3, 3, 2, 1};
const Partition kTenGamma{3, 2, 1, 1};

// β = (3, 1^{n+1}), γ = (2)
std::pair<S2Object, S2Object> gap_pair(int n) {
  std::vector<Indecomposable> lower{Indecomposable::b2(3, 1)};
  std::vector<Indecomposable> upper{Indecomposable::p1(3)};
  for (int i = 0; i < n; ++i) lower.push_back(Indecomposable::p1(1));
  for (int i = 0; i < n + 1; ++i) upper.push_back(Indecomposable::p1(1));
  return {S2Object(lower), S2Object(upper)};
}

TEST(StratumDim, Examples) {
  EXPECT_EQ(stratum_dim(parse_object("P1(4)+P1(3)+P1(2)+P1(1)+P2(3)")), 156);
  const auto nested = object_of_diagram(parse_diagram("arcs:4-1,3-2; loops:3"), kTenBeta, kTenGamma);
  EXPECT_EQ(stratum_dim(nested), 160);
  EXPECT_EQ(stratum_dim(parse_object("P0(1)")), 0);
  EXPECT_EQ(stratum_dim(parse_object("P0(2)")), 2);
}

TEST(HallDegree, Examples) {
  EXPECT_EQ(hall_degree({1}, {1}, {}), 0);
  EXPECT_EQ(hall_degree({2}, {4, 2}, {3, 1}), 1);
  EXPECT_EQ(hall_degree({2, 1, 1, 1, 1}, kTenBeta, kTenGamma), 2);
}

TEST(AutDegree, Examples) {
  EXPECT_EQ(aut_degree({1}), 1);
  EXPECT_EQ(aut_degree({2, 2, 2}), 18);
  EXPECT_EQ(aut_degree({2, 1, 1, 1, 1}), 26);
}

TEST(SubspaceOrbitDim, Examples) {
  EXPECT_EQ(subspace_orbit_dim(parse_object("P1(1)")), 1);
  EXPECT_EQ(subspace_orbit_dim(parse_object("P1(4)+P1(3)+P1(2)+P1(1)+P2(3)")), 28);
  EXPECT_EQ(subspace_orbit_dim(parse_object("P0(3)+P0(1)")), 0);
}

TEST(Geometry, OverflowIsReported) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(detail::checked_mul(big, 2), std::overflow_error);
  EXPECT_THROW(detail::checked_add(big, 1), std::overflow_error);
  EXPECT_THROW(detail::checked_sub(-big, 2), std::overflow_error);
}

TEST(Geometry, DimensionGapGrowsWithoutBound) {
  for (int n = 0; n <= 20; ++n) {
    const auto [lower, upper] = gap_pair(n);
    ASSERT_EQ(object_type(lower), object_type(upper));
    EXPECT_EQ(enumerate_objects(object_type(lower).beta, object_type(lower).gamma).size(), 2u);
    EXPECT_EQ(stratum_dim(lower) - stratum_dim(upper), n + 1) << n;
  }
}

TEST(GeometryProperty, ConsistencyIdentity) {
  for (const auto& [beta, gamma] : testing::all_types(8)) {
    for (const auto& o : enumerate_objects(beta, gamma)) {
      const auto a = alpha_of(o);
      const std::int64_t rhs = weight(a) * weight(a) + weight(beta) * weight(beta) -
                               (aut_degree(a) + aut_degree(beta)) + subspace_orbit_dim(o);
      EXPECT_EQ(stratum_dim(o), rhs) << to_string(o);
    }
  }
}

TEST(GeometryProperty, DownMovesRaiseDimension) {
  for (const auto& [beta, gamma] : testing::all_types(8)) {
    const ArcPoset poset(beta, gamma);
    for (const auto& e : poset.moves()) {
      EXPECT_GE(stratum_dim(poset.elements()[e.lower]), stratum_dim(poset.elements()[e.upper]) + 1)
          << to_string(e.move);
    }
    for (std::size_t i = 0; i < poset.size(); ++i) {
      for (std::size_t j = 0; j < poset.size(); ++j) {
        if (i != j && poset.leq(i, j)) {
          EXPECT_GT(stratum_dim(poset.elements()[i]), stratum_dim(poset.elements()[j]));
        }
      }
    }
  }
}

}  // namespace
}  // namespace arcdeg
