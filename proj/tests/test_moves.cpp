#include <gtest/gtest.h>

#include "arcdeg/moves.hpp"
#include "support.hpp"

namespace arcdeg {
namespace {

bool contains_result(const std::vector<DownStep>& steps, const Move& mv, const ArcDiagram& d) {
  return std::ranges::any_of(steps,
                             [&](const DownStep& s) { return s.move == mv && s.result == d; });
}

TEST(Move, Validation) {
  EXPECT_THROW(Move::a(6, 5, 5, 1), std::invalid_argument);
  EXPECT_THROW(Move::e(1, 2), std::invalid_argument);
  EXPECT_THROW(Move(MoveKind::B, {3, 2}), std::invalid_argument);
  EXPECT_THROW(Move::b(3, 1, 0), std::invalid_argument);
  EXPECT_EQ(to_string(Move::a(6, 5, 3, 1)), "A(6,5,3,1)");
  EXPECT_EQ(to_string(Move::a(6, 4, 3, 1)), "A'(6,4,3,1)");
  EXPECT_TRUE(Move::a(6, 4, 3, 1).is_a_prime());
  EXPECT_FALSE(Move::c(6, 4, 3, 1).is_a_prime());
  EXPECT_EQ(to_string(Move::e(7, 1)), "E(7,1)");
}

TEST(Move, CanonicalOrder) {
  EXPECT_LT(Move::a(9, 8, 7, 6), Move::b(3, 2, 1));
  EXPECT_LT(Move::b(5, 2, 1), Move::b(5, 3, 1));
  EXPECT_LT(Move::d(9, 8, 7), Move::e(2, 1));
}

TEST(DownMoves, Examples) {
  const ArcDiagram intro({{5, 1}, {4, 2}}, {3, 3}, {});
  EXPECT_TRUE(contains_result(down_moves(intro), Move::b(5, 3, 1),
                              ArcDiagram({{5, 3}, {4, 2}}, {3, 1}, {})));
  const ArcDiagram single_arc({{3, 1}}, {3, 2}, {});
  EXPECT_TRUE(
      contains_result(down_moves(single_arc), Move::d(3, 2, 1), ArcDiagram({{2, 1}}, {3, 3}, {})));
  EXPECT_TRUE(down_moves(ArcDiagram{}).empty());
  EXPECT_TRUE(down_moves(ArcDiagram({}, {}, {4, 3})).empty());
}

TEST(DownMoves, CanonicalAndDistinct) {
  const auto moves = applicable_moves(diagram_of_object(testing::worked_z()));
  EXPECT_TRUE(std::ranges::is_sorted(moves));
  EXPECT_EQ(std::ranges::adjacent_find(moves), moves.end());
  EXPECT_EQ(moves.front(), Move::a(6, 5, 3, 1));
}

TEST(ApplyDown, Examples) {
  const auto z = diagram_of_object(testing::worked_z());
  EXPECT_EQ(apply_down(z, Move::a(6, 5, 3, 1)), ArcDiagram({{6, 1}, {5, 3}}, {7, 4, 2}, {}));
  const auto z2 = diagram_of_object(testing::worked_z2());
  EXPECT_EQ(apply_down(z2, Move::e(7, 1)),
            ArcDiagram({{7, 1}, {6, 2}, {5, 3}}, {4}, {}));
  EXPECT_THROW(apply_down(ArcDiagram({}, {3, 3}, {}), Move::e(3, 1)), MoveNotApplicable);
  EXPECT_THROW(apply_down(z, Move::c(9, 5, 3, 1)), MoveNotApplicable);
}

TEST(ApplyDown, LoopsUntouched) {
  const ArcDiagram d({{5, 1}}, {3}, {4, 2});
  for (const auto& step : down_moves(d)) EXPECT_EQ(step.result.loops(), d.loops());
}

TEST(SesWitness, Rows) {
  const auto b = [](int m, int r) { return S2Object{Indecomposable::b2(m, r)}; };
  const auto p1 = [](int m) { return S2Object{Indecomposable::p1(m)}; };
  {
    const auto w = ses_witness(Move::a(9, 7, 5, 2));
    EXPECT_EQ(w.start, b(7, 2));
    EXPECT_EQ(w.middle, b(9, 2) + b(7, 5));
    EXPECT_EQ(w.end, b(9, 5));
  }
  {
    const auto w = ses_witness(Move::d(7, 4, 2));
    EXPECT_EQ(w.start, p1(4));
    EXPECT_EQ(w.middle, p1(7) + b(4, 2));
    EXPECT_EQ(w.end, b(7, 2));
  }
  {
    const auto w = ses_witness(Move::e(6, 3));
    EXPECT_EQ(w.start, p1(6));
    EXPECT_EQ(w.middle, b(6, 3));
    EXPECT_EQ(w.end, p1(3));
  }
  // A′: the nested inner arc (n, n−1) is the composite.
  const auto w = ses_witness(Move::a(6, 4, 3, 1));
  EXPECT_EQ(w.middle, b(6, 1) + parse_object("P2(4)+P0(3)"));
}

TEST(Region, Examples) {
  for (int m = 3; m <= 7; ++m) {
    for (int r = 1; r < m; ++r) {
      for (int l = 1; l <= 9; ++l) {
        EXPECT_EQ(in_region(Move::e(m, r), Indecomposable::p1(l)), l <= r);
      }
    }
  }
  EXPECT_TRUE(in_region(Move::a(6, 5, 3, 1), Indecomposable::b2(6, 2)));
  EXPECT_FALSE(in_region(Move::a(6, 5, 3, 1), Indecomposable::b2(7, 2)));
  for (int l = 1; l <= 10; ++l) {
    EXPECT_FALSE(in_region(Move::d(8, 5, 2), Indecomposable::p1(l)));
    EXPECT_FALSE(in_region(Move::c(8, 5, 3, 2), Indecomposable::p0(l)));
  }
}

// Every single move inside each poset with |β| ≤ 7.
class UnitMoves : public ::testing::Test {
 protected:
  struct Case {
    S2Object upper;
    S2Object lower;
    Move move;
    Partition beta;
  };

  void SetUp() override {
    for (const auto& [beta, gamma] : testing::all_types(7)) {
      for (const auto& upper : enumerate_objects(beta, gamma)) {
        for (const auto& step : down_moves(diagram_of_object(upper))) {
          cases.push_back({upper, object_of_diagram(step.result, beta, gamma), step.move, beta});
        }
      }
    }
  }

  std::vector<Case> cases;
};

TEST_F(UnitMoves, RegionEqualsDeltaHom) {
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) {
    for (const auto& x : test_set(c.beta, c.beta.largest() + 4)) {
      EXPECT_EQ(delta_hom(c.lower, c.upper, x), in_region(c.move, x) ? 1 : 0)
          << to_string(c.move) << " on " << to_string(c.upper) << " at " << to_string(x);
    }
  }
}

TEST_F(UnitMoves, SesSanity) {
  for (const auto& c : cases) {
    const auto w = ses_witness(c.move);
    const auto ends = object_type(w.start + w.end);
    EXPECT_EQ(ends, object_type(w.middle)) << to_string(c.move);
    EXPECT_EQ(weight(alpha_of(w.start)) + weight(alpha_of(w.end)), weight(alpha_of(w.middle)));
    for (const auto& x : test_set(c.beta)) {
      EXPECT_LE(hom_obj(x, w.middle), hom_obj(x, w.start) + hom_obj(x, w.end));
    }
    // The ends are what the move removes from the upper object.
    EXPECT_EQ(c.upper.size() + w.middle.size(), c.lower.size() + w.start.size() + w.end.size())
        << to_string(c.move);
  }
}

TEST_F(UnitMoves, ComplexityDrops) {
  for (const auto& c : cases) {
    const auto before = complexity(diagram_of_object(c.upper));
    const auto after = complexity(diagram_of_object(c.lower));
    if (c.move.kind() == MoveKind::E) {
      EXPECT_EQ(after.first + 2, before.first);
    } else {
      EXPECT_EQ(after.first, before.first);
      EXPECT_LT(after.second, before.second);
    }
  }
}

TEST_F(UnitMoves, UpInvertsDown) {
  for (const auto& c : cases) {
    EXPECT_EQ(apply_up(diagram_of_object(c.lower), c.move), diagram_of_object(c.upper));
  }
}

}  // namespace
}  // namespace arcdeg
