#include <gtest/gtest.h>

#include <numeric>

#include "arcdeg/partition.hpp"
#include "support.hpp"

namespace arcdeg {
namespace {

TEST(Partition, NormalizesOnConstruction) {
  const Partition p({1, 3, 0, 2, 3});
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 3, 2, 1}));
  EXPECT_EQ(p, Partition({3, 3, 2, 1}));
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
}

TEST(Partition, Weight) {
  EXPECT_EQ(weight(Partition{4, 3, 3, 2, 1}), 13);
  EXPECT_EQ(weight(Partition{}), 0);
  EXPECT_EQ(weight(Partition{5, 5, 4, 3, 3, 3, 2, 2, 1, 1}), 29);
}

TEST(Partition, Moment) {
  EXPECT_EQ(moment(Partition{4, 3, 3, 2, 1}), 19);
  EXPECT_EQ(moment(Partition{}), 0);
  EXPECT_EQ(moment(Partition{2, 1, 1, 1, 1}), 10);
}

TEST(Partition, Contains) {
  EXPECT_TRUE(contains(Partition{4, 3, 3, 2, 1}, Partition{3, 2, 1, 1}));
  EXPECT_FALSE(contains(Partition{2, 2}, Partition{3}));
  for (int k = 1; k <= 5; ++k) EXPECT_TRUE(contains(Partition{k}, Partition{k}));
}

TEST(Partition, SkewColumnCounts) {
  EXPECT_EQ(skew_column_counts(Partition{3, 3, 2, 1}, Partition{2, 2, 1}),
            (std::map<int, int>{{3, 2}, {2, 1}, {1, 1}}));
  EXPECT_EQ(skew_column_counts(Partition{2, 1}, Partition{1}),
            (std::map<int, int>{{2, 1}, {1, 1}}));
  EXPECT_TRUE(skew_column_counts(Partition{4}, Partition{4}).empty());
  EXPECT_THROW(skew_column_counts(Partition{2, 2}, Partition{3}), TypeMismatch);
}

TEST(Partition, ColumnStrip) {
  EXPECT_FALSE(is_column_strip(Partition{3, 3, 2, 1}, Partition{2, 2, 1}));
  EXPECT_TRUE(is_column_strip(Partition{2, 1}, Partition{1}));
  EXPECT_TRUE(is_column_strip(Partition{3}, Partition{3}));
  EXPECT_THROW(is_column_strip(Partition{1}, Partition{2}), TypeMismatch);
}

TEST(Partition, TextRoundTrip) {
  EXPECT_EQ(to_string(Partition{4, 3, 3, 2, 1}), "4,3,3,2,1");
  EXPECT_EQ(parse_partition("4,3,3,2,1"), (Partition{4, 3, 3, 2, 1}));
  EXPECT_EQ(parse_partition(" 4, 3 "), (Partition{4, 3}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(to_string(Partition{}), "");
  EXPECT_THROW(parse_partition("1,3"), ParseError);
  EXPECT_THROW(parse_partition("3,,1"), ParseError);
  EXPECT_THROW(parse_partition("3,x"), ParseError);
  EXPECT_THROW(parse_partition("-2"), ParseError);
}

TEST(Partition, Generators) {
  // p(n) for n = 1..10
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) {
    const auto all = partitions_of(n);
    EXPECT_EQ(all.size(), counts[n - 1]) << n;
    for (const auto& p : all) EXPECT_EQ(weight(p), n);
  }
  // Subpartitions of (2,1): (), (1), (2), (1,1), (2,1).
  EXPECT_EQ(subpartitions(Partition{2, 1}).size(), 5u);
  for (const auto& g : subpartitions(Partition{4, 2, 2})) {
    EXPECT_TRUE(contains(Partition{4, 2, 2}, g));
  }
}

TEST(PartitionProperty, SkewBoxesAddUp) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& beta : partitions_of(n)) {
      for (const auto& gamma : subpartitions(beta)) {
        const auto counts = skew_column_counts(beta, gamma);
        const int boxes = std::accumulate(counts.begin(), counts.end(), 0,
                                          [](int s, const auto& kv) { return s + kv.second; });
        EXPECT_EQ(weight(beta), weight(gamma) + boxes);
      }
    }
  }
}

TEST(PartitionProperty, MergingOnesLowersMoment) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto parts = lambda.parts();
      if (std::ranges::count(parts, 1) < 2) continue;
      parts.pop_back();
      parts.pop_back();
      parts.push_back(2);
      EXPECT_LT(moment(Partition(parts)), moment(lambda)) << to_string(lambda);
    }
  }
}

}  // namespace
}  // namespace arcdeg
