#include "grass/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace grass {
namespace {

using P = std::vector<int>;

std::vector<Partition> parts(std::initializer_list<P> list) {
  std::vector<Partition> out;
  for (const auto& p : list) out.emplace_back(p);
  return out;
}

TEST(Partition, StripsTrailingZerosAndValidates) {
  Partition a(P{2, 1, 0, 0});
  EXPECT_EQ(std::vector<int>(a.parts().begin(), a.parts().end()), (P{2, 1}));
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.length(), 2);
  EXPECT_EQ(a.part(5), 0);
  EXPECT_TRUE(Partition().empty());
  EXPECT_THROW(Partition(P{1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition(P{2, -1}), std::invalid_argument);
  EXPECT_THROW(Box(0, 2), std::invalid_argument);
}

TEST(Partition, FitsBox) {
  Box b(2, 2);
  EXPECT_TRUE(fits_box(Partition(), b));
  EXPECT_TRUE(fits_box(Partition(P{2, 1}), b));
  EXPECT_FALSE(fits_box(Partition(P{3, 1}), b));
  EXPECT_FALSE(fits_box(Partition(P{1, 1, 1}), b));
}

TEST(Partition, EnumerateBox) {
  EXPECT_EQ(enumerate_box(Box(2, 2)), parts({{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}}));
  EXPECT_EQ(enumerate_box(Box(2, 2), 2), parts({{2}, {1, 1}}));
  EXPECT_EQ(enumerate_box(Box(1, 1)), parts({{}, {1}}));
  EXPECT_THROW(enumerate_box(Box(2, 2), 5), std::invalid_argument);
}

TEST(Partition, AddBoxMoves) {
  Box b(2, 2);
  EXPECT_EQ(add_box_moves(Partition(), b), parts({{1}}));
  EXPECT_EQ(add_box_moves(Partition(P{1}), b), parts({{2}, {1, 1}}));
  EXPECT_TRUE(add_box_moves(Partition(P{2, 2}), b).empty());
}

TEST(Partition, RemoveBoxMoves) {
  Box b(2, 2);
  auto one = remove_box_moves(Partition(P{1, 1}), b);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].row, 2);
  EXPECT_EQ(one[0].result, Partition(P{1}));
  auto two = remove_box_moves(Partition(P{2, 1}), b);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].row, 1);
  EXPECT_EQ(two[0].result, Partition(P{1, 1}));
  EXPECT_EQ(two[1].row, 2);
  EXPECT_EQ(two[1].result, Partition(P{2}));
  EXPECT_TRUE(remove_box_moves(Partition(), b).empty());
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition(P{2, 1})), Partition(P{2, 1}));
  EXPECT_EQ(conjugate(Partition(P{3})), Partition(P{1, 1, 1}));
  EXPECT_EQ(conjugate(Partition()), Partition());
  EXPECT_EQ(conjugate(Partition(P{4, 2, 2, 1})), Partition(P{4, 3, 1, 1}));
}

TEST(Partition, Text) {
  EXPECT_EQ(to_text(Partition(P{2, 1})), "2,1");
  EXPECT_EQ(to_text(Partition()), "[]");
  EXPECT_EQ(parse_partition("2,1"), Partition(P{2, 1}));
  EXPECT_EQ(parse_partition("[3, 1]"), Partition(P{3, 1}));
  EXPECT_EQ(parse_partition("[]"), Partition());
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
  EXPECT_THROW(parse_partition("a"), std::invalid_argument);
}

TEST(PartitionProperties, AddRemoveAdjointness) {
  for (int rows = 1; rows <= 5; ++rows) {
    for (int cols = 1; cols <= 5; ++cols) {
      Box b(rows, cols);
      for (const auto& lambda : enumerate_box(b)) {
        for (const auto& mu : add_box_moves(lambda, b)) {
          EXPECT_TRUE(fits_box(mu, b));
          EXPECT_EQ(mu.size(), lambda.size() + 1);
          auto removed = remove_box_moves(mu, b);
          long hits = std::count_if(removed.begin(), removed.end(), [&](const RemovedBox& r) { return r.result == lambda; });
          EXPECT_EQ(hits, 1) << to_text(lambda) << " -> " << to_text(mu);
        }
      }
    }
  }
}

TEST(PartitionProperties, CountsAndGrading) {
  for (int rows = 1; rows <= 11; ++rows) {
    for (int cols = 1; rows + cols <= 12; ++cols) {
      Box b(rows, cols);
      auto all = enumerate_box(b);
      EXPECT_EQ(static_cast<std::int64_t>(all.size()), binomial(rows + cols, rows));
      std::size_t graded = 0;
      for (int size = 0; size <= rows * cols; ++size) graded += enumerate_box(b, size).size();
      EXPECT_EQ(graded, all.size());
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), graded_less));
    }
  }
}

TEST(PartitionProperties, ConjugateIsInvolution) {
  for (const auto& lambda : enumerate_box(Box(5, 5))) EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
}

}  // namespace
}  // namespace grass
