#include <gtest/gtest.h>

#include "mcgame/error.hpp"
#include "mcgame/lattice.hpp"

namespace mcgame {
namespace {

TEST(EncodeIndex, HandValues) {
  EXPECT_EQ(encode_index({0, 0}, 2, 2), 0u);
  EXPECT_EQ(encode_index({2, 1}, 2, 2), 5u);
  EXPECT_EQ(encode_index({2, 2}, 2, 2), 8u);
}

TEST(EncodeIndex, RejectsOutOfRange) {
  EXPECT_THROW(encode_index({3, 0}, 2, 2), GameError);
  EXPECT_THROW(encode_index({-1, 0}, 2, 2), GameError);
  EXPECT_THROW(encode_index({1}, 2, 2), GameError);
}

TEST(EncodeIndex, BijectiveOnSmallLattices) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const auto size = checked_table_size(n, k, 28);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        const auto x = decode_index(idx, n, k);
        ASSERT_EQ(encode_index(x, n, k), idx);
      }
      EXPECT_THROW(decode_index(size, n, k), GameError);
    }
  }
}

TEST(TableSize, GuardsExponentialGrowth) {
  EXPECT_EQ(checked_table_size(3, 2, 28), 27u);
  EXPECT_EQ(checked_table_size(28, 1, 28), std::uint64_t{1} << 28);
  EXPECT_THROW(checked_table_size(29, 1, 28), SizeLimitError);
  EXPECT_THROW(checked_table_size(15, 3, 28), SizeLimitError);
  EXPECT_NO_THROW(checked_table_size(15, 3, 30));
}

TEST(Support, Examples) {
  EXPECT_TRUE(support({0, 0, 0}).empty());
  EXPECT_EQ(support({2, 0, 1}), (Coalition{0, 2}));
  EXPECT_EQ(support({2, 2}), Coalition::full(2));
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel({0, 0}, 2).empty());
  EXPECT_EQ(kernel({2, 1}, 2), Coalition{0});
  EXPECT_EQ(kernel({3, 3, 3}, 3), Coalition::full(3));
}

TEST(Coalition, MembersAndLabels) {
  const Coalition c{3, 0, 1};
  EXPECT_EQ(c.members(), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(c.label(), "1+2+4");
  EXPECT_EQ(c.size(), 3);
  EXPECT_TRUE(Coalition{1}.subset_of(c));
  EXPECT_FALSE(Coalition{2}.subset_of(c));
  EXPECT_THROW((Coalition{1, 1}), GameError);
  EXPECT_THROW((Coalition{-1}), GameError);
}

TEST(Coalition, EnumerationOrder) {
  const auto all = coalitions_up_to(3, 3);
  ASSERT_EQ(all.size(), 7u);
  EXPECT_EQ(all[0], Coalition{0});
  EXPECT_EQ(all[2], Coalition{2});
  EXPECT_EQ(all[3], (Coalition{0, 1}));
  EXPECT_EQ(all[4], (Coalition{0, 2}));
  EXPECT_EQ(all[5], (Coalition{1, 2}));
  EXPECT_EQ(all[6], Coalition::full(3));
  EXPECT_EQ(coalitions_up_to(4, 2).size(), 10u);
}

}  // namespace
}  // namespace mcgame
