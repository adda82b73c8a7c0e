#include <gtest/gtest.h>

#include <algorithm>

#include "roughalg/subset.hpp"

using namespace roughalg;

TEST(Subset, BasicMembership) {
  Subset s(5, {0, 3});
  EXPECT_TRUE(s.contains(0));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(1));
  EXPECT_FALSE(s.contains(7));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.min(), 0u);
  EXPECT_EQ(s.to_string(), "{0,3}");
  EXPECT_EQ(Subset(3).to_string(), "{}");
}

TEST(Subset, RejectsOutOfRangeElements) {
  EXPECT_THROW(Subset(3, {3}), DomainError);
  EXPECT_THROW(Subset(65), DomainError);
  EXPECT_THROW(Subset::from_mask(2, 0b100), DomainError);
}

TEST(Subset, SetAlgebra) {
  const Subset a(4, {0, 1});
  const Subset b(4, {1, 2});
  EXPECT_EQ(a | b, Subset(4, {0, 1, 2}));
  EXPECT_EQ(a & b, Subset(4, {1}));
  EXPECT_EQ(a - b, Subset(4, {0}));
  EXPECT_EQ(a.complement(), Subset(4, {2, 3}));
  EXPECT_TRUE(Subset(4, {1}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(Subset(4, {0}).intersects(Subset(4, {3})));
  EXPECT_TRUE(Subset::full(4).is_full());
}

TEST(Subset, MixedCarriersThrow) {
  EXPECT_THROW((void)(Subset(3) | Subset(4)), DomainError);
  EXPECT_THROW((void)Subset(3).is_subset_of(Subset(4)), DomainError);
}

TEST(Subset, FullCarrierOf64) {
  const Subset s = Subset::full(64);
  EXPECT_EQ(s.size(), 64u);
  EXPECT_TRUE(s.complement().empty());
}

TEST(Subset, CanonicalOrder) {
  const auto all = all_subsets(3);
  ASSERT_EQ(all.size(), 8u);
  std::vector<std::string> text;
  for (const auto& s : all) text.push_back(s.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}",
                                            "{0,1,2}"}));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), canonical_less));
  EXPECT_THROW(all_subsets(21), SizeLimitError);
}

TEST(Subset, CanonicalLessIsLexicographicWithinCardinality) {
  // {0,3} precedes {1,2}: first elements differ, 0 < 1.
  EXPECT_TRUE(canonical_less(Subset(4, {0, 3}), Subset(4, {1, 2})));
  EXPECT_FALSE(canonical_less(Subset(4, {1, 2}), Subset(4, {0, 3})));
  EXPECT_TRUE(canonical_less(Subset(4, {3}), Subset(4, {0, 1})));
}
