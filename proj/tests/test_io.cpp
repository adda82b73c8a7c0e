#include <gtest/gtest.h>

#include "roughalg/io.hpp"
#include "support.hpp"

using namespace roughalg;
using io::ParseError;

namespace {

std::pair<std::size_t, std::size_t> where(std::string_view text) {
  try {
    io::parse_algebra_file(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return {0, 0};
}

}  // namespace

TEST(Io, ParsesAndRendersRoundTrip) {
  const std::string text = "# a comment\nalgebra xor\norder 2\nzero 0\n0 1  # row 0\n\n1 0\n";
  const io::AlgebraFile f = io::parse_algebra_file(text);
  EXPECT_EQ(f.name, "xor");
  EXPECT_EQ(f.algebra, FiniteAlgebra::from_rows({{0, 1}, {1, 0}}, 0));
  const io::AlgebraFile again = io::parse_algebra_file(io::render_algebra(f.algebra, f.name));
  EXPECT_EQ(again.algebra, f.algebra);
  EXPECT_EQ(again.name, f.name);
}

TEST(Io, FixturesLoad) {
  for (int k = 1; k <= 4; ++k) {
    const io::AlgebraFile f = io::load_algebra(testing_support::table_path(k));
    EXPECT_EQ(f.name, "t" + std::to_string(k));
  }
  EXPECT_EQ(testing_support::table(2).order(), 5u);
  EXPECT_THROW(io::load_algebra("/nonexistent/x.alg"), Error);
}

TEST(Io, ErrorPositions) {
  EXPECT_EQ(where("zero 0\n"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(where("order 2\nzero 0\n0 1\n1\n").first, 4u);
  EXPECT_THROW(io::parse_algebra("order 2\nzero 0\n0 1\n"), ParseError);
  EXPECT_EQ(where("order 2\nzero 0\n0 x\n1 0\n"), (std::pair<std::size_t, std::size_t>{3, 3}));
  EXPECT_EQ(where("order 2\nzero 0\n0 5\n1 0\n").first, 3u);
  EXPECT_EQ(where("order 2\nzero 0\n0 1\n1 0\n1 0\n").first, 5u);
}

TEST(Io, Subsets) {
  EXPECT_EQ(io::parse_subset("{0,2}", 3), Subset(3, {0, 2}));
  EXPECT_EQ(io::parse_subset(" 2 , 0 ", 3), Subset(3, {0, 2}));
  EXPECT_EQ(io::parse_subset("", 3), Subset(3));
  EXPECT_EQ(io::parse_subset("{}", 3), Subset(3));
  EXPECT_THROW(io::parse_subset("0,,1", 3), ParseError);
  EXPECT_THROW(io::parse_subset("0,0", 3), ParseError);
  EXPECT_THROW(io::parse_subset("3", 3), ParseError);
  EXPECT_THROW(io::parse_subset("a", 3), ParseError);
}

TEST(Io, Partitions) {
  EXPECT_EQ(io::parse_partition("2,3|0,1", 4).to_string(), "0,1|2,3");
  EXPECT_THROW(io::parse_partition("0,1|1,2", 3), DomainError);
  EXPECT_THROW(io::parse_partition("0,1", 3), DomainError);
}

TEST(Io, SetValuedMaps) {
  const SetValuedMap f = io::parse_svmap("0:0;1:0,1;2:", 3, 2);
  EXPECT_EQ(f(1), Subset(2, {0, 1}));
  EXPECT_TRUE(f(2).empty());
  EXPECT_THROW(io::parse_svmap("0:0;1:1", 3, 2), ParseError);
  EXPECT_THROW(io::parse_svmap("0:0;0:1;1:0", 2, 2), ParseError);
  EXPECT_THROW(io::parse_svmap("0:0;1:2", 2, 2), ParseError);
}
