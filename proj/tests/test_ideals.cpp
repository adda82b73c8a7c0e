#include <gtest/gtest.h>

#include "roughalg/ideals.hpp"
#include "support.hpp"

using namespace roughalg;
using testing_support::table;
namespace oracle = testing_support::oracle;

namespace {

std::vector<std::string> strings(const std::vector<Subset>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

using V = std::vector<std::string>;

}  // namespace

TEST(Ideals, FrozenLists) {
  EXPECT_EQ(strings(enumerate_ideals(table(1), IdealKind::ideal)),
            (V{"{0}", "{0,1}", "{0,2}", "{0,3}", "{0,1,2,3}"}));
  EXPECT_EQ(strings(enumerate_ideals(table(1), IdealKind::strong)),
            (V{"{0}", "{0,1}", "{0,2}", "{0,3}", "{0,1,2,3}"}));
  EXPECT_EQ(strings(enumerate_ideals(table(2), IdealKind::ideal)), (V{"{0}", "{0,1,2,3,4}"}));
  EXPECT_EQ(strings(enumerate_ideals(table(3), IdealKind::ideal)),
            (V{"{0}", "{0,1}", "{0,1,2}", "{0,1,2,3}"}));
  EXPECT_EQ(strings(enumerate_ideals(table(3), IdealKind::strong)), (V{"{0}", "{0,1}", "{0,1,2,3}"}));
  EXPECT_EQ(strings(enumerate_ideals(table(4), IdealKind::ideal)), (V{"{0,1,2,3}"}));
}

TEST(Ideals, Fixture4SetIsNotAnIdeal) {
  const IdealReport r = is_ideal(table(4), Subset(4, {0, 1, 2}));
  EXPECT_TRUE(r.contains_zero);
  EXPECT_FALSE(r.is_ideal);
  EXPECT_EQ(r.closure_witnesses,
            (std::vector{Witness::of(3, 0), Witness::of(3, 1), Witness::of(3, 2)}));
}

TEST(Ideals, Fixture2PairIsNotAnIdeal) {
  const IdealReport r = is_ideal(table(2), Subset(5, {0, 1}));
  EXPECT_FALSE(r.is_ideal);
  EXPECT_EQ(r.closure_witnesses, std::vector{Witness::of(3, 1)});
}

TEST(Ideals, StrongIdealChecksAllThreeConditions) {
  const FiniteAlgebra t3 = table(3);
  const IdealReport r = is_strong_ideal(t3, Subset(4, {0, 1, 2}));
  EXPECT_TRUE(r.is_ideal);
  EXPECT_TRUE(r.strong_checked);
  EXPECT_FALSE(r.is_strong);
  EXPECT_FALSE(r.strong_witnesses.empty());
  for (const Witness& w : r.strong_witnesses) {
    const auto [x, y, z] = w.at;
    EXPECT_TRUE(r.subset.contains(t3.op(t3.op(x, y), z)));
    EXPECT_TRUE(r.subset.contains(y));
    EXPECT_FALSE(r.subset.contains(t3.op(x, z)));
  }
  EXPECT_TRUE(is_strong_ideal(t3, Subset(4, {0})).is_strong);
  EXPECT_FALSE(is_ideal(t3, Subset(4, {1})).contains_zero);
}

TEST(Ideals, ListPredicateConsistencyAgainstOracle) {
  for (int k = 1; k <= 4; ++k) {
    const FiniteAlgebra alg = table(k);
    const auto ideals = enumerate_ideals(alg, IdealKind::ideal, Exec::serial);
    const auto strong = enumerate_ideals(alg, IdealKind::strong, Exec::serial);
    for (const Subset& s : all_subsets(alg.order())) {
      const bool listed = std::find(ideals.begin(), ideals.end(), s) != ideals.end();
      const bool listed_strong = std::find(strong.begin(), strong.end(), s) != strong.end();
      EXPECT_EQ(listed, oracle::is_ideal(alg, oracle::to_set(s))) << "t" << k << ' ' << s;
      EXPECT_EQ(listed, is_ideal(alg, s).is_ideal);
      EXPECT_EQ(listed_strong, oracle::is_strong_ideal(alg, oracle::to_set(s))) << "t" << k << ' ' << s;
      if (listed_strong) EXPECT_TRUE(listed);
    }
  }
}

TEST(Ideals, ParallelMatchesSerial) {
  for (int k = 1; k <= 4; ++k) {
    for (IdealKind kind : {IdealKind::ideal, IdealKind::strong}) {
      EXPECT_EQ(enumerate_ideals(table(k), kind, Exec::serial),
                enumerate_ideals(table(k), kind, Exec::parallel));
    }
  }
}

TEST(Ideals, SizeGuard) {
  EXPECT_THROW(enumerate_ideals(table(2), IdealKind::ideal, Exec::serial, 4), SizeLimitError);
}
