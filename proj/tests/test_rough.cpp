#include <gtest/gtest.h>

#include "roughalg/laws.hpp"
#include "roughalg/rough.hpp"
#include "support.hpp"

using namespace roughalg;
using testing_support::table;
namespace oracle = testing_support::oracle;

namespace {

// The five-element partition used by the worked example over t2.
Partition example_partition() {
  return Partition(5, {Subset(5, {0, 1}), Subset(5, {2}), Subset(5, {3}), Subset(5, {4})});
}

Verdict verdict_of(const LawReport& r, Law law) {
  for (const LawResult& item : r.items) {
    if (item.law == law) return item.outcome.verdict;
  }
  ADD_FAILURE() << "law missing from report: " << info(law).id;
  return Verdict::not_applicable;
}

}  // namespace

TEST(Rough, WorkedExampleValues) {
  const ApproximationSpace space(example_partition());
  EXPECT_EQ(lower(space, Subset(5, {0, 1})), Subset(5, {0, 1}));
  EXPECT_EQ(lower(space, Subset(5, {0, 1, 2, 3})), Subset(5, {0, 1, 2, 3}));
  EXPECT_EQ(upper(space, Subset(5, {0})), Subset(5, {0, 1}));
  EXPECT_EQ(upper(space, Subset(5, {1, 2, 3})), Subset(5, {0, 1, 2, 3}));
  // upper({0}) = {0,1} and lower({0}) is empty.
  EXPECT_EQ(boundary(space, Subset(5, {0})), Subset(5, {0, 1}));
  EXPECT_TRUE(is_rough(space, Subset(5, {0})));
  EXPECT_EQ(rough_pair(space, Subset(5, {0, 1})), (RoughPair{Subset(5, {0, 1}), Subset(5, {0, 1})}));
}

TEST(Rough, WorkedExampleDiscrepancies) {
  // The printed upper({2}) = {0,2} cannot be reproduced: {2} is a whole
  // class. The printed lower({0,2}) = {2} does agree.
  const ApproximationSpace space(example_partition());
  EXPECT_EQ(upper(space, Subset(5, {2})), Subset(5, {2}));
  EXPECT_NE(upper(space, Subset(5, {2})), Subset(5, {0, 2}));
  EXPECT_EQ(lower(space, Subset(5, {0, 2})), Subset(5, {2}));
  EXPECT_EQ(upper(space, Subset(5, {0, 2})), Subset(5, {0, 1, 2}));
}

TEST(Rough, TrivialCases) {
  const ApproximationSpace discrete(Partition::discrete(4));
  for (const Subset& a : all_subsets(4)) {
    EXPECT_TRUE(is_definable(discrete, a));
    EXPECT_EQ(lower(discrete, a), a);
  }
  const ApproximationSpace single(Partition::single(4));
  EXPECT_TRUE(lower(single, Subset(4, {0, 1, 2})).empty());
  EXPECT_EQ(upper(single, Subset(4, {3})), Subset::full(4));
}

TEST(Rough, SpaceValidatesSizes) {
  EXPECT_THROW(ApproximationSpace(Partition::discrete(3), table(1)), DomainError);
  EXPECT_THROW(lower(Partition::discrete(3), Subset(4)), DomainError);
}

TEST(Rough, AgreesWithOracleOnAllInputs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Partition& p : all_partitions(n)) {
      const auto cs = oracle::to_classes(p);
      for (const Subset& a : all_subsets(n)) {
        const auto as = oracle::to_set(a);
        ASSERT_EQ(oracle::to_set(lower(p, a)), oracle::lower(cs, n, as)) << p.to_string() << a;
        ASSERT_EQ(oracle::to_set(upper(p, a)), oracle::upper(cs, n, as)) << p.to_string() << a;
      }
    }
  }
}

TEST(Rough, DefinableIffUnionOfClasses) {
  for (const Partition& p : all_partitions(4)) {
    const ApproximationSpace space(p);
    for (const Subset& a : all_subsets(4)) {
      bool union_of_classes = true;
      for (const Subset& c : p.classes()) {
        if (c.intersects(a) && !c.is_subset_of(a)) union_of_classes = false;
      }
      EXPECT_EQ(is_definable(space, a), union_of_classes);
    }
  }
}

TEST(Laws, IdsRoundTripAndGroups) {
  for (const LawInfo& li : all_laws()) {
    EXPECT_EQ(parse_law(li.id), li.law);
    EXPECT_EQ(&info(li.law), &li);
  }
  EXPECT_EQ(law_group("2-1").size(), 13u);
  EXPECT_EQ(law_group("3-1").size(), 6u);
  EXPECT_EQ(law_group("3-2").size(), 2u);
  EXPECT_TRUE(law_group("9-9").empty());
}

TEST(Laws, PawlakOnEmptySets) {
  const ApproximationSpace space(example_partition());
  const LawReport r = check_pawlak(space, Subset(5), Subset(5));
  for (const LawResult& item : r.items) {
    if (info(item.law).needs_algebra) {
      EXPECT_EQ(item.outcome.verdict, Verdict::not_applicable);
      EXPECT_FALSE(item.note.empty());
    } else {
      EXPECT_EQ(item.outcome.verdict, Verdict::holds) << info(item.law).id;
    }
  }
}

TEST(Laws, PawlakWorkedExample) {
  const ApproximationSpace space(example_partition(), table(2));
  const LawReport r = check_pawlak(space, Subset(5, {0}), Subset(5, {2}));
  EXPECT_EQ(verdict_of(r, Law::pawlak_7), Verdict::holds);
  const ApproximationSpace t3(Partition::single(4), table(3));
  EXPECT_EQ(verdict_of(check_pawlak(t3, Subset(4, {0, 1}), Subset(4, {0})), Law::pawlak_11_sub),
            Verdict::holds);
}

TEST(Laws, ApproxUnionLowerIsStrict) {
  const ApproximationSpace space(example_partition());
  const Subset a(5, {0});
  const Subset b(5, {1});
  EXPECT_EQ(verdict_of(check_prop31(space, a, b), Law::approx_5), Verdict::holds);
  EXPECT_TRUE((lower(space, a) | lower(space, b)).empty());
  EXPECT_EQ(lower(space, a | b), Subset(5, {0, 1}));
  EXPECT_EQ(evaluate(Law::approx_4, example_partition(), nullptr, Subset(5, {1}), Subset(5, {0})).verdict,
            Verdict::not_applicable);
}

TEST(Laws, ViolationCarriesSides) {
  // t3 with {0,1,2}|{3}: upper({0}) * upper({3}) = {0,3}, upper({0*3}) = {0,1,2}.
  const Partition p = Partition::from_labels(std::vector<std::uint32_t>{0, 0, 0, 1});
  const FiniteAlgebra t3 = table(3);
  const LawOutcome o = evaluate(Law::pawlak_11_sub, p, &t3, Subset(4, {0}), Subset(4, {3}));
  EXPECT_EQ(o.verdict, Verdict::violated);
  EXPECT_EQ(o.lhs, Subset(4, {0, 3}));
  EXPECT_EQ(o.rhs, Subset(4, {0, 1, 2}));
  EXPECT_EQ(o.relation, "<=");
  EXPECT_EQ(o.element, 3u);
}

TEST(Laws, ProductLawPreconditions) {
  const FiniteAlgebra t2 = table(2);
  EXPECT_THROW(check_prop32(t2, example_partition(), Subset(5), Subset(5)), PreconditionError);
  for (const Subset& a : all_subsets(5)) {
    const ProductLawReport r = check_prop32(t2, Partition::discrete(5), a, Subset(5, {0, 3}));
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(r.all_hold());
  }
  const ProductLawReport r =
      check_prop32(table(3), Partition::single(4), Subset(4, {0, 1}), Subset(4, {0, 2}));
  EXPECT_EQ(r.part1.outcome.verdict, Verdict::holds);
}

TEST(Laws, ProductLawsAgainstOracle) {
  // Part 1 holds under every congruence; part 2 holds under complete ones.
  for (int k = 1; k <= 3; ++k) {
    const FiniteAlgebra alg = table(k);
    const std::size_t n = alg.order();
    for (const Partition& p : all_partitions(n)) {
      const auto cs = oracle::to_classes(p);
      if (!oracle::is_congruence(alg, cs)) continue;
      const bool complete = oracle::is_complete(alg, cs);
      for (const Subset& a : all_subsets(n)) {
        for (const Subset& b : all_subsets(n)) {
          const auto as = oracle::to_set(a);
          const auto bs = oracle::to_set(b);
          const bool part1 = oracle::includes(
              oracle::upper(cs, n, oracle::product(alg, as, bs)),
              oracle::product(alg, oracle::upper(cs, n, as), oracle::upper(cs, n, bs)));
          ASSERT_TRUE(part1);
          const ProductLawReport r = check_prop32(alg, p, a, b);
          ASSERT_EQ(r.part1.outcome.verdict, Verdict::holds);
          const auto low_ab = oracle::lower(cs, n, oracle::product(alg, as, bs));
          if (low_ab.empty()) {
            ASSERT_EQ(r.part2.outcome.verdict, Verdict::not_applicable);
            continue;
          }
          const bool part2 = oracle::includes(
              low_ab, oracle::product(alg, oracle::lower(cs, n, as), oracle::lower(cs, n, bs)));
          ASSERT_EQ(r.part2.outcome.verdict == Verdict::holds, part2);
          if (complete) ASSERT_TRUE(part2) << "t" << k << ' ' << p.to_string() << a << b;
        }
      }
    }
  }
}
