#include <gtest/gtest.h>

#include "roughalg/gas.hpp"
#include "roughalg/rough.hpp"
#include "roughalg/sweep.hpp"
#include "support.hpp"

using namespace roughalg;
using testing_support::table;

TEST(Gas, DirectExamples) {
  const SetValuedMap f(3, 2, {Subset(2, {0}), Subset(2, {0, 1}), Subset(2)});
  EXPECT_EQ(gen_lower(f, Subset(2, {0})), Subset(3, {0, 2}));
  EXPECT_EQ(gen_upper(f, Subset(2, {1})), Subset(3, {1}));
  EXPECT_TRUE(gen_upper(f, Subset(2)).empty());

  const SetValuedMap constant(3, 3, {Subset::full(3), Subset::full(3), Subset::full(3)});
  EXPECT_TRUE(gen_lower(constant, Subset(3, {0, 1})).empty());
}

TEST(Gas, Validation) {
  EXPECT_THROW(SetValuedMap(2, 3, {Subset(3)}), DomainError);
  EXPECT_THROW(SetValuedMap(2, 3, {Subset(3), Subset(2)}), DomainError);
  EXPECT_THROW(SetValuedMap(1, 3, {Subset(3)}, true), DomainError);
}

TEST(Gas, InducedRelation) {
  const SetValuedMap id(3, 3, {Subset(3, {0}), Subset(3, {1}), Subset(3, {2})});
  EXPECT_EQ(induced_relation(id), RelationPairs::identity(3));
  const SetValuedMap none(2, 4, {Subset(4), Subset(4)});
  EXPECT_EQ(induced_relation(none).size(), 0u);
  EXPECT_EQ(induced_relation(none).target_size(), 4u);
}

TEST(Gas, ReductionToPartition) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Partition& p : all_partitions(n)) {
      const SetValuedMap f = SetValuedMap::from_partition(p);
      for (const Subset& a : all_subsets(n)) {
        ASSERT_EQ(gen_lower(f, a), lower(p, a));
        ASSERT_EQ(gen_upper(f, a), upper(p, a));
      }
    }
  }
  const ReductionResult serial = sweep_reduction(4, Exec::serial);
  const ReductionResult parallel = sweep_reduction(4, Exec::parallel);
  EXPECT_EQ(serial.violations, 0u);
  EXPECT_EQ(serial.instances, parallel.instances);
  EXPECT_EQ(parallel.violations, 0u);
  // sum over n of Bell(n) * 2^n
  EXPECT_EQ(serial.instances, 1u * 2 + 2u * 4 + 5u * 8 + 15u * 16);
}

TEST(Gas, MorphismChecks) {
  const FiniteAlgebra t1 = table(1);
  const SetValuedMap zero(4, 4, {Subset(4, {0}), Subset(4, {0}), Subset(4, {0}), Subset(4, {0})});
  const MorphismReport r = is_strong_sv_morphism(zero, t1, t1);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.source_labels, (std::vector<Label>{Label::B, Label::BH, Label::BO}));

  const SetValuedMap id(4, 4, {Subset(4, {0}), Subset(4, {1}), Subset(4, {2}), Subset(4, {3})});
  EXPECT_TRUE(is_strong_sv_morphism(id, t1, t1).holds);

  // F(1) = {0,1}: F(1)*F(1) = {0,1} but F(1*1) = F(0) = {0}.
  const SetValuedMap wide(4, 4, {Subset(4, {0}), Subset(4, {0, 1}), Subset(4, {2}), Subset(4, {3})});
  const MorphismReport w = is_sv_morphism(wide, t1, t1);
  EXPECT_FALSE(w.holds);
  ASSERT_TRUE(w.witness);
  EXPECT_EQ(w.witness->direction, MorphismWitness::Direction::missing);
  const auto& [x, y, e, dir] = *w.witness;
  const Subset prod = product_set(t1, wide(x), wide(y));
  EXPECT_TRUE(prod.contains(e));
  EXPECT_FALSE(wide(t1.op(x, y)).contains(e));
}

TEST(Gas, StrongRequiresEquality) {
  const FiniteAlgebra xor2 = FiniteAlgebra::from_rows({{0, 1}, {1, 0}}, 0);
  const SetValuedMap full(2, 2, {Subset::full(2), Subset::full(2)});
  EXPECT_TRUE(is_strong_sv_morphism(full, xor2, xor2).holds);
  // F(1) empty: every product involving it is empty, but F(1*1) = F(0) is not.
  const SetValuedMap skew(2, 2, {Subset::full(2), Subset(2)});
  EXPECT_TRUE(is_sv_morphism(skew, xor2, xor2).holds);
  const MorphismReport s = is_strong_sv_morphism(skew, xor2, xor2);
  EXPECT_FALSE(s.holds);
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(s.witness->direction, MorphismWitness::Direction::extra);
  EXPECT_EQ(s.witness->x, 1u);
  EXPECT_EQ(s.witness->y, 1u);
  EXPECT_EQ(s.witness->element, 0u);
}
