#pragma once

#include <optional>

#include "roughalg/algebra.hpp"
#include "roughalg/relations.hpp"
#include "roughalg/subset.hpp"

namespace roughalg {

/// A carrier partitioned into elementary sets, optionally carrying the
/// algebra needed by the product laws.
class ApproximationSpace {
 public:
  explicit ApproximationSpace(Partition partition);
  ApproximationSpace(Partition partition, FiniteAlgebra algebra);

  std::size_t carrier() const noexcept { return partition_.carrier(); }
  const Partition& partition() const noexcept { return partition_; }
  const std::optional<FiniteAlgebra>& algebra() const noexcept { return algebra_; }

 private:
  Partition partition_;
  std::optional<FiniteAlgebra> algebra_;
};

/// {x | [x] is contained in A}
Subset lower(const ApproximationSpace& space, const Subset& a);
Subset lower(const Partition& p, const Subset& a);

/// {x | [x] meets A}
Subset upper(const ApproximationSpace& space, const Subset& a);
Subset upper(const Partition& p, const Subset& a);

Subset boundary(const ApproximationSpace& space, const Subset& a);
bool is_rough(const ApproximationSpace& space, const Subset& a);
bool is_definable(const ApproximationSpace& space, const Subset& a);

struct RoughPair {
  Subset lower;
  Subset upper;
  friend bool operator==(const RoughPair&, const RoughPair&) = default;
};

RoughPair rough_pair(const ApproximationSpace& space, const Subset& a);

}  // namespace roughalg
