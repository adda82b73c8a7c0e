#include "roughalg/rough.hpp"

namespace roughalg {

ApproximationSpace::ApproximationSpace(Partition partition) : partition_(std::move(partition)) {}

ApproximationSpace::ApproximationSpace(Partition partition, FiniteAlgebra algebra)
    : partition_(std::move(partition)), algebra_(std::move(algebra)) {
  if (algebra_->order() != partition_.carrier()) {
    throw DomainError("approximation space: algebra order " + std::to_string(algebra_->order()) +
                      " differs from partition carrier " + std::to_string(partition_.carrier()));
  }
}

namespace {

void require_carrier(const Partition& p, const Subset& a) {
  if (a.carrier() != p.carrier()) {
    throw DomainError("subset carrier " + std::to_string(a.carrier()) +
                      " differs from space carrier " + std::to_string(p.carrier()));
  }
}

}  // namespace

Subset lower(const Partition& p, const Subset& a) {
  require_carrier(p, a);
  std::uint64_t out = 0;
  for (const Subset& cls : p.classes()) {
    if ((cls.mask() & ~a.mask()) == 0) out |= cls.mask();
  }
  return Subset::from_mask(p.carrier(), out);
}

Subset upper(const Partition& p, const Subset& a) {
  require_carrier(p, a);
  std::uint64_t out = 0;
  for (const Subset& cls : p.classes()) {
    if ((cls.mask() & a.mask()) != 0) out |= cls.mask();
  }
  return Subset::from_mask(p.carrier(), out);
}

Subset lower(const ApproximationSpace& space, const Subset& a) {
  return lower(space.partition(), a);
}

Subset upper(const ApproximationSpace& space, const Subset& a) {
  return upper(space.partition(), a);
}

Subset boundary(const ApproximationSpace& space, const Subset& a) {
  return upper(space, a) - lower(space, a);
}

bool is_rough(const ApproximationSpace& space, const Subset& a) {
  return !boundary(space, a).empty();
}

bool is_definable(const ApproximationSpace& space, const Subset& a) {
  return !is_rough(space, a);
}

RoughPair rough_pair(const ApproximationSpace& space, const Subset& a) {
  return {lower(space, a), upper(space, a)};
}

}  // namespace roughalg
