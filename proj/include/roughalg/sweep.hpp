#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "roughalg/exec.hpp"
#include "roughalg/laws.hpp"
#include "roughalg/search.hpp"

namespace roughalg {

/// Exhaustive evaluation of a set of laws over every partition in scope and
/// every ordered pair of subsets (A, B) of the carrier.
struct SweepSpec {
  std::size_t order = 0;                  ///< ignored when `algebra` is set
  std::optional<FiniteAlgebra> algebra;   ///< required by product laws and congruence scopes
  RelationScope scope = RelationScope::partitions;
  std::vector<Law> laws;
};

struct LawTally {
  Law law;
  std::size_t checked = 0;     ///< instances where the law applied
  std::size_t vacuous = 0;     ///< instances reported not_applicable
  std::size_t violations = 0;
  /// First violation in canonical order (partition, then A, then B).
  std::optional<Finding> first;
};

struct SweepResult {
  std::size_t partitions = 0;
  std::size_t subset_pairs = 0;
  std::vector<LawTally> tallies;

  bool clean() const noexcept;
};

/// Serial and parallel variants return identical results.
SweepResult sweep_laws(const SweepSpec& spec, Exec exec = Exec::parallel);

struct ReductionResult {
  std::size_t instances = 0;
  std::size_t violations = 0;
};

/// For every partition p of every carrier of size 1..max_order and every
/// subset A, compares gen_lower/gen_upper of F(x) = [x]_p against the
/// partition's lower/upper approximations.
ReductionResult sweep_reduction(std::size_t max_order, Exec exec = Exec::parallel);

}  // namespace roughalg
