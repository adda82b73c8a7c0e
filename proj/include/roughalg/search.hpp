#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "roughalg/algebra.hpp"
#include "roughalg/exec.hpp"
#include "roughalg/laws.hpp"
#include "roughalg/relations.hpp"

namespace roughalg {

/// Which partitions of an algebra's carrier a search or sweep ranges over.
enum class RelationScope { partitions, congruences, complete_congruences };

std::string_view to_string(RelationScope s) noexcept;

struct SearchLimits {
  std::size_t max_models = 0;                ///< 0: unlimited
  std::chrono::milliseconds time_budget{0};  ///< 0: none
};

struct SearchSpec {
  std::size_t order = 1;
  std::vector<AxiomId> axioms;
  /// Law to refute; empty means "count models".
  std::optional<Law> target;
  RelationScope scope = RelationScope::congruences;
  /// Explicit algebras to search instead of the models of `axioms`.
  std::vector<FiniteAlgebra> algebras;
  SearchLimits limits;
};

inline constexpr std::size_t kMaxEnumerationOrder = 5;
inline constexpr std::size_t kMaxCongruenceOrder = 6;

using ModelSink = std::function<void(const FiniteAlgebra&)>;

/// Emits every operation table on {0..order-1} (zero = 0) satisfying all of
/// `spec.axioms`, exactly once, in lexicographic row-major order, and
/// returns the count. No isomorphism reduction is applied.
///
/// Cells forced by C1, C2 and C6 are fixed up front; the remaining cells are
/// filled depth-first and every fully determined axiom instance is checked
/// as soon as it is determined. The parallel variant splits the tree at a
/// fixed depth and replays subtree results in order, so the sink sees the
/// same sequence as the serial variant.
///
/// Throws SizeLimitError for order > kMaxEnumerationOrder and
/// BudgetExceeded when the time budget runs out.
std::size_t enumerate_algebras(const SearchSpec& spec, const ModelSink& sink = {},
                               Exec exec = Exec::parallel);

std::vector<FiniteAlgebra> collect_algebras(const SearchSpec& spec, Exec exec = Exec::parallel);

/// All congruences in canonical partition order. order <= kMaxCongruenceOrder.
std::vector<Partition> enumerate_congruences(const FiniteAlgebra& alg,
                                             Exec exec = Exec::parallel);

/// Partitions of the algebra's carrier within `scope`, in canonical order.
std::vector<Partition> partitions_in_scope(const FiniteAlgebra& alg, RelationScope scope,
                                           Exec exec = Exec::parallel);

/// A concrete instance on which a law fails.
struct Finding {
  std::optional<FiniteAlgebra> algebra;
  Partition partition;
  Subset a;
  Subset b;
  Law law;
  LawOutcome outcome;
};

/// Searches, in canonical order (algebras, then partitions, then subset
/// pairs with subsets ordered by cardinality then lexicographically), for
/// the first instance violating `spec.target`. Laws that need no algebra
/// and have no explicit algebras range over all partitions of `spec.order`.
/// Parallel and serial runs return the same finding.
std::optional<Finding> find_counterexample(const SearchSpec& spec, Exec exec = Exec::parallel);

}  // namespace roughalg
