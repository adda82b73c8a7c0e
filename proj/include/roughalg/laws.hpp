#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughalg/algebra.hpp"
#include "roughalg/relations.hpp"
#include "roughalg/rough.hpp"

namespace roughalg {

/// The approximation laws the toolkit can evaluate on a concrete instance
/// (partition, optional algebra, subsets A and B). Identifiers follow the
/// "<group>.<item>" scheme used on the command line, e.g. "2-1.7".
enum class Law {
  // Pawlak laws over a partition.
  pawlak_1,        ///< lower(A) <= A <= upper(A)
  pawlak_2,        ///< lower(0) = upper(0) = 0, lower(U) = upper(U) = U
  pawlak_3,        ///< lower(A u B) >= lower(A) u lower(B)
  pawlak_4,        ///< lower(A n B) = lower(A) n lower(B)
  pawlak_5,        ///< upper(A u B) = upper(A) u upper(B)
  pawlak_6,        ///< upper(A n B) <= upper(A) n upper(B)
  pawlak_7,        ///< upper(A^c) = lower(A)^c
  pawlak_8,        ///< lower(A^c) = upper(A)^c
  pawlak_9,        ///< lower(lower A) = upper(lower A) = lower A
  pawlak_10,       ///< upper(upper A) = lower(upper A) = upper A
  pawlak_11,       ///< upper(A)*upper(B) = upper(A*B)
  pawlak_11_sub,   ///< upper(A)*upper(B) <= upper(A*B)
  pawlak_11_sup,   ///< upper(A)*upper(B) >= upper(A*B)
  pawlak_12,       ///< lower(A)*lower(B) <= lower(A*B)
  // The same laws restated over an algebra's equivalence.
  approx_1,        ///< lower(A) <= A <= upper(A)
  approx_2,        ///< upper(A u B) = upper(A) u upper(B)
  approx_3,        ///< lower(A n B) = lower(A) n lower(B)
  approx_4,        ///< A <= B  =>  lower(A) <= lower(B), upper(A) <= upper(B)
  approx_5,        ///< lower(A) u lower(B) <= lower(A u B)
  approx_6,        ///< upper(A n B) <= upper(A) n upper(B)
  // Product laws under a congruence.
  product_1,       ///< upper(A)*upper(B) <= upper(A*B)
  product_2,       ///< lower(A*B) != 0  =>  lower(A)*lower(B) <= lower(A*B)
};

enum class Verdict { holds, violated, not_applicable };

std::string_view to_string(Verdict v) noexcept;

struct LawInfo {
  Law law;
  std::string_view id;         ///< "2-1.11-sub"
  std::string_view statement;  ///< human-readable law
  bool needs_algebra;
};

std::span<const LawInfo> all_laws() noexcept;
const LawInfo& info(Law law) noexcept;
std::optional<Law> parse_law(std::string_view id) noexcept;

/// Laws grouped by command-line family: "2-1", "3-1", "3-2".
std::vector<Law> law_group(std::string_view group);

/// Result of one law on one instance. When violated, `lhs` and `rhs` are the
/// two sides of the first comparison that failed; `relation` is "<=", ">="
/// or "=".
struct LawOutcome {
  Verdict verdict = Verdict::holds;
  std::optional<Subset> lhs;
  std::optional<Subset> rhs;
  std::string_view relation;
  /// Some element in the symmetric difference of lhs and rhs that breaks
  /// the relation.
  std::optional<Element> element;
};

/// Evaluates `law` on (p, alg, A, B). Product laws return not_applicable
/// when `alg` is null; conditional laws return not_applicable when their
/// premise is false.
LawOutcome evaluate(Law law, const Partition& p, const FiniteAlgebra* alg, const Subset& a,
                    const Subset& b);

struct LawResult {
  Law law;
  LawOutcome outcome;
  std::string note;
};

struct LawReport {
  std::vector<LawResult> items;
  bool all_hold() const noexcept;
};

/// Pawlak laws 1-10 plus the product laws 11 (each inclusion reported
/// separately) and 12. Product laws are not_applicable without an algebra.
LawReport check_pawlak(const ApproximationSpace& space, const Subset& a, const Subset& b);

/// The six laws restated for an equivalence on an algebra's carrier.
LawReport check_prop31(const ApproximationSpace& space, const Subset& a, const Subset& b);

struct ProductLawReport {
  bool complete = false;  ///< whether the partition is a complete congruence
  LawResult part1;
  LawResult part2;
  bool all_hold() const noexcept;
};

/// Product laws under a congruence. Throws PreconditionError when `p` is not
/// a congruence of `alg`.
ProductLawReport check_prop32(const FiniteAlgebra& alg, const Partition& p, const Subset& a,
                              const Subset& b);

}  // namespace roughalg
