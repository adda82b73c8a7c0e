#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughalg/error.hpp"
#include "roughalg/subset.hpp"

namespace roughalg {

/// A finite magma on {0..n-1} with a distinguished constant `zero`.
///
/// Construction validates closure and the zero element only; no axiom is
/// required to hold.
class FiniteAlgebra {
 public:
  /// `table` is row-major: entry x*n+y holds x*y.
  FiniteAlgebra(std::size_t order, std::vector<Element> table, Element zero);

  static FiniteAlgebra from_rows(const std::vector<std::vector<Element>>& rows, Element zero);

  std::size_t order() const noexcept { return n_; }
  Element zero() const noexcept { return zero_; }

  Element op(Element x, Element y) const noexcept { return table_[x * n_ + y]; }

  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> row(Element x) const noexcept {
    return std::span<const Element>(table_).subspan(x * n_, n_);
  }

  Subset carrier() const { return Subset::full(n_); }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::size_t n_;
  std::vector<Element> table_;
  Element zero_;
};

enum class AxiomId { C1, C2, C3, C4, C5, C6, C7 };

inline constexpr std::array<AxiomId, 7> kAllAxioms = {
    AxiomId::C1, AxiomId::C2, AxiomId::C3, AxiomId::C4,
    AxiomId::C5, AxiomId::C6, AxiomId::C7};

std::string_view to_string(AxiomId a) noexcept;
std::optional<AxiomId> parse_axiom(std::string_view s) noexcept;

/// Number of universally quantified variables of the axiom.
int arity(AxiomId a) noexcept;

/// The axiom written out, e.g. "x*0 = x".
std::string_view statement(AxiomId a) noexcept;

/// A tuple of 1 to 3 carrier elements.
struct Witness {
  std::uint8_t arity = 0;
  std::array<Element, 3> at{};

  static Witness of(Element x) { return {1, {x, 0, 0}}; }
  static Witness of(Element x, Element y) { return {2, {x, y, 0}}; }
  static Witness of(Element x, Element y, Element z) { return {3, {x, y, z}}; }

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::ostream& operator<<(std::ostream& os, const Witness& w);
std::string to_string(const Witness& w);

struct AxiomReport {
  AxiomId axiom;
  bool holds = true;
  /// Violating tuples in lexicographic order, capped at the requested limit.
  std::vector<Witness> witnesses;
  /// Total number of violating tuples, independent of the cap.
  std::size_t violations = 0;
};

/// True iff the axiom is satisfied at this particular tuple.
bool axiom_holds_at(const FiniteAlgebra& alg, AxiomId axiom, const Witness& w);

/// Exhaustive check. `witness_limit` == 0 keeps every witness.
AxiomReport check_axiom(const FiniteAlgebra& alg, AxiomId axiom, std::size_t witness_limit = 0);

enum class Label { B, BH, BO, Z };

inline constexpr std::array<Label, 4> kAllLabels = {Label::B, Label::BH, Label::BO, Label::Z};

std::string_view to_string(Label l) noexcept;

/// Which axiom list backs the Z label. `literal` is C1,C2,C6,C7 exactly as
/// defined, which no algebra of order > 1 can satisfy. `relaxed` drops C1.
enum class ZAxioms { literal, relaxed };

/// The axiom conjunction that defines a label.
std::span<const AxiomId> axioms_of(Label label, ZAxioms z = ZAxioms::literal) noexcept;

/// Labels whose full axiom conjunction holds, in enum order.
std::vector<Label> classify(const FiniteAlgebra& alg, ZAxioms z = ZAxioms::literal);

struct Identities {
  Subset left;
  Subset right;
  Subset two_sided;
};

Identities find_identities(const FiniteAlgebra& alg);

/// {a*b | a in A, b in B}
Subset product_set(const FiniteAlgebra& alg, const Subset& a, const Subset& b);

}  // namespace roughalg
