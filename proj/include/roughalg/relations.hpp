#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roughalg/algebra.hpp"
#include "roughalg/subset.hpp"

namespace roughalg {

class RelationPairs;

/// Raised by the Partition constructor. `element()` names the offending
/// carrier element (or the class index for `empty_class`).
class PartitionError : public DomainError {
 public:
  enum class Kind { overlap, coverage, empty_class, carrier_mismatch };

  PartitionError(Kind kind, std::size_t element, const std::string& what)
      : DomainError(what), kind_(kind), element_(element) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t element() const noexcept { return element_; }

 private:
  Kind kind_;
  std::size_t element_;
};

/// Equivalence classes over {0..n-1}. Classes are stored in canonical order
/// (ascending by least element), so equal partitions compare equal.
class Partition {
 public:
  Partition(std::size_t n, std::vector<Subset> classes);

  static Partition discrete(std::size_t n);
  static Partition single(std::size_t n);
  /// Elements with equal labels share a class. Labels may be arbitrary.
  static Partition from_labels(std::span<const std::uint32_t> labels);

  std::size_t carrier() const noexcept { return n_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  const std::vector<Subset>& classes() const noexcept { return classes_; }

  std::size_t class_id(Element x) const noexcept { return class_index_[x]; }
  const Subset& class_of(Element x) const noexcept { return classes_[class_index_[x]]; }
  bool related(Element x, Element y) const noexcept {
    return class_index_[x] == class_index_[y];
  }

  RelationPairs to_relation() const;

  /// "0,1|2|3|4"
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.class_index_ == b.class_index_;
  }

 private:
  std::size_t n_;
  std::vector<Subset> classes_;
  std::vector<std::size_t> class_index_;
};

/// A binary relation from {0..n_from-1} to {0..n_to-1}, stored row-wise.
class RelationPairs {
 public:
  explicit RelationPairs(std::size_t n) : RelationPairs(n, n) {}
  RelationPairs(std::size_t n_from, std::size_t n_to);

  static RelationPairs identity(std::size_t n);
  static RelationPairs full(std::size_t n);

  std::size_t source_size() const noexcept { return rows_.size(); }
  std::size_t target_size() const noexcept { return n_to_; }
  bool is_square() const noexcept { return rows_.size() == n_to_; }

  void add(Element x, Element y);
  bool contains(Element x, Element y) const noexcept {
    return x < rows_.size() && rows_[x].contains(y);
  }
  /// Image of x: {y | (x,y) in R}.
  const Subset& row(Element x) const noexcept { return rows_[x]; }

  /// All pairs in lexicographic order.
  std::vector<std::pair<Element, Element>> pairs() const;
  std::size_t size() const noexcept;

  friend bool operator==(const RelationPairs&, const RelationPairs&) = default;

 private:
  std::size_t n_to_;
  std::vector<Subset> rows_;
};

struct EquivalenceReport {
  std::optional<Witness> reflexivity;   ///< x with (x,x) missing
  std::optional<Witness> symmetry;      ///< (x,y) present, (y,x) missing
  std::optional<Witness> transitivity;  ///< (x,y),(y,z) present, (x,z) missing

  bool holds() const noexcept { return !reflexivity && !symmetry && !transitivity; }
};

/// Checks the three properties, reporting the lexicographically first
/// witness of each failure. Throws DomainError for non-square relations.
EquivalenceReport is_equivalence(const RelationPairs& rel);

class NotEquivalenceError : public PreconditionError {
 public:
  explicit NotEquivalenceError(EquivalenceReport report);
  const EquivalenceReport& report() const noexcept { return report_; }

 private:
  EquivalenceReport report_;
};

/// Throws NotEquivalenceError when `rel` is not an equivalence.
Partition to_partition(const RelationPairs& rel);

struct CongruenceWitness {
  enum class Side {
    right,  ///< x~y but not x*z ~ y*z
    left,   ///< x~y but not z*x ~ z*y
  };
  Element x, y, z;
  Side side;
};

struct CongruenceReport {
  bool holds = true;
  std::optional<CongruenceWitness> witness;
};

/// Two-sided compatibility: x~y implies x*z ~ y*z and z*x ~ z*y.
CongruenceReport is_congruence(const FiniteAlgebra& alg, const Partition& p);

struct ClassProductReport {
  bool holds = true;
  /// First pair (x,y) where the property fails, with an element that shows it.
  std::optional<Witness> pair;
  std::optional<Element> element;
};

/// [x]*[y] subset of [x*y] for every x, y.
ClassProductReport class_product_inclusion(const FiniteAlgebra& alg, const Partition& p);

/// [x]*[y] = [x*y] for every x, y. The partition must be a congruence;
/// otherwise PreconditionError is thrown. When the result fails, `element`
/// lies in [x*y] but not in [x]*[y].
ClassProductReport is_complete_congruence(const FiniteAlgebra& alg, const Partition& p);

/// {(x,y) | x*y in I and y*x in I}. No equivalence property is implied.
RelationPairs relation_from_ideal(const FiniteAlgebra& alg, const Subset& ideal);

/// Calls `fn` with every partition of {0..n-1}, in restricted-growth-string
/// order (the discrete-last, single-class-first canonical order). n <= 12.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& fn);

std::vector<Partition> all_partitions(std::size_t n);

}  // namespace roughalg
