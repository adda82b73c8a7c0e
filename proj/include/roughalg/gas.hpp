#pragma once

#include <optional>
#include <vector>

#include "roughalg/algebra.hpp"
#include "roughalg/relations.hpp"
#include "roughalg/subset.hpp"

namespace roughalg {

/// A total map F from {0..nX-1} to subsets of {0..nY-1}; together with the
/// two carriers it forms a generalized approximation space.
class SetValuedMap {
 public:
  /// With `serial` set, empty images are rejected (every x must relate to
  /// something).
  SetValuedMap(std::size_t source_size, std::size_t target_size, std::vector<Subset> images,
               bool serial = false);

  /// F(x) = [x]_p.
  static SetValuedMap from_partition(const Partition& p);

  std::size_t source_size() const noexcept { return images_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  const Subset& operator()(Element x) const noexcept { return images_[x]; }
  const std::vector<Subset>& images() const noexcept { return images_; }

  friend bool operator==(const SetValuedMap&, const SetValuedMap&) = default;

 private:
  std::size_t target_size_;
  std::vector<Subset> images_;
};

/// {x | F(x) is contained in A}. Elements with empty images always qualify.
Subset gen_lower(const SetValuedMap& f, const Subset& a);

/// {x | F(x) meets A}
Subset gen_upper(const SetValuedMap& f, const Subset& a);

/// The graph {(x,y) | y in F(x)}.
RelationPairs induced_relation(const SetValuedMap& f);

struct MorphismWitness {
  enum class Direction {
    missing,  ///< element of F(x)*F(y) outside F(x*y)
    extra,    ///< element of F(x*y) outside F(x)*F(y)
  };
  Element x, y;
  Element element;
  Direction direction;
};

struct MorphismReport {
  bool holds = true;
  std::optional<MorphismWitness> witness;
  std::vector<Label> source_labels;
  std::vector<Label> target_labels;
};

/// F(x)*F(y) contained in F(x*y) for all x, y (x*y in the source algebra,
/// the set product in the target algebra).
MorphismReport is_sv_morphism(const SetValuedMap& f, const FiniteAlgebra& source,
                              const FiniteAlgebra& target);

/// F(x)*F(y) = F(x*y) for all x, y.
MorphismReport is_strong_sv_morphism(const SetValuedMap& f, const FiniteAlgebra& source,
                                     const FiniteAlgebra& target);

}  // namespace roughalg
