#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roughalg/algebra.hpp"
#include "roughalg/exec.hpp"
#include "roughalg/subset.hpp"

namespace roughalg {

/// Outcome of the ideal conditions on one subset I:
///   (1) 0 in I
///   (2) x*y in I and y in I  =>  x in I            witnesses (x,y)
///   (3) (x*y)*z in I and y in I  =>  x*z in I      witnesses (x,y,z)
/// An ideal satisfies (1) and (2); a strong ideal satisfies all three.
struct IdealReport {
  Subset subset;
  bool contains_zero = false;
  bool is_ideal = false;
  bool strong_checked = false;
  bool is_strong = false;
  std::vector<Witness> closure_witnesses;
  std::vector<Witness> strong_witnesses;
};

/// Conditions (1) and (2). `witness_limit` == 0 keeps all witnesses.
IdealReport is_ideal(const FiniteAlgebra& alg, const Subset& ideal, std::size_t witness_limit = 0);

/// Conditions (1), (2) and (3).
IdealReport is_strong_ideal(const FiniteAlgebra& alg, const Subset& ideal,
                            std::size_t witness_limit = 0);

enum class IdealKind { ideal, strong };

inline constexpr std::size_t kDefaultIdealOrderLimit = 20;

/// Every ideal (or strong ideal) of the algebra, in canonical subset order.
/// Throws SizeLimitError when the order exceeds `max_order`.
std::vector<Subset> enumerate_ideals(const FiniteAlgebra& alg, IdealKind kind,
                                     Exec exec = Exec::parallel,
                                     std::size_t max_order = kDefaultIdealOrderLimit);

}  // namespace roughalg
