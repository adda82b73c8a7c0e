#include "roughalg/ideals.hpp"

#include <algorithm>
#include <cstdint>

namespace roughalg {

namespace {

void check_closure(const FiniteAlgebra& alg, IdealReport& r, std::size_t limit) {
  const auto n = static_cast<Element>(alg.order());
  const Subset& I = r.subset;
  for (Element x = 0; x < n; ++x) {
    if (I.contains(x)) continue;
    for (Element y = 0; y < n; ++y) {
      if (I.contains(y) && I.contains(alg.op(x, y))) {
        if (limit == 0 || r.closure_witnesses.size() < limit) {
          r.closure_witnesses.push_back(Witness::of(x, y));
        }
      }
    }
  }
}

void check_strong(const FiniteAlgebra& alg, IdealReport& r, std::size_t limit) {
  const auto n = static_cast<Element>(alg.order());
  const Subset& I = r.subset;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!I.contains(y)) continue;
      const Element xy = alg.op(x, y);
      for (Element z = 0; z < n; ++z) {
        if (I.contains(alg.op(xy, z)) && !I.contains(alg.op(x, z))) {
          if (limit == 0 || r.strong_witnesses.size() < limit) {
            r.strong_witnesses.push_back(Witness::of(x, y, z));
          }
        }
      }
    }
  }
}

void require_match(const FiniteAlgebra& alg, const Subset& ideal) {
  if (ideal.carrier() != alg.order()) {
    throw DomainError("subset carrier does not match algebra order");
  }
}

// Mask-level predicates for the enumeration kernels; no witness bookkeeping.
bool closure_ok(const FiniteAlgebra& alg, std::uint64_t I) {
  const auto n = static_cast<Element>(alg.order());
  for (Element x = 0; x < n; ++x) {
    if ((I >> x) & 1u) continue;
    const auto row = alg.row(x);
    for (Element y = 0; y < n; ++y) {
      if (((I >> y) & 1u) && ((I >> row[y]) & 1u)) return false;
    }
  }
  return true;
}

bool strong_ok(const FiniteAlgebra& alg, std::uint64_t I) {
  const auto n = static_cast<Element>(alg.order());
  for (Element x = 0; x < n; ++x) {
    const auto row = alg.row(x);
    for (Element y = 0; y < n; ++y) {
      if (!((I >> y) & 1u)) continue;
      const auto inner = alg.row(row[y]);
      for (Element z = 0; z < n; ++z) {
        if (((I >> inner[z]) & 1u) && !((I >> row[z]) & 1u)) return false;
      }
    }
  }
  return true;
}

bool passes(const FiniteAlgebra& alg, std::uint64_t I, IdealKind kind) {
  if (!closure_ok(alg, I)) return false;
  return kind == IdealKind::ideal || strong_ok(alg, I);
}

}  // namespace

IdealReport is_ideal(const FiniteAlgebra& alg, const Subset& ideal, std::size_t witness_limit) {
  require_match(alg, ideal);
  IdealReport r;
  r.subset = ideal;
  r.contains_zero = ideal.contains(alg.zero());
  check_closure(alg, r, witness_limit);
  r.is_ideal = r.contains_zero && r.closure_witnesses.empty();
  return r;
}

IdealReport is_strong_ideal(const FiniteAlgebra& alg, const Subset& ideal,
                            std::size_t witness_limit) {
  IdealReport r = is_ideal(alg, ideal, witness_limit);
  check_strong(alg, r, witness_limit);
  r.strong_checked = true;
  r.is_strong = r.is_ideal && r.strong_witnesses.empty();
  return r;
}

std::vector<Subset> enumerate_ideals(const FiniteAlgebra& alg, IdealKind kind, Exec exec,
                                     std::size_t max_order) {
  const std::size_t n = alg.order();
  if (n > max_order) throw SizeLimitError("ideal enumeration", n, max_order);

  // Candidates always contain zero: enumerate masks over the other n-1 bits
  // and splice the zero bit in.
  const Element zero = alg.zero();
  const std::uint64_t low = (std::uint64_t{1} << zero) - 1;
  const std::int64_t total = std::int64_t{1} << (n - 1);
  auto candidate = [&](std::int64_t k) {
    const auto bits = static_cast<std::uint64_t>(k);
    return (bits & low) | (std::uint64_t{1} << zero) | ((bits & ~low) << 1);
  };

  std::vector<std::uint8_t> keep(static_cast<std::size_t>(total), 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t k = 0; k < total; ++k) {
      keep[static_cast<std::size_t>(k)] = passes(alg, candidate(k), kind) ? 1 : 0;
    }
  } else {
    for (std::int64_t k = 0; k < total; ++k) {
      keep[static_cast<std::size_t>(k)] = passes(alg, candidate(k), kind) ? 1 : 0;
    }
  }

  std::vector<Subset> out;
  for (std::int64_t k = 0; k < total; ++k) {
    if (keep[static_cast<std::size_t>(k)]) out.push_back(Subset::from_mask(n, candidate(k)));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace roughalg
