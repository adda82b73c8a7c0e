#include "roughalg/sweep.hpp"

#include <limits>

#include "roughalg/gas.hpp"
#include "roughalg/rough.hpp"

namespace roughalg {

bool SweepResult::clean() const noexcept {
  for (const LawTally& t : tallies) {
    if (t.violations != 0) return false;
  }
  return true;
}

namespace {

// Position of an instance in canonical order; smaller sorts first.
struct Position {
  std::size_t partition = std::numeric_limits<std::size_t>::max();
  std::size_t a = 0;
  std::size_t b = 0;

  bool operator<(const Position& o) const noexcept {
    if (partition != o.partition) return partition < o.partition;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

struct Partial {
  std::vector<LawTally> tallies;
  std::vector<Position> first_at;
};

Partial make_partial(const std::vector<Law>& laws) {
  Partial p;
  for (Law l : laws) p.tallies.push_back({l, 0, 0, 0, std::nullopt});
  p.first_at.resize(laws.size());
  return p;
}

void merge_into(Partial& into, Partial&& from) {
  for (std::size_t i = 0; i < into.tallies.size(); ++i) {
    LawTally& t = into.tallies[i];
    LawTally& f = from.tallies[i];
    t.checked += f.checked;
    t.vacuous += f.vacuous;
    t.violations += f.violations;
    if (f.first && from.first_at[i] < into.first_at[i]) {
      t.first = std::move(f.first);
      into.first_at[i] = from.first_at[i];
    }
  }
}

// One row of work: a fixed partition and a fixed A, all B.
void sweep_row(const std::vector<Law>& laws, const Partition& p, const FiniteAlgebra* alg,
               const std::vector<Subset>& subsets, std::size_t pi, std::size_t ai,
               Partial& acc) {
  const Subset& a = subsets[ai];
  for (std::size_t bi = 0; bi < subsets.size(); ++bi) {
    const Subset& b = subsets[bi];
    for (std::size_t li = 0; li < laws.size(); ++li) {
      LawOutcome o = evaluate(laws[li], p, alg, a, b);
      LawTally& t = acc.tallies[li];
      if (o.verdict == Verdict::not_applicable) {
        ++t.vacuous;
        continue;
      }
      ++t.checked;
      if (o.verdict != Verdict::violated) continue;
      ++t.violations;
      const Position here{pi, ai, bi};
      if (here < acc.first_at[li]) {
        acc.first_at[li] = here;
        t.first = Finding{alg ? std::optional<FiniteAlgebra>(*alg) : std::nullopt,
                          p, a, b, laws[li], std::move(o)};
      }
    }
  }
}

}  // namespace

SweepResult sweep_laws(const SweepSpec& spec, Exec exec) {
  const FiniteAlgebra* alg = spec.algebra ? &*spec.algebra : nullptr;
  const std::size_t n = alg ? alg->order() : spec.order;
  if (!alg && spec.scope != RelationScope::partitions) {
    throw DomainError("congruence scopes need an algebra");
  }
  const std::vector<Partition> parts =
      alg ? partitions_in_scope(*alg, spec.scope, exec) : all_partitions(n);
  const std::vector<Subset> subsets = all_subsets(n);

  const std::size_t rows = subsets.size();
  const auto total = static_cast<std::int64_t>(parts.size() * rows);
  Partial result = make_partial(spec.laws);

  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      Partial local = make_partial(spec.laws);
#pragma omp for schedule(dynamic, 8) nowait
      for (std::int64_t k = 0; k < total; ++k) {
        const auto u = static_cast<std::size_t>(k);
        sweep_row(spec.laws, parts[u / rows], alg, subsets, u / rows, u % rows, local);
      }
#pragma omp critical(roughalg_sweep_merge)
      merge_into(result, std::move(local));
    }
  } else {
    for (std::int64_t k = 0; k < total; ++k) {
      const auto u = static_cast<std::size_t>(k);
      sweep_row(spec.laws, parts[u / rows], alg, subsets, u / rows, u % rows, result);
    }
  }

  return {parts.size(), rows * rows, std::move(result.tallies)};
}

namespace {

ReductionResult reduction_for(const Partition& p, const std::vector<Subset>& subsets) {
  ReductionResult r;
  const SetValuedMap f = SetValuedMap::from_partition(p);
  for (const Subset& a : subsets) {
    ++r.instances;
    if (gen_lower(f, a) != lower(p, a) || gen_upper(f, a) != upper(p, a)) ++r.violations;
  }
  return r;
}

}  // namespace

ReductionResult sweep_reduction(std::size_t max_order, Exec exec) {
  ReductionResult total;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const std::vector<Partition> parts = all_partitions(n);
    const std::vector<Subset> subsets = all_subsets(n);
    const auto count = static_cast<std::int64_t>(parts.size());
    std::size_t instances = 0;
    std::size_t violations = 0;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : instances, violations)
      for (std::int64_t i = 0; i < count; ++i) {
        const ReductionResult r = reduction_for(parts[static_cast<std::size_t>(i)], subsets);
        instances += r.instances;
        violations += r.violations;
      }
    } else {
      for (std::int64_t i = 0; i < count; ++i) {
        const ReductionResult r = reduction_for(parts[static_cast<std::size_t>(i)], subsets);
        instances += r.instances;
        violations += r.violations;
      }
    }
    total.instances += instances;
    total.violations += violations;
  }
  return total;
}

}  // namespace roughalg
