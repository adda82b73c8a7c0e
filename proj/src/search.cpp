#include "roughalg/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#ifdef ROUGHALG_HAVE_OPENMP
#include <omp.h>
#endif

namespace roughalg {

bool parallel_available() noexcept {
#ifdef ROUGHALG_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

std::string_view to_string(RelationScope s) noexcept {
  switch (s) {
    case RelationScope::partitions: return "partitions";
    case RelationScope::congruences: return "congruences";
    case RelationScope::complete_congruences: return "complete-congruences";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Partially filled operation table. Cells hold -1 until assigned.
class Grid {
 public:
  explicit Grid(std::size_t n) : n_(static_cast<int>(n)), cells_(n * n, -1) {}

  int at(int x, int y) const noexcept { return x < 0 || y < 0 ? -1 : cells_[x * n_ + y]; }
  int& cell(std::size_t i) noexcept { return cells_[i]; }
  int size() const noexcept { return n_; }

  std::vector<Element> table() const { return {cells_.begin(), cells_.end()}; }

 private:
  int n_;
  std::vector<int> cells_;
};

// True unless some fully determined instance of an axiom is violated.
bool consistent(const Grid& g, std::span<const AxiomId> axioms) {
  const int n = g.size();
  for (AxiomId a : axioms) {
    switch (a) {
      case AxiomId::C1:
        for (int x = 0; x < n; ++x) {
          const int v = g.at(x, x);
          if (v >= 0 && v != 0) return false;
        }
        break;
      case AxiomId::C2:
        for (int x = 0; x < n; ++x) {
          const int v = g.at(x, 0);
          if (v >= 0 && v != x) return false;
        }
        break;
      case AxiomId::C6:
        for (int x = 0; x < n; ++x) {
          const int v = g.at(x, x);
          if (v >= 0 && v != x) return false;
        }
        break;
      case AxiomId::C4:
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (x != y && g.at(x, y) == 0 && g.at(y, x) == 0) return false;
        break;
      case AxiomId::C7:
        for (int x = 1; x < n; ++x)
          for (int y = x + 1; y < n; ++y) {
            const int l = g.at(x, y);
            const int r = g.at(y, x);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
        break;
      case AxiomId::C3:
        // (x*y)*z = x*(z*(0*y))
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const int xy = g.at(x, y);
            const int oy = g.at(0, y);
            if (xy < 0 || oy < 0) continue;
            for (int z = 0; z < n; ++z) {
              const int l = g.at(xy, z);
              if (l < 0) continue;
              const int r = g.at(x, g.at(z, oy));
              if (r >= 0 && l != r) return false;
            }
          }
        break;
      case AxiomId::C5:
        // x*(y*z) = (x*y)*(0*z)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const int xy = g.at(x, y);
            if (xy < 0) continue;
            for (int z = 0; z < n; ++z) {
              const int l = g.at(x, g.at(y, z));
              if (l < 0) continue;
              const int r = g.at(xy, g.at(0, z));
              if (r >= 0 && l != r) return false;
            }
          }
        break;
    }
  }
  return true;
}

struct SubtreeResult {
  std::size_t count = 0;
  std::vector<std::vector<Element>> tables;
  bool complete = true;
};

class Enumerator {
 public:
  Enumerator(const SearchSpec& spec, Clock::time_point deadline, bool has_deadline)
      : n_(spec.order), axioms_(spec.axioms), cap_(spec.limits.max_models),
        deadline_(deadline), has_deadline_(has_deadline), root_(spec.order) {
    const auto has = [&](AxiomId a) {
      return std::find(axioms_.begin(), axioms_.end(), a) != axioms_.end();
    };
    const int n = static_cast<int>(n_);
    // Fixed cells; a conflict between two forced values leaves the root
    // inconsistent and the search space empty.
    auto force = [&](int x, int y, int v) {
      int& c = root_.cell(static_cast<std::size_t>(x * n + y));
      if (c >= 0 && c != v) feasible_ = false;
      c = v;
    };
    for (int x = 0; x < n; ++x) {
      if (has(AxiomId::C2)) force(x, 0, x);
      if (has(AxiomId::C1)) force(x, x, 0);
      if (has(AxiomId::C6)) force(x, x, x);
    }
    for (std::size_t i = 0; i < n_ * n_; ++i) {
      if (root_.cell(i) < 0) free_.push_back(i);
    }
    feasible_ = feasible_ && consistent(root_, axioms_);
  }

  bool feasible() const noexcept { return feasible_; }
  std::size_t free_cells() const noexcept { return free_.size(); }
  const Grid& root() const noexcept { return root_; }

  /// Depth-first over free cells from index k. `leaf` returns false to stop.
  template <typename Leaf>
  bool dfs(Grid& g, std::size_t k, Leaf&& leaf, const std::atomic<bool>& expired,
           std::size_t& ticks) const {
    if (has_deadline_ && (++ticks & 1023u) == 0 && (expired.load(std::memory_order_relaxed) ||
                                                    Clock::now() > deadline_)) {
      return false;
    }
    if (k == free_.size()) return leaf(g);
    int& c = g.cell(free_[k]);
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      c = v;
      if (consistent(g, axioms_) && !dfs(g, k + 1, leaf, expired, ticks)) {
        c = -1;
        return false;
      }
    }
    c = -1;
    return true;
  }

  /// Consistent assignments of the first `depth` free cells, in order.
  std::vector<Grid> prefixes(std::size_t depth) const {
    std::vector<Grid> out;
    Grid g = root_;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == depth) {
        out.push_back(g);
        return;
      }
      int& c = g.cell(free_[k]);
      for (int v = 0; v < static_cast<int>(n_); ++v) {
        c = v;
        if (consistent(g, axioms_)) rec(k + 1);
      }
      c = -1;
    };
    rec(0);
    return out;
  }

  SubtreeResult run_subtree(Grid g, std::size_t from, bool keep_tables,
                            const std::atomic<bool>& expired) const {
    SubtreeResult r;
    std::size_t ticks = 0;
    const bool finished = dfs(g, from,
                              [&](const Grid& leaf) {
                                ++r.count;
                                if (keep_tables) r.tables.push_back(leaf.table());
                                return cap_ == 0 || r.count < cap_;
                              },
                              expired, ticks);
    r.complete = finished || (cap_ != 0 && r.count >= cap_);
    return r;
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::vector<AxiomId> axioms_;
  std::size_t cap_;
  Clock::time_point deadline_;
  bool has_deadline_;
  Grid root_;
  std::vector<std::size_t> free_;
  bool feasible_ = true;
};

std::size_t split_depth(std::size_t n, std::size_t free_cells) {
  std::size_t depth = 0;
  std::size_t width = 1;
  while (depth < free_cells && width < 512) {
    width *= n;
    ++depth;
  }
  return depth;
}

}  // namespace

std::size_t enumerate_algebras(const SearchSpec& spec, const ModelSink& sink, Exec exec) {
  if (spec.order == 0) throw DomainError("model search needs order >= 1");
  if (spec.order > kMaxEnumerationOrder) {
    throw SizeLimitError("model enumeration", spec.order, kMaxEnumerationOrder);
  }
  if (spec.axioms.empty()) throw DomainError("model search needs a non-empty axiom set");

  const bool has_deadline = spec.limits.time_budget.count() > 0;
  const Enumerator en(spec, Clock::now() + spec.limits.time_budget, has_deadline);
  if (!en.feasible()) return 0;

  auto emit = [&](const std::vector<Element>& table) {
    if (sink) sink(FiniteAlgebra(spec.order, table, 0));
  };
  const std::size_t cap = spec.limits.max_models;
  std::atomic<bool> expired{false};

  if (exec == Exec::serial || !parallel_available()) {
    std::size_t count = 0;
    std::size_t ticks = 0;
    Grid g = en.root();
    const bool finished = en.dfs(g, 0,
                                 [&](const Grid& leaf) {
                                   ++count;
                                   emit(leaf.table());
                                   return cap == 0 || count < cap;
                                 },
                                 expired, ticks);
    if (!finished && (cap == 0 || count < cap)) throw BudgetExceeded(count);
    return count;
  }

  const std::size_t depth = split_depth(spec.order, en.free_cells());
  const std::vector<Grid> roots = en.prefixes(depth);
  std::vector<SubtreeResult> results(roots.size());
  const bool keep = static_cast<bool>(sink);
  const auto total = static_cast<std::int64_t>(roots.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto k = static_cast<std::size_t>(i);
    results[k] = en.run_subtree(roots[k], depth, keep, expired);
    if (!results[k].complete) expired.store(true);
  }

  std::size_t count = 0;
  for (const SubtreeResult& r : results) {
    if (!r.complete) throw BudgetExceeded(count);
    for (std::size_t t = 0; t < r.count; ++t) {
      if (cap != 0 && count == cap) return count;
      ++count;
      if (keep) emit(r.tables[t]);
    }
  }
  return count;
}

std::vector<FiniteAlgebra> collect_algebras(const SearchSpec& spec, Exec exec) {
  std::vector<FiniteAlgebra> out;
  enumerate_algebras(spec, [&](const FiniteAlgebra& a) { out.push_back(a); }, exec);
  return out;
}

std::vector<Partition> enumerate_congruences(const FiniteAlgebra& alg, Exec exec) {
  if (alg.order() > kMaxCongruenceOrder) {
    throw SizeLimitError("congruence enumeration", alg.order(), kMaxCongruenceOrder);
  }
  const std::vector<Partition> all = all_partitions(alg.order());
  std::vector<std::uint8_t> keep(all.size(), 0);
  const auto total = static_cast<std::int64_t>(all.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < total; ++i) {
      keep[static_cast<std::size_t>(i)] = is_congruence(alg, all[static_cast<std::size_t>(i)]).holds;
    }
  } else {
    for (std::int64_t i = 0; i < total; ++i) {
      keep[static_cast<std::size_t>(i)] = is_congruence(alg, all[static_cast<std::size_t>(i)]).holds;
    }
  }
  std::vector<Partition> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.push_back(all[i]);
  }
  return out;
}

std::vector<Partition> partitions_in_scope(const FiniteAlgebra& alg, RelationScope scope,
                                           Exec exec) {
  switch (scope) {
    case RelationScope::partitions:
      return all_partitions(alg.order());
    case RelationScope::congruences:
      return enumerate_congruences(alg, exec);
    case RelationScope::complete_congruences: {
      std::vector<Partition> out;
      for (Partition& p : enumerate_congruences(alg, exec)) {
        if (is_complete_congruence(alg, p).holds) out.push_back(std::move(p));
      }
      return out;
    }
  }
  return {};
}

namespace {

struct Unit {
  std::optional<std::size_t> algebra;
  Partition partition;
};

std::optional<Finding> scan_unit(const Unit& unit, const std::vector<FiniteAlgebra>& algebras,
                                 const std::vector<Subset>& subsets, Law law) {
  const FiniteAlgebra* alg = unit.algebra ? &algebras[*unit.algebra] : nullptr;
  for (const Subset& a : subsets) {
    for (const Subset& b : subsets) {
      LawOutcome o = evaluate(law, unit.partition, alg, a, b);
      if (o.verdict == Verdict::violated) {
        return Finding{alg ? std::optional<FiniteAlgebra>(*alg) : std::nullopt,
                       unit.partition, a, b, law, std::move(o)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Finding> find_counterexample(const SearchSpec& spec, Exec exec) {
  if (!spec.target) throw DomainError("counterexample search needs a target law");
  const Law law = *spec.target;
  const bool has_deadline = spec.limits.time_budget.count() > 0;
  const Clock::time_point deadline = Clock::now() + spec.limits.time_budget;

  std::vector<FiniteAlgebra> algebras = spec.algebras;
  std::vector<Unit> units;
  if (algebras.empty() && !info(law).needs_algebra) {
    for (Partition& p : all_partitions(spec.order)) units.push_back({std::nullopt, std::move(p)});
  } else {
    if (algebras.empty()) algebras = collect_algebras(spec, exec);
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      for (Partition& p : partitions_in_scope(algebras[i], spec.scope, exec)) {
        units.push_back({i, std::move(p)});
      }
    }
  }

  // Subset lists per carrier size, built once.
  std::vector<std::vector<Subset>> subsets(Subset::kMaxCarrier + 1);
  for (const Unit& u : units) {
    auto& s = subsets[u.partition.carrier()];
    if (s.empty()) s = all_subsets(u.partition.carrier());
  }

  const auto total = static_cast<std::int64_t>(units.size());
  std::vector<std::optional<Finding>> found(units.size());
  std::vector<std::uint8_t> done(units.size(), 0);
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};

  auto visit = [&](std::int64_t i) {
    if (i > best.load(std::memory_order_relaxed)) return;
    if (has_deadline && Clock::now() > deadline) return;
    const auto k = static_cast<std::size_t>(i);
    found[k] = scan_unit(units[k], algebras, subsets[units[k].partition.carrier()], law);
    done[k] = 1;
    if (found[k]) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < total; ++i) visit(i);
  } else {
    for (std::int64_t i = 0; i < total; ++i) {
      visit(i);
      if (found[static_cast<std::size_t>(i)]) break;
    }
  }

  for (std::size_t k = 0; k < units.size(); ++k) {
    if (found[k]) return std::move(found[k]);
    if (!done[k]) throw BudgetExceeded(k);
  }
  return std::nullopt;
}

}  // namespace roughalg
