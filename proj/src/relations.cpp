#include "roughalg/relations.hpp"

#include <algorithm>
#include <map>

namespace roughalg {

Partition::Partition(std::size_t n, std::vector<Subset> classes)
    : n_(n), classes_(std::move(classes)), class_index_(n, 0) {
  if (n > Subset::kMaxCarrier) throw DomainError("partition carrier too large");
  std::uint64_t seen = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const Subset& cls = classes_[c];
    if (cls.carrier() != n) {
      throw PartitionError(PartitionError::Kind::carrier_mismatch, c,
                           "class " + std::to_string(c) + " is over a carrier of size " +
                               std::to_string(cls.carrier()) + ", expected " +
                               std::to_string(n));
    }
    if (cls.empty()) {
      throw PartitionError(PartitionError::Kind::empty_class, c,
                           "class " + std::to_string(c) + " is empty");
    }
    const std::uint64_t overlap = seen & cls.mask();
    if (overlap != 0) {
      const auto x = static_cast<std::size_t>(std::countr_zero(overlap));
      throw PartitionError(PartitionError::Kind::overlap, x,
                           "element " + std::to_string(x) + " lies in two classes");
    }
    seen |= cls.mask();
  }
  const std::uint64_t missing = Subset::full_mask(n) & ~seen;
  if (missing != 0) {
    const auto x = static_cast<std::size_t>(std::countr_zero(missing));
    throw PartitionError(PartitionError::Kind::coverage, x,
                         "element " + std::to_string(x) + " lies in no class");
  }
  std::sort(classes_.begin(), classes_.end(),
            [](const Subset& a, const Subset& b) { return a.min() < b.min(); });
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    classes_[c].for_each([&](Element x) { class_index_[x] = c; });
  }
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Subset> classes;
  classes.reserve(n);
  for (Element x = 0; x < n; ++x) classes.push_back(Subset::singleton(n, x));
  return Partition(n, std::move(classes));
}

Partition Partition::single(std::size_t n) {
  if (n == 0) return Partition(0, {});
  return Partition(n, {Subset::full(n)});
}

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  const std::size_t n = labels.size();
  std::map<std::uint32_t, std::size_t> slot;
  std::vector<Subset> classes;
  for (Element x = 0; x < n; ++x) {
    auto [it, fresh] = slot.try_emplace(labels[x], classes.size());
    if (fresh) classes.emplace_back(n);
    classes[it->second].insert(x);
  }
  return Partition(n, std::move(classes));
}

RelationPairs Partition::to_relation() const {
  RelationPairs rel(n_);
  for (Element x = 0; x < n_; ++x) {
    class_of(x).for_each([&](Element y) { rel.add(x, y); });
  }
  return rel;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c > 0) out += '|';
    bool first = true;
    classes_[c].for_each([&](Element x) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    });
  }
  return out;
}

RelationPairs::RelationPairs(std::size_t n_from, std::size_t n_to)
    : n_to_(n_to), rows_(n_from, Subset(n_to)) {
  if (n_from > Subset::kMaxCarrier) throw DomainError("relation source too large");
}

RelationPairs RelationPairs::identity(std::size_t n) {
  RelationPairs rel(n);
  for (Element x = 0; x < n; ++x) rel.add(x, x);
  return rel;
}

RelationPairs RelationPairs::full(std::size_t n) {
  RelationPairs rel(n);
  for (auto& r : rel.rows_) r = Subset::full(n);
  return rel;
}

void RelationPairs::add(Element x, Element y) {
  if (x >= rows_.size()) {
    throw DomainError("relation source element " + std::to_string(x) + " out of range");
  }
  rows_[x].insert(y);
}

std::vector<std::pair<Element, Element>> RelationPairs::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < rows_.size(); ++x) {
    rows_[x].for_each([&](Element y) { out.emplace_back(x, y); });
  }
  return out;
}

std::size_t RelationPairs::size() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

EquivalenceReport is_equivalence(const RelationPairs& rel) {
  if (!rel.is_square()) throw DomainError("equivalence check needs a relation on one carrier");
  const auto n = static_cast<Element>(rel.source_size());
  EquivalenceReport report;
  for (Element x = 0; x < n && !report.reflexivity; ++x) {
    if (!rel.contains(x, x)) report.reflexivity = Witness::of(x);
  }
  for (Element x = 0; x < n && !report.symmetry; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (rel.contains(x, y) && !rel.contains(y, x)) {
        report.symmetry = Witness::of(x, y);
        break;
      }
    }
  }
  for (Element x = 0; x < n && !report.transitivity; ++x) {
    for (Element y = 0; y < n && !report.transitivity; ++y) {
      if (!rel.contains(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (rel.contains(y, z) && !rel.contains(x, z)) {
          report.transitivity = Witness::of(x, y, z);
          break;
        }
      }
    }
  }
  return report;
}

NotEquivalenceError::NotEquivalenceError(EquivalenceReport report)
    : PreconditionError("relation is not an equivalence"), report_(report) {}

Partition to_partition(const RelationPairs& rel) {
  const EquivalenceReport report = is_equivalence(rel);
  if (!report.holds()) throw NotEquivalenceError(report);
  const std::size_t n = rel.source_size();
  std::vector<Subset> classes;
  std::uint64_t seen = 0;
  for (Element x = 0; x < n; ++x) {
    if ((seen >> x) & 1u) continue;
    classes.push_back(rel.row(x));
    seen |= rel.row(x).mask();
  }
  return Partition(n, std::move(classes));
}

namespace {

void require_same_order(const FiniteAlgebra& alg, const Partition& p) {
  if (alg.order() != p.carrier()) {
    throw DomainError("partition carrier " + std::to_string(p.carrier()) +
                      " does not match algebra order " + std::to_string(alg.order()));
  }
}

}  // namespace

CongruenceReport is_congruence(const FiniteAlgebra& alg, const Partition& p) {
  require_same_order(alg, p);
  const auto n = static_cast<Element>(alg.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !p.related(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!p.related(alg.op(x, z), alg.op(y, z))) {
          return {false, CongruenceWitness{x, y, z, CongruenceWitness::Side::right}};
        }
        if (!p.related(alg.op(z, x), alg.op(z, y))) {
          return {false, CongruenceWitness{x, y, z, CongruenceWitness::Side::left}};
        }
      }
    }
  }
  return {};
}

ClassProductReport class_product_inclusion(const FiniteAlgebra& alg, const Partition& p) {
  require_same_order(alg, p);
  const auto n = static_cast<Element>(alg.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Subset prod = product_set(alg, p.class_of(x), p.class_of(y));
      const Subset extra = prod - p.class_of(alg.op(x, y));
      if (!extra.empty()) return {false, Witness::of(x, y), extra.min()};
    }
  }
  return {};
}

ClassProductReport is_complete_congruence(const FiniteAlgebra& alg, const Partition& p) {
  const CongruenceReport cong = is_congruence(alg, p);
  if (!cong.holds) {
    const auto& w = *cong.witness;
    throw PreconditionError("completeness needs a congruence; compatibility fails at (x=" +
                            std::to_string(w.x) + ", y=" + std::to_string(w.y) +
                            ", z=" + std::to_string(w.z) + ")");
  }
  const auto n = static_cast<Element>(alg.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Subset prod = product_set(alg, p.class_of(x), p.class_of(y));
      const Subset& target = p.class_of(alg.op(x, y));
      if (prod != target) {
        const Subset diff = (target - prod).empty() ? prod - target : target - prod;
        return {false, Witness::of(x, y), diff.min()};
      }
    }
  }
  return {};
}

RelationPairs relation_from_ideal(const FiniteAlgebra& alg, const Subset& ideal) {
  if (ideal.carrier() != alg.order()) {
    throw DomainError("ideal carrier does not match algebra order");
  }
  const auto n = static_cast<Element>(alg.order());
  RelationPairs rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (ideal.contains(alg.op(x, y)) && ideal.contains(alg.op(y, x))) rel.add(x, y);
    }
  }
  return rel;
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& fn) {
  if (n > 12) throw SizeLimitError("partition enumeration", n, 12);
  if (n == 0) {
    fn(Partition(0, {}));
    return;
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::uint32_t> rgs(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  while (true) {
    fn(Partition::from_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace roughalg
