#include "roughalg/gas.hpp"

namespace roughalg {

SetValuedMap::SetValuedMap(std::size_t source_size, std::size_t target_size,
                           std::vector<Subset> images, bool serial)
    : target_size_(target_size), images_(std::move(images)) {
  if (images_.size() != source_size) {
    throw DomainError("set-valued map has " + std::to_string(images_.size()) +
                      " images for a source of size " + std::to_string(source_size));
  }
  for (Element x = 0; x < images_.size(); ++x) {
    if (images_[x].carrier() != target_size) {
      throw DomainError("image of " + std::to_string(x) + " is not over the target carrier");
    }
    if (serial && images_[x].empty()) {
      throw DomainError("image of " + std::to_string(x) + " is empty");
    }
  }
}

SetValuedMap SetValuedMap::from_partition(const Partition& p) {
  std::vector<Subset> images;
  images.reserve(p.carrier());
  for (Element x = 0; x < p.carrier(); ++x) images.push_back(p.class_of(x));
  return SetValuedMap(p.carrier(), p.carrier(), std::move(images));
}

namespace {

void require_target(const SetValuedMap& f, const Subset& a) {
  if (a.carrier() != f.target_size()) {
    throw DomainError("subset is not over the target carrier of the map");
  }
}

void require_dims(const SetValuedMap& f, const FiniteAlgebra& source,
                  const FiniteAlgebra& target) {
  if (f.source_size() != source.order() || f.target_size() != target.order()) {
    throw DomainError("map dimensions " + std::to_string(f.source_size()) + "->" +
                      std::to_string(f.target_size()) + " do not match algebras of order " +
                      std::to_string(source.order()) + " and " + std::to_string(target.order()));
  }
}

MorphismReport check(const SetValuedMap& f, const FiniteAlgebra& source,
                     const FiniteAlgebra& target, bool strong) {
  require_dims(f, source, target);
  MorphismReport report;
  report.source_labels = classify(source);
  report.target_labels = classify(target);
  const auto n = static_cast<Element>(source.order());
  for (Element x = 0; x < n && report.holds; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Subset prod = product_set(target, f(x), f(y));
      const Subset& image = f(source.op(x, y));
      const Subset missing = prod - image;
      if (!missing.empty()) {
        report.holds = false;
        report.witness = {x, y, missing.min(), MorphismWitness::Direction::missing};
        break;
      }
      const Subset extra = image - prod;
      if (strong && !extra.empty()) {
        report.holds = false;
        report.witness = {x, y, extra.min(), MorphismWitness::Direction::extra};
        break;
      }
    }
  }
  return report;
}

}  // namespace

Subset gen_lower(const SetValuedMap& f, const Subset& a) {
  require_target(f, a);
  Subset out(f.source_size());
  for (Element x = 0; x < f.source_size(); ++x) {
    if (f(x).is_subset_of(a)) out.insert(x);
  }
  return out;
}

Subset gen_upper(const SetValuedMap& f, const Subset& a) {
  require_target(f, a);
  Subset out(f.source_size());
  for (Element x = 0; x < f.source_size(); ++x) {
    if (f(x).intersects(a)) out.insert(x);
  }
  return out;
}

RelationPairs induced_relation(const SetValuedMap& f) {
  RelationPairs rel(f.source_size(), f.target_size());
  for (Element x = 0; x < f.source_size(); ++x) {
    f(x).for_each([&](Element y) { rel.add(x, y); });
  }
  return rel;
}

MorphismReport is_sv_morphism(const SetValuedMap& f, const FiniteAlgebra& source,
                              const FiniteAlgebra& target) {
  return check(f, source, target, false);
}

MorphismReport is_strong_sv_morphism(const SetValuedMap& f, const FiniteAlgebra& source,
                                     const FiniteAlgebra& target) {
  return check(f, source, target, true);
}

}  // namespace roughalg
