#include "roughalg/subset.hpp"

#include <algorithm>
#include <ostream>

namespace roughalg {

namespace {

void require_carrier(std::size_t n) {
  if (n > Subset::kMaxCarrier) {
    throw DomainError("carrier size " + std::to_string(n) + " exceeds " +
                      std::to_string(Subset::kMaxCarrier));
  }
}

}  // namespace

Subset::Subset(std::size_t n) : n_(n) { require_carrier(n); }

Subset::Subset(std::size_t n, std::initializer_list<Element> elems) : Subset(n) {
  for (Element x : elems) insert(x);
}

Subset::Subset(std::size_t n, const std::vector<Element>& elems) : Subset(n) {
  for (Element x : elems) insert(x);
}

Subset Subset::full(std::size_t n) {
  require_carrier(n);
  return from_raw(n, full_mask(n));
}

Subset Subset::singleton(std::size_t n, Element x) {
  Subset s(n);
  s.insert(x);
  return s;
}

Subset Subset::from_mask(std::size_t n, std::uint64_t mask) {
  require_carrier(n);
  if ((mask & ~full_mask(n)) != 0) {
    throw DomainError("mask has bits outside carrier of size " + std::to_string(n));
  }
  return from_raw(n, mask);
}

void Subset::insert(Element x) {
  if (x >= n_) {
    throw DomainError("element " + std::to_string(x) + " outside carrier of size " +
                      std::to_string(n_));
  }
  bits_ |= std::uint64_t{1} << x;
}

void Subset::erase(Element x) {
  if (x < n_) bits_ &= ~(std::uint64_t{1} << x);
}

void Subset::require_same_carrier(const Subset& other) const {
  if (n_ != other.n_) {
    throw DomainError("subset carriers differ: " + std::to_string(n_) + " vs " +
                      std::to_string(other.n_));
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_carrier(other);
  return (bits_ & ~other.bits_) == 0;
}

bool Subset::intersects(const Subset& other) const {
  require_same_carrier(other);
  return (bits_ & other.bits_) != 0;
}

Subset& Subset::operator|=(const Subset& other) {
  require_same_carrier(other);
  bits_ |= other.bits_;
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  require_same_carrier(other);
  bits_ &= other.bits_;
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  require_same_carrier(other);
  bits_ &= ~other.bits_;
  return *this;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Element x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Subset& s) { return os << s.to_string(); }

bool canonical_less(const Subset& a, const Subset& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  // The set holding the lowest differing element sorts first.
  return (a.mask() & (diff & -diff)) != 0;
}

std::vector<Subset> all_subsets(std::size_t n) {
  if (n > 20) throw SizeLimitError("all_subsets", n, 20);
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    out.push_back(Subset::from_mask(n, m));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace roughalg
