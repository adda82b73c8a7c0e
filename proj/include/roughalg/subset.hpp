#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "roughalg/error.hpp"

namespace roughalg {

/// A subset of the carrier {0..n-1}, stored as a 64-bit mask.
///
/// All binary operations require both operands to share the same carrier
/// size and throw DomainError otherwise.
class Subset {
 public:
  static constexpr std::size_t kMaxCarrier = 64;

  Subset() = default;
  explicit Subset(std::size_t n);
  Subset(std::size_t n, std::initializer_list<Element> elems);
  Subset(std::size_t n, const std::vector<Element>& elems);

  static Subset full(std::size_t n);
  static Subset singleton(std::size_t n, Element x);
  static Subset from_mask(std::size_t n, std::uint64_t mask);

  std::size_t carrier() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return bits_; }

  bool contains(Element x) const noexcept {
    return x < n_ && ((bits_ >> x) & 1u) != 0;
  }
  void insert(Element x);
  void erase(Element x);

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(n_); }

  /// Smallest element; undefined on the empty set.
  Element min() const noexcept { return static_cast<Element>(std::countr_zero(bits_)); }

  Subset complement() const noexcept { return from_raw(n_, ~bits_ & full_mask(n_)); }
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;

  /// Elements in increasing order.
  std::vector<Element> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) {
      fn(static_cast<Element>(std::countr_zero(m)));
    }
  }

  /// "{0,1,3}"
  std::string to_string() const;

  static constexpr std::uint64_t full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

 private:
  static Subset from_raw(std::size_t n, std::uint64_t bits) noexcept {
    Subset s;
    s.n_ = n;
    s.bits_ = bits;
    return s;
  }
  void require_same_carrier(const Subset& other) const;

  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Subset& s);

/// Canonical order: by cardinality, then lexicographically on the sorted
/// element lists.
bool canonical_less(const Subset& a, const Subset& b) noexcept;

/// Every subset of {0..n-1} in canonical order. n is limited to 20.
std::vector<Subset> all_subsets(std::size_t n);

}  // namespace roughalg
