#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace roughalg {

using Element = std::uint32_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain an operation accepts (carrier size,
/// element range, mismatched carriers).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation-table entry names an element outside the carrier.
class ClosureError : public DomainError {
 public:
  ClosureError(Element row, Element col, std::uint64_t value)
      : DomainError("closure violation: table(" + std::to_string(row) + "," +
                    std::to_string(col) + ") = " + std::to_string(value) +
                    " is outside the carrier"),
        row_(row), col_(col), value_(value) {}

  Element row() const noexcept { return row_; }
  Element col() const noexcept { return col_; }
  std::uint64_t value() const noexcept { return value_; }

 private:
  Element row_;
  Element col_;
  std::uint64_t value_;
};

/// A caller-side precondition of a checker was not met (e.g. a completeness
/// test on a partition that is not a congruence).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration was asked to run past its configured size guard.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what, std::size_t requested, std::size_t limit)
      : Error(what + ": size " + std::to_string(requested) + " exceeds limit " +
              std::to_string(limit)),
        requested_(requested), limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// The wall-clock budget of a search ran out. `count()` is exact for the
/// explored prefix of the search order.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t count)
      : Error("time budget exceeded after " + std::to_string(count) + " results"),
        count_(count) {}

  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

}  // namespace roughalg
