#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "roughalg/algebra.hpp"
#include "roughalg/gas.hpp"
#include "roughalg/relations.hpp"

namespace roughalg::io {

/// Malformed input text. Line and column are 1-based; column 0 means the
/// whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct AlgebraFile {
  std::optional<std::string> name;
  FiniteAlgebra algebra;
};

/// Algebra file format:
///
///     algebra <name>      (optional, must come first)
///     order <n>
///     zero <z>
///     <n rows of n whitespace-separated integers; row x lists x*0 .. x*(n-1)>
///
/// `#` starts a comment that runs to the end of the line; blank lines are
/// ignored.
AlgebraFile parse_algebra_file(std::string_view text);
FiniteAlgebra parse_algebra(std::string_view text);
AlgebraFile load_algebra(const std::filesystem::path& path);

std::string render_algebra(const FiniteAlgebra& alg, const std::optional<std::string>& name = {});

/// "0,1,3"; surrounding braces are accepted, the empty string is the empty set.
Subset parse_subset(std::string_view text, std::size_t n);

/// Classes joined by '|': "0,1|2|3|4".
Partition parse_partition(std::string_view text, std::size_t n);

/// "x:img;x:img;..." with each image in subset syntax; every source element
/// must appear exactly once. "0:0;1:0,1;2:" maps 2 to the empty set.
SetValuedMap parse_svmap(std::string_view text, std::size_t source_size, std::size_t target_size);

}  // namespace roughalg::io
