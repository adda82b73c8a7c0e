#pragma once

namespace roughalg {

/// Selects the kernel variant. `serial` is the reference implementation the
/// parallel variants are tested against; both produce identical results.
enum class Exec { serial, parallel };

/// True when the library was built with OpenMP; `Exec::parallel` silently
/// degrades to the serial path otherwise.
bool parallel_available() noexcept;

}  // namespace roughalg
