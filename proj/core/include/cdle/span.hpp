#pragma once

#include <cstdint>
#include <string>

namespace cdle {

/// Byte range in a source file, with 1-based line/column of both endpoints.
/// A default-constructed span (empty file name) means "no source location",
/// which is what kernel-built expressions carry.
struct SourceSpan {
  std::string file;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::uint32_t line = 0;
  std::uint32_t col = 0;
  std::uint32_t end_line = 0;
  std::uint32_t end_col = 0;

  bool known() const { return !file.empty(); }
};

} // namespace cdle
