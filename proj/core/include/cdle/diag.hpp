#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cdle/span.hpp"

namespace cdle {

enum class DiagCode {
  ParseError,
  Usage,
  UnboundVariable,
  DuplicateName,
  HeadMismatch,
  KindMismatch,
  EqScope,
  ErasedVarEscapes,
  IntersectionErasureMismatch,
  KleeneScope,
  DeltaPremise,
  RhoNoMatch, // warning, never fails a declaration
  ConversionFailed,
  FuelExhausted,
  NotSynthesizable,
  UnexpectedSuccess,
};

std::string_view diag_code_name(DiagCode code);

/// One rejection (or warning) with a primary code, a source position and,
/// when a comparison failed, the two classifiers that did not line up.
struct Diagnostic {
  DiagCode code = DiagCode::ParseError;
  std::string message;
  SourceSpan span;
  std::string expected; // rendered classifier, empty when not applicable
  std::string actual;
  std::optional<std::uint64_t> fuel; // budget that was exhausted

  bool is_warning() const { return code == DiagCode::RhoNoMatch; }

  /// "FILE:LINE:COL: CODE: message"
  std::string render() const;
  /// One JSON object with fields file, line, col, code, message, expected, actual.
  std::string render_json() const;
};

} // namespace cdle
