#include "cdle/diag.hpp"

#include <json.hpp>

namespace cdle {

std::string_view diag_code_name(DiagCode code) {
  switch (code) {
    case DiagCode::ParseError: return "ParseError";
    case DiagCode::Usage: return "Usage";
    case DiagCode::UnboundVariable: return "UnboundVariable";
    case DiagCode::DuplicateName: return "DuplicateName";
    case DiagCode::HeadMismatch: return "HeadMismatch";
    case DiagCode::KindMismatch: return "KindMismatch";
    case DiagCode::EqScope: return "EqScope";
    case DiagCode::ErasedVarEscapes: return "ErasedVarEscapes";
    case DiagCode::IntersectionErasureMismatch: return "IntersectionErasureMismatch";
    case DiagCode::KleeneScope: return "KleeneScope";
    case DiagCode::DeltaPremise: return "DeltaPremise";
    case DiagCode::RhoNoMatch: return "RhoNoMatch";
    case DiagCode::ConversionFailed: return "ConversionFailed";
    case DiagCode::FuelExhausted: return "FuelExhausted";
    case DiagCode::NotSynthesizable: return "NotSynthesizable";
    case DiagCode::UnexpectedSuccess: return "UnexpectedSuccess";
  }
  return "Unknown";
}

std::string Diagnostic::render() const {
  std::string out;
  out += span.known() ? span.file : "<input>";
  out += ":" + std::to_string(span.line) + ":" + std::to_string(span.col) + ": ";
  out += diag_code_name(code);
  out += ": " + message;
  if (!expected.empty() || !actual.empty()) {
    out += " (expected: " + expected + "; actual: " + actual + ")";
  }
  if (fuel) out += " [fuel " + std::to_string(*fuel) + "]";
  return out;
}

std::string Diagnostic::render_json() const {
  nlohmann::json j;
  j["file"] = span.known() ? span.file : "<input>";
  j["line"] = span.line;
  j["col"] = span.col;
  j["code"] = std::string(diag_code_name(code));
  j["message"] = message;
  j["expected"] = expected.empty() ? nlohmann::json() : nlohmann::json(expected);
  j["actual"] = actual.empty() ? nlohmann::json() : nlohmann::json(actual);
  return j.dump();
}

} // namespace cdle
