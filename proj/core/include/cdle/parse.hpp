#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdle/diag.hpp"
#include "cdle/syntax.hpp"

namespace cdle {

// Declarations of a .ced file. Identifiers spelled with an initial uppercase
// letter are type-level, lowercase ones term-level; a Define pairs its
// classifier and body accordingly.
struct Define {
  Name name;
  std::variant<TypePtr, KindPtr> classifier; // TypePtr for terms, KindPtr for types
  std::variant<TermPtr, TypePtr> body;
};
struct CheckDirective { TermPtr term; TypePtr type; };
struct FailDirective { TermPtr term; TypePtr type; };
struct ConvDirective { TypePtr lhs; TypePtr rhs; };
struct NormDirective { TermPtr term; };
struct SynthDirective { TermPtr term; };

struct Decl {
  std::variant<Define, CheckDirective, FailDirective, ConvDirective, NormDirective,
               SynthDirective>
      node;
  SourceSpan span;
};

struct ParseResult {
  std::vector<Decl> decls;
  std::optional<Diagnostic> error; // set when parsing aborted
};

/// Parses a whole declaration file. Names are resolved during parsing:
/// binder occurrences become indices, references to earlier definitions
/// become free variables, anything else is an error.
ParseResult parse_file(std::string_view text, const std::string& filename, NameSupply& names);

/// Expression entry points. Free identifiers resolve through `frees`.
using FreeScope = std::map<std::string, Name>;
std::variant<TermPtr, Diagnostic> parse_term(std::string_view text, NameSupply& names,
                                             const FreeScope& frees = {});
std::variant<TypePtr, Diagnostic> parse_type(std::string_view text, NameSupply& names,
                                             const FreeScope& frees = {});
std::variant<KindPtr, Diagnostic> parse_kind(std::string_view text, NameSupply& names,
                                             const FreeScope& frees = {});

/// Canonical rendering of one declaration, ending in " .".
std::string print_decl(const Decl& d);

} // namespace cdle
