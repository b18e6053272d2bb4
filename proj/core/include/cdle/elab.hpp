#pragma once

#include <string>
#include <vector>

#include "cdle/check.hpp"
#include "cdle/parse.hpp"

namespace cdle {

struct ElabOptions {
  std::uint64_t fuel = 100000; // per top-level declaration
  bool print_erased = false;
  Tracer* tracer = nullptr;
};

struct DeclReport {
  SourceSpan span;
  std::string what; // "def name", "#check", ...
  bool ok = true;
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;
  std::vector<std::string> output; // #norm/#synth results, erasure listings
};

/// Processes declarations in order. Definitions are kind-checked, checked
/// against their classifier, then inlined into every later declaration
/// before it is checked: the kernel context itself never contains
/// definitions. Term definitions are inlined as χ-annotated bodies so their
/// occurrences synthesize; type definitions are inlined as written.
class Elaborator {
public:
  Elaborator(NameSupply& names, ElabOptions opts) : names_(names), opts_(opts) {}

  DeclReport process(const Decl& d);

  TermPtr inline_defs(TermPtr t) const;
  TypePtr inline_defs(TypePtr t) const;
  KindPtr inline_defs(KindPtr k) const;

  struct Def {
    Name name;
    TypePtr classifier_type; // term definitions
    KindPtr classifier_kind; // type definitions
    TermPtr term_body;       // χ-wrapped
    TypePtr type_body;
  };
  const std::vector<Def>& defs() const { return defs_; }
  bool all_ok() const { return all_ok_; }

private:
  NameSupply& names_;
  ElabOptions opts_;
  std::vector<Def> defs_;
  bool all_ok_ = true;
};

struct ElabResult {
  std::vector<DeclReport> reports;
  bool all_ok = true;
};

ElabResult elaborate(const std::vector<Decl>& decls, NameSupply& names, const ElabOptions& opts);

} // namespace cdle
