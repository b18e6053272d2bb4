#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cdle/convert.hpp"
#include "cdle/diag.hpp"
#include "cdle/syntax.hpp"

namespace cdle {

/// Receives one line per classification rule applied, with the derivation
/// depth for indentation.
struct Tracer {
  virtual ~Tracer() = default;
  virtual void rule(std::string_view name, const std::string& judgment, int depth) = 0;
};

/// Caller-owned state threaded through one top-level judgment: the shared
/// step budget, the fresh-name supply, and optional trace/warning sinks.
struct CheckState {
  Budget& fuel;
  NameSupply& names;
  Tracer* tracer = nullptr;
  std::vector<Diagnostic>* warnings = nullptr;
  std::uint64_t initial_fuel = 0;
  int depth = 0;
};

using CheckResult = std::optional<Diagnostic>; // nullopt means accepted
using SynthResult = std::variant<TypePtr, Diagnostic>;
using KindSynthResult = std::variant<KindPtr, Diagnostic>;

/// Γ ⊢ κ
CheckResult wf_kind(Context& ctx, const KindPtr& k, CheckState& st);

/// Γ ⊢ T ⇒ κ
KindSynthResult kind_synth(Context& ctx, const TypePtr& t, CheckState& st);

/// Γ ⊢ t ⇐ T. The expected type must be well-kinded in Γ; the driver kinds
/// every declared classifier before checking against it.
CheckResult type_check(Context& ctx, const TermPtr& t, const TypePtr& expected, CheckState& st);

/// Γ ⊢ t ⇒ T
SynthResult type_synth(Context& ctx, const TermPtr& t, CheckState& st);

/// Replaces, in every annotated-term leaf of the type, each outermost
/// subterm whose erasure is alpha-equivalent to erase(from) by `to`.
struct RhoResult {
  TypePtr type;
  int matches = 0;
};
RhoResult rho_rewrite(const TypePtr& target, const TermPtr& from, const TermPtr& to);

/// The equation δ eliminates: { λ x . λ y . x ≃ λ x . λ y . y }.
TypePtr church_bool_equation();

} // namespace cdle
