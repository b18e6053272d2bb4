#pragma once

#include "cdle/engine.hpp"
#include "cdle/syntax.hpp"

namespace cdle {

enum class ConvOutcome { Convertible, NotConvertible, Exhausted };

struct TypeNorm {
  TypePtr type;
  bool exhausted = false;
};

struct KindNorm {
  KindPtr kind;
  bool exhausted = false;
};

/// Contracts the type-level β-redexes (λx:S.T) t and (λX:κ.T) · S, outermost
/// first, everywhere except inside annotated-term leaves. Each contraction
/// charges the budget.
TypeNorm type_beta_normalize(const TypePtr& t, Budget& fuel, NameSupply& names);
KindNorm kind_beta_normalize(const KindPtr& k, Budget& fuel, NameSupply& names);

/// Reduces head redexes only, until the head is a former or a variable-headed
/// application.
TypeNorm type_whnf(const TypePtr& t, Budget& fuel);

/// T ≅ T': β-normalize both sides, then compare structurally; applied terms
/// and equation sides are compared by βη-equivalence of their erasures.
/// β-equivalence only at the type level, no η.
ConvOutcome convert_types(const TypePtr& a, const TypePtr& b, Budget& fuel, NameSupply& names);

/// κ ≅ κ': ★ matches ★, Π-kinds compare domains and bodies under a common
/// fresh name.
ConvOutcome convert_kinds(const KindPtr& a, const KindPtr& b, Budget& fuel, NameSupply& names);

} // namespace cdle
