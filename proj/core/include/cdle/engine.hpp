#pragma once

#include <optional>
#include <vector>

#include "cdle/erase.hpp"

namespace cdle {

/// Step budget shared by every reduction performed inside one top-level
/// judgment. Each β- or η-step charges exactly one unit.
struct Budget {
  std::uint64_t remaining = 0;
  bool charge() {
    if (remaining == 0) return false;
    --remaining;
    return true;
  }
};

struct NormResult {
  enum class Status { Normal, Exhausted };
  Status status = Status::Normal;
  PurePtr term;             // normal form, or the partially reduced term
  std::uint64_t steps = 0;  // steps actually taken
  bool normal() const { return status == Status::Normal; }
};

/// One leftmost-outermost step. β contracts (λx.t) s; η contracts λx. t x
/// when x is not free in t, and is tried at a λ-node only when no β-redex
/// remains at or under the head t. Absent iff the term is βη-normal.
std::optional<PurePtr> step(const PurePtr& p);

/// Iterates step until normal or out of fuel. Exhaustion is a value, not a
/// failure; callers decide severity.
NormResult normalize(PurePtr p, Budget& fuel);

enum class Equivalence { Equal, NotEqual, Exhausted };

/// Normalizes both sides with the shared fuel; Equal iff both reach
/// alpha-equivalent normal forms, NotEqual iff both normalize and differ.
Equivalence beta_eta_equal(const PurePtr& p, const PurePtr& q, Budget& fuel);

/// All single β- or η-reducts, at every position. Test oracle machinery.
std::vector<PurePtr> reducts_one_step(const PurePtr& p);

/// Breadth-first joinability oracle: collects all βη-reducts of both terms
/// to the given depth; true when the sets meet, false when both sets are
/// closed under reduction and disjoint, absent when inconclusive.
std::optional<bool> oracle_equal(const PurePtr& p, const PurePtr& q, unsigned depth);

/// Reducts of `p` reachable within `depth` steps, including `p`, plus a flag
/// telling whether the set is closed under one-step reduction.
struct ReductClosure {
  std::vector<PurePtr> terms;
  bool complete = false;
};
ReductClosure reduct_closure(const PurePtr& p, unsigned depth);

} // namespace cdle
