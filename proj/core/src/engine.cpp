#include "cdle/engine.hpp"

#include <string>
#include <unordered_set>

namespace cdle {

namespace {

using pure::App;
using pure::Bound;
using pure::Lam;
using pure::Var;

PurePtr shift(const PurePtr& t, std::int64_t amount, std::uint32_t cutoff) {
  if (auto* b = std::get_if<Bound>(&t->node)) {
    if (b->index >= cutoff)
      return mk_pbound(static_cast<std::uint32_t>(b->index + amount));
    return t;
  }
  if (auto* l = std::get_if<Lam>(&t->node)) {
    auto body = shift(l->body, amount, cutoff + 1);
    return body == l->body ? t : mk_plam(l->hint, body);
  }
  if (auto* a = std::get_if<App>(&t->node)) {
    auto fn = shift(a->fn, amount, cutoff);
    auto arg = shift(a->arg, amount, cutoff);
    return fn == a->fn && arg == a->arg ? t : mk_papp(fn, arg);
  }
  return t;
}

// [value/0]body, standard de Bruijn substitution.
PurePtr subst_top(const PurePtr& t, const PurePtr& value, std::uint32_t depth) {
  if (auto* b = std::get_if<Bound>(&t->node)) {
    if (b->index == depth) return depth == 0 ? value : shift(value, depth, 0);
    if (b->index > depth) return mk_pbound(b->index - 1);
    return t;
  }
  if (auto* l = std::get_if<Lam>(&t->node)) {
    auto body = subst_top(l->body, value, depth + 1);
    return body == l->body ? t : mk_plam(l->hint, body);
  }
  if (auto* a = std::get_if<App>(&t->node)) {
    auto fn = subst_top(a->fn, value, depth);
    auto arg = subst_top(a->arg, value, depth);
    return fn == a->fn && arg == a->arg ? t : mk_papp(fn, arg);
  }
  return t;
}

bool uses_index(const PurePtr& t, std::uint32_t target) {
  if (auto* b = std::get_if<Bound>(&t->node)) return b->index == target;
  if (auto* l = std::get_if<Lam>(&t->node)) return uses_index(l->body, target + 1);
  if (auto* a = std::get_if<App>(&t->node))
    return uses_index(a->fn, target) || uses_index(a->arg, target);
  return false;
}

bool has_beta_redex(const PurePtr& t) {
  if (auto* l = std::get_if<Lam>(&t->node)) return has_beta_redex(l->body);
  if (auto* a = std::get_if<App>(&t->node))
    return std::holds_alternative<Lam>(a->fn->node) || has_beta_redex(a->fn) ||
           has_beta_redex(a->arg);
  return false;
}

// λ. t 0 with 0 not free in t; gives t with the indices over the removed
// binder shifted down.
std::optional<PurePtr> eta_contract(const Lam& l) {
  auto* body = std::get_if<App>(&l.body->node);
  if (!body) return std::nullopt;
  auto* arg = std::get_if<Bound>(&body->arg->node);
  if (!arg || arg->index != 0) return std::nullopt;
  if (uses_index(body->fn, 0)) return std::nullopt;
  return shift(body->fn, -1, 1);
}

std::string key_of(const PurePtr& t) {
  if (auto* v = std::get_if<Var>(&t->node))
    return "V" + std::to_string(static_cast<int>(v->name.ns)) + ":" + std::to_string(v->name.id);
  if (auto* b = std::get_if<Bound>(&t->node)) return "B" + std::to_string(b->index);
  if (auto* l = std::get_if<Lam>(&t->node)) return "L(" + key_of(l->body) + ")";
  const auto& a = std::get<App>(t->node);
  return "A(" + key_of(a.fn) + "," + key_of(a.arg) + ")";
}

} // namespace

std::optional<PurePtr> step(const PurePtr& p) {
  if (auto* a = std::get_if<App>(&p->node)) {
    if (auto* l = std::get_if<Lam>(&a->fn->node)) return subst_top(l->body, a->arg, 0);
    if (auto fn = step(a->fn)) return mk_papp(*fn, a->arg);
    if (auto arg = step(a->arg)) return mk_papp(a->fn, *arg);
    return std::nullopt;
  }
  if (auto* l = std::get_if<Lam>(&p->node)) {
    if (auto* body = std::get_if<App>(&l->body->node);
        body && !(std::holds_alternative<Lam>(body->fn->node) || has_beta_redex(body->fn)))
      if (auto contracted = eta_contract(*l)) return contracted;
    if (auto body = step(l->body)) return mk_plam(l->hint, *body);
    return std::nullopt;
  }
  return std::nullopt;
}

NormResult normalize(PurePtr p, Budget& fuel) {
  std::uint64_t steps = 0;
  for (;;) {
    auto next = step(p);
    if (!next) return {NormResult::Status::Normal, p, steps};
    if (!fuel.charge()) return {NormResult::Status::Exhausted, p, steps};
    p = *next;
    ++steps;
  }
}

Equivalence beta_eta_equal(const PurePtr& p, const PurePtr& q, Budget& fuel) {
  NormResult np = normalize(p, fuel);
  if (!np.normal()) return Equivalence::Exhausted;
  NormResult nq = normalize(q, fuel);
  if (!nq.normal()) return Equivalence::Exhausted;
  return alpha_eq(np.term, nq.term) ? Equivalence::Equal : Equivalence::NotEqual;
}

std::vector<PurePtr> reducts_one_step(const PurePtr& p) {
  std::vector<PurePtr> out;
  if (auto* a = std::get_if<App>(&p->node)) {
    if (auto* l = std::get_if<Lam>(&a->fn->node)) out.push_back(subst_top(l->body, a->arg, 0));
    for (const auto& fn : reducts_one_step(a->fn)) out.push_back(mk_papp(fn, a->arg));
    for (const auto& arg : reducts_one_step(a->arg)) out.push_back(mk_papp(a->fn, arg));
  } else if (auto* l = std::get_if<Lam>(&p->node)) {
    if (auto contracted = eta_contract(*l)) out.push_back(*contracted);
    for (const auto& body : reducts_one_step(l->body)) out.push_back(mk_plam(l->hint, body));
  }
  return out;
}

ReductClosure reduct_closure(const PurePtr& p, unsigned depth) {
  ReductClosure out;
  std::unordered_set<std::string> seen;
  seen.insert(key_of(p));
  out.terms.push_back(p);
  std::vector<PurePtr> frontier{p};
  for (unsigned d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<PurePtr> next;
    for (const auto& u : frontier)
      for (const auto& v : reducts_one_step(u))
        if (seen.insert(key_of(v)).second) {
          next.push_back(v);
          out.terms.push_back(v);
        }
    frontier = std::move(next);
  }
  out.complete = true;
  for (const auto& u : out.terms) {
    for (const auto& v : reducts_one_step(u))
      if (!seen.count(key_of(v))) {
        out.complete = false;
        break;
      }
    if (!out.complete) break;
  }
  return out;
}

std::optional<bool> oracle_equal(const PurePtr& p, const PurePtr& q, unsigned depth) {
  ReductClosure cp = reduct_closure(p, depth);
  ReductClosure cq = reduct_closure(q, depth);
  std::unordered_set<std::string> keys;
  for (const auto& t : cp.terms) keys.insert(key_of(t));
  for (const auto& t : cq.terms)
    if (keys.count(key_of(t))) return true;
  if (cp.complete && cq.complete) return false;
  return std::nullopt;
}

} // namespace cdle
