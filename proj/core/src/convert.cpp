#include "cdle/convert.hpp"

namespace cdle {

namespace {

std::string spelling_or(const std::string& hint, const char* fallback) {
  return hint.empty() ? fallback : hint;
}

} // namespace

TypeNorm type_whnf(const TypePtr& t, Budget& fuel) {
  if (auto* a = std::get_if<type::AppTerm>(&t->node)) {
    TypeNorm head = type_whnf(a->fn, fuel);
    auto rebuilt = [&] { return head.type == a->fn ? t : mk_app_term(head.type, a->arg, t->span); };
    if (head.exhausted) return {rebuilt(), true};
    if (auto* l = std::get_if<type::LamTerm>(&head.type->node)) {
      if (!fuel.charge()) return {rebuilt(), true};
      return type_whnf(open_term(l->body, a->arg), fuel);
    }
    return {rebuilt(), false};
  }
  if (auto* a = std::get_if<type::AppType>(&t->node)) {
    TypeNorm head = type_whnf(a->fn, fuel);
    auto rebuilt = [&] { return head.type == a->fn ? t : mk_app_type(head.type, a->arg, t->span); };
    if (head.exhausted) return {rebuilt(), true};
    if (auto* l = std::get_if<type::LamType>(&head.type->node)) {
      if (!fuel.charge()) return {rebuilt(), true};
      return type_whnf(open_type(l->body, a->arg), fuel);
    }
    return {rebuilt(), false};
  }
  return {t, false};
}

KindNorm kind_beta_normalize(const KindPtr& k, Budget& fuel, NameSupply& names) {
  using namespace kind;
  if (std::holds_alternative<Star>(k->node)) return {k, false};
  if (auto* p = std::get_if<PiTerm>(&k->node)) {
    TypeNorm dom = type_beta_normalize(p->dom, fuel, names);
    if (dom.exhausted) return {k, true};
    Name x = names.fresh(Namespace::TermVar, spelling_or(p->hint, "x"));
    KindNorm body = kind_beta_normalize(open_term(p->body, mk_var(x)), fuel, names);
    if (body.exhausted) return {k, true};
    return {mk_pi_term(p->hint, dom.type, close_term(body.kind, x), k->span), false};
  }
  const auto& p = std::get<PiType>(k->node);
  KindNorm dom = kind_beta_normalize(p.dom, fuel, names);
  if (dom.exhausted) return {k, true};
  Name X = names.fresh(Namespace::TypeVar, spelling_or(p.hint, "X"));
  KindNorm body = kind_beta_normalize(open_type(p.body, mk_tvar(X)), fuel, names);
  if (body.exhausted) return {k, true};
  return {mk_pi_type(p.hint, dom.kind, close_type(body.kind, X), k->span), false};
}

TypeNorm type_beta_normalize(const TypePtr& t, Budget& fuel, NameSupply& names) {
  using namespace type;
  TypeNorm head = type_whnf(t, fuel);
  if (head.exhausted) return head;
  const TypePtr& w = head.type;

  if (std::holds_alternative<Var>(w->node) || std::holds_alternative<Bound>(w->node) ||
      std::holds_alternative<Eq>(w->node))
    return {w, false};

  if (auto* a = std::get_if<All>(&w->node)) {
    KindNorm dom = kind_beta_normalize(a->dom, fuel, names);
    if (dom.exhausted) return {w, true};
    Name X = names.fresh(Namespace::TypeVar, spelling_or(a->hint, "X"));
    TypeNorm body = type_beta_normalize(open_type(a->body, mk_tvar(X)), fuel, names);
    if (body.exhausted) return {w, true};
    return {mk_all(a->hint, dom.kind, close_type(body.type, X), w->span), false};
  }
  if (auto* l = std::get_if<LamType>(&w->node)) {
    KindNorm dom = kind_beta_normalize(l->dom, fuel, names);
    if (dom.exhausted) return {w, true};
    Name X = names.fresh(Namespace::TypeVar, spelling_or(l->hint, "X"));
    TypeNorm body = type_beta_normalize(open_type(l->body, mk_tvar(X)), fuel, names);
    if (body.exhausted) return {w, true};
    return {mk_tlam_type(l->hint, dom.kind, close_type(body.type, X), w->span), false};
  }

  auto binder_term = [&](const std::string& hint, const TypePtr& dom, const TypePtr& body,
                         auto rebuild) -> TypeNorm {
    TypeNorm ndom = type_beta_normalize(dom, fuel, names);
    if (ndom.exhausted) return {w, true};
    Name x = names.fresh(Namespace::TermVar, spelling_or(hint, "x"));
    TypeNorm nbody = type_beta_normalize(open_term(body, mk_var(x)), fuel, names);
    if (nbody.exhausted) return {w, true};
    return {rebuild(ndom.type, close_term(nbody.type, x)), false};
  };
  if (auto* a = std::get_if<AllTerm>(&w->node))
    return binder_term(a->hint, a->dom, a->body, [&](TypePtr d, TypePtr b) {
      return mk_all_term(a->hint, d, b, w->span);
    });
  if (auto* p = std::get_if<Pi>(&w->node))
    return binder_term(p->hint, p->dom, p->body, [&](TypePtr d, TypePtr b) {
      return mk_pi(p->hint, d, b, w->span);
    });
  if (auto* i = std::get_if<Iota>(&w->node))
    return binder_term(i->hint, i->dom, i->body, [&](TypePtr d, TypePtr b) {
      return mk_iota(i->hint, d, b, w->span);
    });
  if (auto* l = std::get_if<LamTerm>(&w->node))
    return binder_term(l->hint, l->dom, l->body, [&](TypePtr d, TypePtr b) {
      return mk_tlam_term(l->hint, d, b, w->span);
    });

  if (auto* a = std::get_if<AppTerm>(&w->node)) {
    // Head is already whnf and not a λ, so only the spine may still reduce
    // inside; the annotated argument is left untouched.
    TypeNorm fn = type_beta_normalize(a->fn, fuel, names);
    if (fn.exhausted) return {w, true};
    return {fn.type == a->fn ? w : mk_app_term(fn.type, a->arg, w->span), false};
  }
  const auto& a = std::get<AppType>(w->node);
  TypeNorm fn = type_beta_normalize(a.fn, fuel, names);
  if (fn.exhausted) return {w, true};
  TypeNorm arg = type_beta_normalize(a.arg, fuel, names);
  if (arg.exhausted) return {w, true};
  return {fn.type == a.fn && arg.type == a.arg ? w : mk_app_type(fn.type, arg.type, w->span), false};
}

namespace {

ConvOutcome cong_types(const TypePtr& a, const TypePtr& b, Budget& fuel, NameSupply& names);
ConvOutcome cong_kinds(const KindPtr& a, const KindPtr& b, Budget& fuel, NameSupply& names);

ConvOutcome erased_equal(const TermPtr& x, const TermPtr& y, Budget& fuel) {
  switch (beta_eta_equal(erase(x), erase(y), fuel)) {
    case Equivalence::Equal: return ConvOutcome::Convertible;
    case Equivalence::NotEqual: return ConvOutcome::NotConvertible;
    default: return ConvOutcome::Exhausted;
  }
}

ConvOutcome cong_types(const TypePtr& a, const TypePtr& b, Budget& fuel, NameSupply& names) {
  using namespace type;
  if (a->node.index() != b->node.index()) return ConvOutcome::NotConvertible;

  if (auto* v = std::get_if<Var>(&a->node))
    return v->name == std::get<Var>(b->node).name ? ConvOutcome::Convertible
                                                  : ConvOutcome::NotConvertible;
  if (auto* v = std::get_if<Bound>(&a->node))
    return v->index == std::get<Bound>(b->node).index ? ConvOutcome::Convertible
                                                      : ConvOutcome::NotConvertible;

  auto under_term = [&](const std::string& hint, const TypePtr& body_a, const TypePtr& body_b) {
    Name x = names.fresh(Namespace::TermVar, spelling_or(hint, "x"));
    return cong_types(open_term(body_a, mk_var(x)), open_term(body_b, mk_var(x)), fuel, names);
  };
  auto under_type = [&](const std::string& hint, const TypePtr& body_a, const TypePtr& body_b) {
    Name X = names.fresh(Namespace::TypeVar, spelling_or(hint, "X"));
    return cong_types(open_type(body_a, mk_tvar(X)), open_type(body_b, mk_tvar(X)), fuel, names);
  };

  if (auto* x = std::get_if<All>(&a->node)) {
    const auto& y = std::get<All>(b->node);
    ConvOutcome dom = cong_kinds(x->dom, y.dom, fuel, names);
    if (dom != ConvOutcome::Convertible) return dom;
    return under_type(x->hint, x->body, y.body);
  }
  if (auto* x = std::get_if<LamType>(&a->node)) {
    const auto& y = std::get<LamType>(b->node);
    ConvOutcome dom = cong_kinds(x->dom, y.dom, fuel, names);
    if (dom != ConvOutcome::Convertible) return dom;
    return under_type(x->hint, x->body, y.body);
  }

  auto term_binder = [&](const auto& x, const auto& y) {
    ConvOutcome dom = cong_types(x.dom, y.dom, fuel, names);
    if (dom != ConvOutcome::Convertible) return dom;
    return under_term(x.hint, x.body, y.body);
  };
  if (auto* x = std::get_if<AllTerm>(&a->node)) return term_binder(*x, std::get<AllTerm>(b->node));
  if (auto* x = std::get_if<Pi>(&a->node)) return term_binder(*x, std::get<Pi>(b->node));
  if (auto* x = std::get_if<Iota>(&a->node)) return term_binder(*x, std::get<Iota>(b->node));
  if (auto* x = std::get_if<LamTerm>(&a->node)) return term_binder(*x, std::get<LamTerm>(b->node));

  if (auto* x = std::get_if<AppTerm>(&a->node)) {
    const auto& y = std::get<AppTerm>(b->node);
    ConvOutcome head = cong_types(x->fn, y.fn, fuel, names);
    if (head != ConvOutcome::Convertible) return head;
    return erased_equal(x->arg, y.arg, fuel);
  }
  if (auto* x = std::get_if<AppType>(&a->node)) {
    const auto& y = std::get<AppType>(b->node);
    ConvOutcome head = cong_types(x->fn, y.fn, fuel, names);
    if (head != ConvOutcome::Convertible) return head;
    return cong_types(x->arg, y.arg, fuel, names);
  }
  const auto& x = std::get<Eq>(a->node);
  const auto& y = std::get<Eq>(b->node);
  ConvOutcome lhs = erased_equal(x.lhs, y.lhs, fuel);
  if (lhs != ConvOutcome::Convertible) return lhs;
  return erased_equal(x.rhs, y.rhs, fuel);
}

ConvOutcome cong_kinds(const KindPtr& a, const KindPtr& b, Budget& fuel, NameSupply& names) {
  using namespace kind;
  if (a->node.index() != b->node.index()) return ConvOutcome::NotConvertible;
  if (std::holds_alternative<Star>(a->node)) return ConvOutcome::Convertible;
  if (auto* x = std::get_if<PiTerm>(&a->node)) {
    const auto& y = std::get<PiTerm>(b->node);
    ConvOutcome dom = cong_types(x->dom, y.dom, fuel, names);
    if (dom != ConvOutcome::Convertible) return dom;
    Name v = names.fresh(Namespace::TermVar, spelling_or(x->hint, "x"));
    return cong_kinds(open_term(x->body, mk_var(v)), open_term(y.body, mk_var(v)), fuel, names);
  }
  const auto& x = std::get<PiType>(a->node);
  const auto& y = std::get<PiType>(b->node);
  ConvOutcome dom = cong_kinds(x.dom, y.dom, fuel, names);
  if (dom != ConvOutcome::Convertible) return dom;
  Name v = names.fresh(Namespace::TypeVar, spelling_or(x.hint, "X"));
  return cong_kinds(open_type(x.body, mk_tvar(v)), open_type(y.body, mk_tvar(v)), fuel, names);
}

} // namespace

ConvOutcome convert_types(const TypePtr& a, const TypePtr& b, Budget& fuel, NameSupply& names) {
  TypeNorm na = type_beta_normalize(a, fuel, names);
  if (na.exhausted) return ConvOutcome::Exhausted;
  TypeNorm nb = type_beta_normalize(b, fuel, names);
  if (nb.exhausted) return ConvOutcome::Exhausted;
  return cong_types(na.type, nb.type, fuel, names);
}

ConvOutcome convert_kinds(const KindPtr& a, const KindPtr& b, Budget& fuel, NameSupply& names) {
  KindNorm na = kind_beta_normalize(a, fuel, names);
  if (na.exhausted) return ConvOutcome::Exhausted;
  KindNorm nb = kind_beta_normalize(b, fuel, names);
  if (nb.exhausted) return ConvOutcome::Exhausted;
  return cong_kinds(na.kind, nb.kind, fuel, names);
}

} // namespace cdle
