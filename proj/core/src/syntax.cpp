#include "cdle/syntax.hpp"

#include <functional>

namespace cdle {

TermPtr mk_var(Name n, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Var{std::move(n)}, std::move(sp)}); }
TermPtr mk_bound(std::uint32_t idx, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Bound{idx}, std::move(sp)}); }
TermPtr mk_lam(std::string hint, TermPtr body, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Lam{std::move(hint), std::move(body)}, std::move(sp)}); }
TermPtr mk_erased_lam(std::string hint, TermPtr body, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::ErasedLam{std::move(hint), std::move(body)}, std::move(sp)}); }
TermPtr mk_type_lam(std::string hint, TermPtr body, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::TypeLam{std::move(hint), std::move(body)}, std::move(sp)}); }
TermPtr mk_app(TermPtr fn, TermPtr arg, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::App{std::move(fn), std::move(arg)}, std::move(sp)}); }
TermPtr mk_erased_app(TermPtr fn, TermPtr arg, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::ErasedApp{std::move(fn), std::move(arg)}, std::move(sp)}); }
TermPtr mk_type_app(TermPtr fn, TypePtr arg, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::TypeApp{std::move(fn), std::move(arg)}, std::move(sp)}); }
TermPtr mk_pair(TermPtr fst, TermPtr snd, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Pair{std::move(fst), std::move(snd)}, std::move(sp)}); }
TermPtr mk_proj(TermPtr sub, std::uint8_t which, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Proj{std::move(sub), which}, std::move(sp)}); }
TermPtr mk_beta(TermPtr witness, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Beta{std::move(witness)}, std::move(sp)}); }
TermPtr mk_delta(TermPtr sub, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Delta{std::move(sub)}, std::move(sp)}); }
TermPtr mk_rho(TermPtr eq, TermPtr body, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Rho{std::move(eq), std::move(body)}, std::move(sp)}); }
TermPtr mk_chi(TypePtr ann, TermPtr body, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Chi{std::move(ann), std::move(body)}, std::move(sp)}); }
TermPtr mk_phi(TermPtr eq, TermPtr subject, TermPtr target, SourceSpan sp) { return std::make_shared<AnnTerm>(AnnTerm{term::Phi{std::move(eq), std::move(subject), std::move(target)}, std::move(sp)}); }

TypePtr mk_tvar(Name n, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::Var{std::move(n)}, std::move(sp)}); }
TypePtr mk_tbound(std::uint32_t idx, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::Bound{idx}, std::move(sp)}); }
TypePtr mk_all(std::string hint, KindPtr dom, TypePtr body, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::All{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }
TypePtr mk_all_term(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::AllTerm{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }
TypePtr mk_pi(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::Pi{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }
TypePtr mk_iota(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::Iota{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }
TypePtr mk_tlam_term(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::LamTerm{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }
TypePtr mk_tlam_type(std::string hint, KindPtr dom, TypePtr body, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::LamType{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }
TypePtr mk_app_term(TypePtr fn, TermPtr arg, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::AppTerm{std::move(fn), std::move(arg)}, std::move(sp)}); }
TypePtr mk_app_type(TypePtr fn, TypePtr arg, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::AppType{std::move(fn), std::move(arg)}, std::move(sp)}); }
TypePtr mk_eq(TermPtr lhs, TermPtr rhs, SourceSpan sp) { return std::make_shared<TypeExpr>(TypeExpr{type::Eq{std::move(lhs), std::move(rhs)}, std::move(sp)}); }

KindPtr mk_star(SourceSpan sp) { return std::make_shared<KindExpr>(KindExpr{kind::Star{}, std::move(sp)}); }
KindPtr mk_pi_term(std::string hint, TypePtr dom, KindPtr body, SourceSpan sp) { return std::make_shared<KindExpr>(KindExpr{kind::PiTerm{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }
KindPtr mk_pi_type(std::string hint, KindPtr dom, KindPtr body, SourceSpan sp) { return std::make_shared<KindExpr>(KindExpr{kind::PiType{std::move(hint), std::move(dom), std::move(body)}, std::move(sp)}); }

namespace {

// Variable rewriter shared by substitution, opening and closing. Hooks get
// the number of binders of the variable's own namespace crossed so far and
// return a replacement or nullptr to keep the node. Unchanged subtrees are
// shared, not copied.
struct Rewriter {
  std::function<TermPtr(const Name&, std::uint32_t, const SourceSpan&)> free_term;
  std::function<TermPtr(std::uint32_t, std::uint32_t, const SourceSpan&)> bound_term;
  std::function<TypePtr(const Name&, std::uint32_t, const SourceSpan&)> free_type;
  std::function<TypePtr(std::uint32_t, std::uint32_t, const SourceSpan&)> bound_type;
};

TermPtr rw_term(const TermPtr& t, const Rewriter& r, std::uint32_t td, std::uint32_t yd);
TypePtr rw_type(const TypePtr& t, const Rewriter& r, std::uint32_t td, std::uint32_t yd);
KindPtr rw_kind(const KindPtr& k, const Rewriter& r, std::uint32_t td, std::uint32_t yd);

TermPtr rw_term(const TermPtr& t, const Rewriter& r, std::uint32_t td, std::uint32_t yd) {
  using namespace term;
  const AnnTerm::Node& n = t->node;
  if (auto* v = std::get_if<Var>(&n)) {
    if (r.free_term) if (auto rep = r.free_term(v->name, td, t->span)) return rep;
    return t;
  }
  if (auto* b = std::get_if<Bound>(&n)) {
    if (r.bound_term) if (auto rep = r.bound_term(b->index, td, t->span)) return rep;
    return t;
  }
  if (auto* l = std::get_if<Lam>(&n)) {
    auto body = rw_term(l->body, r, td + 1, yd);
    return body == l->body ? t : mk_lam(l->hint, body, t->span);
  }
  if (auto* l = std::get_if<ErasedLam>(&n)) {
    auto body = rw_term(l->body, r, td + 1, yd);
    return body == l->body ? t : mk_erased_lam(l->hint, body, t->span);
  }
  if (auto* l = std::get_if<TypeLam>(&n)) {
    auto body = rw_term(l->body, r, td, yd + 1);
    return body == l->body ? t : mk_type_lam(l->hint, body, t->span);
  }
  if (auto* a = std::get_if<App>(&n)) {
    auto fn = rw_term(a->fn, r, td, yd), arg = rw_term(a->arg, r, td, yd);
    return fn == a->fn && arg == a->arg ? t : mk_app(fn, arg, t->span);
  }
  if (auto* a = std::get_if<ErasedApp>(&n)) {
    auto fn = rw_term(a->fn, r, td, yd), arg = rw_term(a->arg, r, td, yd);
    return fn == a->fn && arg == a->arg ? t : mk_erased_app(fn, arg, t->span);
  }
  if (auto* a = std::get_if<TypeApp>(&n)) {
    auto fn = rw_term(a->fn, r, td, yd);
    auto arg = rw_type(a->arg, r, td, yd);
    return fn == a->fn && arg == a->arg ? t : mk_type_app(fn, arg, t->span);
  }
  if (auto* p = std::get_if<Pair>(&n)) {
    auto fst = rw_term(p->fst, r, td, yd), snd = rw_term(p->snd, r, td, yd);
    return fst == p->fst && snd == p->snd ? t : mk_pair(fst, snd, t->span);
  }
  if (auto* p = std::get_if<Proj>(&n)) {
    auto sub = rw_term(p->sub, r, td, yd);
    return sub == p->sub ? t : mk_proj(sub, p->which, t->span);
  }
  if (auto* b = std::get_if<Beta>(&n)) {
    auto w = rw_term(b->witness, r, td, yd);
    return w == b->witness ? t : mk_beta(w, t->span);
  }
  if (auto* d = std::get_if<Delta>(&n)) {
    auto sub = rw_term(d->sub, r, td, yd);
    return sub == d->sub ? t : mk_delta(sub, t->span);
  }
  if (auto* rh = std::get_if<Rho>(&n)) {
    auto eq = rw_term(rh->eq, r, td, yd), body = rw_term(rh->body, r, td, yd);
    return eq == rh->eq && body == rh->body ? t : mk_rho(eq, body, t->span);
  }
  if (auto* c = std::get_if<Chi>(&n)) {
    auto ann = rw_type(c->ann, r, td, yd);
    auto body = rw_term(c->body, r, td, yd);
    return ann == c->ann && body == c->body ? t : mk_chi(ann, body, t->span);
  }
  const auto& ph = std::get<Phi>(n);
  auto eq = rw_term(ph.eq, r, td, yd);
  auto subject = rw_term(ph.subject, r, td, yd);
  auto target = rw_term(ph.target, r, td, yd);
  return eq == ph.eq && subject == ph.subject && target == ph.target
             ? t
             : mk_phi(eq, subject, target, t->span);
}

TypePtr rw_type(const TypePtr& t, const Rewriter& r, std::uint32_t td, std::uint32_t yd) {
  using namespace type;
  const TypeExpr::Node& n = t->node;
  if (auto* v = std::get_if<Var>(&n)) {
    if (r.free_type) if (auto rep = r.free_type(v->name, yd, t->span)) return rep;
    return t;
  }
  if (auto* b = std::get_if<Bound>(&n)) {
    if (r.bound_type) if (auto rep = r.bound_type(b->index, yd, t->span)) return rep;
    return t;
  }
  if (auto* a = std::get_if<All>(&n)) {
    auto dom = rw_kind(a->dom, r, td, yd);
    auto body = rw_type(a->body, r, td, yd + 1);
    return dom == a->dom && body == a->body ? t : mk_all(a->hint, dom, body, t->span);
  }
  if (auto* a = std::get_if<AllTerm>(&n)) {
    auto dom = rw_type(a->dom, r, td, yd);
    auto body = rw_type(a->body, r, td + 1, yd);
    return dom == a->dom && body == a->body ? t : mk_all_term(a->hint, dom, body, t->span);
  }
  if (auto* p = std::get_if<Pi>(&n)) {
    auto dom = rw_type(p->dom, r, td, yd);
    auto body = rw_type(p->body, r, td + 1, yd);
    return dom == p->dom && body == p->body ? t : mk_pi(p->hint, dom, body, t->span);
  }
  if (auto* i = std::get_if<Iota>(&n)) {
    auto dom = rw_type(i->dom, r, td, yd);
    auto body = rw_type(i->body, r, td + 1, yd);
    return dom == i->dom && body == i->body ? t : mk_iota(i->hint, dom, body, t->span);
  }
  if (auto* l = std::get_if<LamTerm>(&n)) {
    auto dom = rw_type(l->dom, r, td, yd);
    auto body = rw_type(l->body, r, td + 1, yd);
    return dom == l->dom && body == l->body ? t : mk_tlam_term(l->hint, dom, body, t->span);
  }
  if (auto* l = std::get_if<LamType>(&n)) {
    auto dom = rw_kind(l->dom, r, td, yd);
    auto body = rw_type(l->body, r, td, yd + 1);
    return dom == l->dom && body == l->body ? t : mk_tlam_type(l->hint, dom, body, t->span);
  }
  if (auto* a = std::get_if<AppTerm>(&n)) {
    auto fn = rw_type(a->fn, r, td, yd);
    auto arg = rw_term(a->arg, r, td, yd);
    return fn == a->fn && arg == a->arg ? t : mk_app_term(fn, arg, t->span);
  }
  if (auto* a = std::get_if<AppType>(&n)) {
    auto fn = rw_type(a->fn, r, td, yd), arg = rw_type(a->arg, r, td, yd);
    return fn == a->fn && arg == a->arg ? t : mk_app_type(fn, arg, t->span);
  }
  const auto& e = std::get<Eq>(n);
  auto lhs = rw_term(e.lhs, r, td, yd), rhs = rw_term(e.rhs, r, td, yd);
  return lhs == e.lhs && rhs == e.rhs ? t : mk_eq(lhs, rhs, t->span);
}

KindPtr rw_kind(const KindPtr& k, const Rewriter& r, std::uint32_t td, std::uint32_t yd) {
  using namespace kind;
  const KindExpr::Node& n = k->node;
  if (std::holds_alternative<Star>(n)) return k;
  if (auto* p = std::get_if<PiTerm>(&n)) {
    auto dom = rw_type(p->dom, r, td, yd);
    auto body = rw_kind(p->body, r, td + 1, yd);
    return dom == p->dom && body == p->body ? k : mk_pi_term(p->hint, dom, body, k->span);
  }
  const auto& p = std::get<PiType>(n);
  auto dom = rw_kind(p.dom, r, td, yd);
  auto body = rw_kind(p.body, r, td, yd + 1);
  return dom == p.dom && body == p.body ? k : mk_pi_type(p.hint, dom, body, k->span);
}

Rewriter subst_term_rw(const Name& x, const TermPtr& value) {
  Rewriter r;
  r.free_term = [&x, &value](const Name& n, std::uint32_t, const SourceSpan&) -> TermPtr {
    return n == x ? value : nullptr;
  };
  return r;
}

Rewriter subst_type_rw(const Name& x, const TypePtr& value) {
  Rewriter r;
  r.free_type = [&x, &value](const Name& n, std::uint32_t, const SourceSpan&) -> TypePtr {
    return n == x ? value : nullptr;
  };
  return r;
}

Rewriter open_term_rw(const TermPtr& value) {
  Rewriter r;
  r.bound_term = [&value](std::uint32_t idx, std::uint32_t depth, const SourceSpan&) -> TermPtr {
    return idx == depth ? value : nullptr;
  };
  return r;
}

Rewriter open_type_rw(const TypePtr& value) {
  Rewriter r;
  r.bound_type = [&value](std::uint32_t idx, std::uint32_t depth, const SourceSpan&) -> TypePtr {
    return idx == depth ? value : nullptr;
  };
  return r;
}

Rewriter close_term_rw(const Name& x) {
  Rewriter r;
  r.free_term = [&x](const Name& n, std::uint32_t depth, const SourceSpan& sp) -> TermPtr {
    return n == x ? mk_bound(depth, sp) : nullptr;
  };
  return r;
}

Rewriter close_type_rw(const Name& x) {
  Rewriter r;
  r.free_type = [&x](const Name& n, std::uint32_t depth, const SourceSpan& sp) -> TypePtr {
    return n == x ? mk_tbound(depth, sp) : nullptr;
  };
  return r;
}

void fv_term(const TermPtr& t, NameSet& out);
void fv_type(const TypePtr& t, NameSet& out);
void fv_kind(const KindPtr& k, NameSet& out);

void fv_term(const TermPtr& t, NameSet& out) {
  using namespace term;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) out.insert(n.name);
        else if constexpr (std::is_same_v<T, Bound>) {}
        else if constexpr (std::is_same_v<T, Lam> || std::is_same_v<T, ErasedLam> ||
                           std::is_same_v<T, TypeLam>) fv_term(n.body, out);
        else if constexpr (std::is_same_v<T, App> || std::is_same_v<T, ErasedApp>) {
          fv_term(n.fn, out); fv_term(n.arg, out);
        } else if constexpr (std::is_same_v<T, TypeApp>) {
          fv_term(n.fn, out); fv_type(n.arg, out);
        } else if constexpr (std::is_same_v<T, Pair>) {
          fv_term(n.fst, out); fv_term(n.snd, out);
        } else if constexpr (std::is_same_v<T, Proj>) fv_term(n.sub, out);
        else if constexpr (std::is_same_v<T, Beta>) fv_term(n.witness, out);
        else if constexpr (std::is_same_v<T, Delta>) fv_term(n.sub, out);
        else if constexpr (std::is_same_v<T, Rho>) { fv_term(n.eq, out); fv_term(n.body, out); }
        else if constexpr (std::is_same_v<T, Chi>) { fv_type(n.ann, out); fv_term(n.body, out); }
        else { fv_term(n.eq, out); fv_term(n.subject, out); fv_term(n.target, out); }
      },
      t->node);
}

void fv_type(const TypePtr& t, NameSet& out) {
  using namespace type;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) out.insert(n.name);
        else if constexpr (std::is_same_v<T, Bound>) {}
        else if constexpr (std::is_same_v<T, All>) { fv_kind(n.dom, out); fv_type(n.body, out); }
        else if constexpr (std::is_same_v<T, AllTerm> || std::is_same_v<T, Pi> ||
                           std::is_same_v<T, Iota> || std::is_same_v<T, LamTerm>) {
          fv_type(n.dom, out); fv_type(n.body, out);
        } else if constexpr (std::is_same_v<T, LamType>) { fv_kind(n.dom, out); fv_type(n.body, out); }
        else if constexpr (std::is_same_v<T, AppTerm>) { fv_type(n.fn, out); fv_term(n.arg, out); }
        else if constexpr (std::is_same_v<T, AppType>) { fv_type(n.fn, out); fv_type(n.arg, out); }
        else { fv_term(n.lhs, out); fv_term(n.rhs, out); }
      },
      t->node);
}

void fv_kind(const KindPtr& k, NameSet& out) {
  using namespace kind;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Star>) {}
        else if constexpr (std::is_same_v<T, PiTerm>) { fv_type(n.dom, out); fv_kind(n.body, out); }
        else { fv_kind(n.dom, out); fv_kind(n.body, out); }
      },
      k->node);
}

bool aeq_term(const AnnTerm& a, const AnnTerm& b);
bool aeq_type(const TypeExpr& a, const TypeExpr& b);
bool aeq_kind(const KindExpr& a, const KindExpr& b);

bool aeq_term(const AnnTerm& a, const AnnTerm& b) {
  using namespace term;
  if (a.node.index() != b.node.index()) return false;
  if (auto* v = std::get_if<Var>(&a.node)) return v->name == std::get<Var>(b.node).name;
  if (auto* v = std::get_if<Bound>(&a.node)) return v->index == std::get<Bound>(b.node).index;
  if (auto* l = std::get_if<Lam>(&a.node)) return aeq_term(*l->body, *std::get<Lam>(b.node).body);
  if (auto* l = std::get_if<ErasedLam>(&a.node)) return aeq_term(*l->body, *std::get<ErasedLam>(b.node).body);
  if (auto* l = std::get_if<TypeLam>(&a.node)) return aeq_term(*l->body, *std::get<TypeLam>(b.node).body);
  if (auto* x = std::get_if<App>(&a.node)) {
    const auto& y = std::get<App>(b.node);
    return aeq_term(*x->fn, *y.fn) && aeq_term(*x->arg, *y.arg);
  }
  if (auto* x = std::get_if<ErasedApp>(&a.node)) {
    const auto& y = std::get<ErasedApp>(b.node);
    return aeq_term(*x->fn, *y.fn) && aeq_term(*x->arg, *y.arg);
  }
  if (auto* x = std::get_if<TypeApp>(&a.node)) {
    const auto& y = std::get<TypeApp>(b.node);
    return aeq_term(*x->fn, *y.fn) && aeq_type(*x->arg, *y.arg);
  }
  if (auto* x = std::get_if<Pair>(&a.node)) {
    const auto& y = std::get<Pair>(b.node);
    return aeq_term(*x->fst, *y.fst) && aeq_term(*x->snd, *y.snd);
  }
  if (auto* x = std::get_if<Proj>(&a.node)) {
    const auto& y = std::get<Proj>(b.node);
    return x->which == y.which && aeq_term(*x->sub, *y.sub);
  }
  if (auto* x = std::get_if<Beta>(&a.node)) return aeq_term(*x->witness, *std::get<Beta>(b.node).witness);
  if (auto* x = std::get_if<Delta>(&a.node)) return aeq_term(*x->sub, *std::get<Delta>(b.node).sub);
  if (auto* x = std::get_if<Rho>(&a.node)) {
    const auto& y = std::get<Rho>(b.node);
    return aeq_term(*x->eq, *y.eq) && aeq_term(*x->body, *y.body);
  }
  if (auto* x = std::get_if<Chi>(&a.node)) {
    const auto& y = std::get<Chi>(b.node);
    return aeq_type(*x->ann, *y.ann) && aeq_term(*x->body, *y.body);
  }
  const auto& x = std::get<Phi>(a.node);
  const auto& y = std::get<Phi>(b.node);
  return aeq_term(*x.eq, *y.eq) && aeq_term(*x.subject, *y.subject) && aeq_term(*x.target, *y.target);
}

bool aeq_type(const TypeExpr& a, const TypeExpr& b) {
  using namespace type;
  if (a.node.index() != b.node.index()) return false;
  if (auto* v = std::get_if<Var>(&a.node)) return v->name == std::get<Var>(b.node).name;
  if (auto* v = std::get_if<Bound>(&a.node)) return v->index == std::get<Bound>(b.node).index;
  if (auto* x = std::get_if<All>(&a.node)) {
    const auto& y = std::get<All>(b.node);
    return aeq_kind(*x->dom, *y.dom) && aeq_type(*x->body, *y.body);
  }
  if (auto* x = std::get_if<AllTerm>(&a.node)) {
    const auto& y = std::get<AllTerm>(b.node);
    return aeq_type(*x->dom, *y.dom) && aeq_type(*x->body, *y.body);
  }
  if (auto* x = std::get_if<Pi>(&a.node)) {
    const auto& y = std::get<Pi>(b.node);
    return aeq_type(*x->dom, *y.dom) && aeq_type(*x->body, *y.body);
  }
  if (auto* x = std::get_if<Iota>(&a.node)) {
    const auto& y = std::get<Iota>(b.node);
    return aeq_type(*x->dom, *y.dom) && aeq_type(*x->body, *y.body);
  }
  if (auto* x = std::get_if<LamTerm>(&a.node)) {
    const auto& y = std::get<LamTerm>(b.node);
    return aeq_type(*x->dom, *y.dom) && aeq_type(*x->body, *y.body);
  }
  if (auto* x = std::get_if<LamType>(&a.node)) {
    const auto& y = std::get<LamType>(b.node);
    return aeq_kind(*x->dom, *y.dom) && aeq_type(*x->body, *y.body);
  }
  if (auto* x = std::get_if<AppTerm>(&a.node)) {
    const auto& y = std::get<AppTerm>(b.node);
    return aeq_type(*x->fn, *y.fn) && aeq_term(*x->arg, *y.arg);
  }
  if (auto* x = std::get_if<AppType>(&a.node)) {
    const auto& y = std::get<AppType>(b.node);
    return aeq_type(*x->fn, *y.fn) && aeq_type(*x->arg, *y.arg);
  }
  const auto& x = std::get<Eq>(a.node);
  const auto& y = std::get<Eq>(b.node);
  return aeq_term(*x.lhs, *y.lhs) && aeq_term(*x.rhs, *y.rhs);
}

bool aeq_kind(const KindExpr& a, const KindExpr& b) {
  using namespace kind;
  if (a.node.index() != b.node.index()) return false;
  if (std::holds_alternative<Star>(a.node)) return true;
  if (auto* x = std::get_if<PiTerm>(&a.node)) {
    const auto& y = std::get<PiTerm>(b.node);
    return aeq_type(*x->dom, *y.dom) && aeq_kind(*x->body, *y.body);
  }
  const auto& x = std::get<PiType>(a.node);
  const auto& y = std::get<PiType>(b.node);
  return aeq_kind(*x.dom, *y.dom) && aeq_kind(*x.body, *y.body);
}

} // namespace

NameSet free_vars(const TermPtr& t) { NameSet s; fv_term(t, s); return s; }
NameSet free_vars(const TypePtr& t) { NameSet s; fv_type(t, s); return s; }
NameSet free_vars(const KindPtr& k) { NameSet s; fv_kind(k, s); return s; }

TermPtr subst_term(const Name& x, const TermPtr& value, const TermPtr& target) {
  return rw_term(target, subst_term_rw(x, value), 0, 0);
}
TypePtr subst_term(const Name& x, const TermPtr& value, const TypePtr& target) {
  return rw_type(target, subst_term_rw(x, value), 0, 0);
}
KindPtr subst_term(const Name& x, const TermPtr& value, const KindPtr& target) {
  return rw_kind(target, subst_term_rw(x, value), 0, 0);
}
TermPtr subst_type(const Name& X, const TypePtr& value, const TermPtr& target) {
  return rw_term(target, subst_type_rw(X, value), 0, 0);
}
TypePtr subst_type(const Name& X, const TypePtr& value, const TypePtr& target) {
  return rw_type(target, subst_type_rw(X, value), 0, 0);
}
KindPtr subst_type(const Name& X, const TypePtr& value, const KindPtr& target) {
  return rw_kind(target, subst_type_rw(X, value), 0, 0);
}

TermPtr open_term(const TermPtr& body, const TermPtr& value) {
  return rw_term(body, open_term_rw(value), 0, 0);
}
TypePtr open_term(const TypePtr& body, const TermPtr& value) {
  return rw_type(body, open_term_rw(value), 0, 0);
}
KindPtr open_term(const KindPtr& body, const TermPtr& value) {
  return rw_kind(body, open_term_rw(value), 0, 0);
}
TermPtr open_type(const TermPtr& body, const TypePtr& value) {
  return rw_term(body, open_type_rw(value), 0, 0);
}
TypePtr open_type(const TypePtr& body, const TypePtr& value) {
  return rw_type(body, open_type_rw(value), 0, 0);
}
KindPtr open_type(const KindPtr& body, const TypePtr& value) {
  return rw_kind(body, open_type_rw(value), 0, 0);
}

TypePtr close_term(const TypePtr& body, const Name& x) {
  return rw_type(body, close_term_rw(x), 0, 0);
}
KindPtr close_term(const KindPtr& body, const Name& x) {
  return rw_kind(body, close_term_rw(x), 0, 0);
}
TypePtr close_type(const TypePtr& body, const Name& X) {
  return rw_type(body, close_type_rw(X), 0, 0);
}
KindPtr close_type(const KindPtr& body, const Name& X) {
  return rw_kind(body, close_type_rw(X), 0, 0);
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) { return aeq_term(*a, *b); }
bool alpha_eq(const TypePtr& a, const TypePtr& b) { return aeq_type(*a, *b); }
bool alpha_eq(const KindPtr& a, const KindPtr& b) { return aeq_kind(*a, *b); }

const TypePtr* Context::lookup_term(const Name& n) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (auto* d = std::get_if<TermDecl>(&*it); d && d->name == n) return &d->type;
  return nullptr;
}

const KindPtr* Context::lookup_kind(const Name& n) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (auto* d = std::get_if<TypeDecl>(&*it); d && d->name == n) return &d->kind;
  return nullptr;
}

bool Context::declares(const Name& n) const {
  return n.ns == Namespace::TermVar ? lookup_term(n) != nullptr : lookup_kind(n) != nullptr;
}

NameSet Context::domain() const {
  NameSet s;
  for (const auto& e : entries_)
    std::visit([&](const auto& d) { s.insert(d.name); }, e);
  return s;
}

bool well_scoped(const Context& ctx) {
  NameSet seen;
  for (const auto& e : ctx.entries()) {
    NameSet fv;
    Name n;
    if (auto* td = std::get_if<Context::TermDecl>(&e)) {
      n = td->name;
      fv = free_vars(td->type);
    } else {
      const auto& kd = std::get<Context::TypeDecl>(e);
      n = kd.name;
      fv = free_vars(kd.kind);
    }
    if (seen.count(n)) return false;
    for (const auto& v : fv)
      if (!seen.count(v)) return false;
    seen.insert(n);
  }
  return true;
}

} // namespace cdle
