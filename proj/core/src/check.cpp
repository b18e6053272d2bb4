#include "cdle/check.hpp"

#include "cdle/print.hpp"

namespace cdle {

namespace {

std::string spelling_or(const std::string& hint, const char* fallback) {
  return hint.empty() ? fallback : hint;
}

Diagnostic make_diag(DiagCode code, std::string msg, const SourceSpan& sp,
                     std::string expected = {}, std::string actual = {}) {
  Diagnostic d;
  d.code = code;
  d.message = std::move(msg);
  d.span = sp;
  d.expected = std::move(expected);
  d.actual = std::move(actual);
  return d;
}

Diagnostic fuel_diag(const SourceSpan& sp, const CheckState& st) {
  Diagnostic d = make_diag(DiagCode::FuelExhausted, "step budget exhausted", sp);
  d.fuel = st.initial_fuel;
  return d;
}

void warn(CheckState& st, Diagnostic d) {
  if (st.warnings) st.warnings->push_back(std::move(d));
}

struct TraceScope {
  CheckState& st;
  explicit TraceScope(CheckState& s) : st(s) { ++st.depth; }
  ~TraceScope() { --st.depth; }
};

void trace_check(CheckState& st, std::string_view rule, const TermPtr& t, const TypePtr& ty) {
  if (st.tracer) st.tracer->rule(rule, "⊢ " + print_term(t) + " ⇐ " + print_type(ty), st.depth);
}
void trace_synth(CheckState& st, std::string_view rule, const TermPtr& t) {
  if (st.tracer) st.tracer->rule(rule, "⊢ " + print_term(t) + " ⇒", st.depth);
}
void trace_kind(CheckState& st, std::string_view rule, const TypePtr& t) {
  if (st.tracer) st.tracer->rule(rule, "⊢ " + print_type(t) + " ⇒", st.depth);
}
void trace_wf(CheckState& st, std::string_view rule, const KindPtr& k) {
  if (st.tracer) st.tracer->rule(rule, "⊢ " + print_kind(k), st.depth);
}

// Pops the pushed entry even on early return.
struct CtxGuard {
  Context& ctx;
  ~CtxGuard() { ctx.pop(); }
};

std::optional<Diagnostic> scope_check(Context& ctx, const NameSet& fv, const SourceSpan& sp,
                                      DiagCode code, const char* what) {
  for (const auto& n : fv)
    if (!ctx.declares(n))
      return make_diag(code, std::string(what) + ": '" +
                                 (n.spelling.empty() ? "_" + std::to_string(n.id) : n.spelling) +
                                 "' is not declared",
                       sp);
  return std::nullopt;
}

CheckResult conv_to_diag(ConvOutcome out, const TypePtr& expected, const TypePtr& actual,
                         const SourceSpan& sp, CheckState& st) {
  switch (out) {
    case ConvOutcome::Convertible:
      return std::nullopt;
    case ConvOutcome::NotConvertible:
      return make_diag(DiagCode::ConversionFailed, "types are not convertible", sp,
                       print_type(expected), print_type(actual));
    default:
      return fuel_diag(sp, st);
  }
}

} // namespace

TypePtr church_bool_equation() {
  TermPtr tt = mk_lam("x", mk_lam("y", mk_bound(1)));
  TermPtr ff = mk_lam("x", mk_lam("y", mk_bound(0)));
  return mk_eq(tt, ff);
}

CheckResult wf_kind(Context& ctx, const KindPtr& k, CheckState& st) {
  using namespace kind;
  if (std::holds_alternative<Star>(k->node)) {
    trace_wf(st, "star", k);
    return std::nullopt;
  }
  if (auto* p = std::get_if<PiTerm>(&k->node)) {
    trace_wf(st, "pi-kind", k);
    TraceScope ts(st);
    KindSynthResult dom = kind_synth(ctx, p->dom, st);
    if (auto* d = std::get_if<Diagnostic>(&dom)) return *d;
    if (!std::holds_alternative<Star>(std::get<KindPtr>(dom)->node))
      return make_diag(DiagCode::KindMismatch, "domain of a Π-kind must have kind ★", p->dom->span,
                       "★", print_kind(std::get<KindPtr>(dom)));
    Name x = st.names.fresh(Namespace::TermVar, spelling_or(p->hint, "x"));
    ctx.push_term(x, p->dom);
    CtxGuard g{ctx};
    return wf_kind(ctx, open_term(p->body, mk_var(x)), st);
  }
  const auto& p = std::get<PiType>(k->node);
  trace_wf(st, "tpi-kind", k);
  TraceScope ts(st);
  if (auto d = wf_kind(ctx, p.dom, st)) return d;
  Name X = st.names.fresh(Namespace::TypeVar, spelling_or(p.hint, "X"));
  ctx.push_type(X, p.dom);
  CtxGuard g{ctx};
  return wf_kind(ctx, open_type(p.body, mk_tvar(X)), st);
}

KindSynthResult kind_synth(Context& ctx, const TypePtr& t, CheckState& st) {
  using namespace type;
  return std::visit(
      [&](const auto& n) -> KindSynthResult {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          trace_kind(st, "tvar", t);
          if (const KindPtr* k = ctx.lookup_kind(n.name)) return *k;
          return make_diag(DiagCode::UnboundVariable,
                           "unbound type variable '" + n.name.spelling + "'", t->span);
        } else if constexpr (std::is_same_v<T, Bound>) {
          return make_diag(DiagCode::UnboundVariable, "dangling bound type variable", t->span);
        } else if constexpr (std::is_same_v<T, All>) {
          trace_kind(st, "all", t);
          TraceScope ts(st);
          if (auto d = wf_kind(ctx, n.dom, st)) return *d;
          Name X = st.names.fresh(Namespace::TypeVar, spelling_or(n.hint, "X"));
          ctx.push_type(X, n.dom);
          CtxGuard g{ctx};
          KindSynthResult body = kind_synth(ctx, open_type(n.body, mk_tvar(X)), st);
          if (auto* d = std::get_if<Diagnostic>(&body)) return *d;
          if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(body)->node))
            return make_diag(DiagCode::KindMismatch, "body of ∀ must have kind ★", n.body->span,
                             "★", print_kind(std::get<KindPtr>(body)));
          return mk_star();
        } else if constexpr (std::is_same_v<T, AllTerm> || std::is_same_v<T, Pi> ||
                             std::is_same_v<T, Iota>) {
          trace_kind(st,
                     std::is_same_v<T, AllTerm> ? "all-term"
                     : std::is_same_v<T, Pi>    ? "pi"
                                                : "iota",
                     t);
          TraceScope ts(st);
          KindSynthResult dom = kind_synth(ctx, n.dom, st);
          if (auto* d = std::get_if<Diagnostic>(&dom)) return *d;
          if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(dom)->node))
            return make_diag(DiagCode::KindMismatch, "binder domain must have kind ★",
                             n.dom->span, "★", print_kind(std::get<KindPtr>(dom)));
          Name x = st.names.fresh(Namespace::TermVar, spelling_or(n.hint, "x"));
          ctx.push_term(x, n.dom);
          CtxGuard g{ctx};
          KindSynthResult body = kind_synth(ctx, open_term(n.body, mk_var(x)), st);
          if (auto* d = std::get_if<Diagnostic>(&body)) return *d;
          if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(body)->node))
            return make_diag(DiagCode::KindMismatch, "binder body must have kind ★", n.body->span,
                             "★", print_kind(std::get<KindPtr>(body)));
          return mk_star();
        } else if constexpr (std::is_same_v<T, LamTerm>) {
          trace_kind(st, "tylam", t);
          TraceScope ts(st);
          KindSynthResult dom = kind_synth(ctx, n.dom, st);
          if (auto* d = std::get_if<Diagnostic>(&dom)) return *d;
          if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(dom)->node))
            return make_diag(DiagCode::KindMismatch, "binder domain must have kind ★",
                             n.dom->span, "★", print_kind(std::get<KindPtr>(dom)));
          Name x = st.names.fresh(Namespace::TermVar, spelling_or(n.hint, "x"));
          ctx.push_term(x, n.dom);
          CtxGuard g{ctx};
          KindSynthResult body = kind_synth(ctx, open_term(n.body, mk_var(x)), st);
          if (auto* d = std::get_if<Diagnostic>(&body)) return *d;
          return mk_pi_term(n.hint, n.dom, close_term(std::get<KindPtr>(body), x));
        } else if constexpr (std::is_same_v<T, LamType>) {
          trace_kind(st, "tylam-kind", t);
          TraceScope ts(st);
          if (auto d = wf_kind(ctx, n.dom, st)) return *d;
          Name X = st.names.fresh(Namespace::TypeVar, spelling_or(n.hint, "X"));
          ctx.push_type(X, n.dom);
          CtxGuard g{ctx};
          KindSynthResult body = kind_synth(ctx, open_type(n.body, mk_tvar(X)), st);
          if (auto* d = std::get_if<Diagnostic>(&body)) return *d;
          return mk_pi_type(n.hint, n.dom, close_type(std::get<KindPtr>(body), X));
        } else if constexpr (std::is_same_v<T, AppTerm>) {
          trace_kind(st, "tapp", t);
          TraceScope ts(st);
          KindSynthResult fn = kind_synth(ctx, n.fn, st);
          if (auto* d = std::get_if<Diagnostic>(&fn)) return *d;
          auto* pi = std::get_if<kind::PiTerm>(&std::get<KindPtr>(fn)->node);
          if (!pi)
            return make_diag(DiagCode::HeadMismatch,
                             "type applied to a term must have a Π-kind", t->span, "Π x : _ . _",
                             print_kind(std::get<KindPtr>(fn)));
          if (auto d = type_check(ctx, n.arg, pi->dom, st)) return *d;
          return open_term(pi->body, n.arg);
        } else if constexpr (std::is_same_v<T, AppType>) {
          trace_kind(st, "tinst", t);
          TraceScope ts(st);
          KindSynthResult fn = kind_synth(ctx, n.fn, st);
          if (auto* d = std::get_if<Diagnostic>(&fn)) return *d;
          auto* pi = std::get_if<kind::PiType>(&std::get<KindPtr>(fn)->node);
          if (!pi)
            return make_diag(DiagCode::HeadMismatch,
                             "type applied to a type must have a Π-kind over kinds", t->span,
                             "Π X : _ . _", print_kind(std::get<KindPtr>(fn)));
          KindSynthResult arg = kind_synth(ctx, n.arg, st);
          if (auto* d = std::get_if<Diagnostic>(&arg)) return *d;
          switch (convert_kinds(std::get<KindPtr>(arg), pi->dom, st.fuel, st.names)) {
            case ConvOutcome::Convertible: break;
            case ConvOutcome::NotConvertible:
              return make_diag(DiagCode::KindMismatch, "type argument kind does not match",
                               n.arg->span, print_kind(pi->dom), print_kind(std::get<KindPtr>(arg)));
            default:
              return fuel_diag(t->span, st);
          }
          return open_type(pi->body, n.arg);
        } else {
          trace_kind(st, "eq", t);
          NameSet fv = free_vars(n.lhs);
          fv.merge(free_vars(n.rhs));
          if (auto d = scope_check(ctx, fv, t->span, DiagCode::EqScope,
                                   "free variable of an equation"))
            return *d;
          return mk_star();
        }
      },
      t->node);
}

namespace {

// Rewrites outermost matches; does not descend into a replaced subterm.
struct RhoPass {
  PurePtr pattern;
  TermPtr replacement;
  int matches = 0;

  TermPtr term(const TermPtr& t) {
    if (alpha_eq(erase(t), pattern)) {
      ++matches;
      return replacement;
    }
    using namespace term;
    return std::visit(
        [&](const auto& n) -> TermPtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Var> || std::is_same_v<T, Bound>) return t;
          else if constexpr (std::is_same_v<T, Lam>) return mk_lam(n.hint, term(n.body), t->span);
          else if constexpr (std::is_same_v<T, ErasedLam>) return mk_erased_lam(n.hint, term(n.body), t->span);
          else if constexpr (std::is_same_v<T, TypeLam>) return mk_type_lam(n.hint, term(n.body), t->span);
          else if constexpr (std::is_same_v<T, App>) return mk_app(term(n.fn), term(n.arg), t->span);
          else if constexpr (std::is_same_v<T, ErasedApp>) return mk_erased_app(term(n.fn), term(n.arg), t->span);
          else if constexpr (std::is_same_v<T, TypeApp>) return mk_type_app(term(n.fn), type(n.arg), t->span);
          else if constexpr (std::is_same_v<T, Pair>) return mk_pair(term(n.fst), term(n.snd), t->span);
          else if constexpr (std::is_same_v<T, Proj>) return mk_proj(term(n.sub), n.which, t->span);
          else if constexpr (std::is_same_v<T, Beta>) return mk_beta(term(n.witness), t->span);
          else if constexpr (std::is_same_v<T, Delta>) return mk_delta(term(n.sub), t->span);
          else if constexpr (std::is_same_v<T, Rho>) return mk_rho(term(n.eq), term(n.body), t->span);
          else if constexpr (std::is_same_v<T, Chi>) return mk_chi(type(n.ann), term(n.body), t->span);
          else return mk_phi(term(n.eq), term(n.subject), term(n.target), t->span);
        },
        t->node);
  }

  TypePtr type(const TypePtr& t) {
    using namespace type;
    return std::visit(
        [&](const auto& n) -> TypePtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Var> || std::is_same_v<T, Bound>) return t;
          else if constexpr (std::is_same_v<T, All>) return mk_all(n.hint, kind(n.dom), type(n.body), t->span);
          else if constexpr (std::is_same_v<T, AllTerm>) return mk_all_term(n.hint, type(n.dom), type(n.body), t->span);
          else if constexpr (std::is_same_v<T, Pi>) return mk_pi(n.hint, type(n.dom), type(n.body), t->span);
          else if constexpr (std::is_same_v<T, Iota>) return mk_iota(n.hint, type(n.dom), type(n.body), t->span);
          else if constexpr (std::is_same_v<T, LamTerm>) return mk_tlam_term(n.hint, type(n.dom), type(n.body), t->span);
          else if constexpr (std::is_same_v<T, LamType>) return mk_tlam_type(n.hint, kind(n.dom), type(n.body), t->span);
          else if constexpr (std::is_same_v<T, AppTerm>) return mk_app_term(type(n.fn), term(n.arg), t->span);
          else if constexpr (std::is_same_v<T, AppType>) return mk_app_type(type(n.fn), type(n.arg), t->span);
          else return mk_eq(term(n.lhs), term(n.rhs), t->span);
        },
        t->node);
  }

  KindPtr kind(const KindPtr& k) {
    using namespace kind;
    return std::visit(
        [&](const auto& n) -> KindPtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Star>) return k;
          else if constexpr (std::is_same_v<T, PiTerm>) return mk_pi_term(n.hint, type(n.dom), kind(n.body), k->span);
          else return mk_pi_type(n.hint, kind(n.dom), kind(n.body), k->span);
        },
        k->node);
  }
};

// Premise of ρ in either mode: the proof must synthesize an equation type.
struct RhoEquation {
  TermPtr lhs;
  TermPtr rhs;
};
std::variant<RhoEquation, Diagnostic> rho_premise(Context& ctx, const TermPtr& eq,
                                                  CheckState& st) {
  SynthResult s = type_synth(ctx, eq, st);
  if (auto* d = std::get_if<Diagnostic>(&s)) return *d;
  TypeNorm w = type_whnf(std::get<TypePtr>(s), st.fuel);
  if (w.exhausted) return fuel_diag(eq->span, st);
  auto* e = std::get_if<type::Eq>(&w.type->node);
  if (!e)
    return make_diag(DiagCode::HeadMismatch, "ρ premise must prove an equation", eq->span,
                     "{ _ ≃ _ }", print_type(w.type));
  return RhoEquation{e->lhs, e->rhs};
}

} // namespace

RhoResult rho_rewrite(const TypePtr& target, const TermPtr& from, const TermPtr& to) {
  RhoPass pass{erase(from), to};
  TypePtr rewritten = pass.type(target);
  return {rewritten, pass.matches};
}

CheckResult type_check(Context& ctx, const TermPtr& t, const TypePtr& expected, CheckState& st) {
  using namespace term;

  if (auto* l = std::get_if<Lam>(&t->node)) {
    trace_check(st, "pi-intro", t, expected);
    TraceScope ts(st);
    TypeNorm w = type_whnf(expected, st.fuel);
    if (w.exhausted) return fuel_diag(t->span, st);
    auto* pi = std::get_if<type::Pi>(&w.type->node);
    if (!pi)
      return make_diag(DiagCode::HeadMismatch, "λ-abstraction requires a Π type", t->span,
                       "Π x : _ . _", print_type(w.type));
    Name x = st.names.fresh(Namespace::TermVar, spelling_or(l->hint, "x"));
    ctx.push_term(x, pi->dom);
    CtxGuard g{ctx};
    return type_check(ctx, open_term(l->body, mk_var(x)), open_term(pi->body, mk_var(x)), st);
  }

  if (auto* l = std::get_if<TypeLam>(&t->node)) {
    trace_check(st, "all-intro", t, expected);
    TraceScope ts(st);
    TypeNorm w = type_whnf(expected, st.fuel);
    if (w.exhausted) return fuel_diag(t->span, st);
    auto* all = std::get_if<type::All>(&w.type->node);
    if (!all)
      return make_diag(DiagCode::HeadMismatch, "Λ over a type variable requires a ∀ type",
                       t->span, "∀ X : _ . _", print_type(w.type));
    Name X = st.names.fresh(Namespace::TypeVar, spelling_or(l->hint, "X"));
    ctx.push_type(X, all->dom);
    CtxGuard g{ctx};
    return type_check(ctx, open_type(l->body, mk_tvar(X)), open_type(all->body, mk_tvar(X)), st);
  }

  if (auto* l = std::get_if<ErasedLam>(&t->node)) {
    trace_check(st, "implicit-intro", t, expected);
    TraceScope ts(st);
    TypeNorm w = type_whnf(expected, st.fuel);
    if (w.exhausted) return fuel_diag(t->span, st);
    auto* all = std::get_if<type::AllTerm>(&w.type->node);
    if (!all)
      return make_diag(DiagCode::HeadMismatch, "Λ over a term variable requires a ∀ type",
                       t->span, "∀ x : _ . _", print_type(w.type));
    Name x = st.names.fresh(Namespace::TermVar, spelling_or(l->hint, "x"));
    TermPtr body = open_term(l->body, mk_var(x));
    ctx.push_term(x, all->dom);
    {
      CtxGuard g{ctx};
      if (auto d = type_check(ctx, body, open_term(all->body, mk_var(x)), st)) return d;
    }
    if (free_vars(erase(body)).count(x))
      return make_diag(DiagCode::ErasedVarEscapes,
                       "erased argument '" + x.spelling + "' occurs in the erasure of the body",
                       t->span);
    return std::nullopt;
  }

  if (auto* p = std::get_if<Pair>(&t->node)) {
    trace_check(st, "pair-intro", t, expected);
    TraceScope ts(st);
    TypeNorm w = type_whnf(expected, st.fuel);
    if (w.exhausted) return fuel_diag(t->span, st);
    auto* iota = std::get_if<type::Iota>(&w.type->node);
    if (!iota)
      return make_diag(DiagCode::HeadMismatch, "pair introduction requires an ι type", t->span,
                       "ι x : _ . _", print_type(w.type));
    if (auto d = type_check(ctx, p->fst, iota->dom, st)) return d;
    if (auto d = type_check(ctx, p->snd, open_term(iota->body, p->fst), st)) return d;
    switch (beta_eta_equal(erase(p->fst), erase(p->snd), st.fuel)) {
      case Equivalence::Equal: return std::nullopt;
      case Equivalence::NotEqual:
        return make_diag(DiagCode::IntersectionErasureMismatch,
                         "pair components must have βη-equal erasures", t->span,
                         print_pure(erase(p->fst)), print_pure(erase(p->snd)));
      default: return fuel_diag(t->span, st);
    }
  }

  if (auto* b = std::get_if<Beta>(&t->node)) {
    trace_check(st, "beta", t, expected);
    TypeNorm w = type_whnf(expected, st.fuel);
    if (w.exhausted) return fuel_diag(t->span, st);
    auto* eq = std::get_if<type::Eq>(&w.type->node);
    if (!eq)
      return make_diag(DiagCode::HeadMismatch, "β proves an equation", t->span, "{ _ ≃ _ }",
                       print_type(w.type));
    NameSet fv = free_vars(eq->lhs);
    fv.merge(free_vars(eq->rhs));
    if (auto d = scope_check(ctx, fv, t->span, DiagCode::KleeneScope,
                             "free variable of the equation"))
      return d;
    switch (beta_eta_equal(erase(eq->lhs), erase(eq->rhs), st.fuel)) {
      case Equivalence::Equal: break;
      case Equivalence::NotEqual:
        return make_diag(DiagCode::ConversionFailed,
                         "β requires βη-equal sides of the equation", t->span,
                         print_pure(erase(eq->lhs)), print_pure(erase(eq->rhs)));
      default: return fuel_diag(t->span, st);
    }
    // The Kleene trick: any witness goes, provided its erasure is in scope.
    return scope_check(ctx, free_vars(erase(b->witness)), t->span, DiagCode::KleeneScope,
                       "free variable of the β-witness erasure");
  }

  if (auto* d = std::get_if<Delta>(&t->node)) {
    trace_check(st, "delta", t, expected);
    TraceScope ts(st);
    if (auto premise = type_check(ctx, d->sub, church_bool_equation(), st)) {
      Diagnostic out = make_diag(DiagCode::DeltaPremise,
                                 "δ needs a proof that Church true equals Church false: " +
                                     premise->message,
                                 t->span, premise->expected, premise->actual);
      if (premise->code == DiagCode::FuelExhausted) out.code = DiagCode::FuelExhausted;
      return out;
    }
    return std::nullopt;
  }

  if (auto* r = std::get_if<Rho>(&t->node)) {
    trace_check(st, "rho", t, expected);
    TraceScope ts(st);
    auto premise = rho_premise(ctx, r->eq, st);
    if (auto* d = std::get_if<Diagnostic>(&premise)) return *d;
    const auto& eq = std::get<RhoEquation>(premise);
    // Conclusion mentions the right side; the premise type replaces matches
    // of the right side with the left.
    RhoResult rw = rho_rewrite(expected, eq.rhs, eq.lhs);
    if (rw.matches == 0)
      warn(st, make_diag(DiagCode::RhoNoMatch, "ρ rewrote no occurrences", t->span));
    return type_check(ctx, r->body, rw.type, st);
  }

  if (auto* c = std::get_if<Chi>(&t->node)) {
    trace_check(st, "chi", t, expected);
    TraceScope ts(st);
    KindSynthResult k = kind_synth(ctx, c->ann, st);
    if (auto* d = std::get_if<Diagnostic>(&k)) return *d;
    if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(k)->node))
      return make_diag(DiagCode::KindMismatch, "χ annotation must have kind ★", c->ann->span,
                       "★", print_kind(std::get<KindPtr>(k)));
    if (auto d = type_check(ctx, c->body, c->ann, st)) return d;
    return conv_to_diag(convert_types(c->ann, expected, st.fuel, st.names), expected, c->ann,
                        t->span, st);
  }

  if (auto* p = std::get_if<Phi>(&t->node)) {
    trace_check(st, "phi", t, expected);
    TraceScope ts(st);
    NameSet fv = free_vars(p->subject);
    fv.merge(free_vars(p->target));
    if (auto d = scope_check(ctx, fv, t->span, DiagCode::EqScope,
                             "free variable of the φ equation"))
      return d;
    if (auto d = type_check(ctx, p->subject, expected, st)) return d;
    return type_check(ctx, p->eq, mk_eq(p->subject, p->target), st);
  }

  if (std::holds_alternative<Bound>(t->node))
    return make_diag(DiagCode::UnboundVariable, "dangling bound variable", t->span);

  // Synthesizing forms: switch modes and convert.
  trace_check(st, "conv", t, expected);
  TraceScope ts(st);
  SynthResult s = type_synth(ctx, t, st);
  if (auto* d = std::get_if<Diagnostic>(&s)) return *d;
  return conv_to_diag(convert_types(std::get<TypePtr>(s), expected, st.fuel, st.names), expected,
                      std::get<TypePtr>(s), t->span, st);
}

SynthResult type_synth(Context& ctx, const TermPtr& t, CheckState& st) {
  using namespace term;
  return std::visit(
      [&](const auto& n) -> SynthResult {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          trace_synth(st, "var", t);
          if (const TypePtr* ty = ctx.lookup_term(n.name)) return *ty;
          return make_diag(DiagCode::UnboundVariable,
                           "unbound variable '" + n.name.spelling + "'", t->span);
        } else if constexpr (std::is_same_v<T, Bound>) {
          return make_diag(DiagCode::UnboundVariable, "dangling bound variable", t->span);
        } else if constexpr (std::is_same_v<T, App>) {
          trace_synth(st, "app", t);
          TraceScope ts(st);
          SynthResult fn = type_synth(ctx, n.fn, st);
          if (auto* d = std::get_if<Diagnostic>(&fn)) return *d;
          TypeNorm w = type_whnf(std::get<TypePtr>(fn), st.fuel);
          if (w.exhausted) return fuel_diag(t->span, st);
          auto* pi = std::get_if<type::Pi>(&w.type->node);
          if (!pi)
            return make_diag(DiagCode::HeadMismatch,
                             "application head must synthesize a Π type", n.fn->span,
                             "Π x : _ . _", print_type(w.type));
          if (auto d = type_check(ctx, n.arg, pi->dom, st)) return *d;
          return open_term(pi->body, n.arg);
        } else if constexpr (std::is_same_v<T, ErasedApp>) {
          trace_synth(st, "implicit-app", t);
          TraceScope ts(st);
          SynthResult fn = type_synth(ctx, n.fn, st);
          if (auto* d = std::get_if<Diagnostic>(&fn)) return *d;
          TypeNorm w = type_whnf(std::get<TypePtr>(fn), st.fuel);
          if (w.exhausted) return fuel_diag(t->span, st);
          auto* all = std::get_if<type::AllTerm>(&w.type->node);
          if (!all)
            return make_diag(DiagCode::HeadMismatch,
                             "erased application head must synthesize a ∀ type over terms",
                             n.fn->span, "∀ x : _ . _", print_type(w.type));
          if (auto d = type_check(ctx, n.arg, all->dom, st)) return *d;
          return open_term(all->body, n.arg);
        } else if constexpr (std::is_same_v<T, TypeApp>) {
          trace_synth(st, "type-inst", t);
          TraceScope ts(st);
          SynthResult fn = type_synth(ctx, n.fn, st);
          if (auto* d = std::get_if<Diagnostic>(&fn)) return *d;
          TypeNorm w = type_whnf(std::get<TypePtr>(fn), st.fuel);
          if (w.exhausted) return fuel_diag(t->span, st);
          auto* all = std::get_if<type::All>(&w.type->node);
          if (!all)
            return make_diag(DiagCode::HeadMismatch,
                             "type application head must synthesize a ∀ type over types",
                             n.fn->span, "∀ X : _ . _", print_type(w.type));
          KindSynthResult k = kind_synth(ctx, n.arg, st);
          if (auto* d = std::get_if<Diagnostic>(&k)) return *d;
          switch (convert_kinds(std::get<KindPtr>(k), all->dom, st.fuel, st.names)) {
            case ConvOutcome::Convertible: break;
            case ConvOutcome::NotConvertible:
              return make_diag(DiagCode::KindMismatch, "type argument kind does not match",
                               n.arg->span, print_kind(all->dom), print_kind(std::get<KindPtr>(k)));
            default: return fuel_diag(t->span, st);
          }
          return open_type(all->body, n.arg);
        } else if constexpr (std::is_same_v<T, Proj>) {
          trace_synth(st, n.which == 1 ? "proj1" : "proj2", t);
          TraceScope ts(st);
          SynthResult sub = type_synth(ctx, n.sub, st);
          if (auto* d = std::get_if<Diagnostic>(&sub)) return *d;
          TypeNorm w = type_whnf(std::get<TypePtr>(sub), st.fuel);
          if (w.exhausted) return fuel_diag(t->span, st);
          auto* iota = std::get_if<type::Iota>(&w.type->node);
          if (!iota)
            return make_diag(DiagCode::HeadMismatch, "projection requires an ι type",
                             n.sub->span, "ι x : _ . _", print_type(w.type));
          if (n.which == 1) return iota->dom;
          return open_term(iota->body, mk_proj(n.sub, 1, t->span));
        } else if constexpr (std::is_same_v<T, Chi>) {
          trace_synth(st, "chi-synth", t);
          TraceScope ts(st);
          KindSynthResult k = kind_synth(ctx, n.ann, st);
          if (auto* d = std::get_if<Diagnostic>(&k)) return *d;
          if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(k)->node))
            return make_diag(DiagCode::KindMismatch, "χ annotation must have kind ★",
                             n.ann->span, "★", print_kind(std::get<KindPtr>(k)));
          SynthResult inner = type_synth(ctx, n.body, st);
          if (auto* d = std::get_if<Diagnostic>(&inner)) {
            // Checking-only bodies are accepted against the annotation, so χ
            // serves as the ascription the synthesizer asks users to add.
            if (d->code != DiagCode::NotSynthesizable) return *d;
            if (auto dd = type_check(ctx, n.body, n.ann, st)) return *dd;
            return n.ann;
          }
          if (auto d = conv_to_diag(
                  convert_types(n.ann, std::get<TypePtr>(inner), st.fuel, st.names), n.ann,
                  std::get<TypePtr>(inner), t->span, st))
            return *d;
          return n.ann;
        } else if constexpr (std::is_same_v<T, Rho>) {
          trace_synth(st, "rho-synth", t);
          TraceScope ts(st);
          auto premise = rho_premise(ctx, n.eq, st);
          if (auto* d = std::get_if<Diagnostic>(&premise)) return *d;
          const auto& eq = std::get<RhoEquation>(premise);
          SynthResult body = type_synth(ctx, n.body, st);
          if (auto* d = std::get_if<Diagnostic>(&body)) return *d;
          RhoResult rw = rho_rewrite(std::get<TypePtr>(body), eq.lhs, eq.rhs);
          if (rw.matches == 0)
            warn(st, make_diag(DiagCode::RhoNoMatch, "ρ rewrote no occurrences", t->span));
          return rw.type;
        } else if constexpr (std::is_same_v<T, Phi>) {
          trace_synth(st, "phi-synth", t);
          TraceScope ts(st);
          NameSet fv = free_vars(n.subject);
          fv.merge(free_vars(n.target));
          if (auto d = scope_check(ctx, fv, t->span, DiagCode::EqScope,
                                   "free variable of the φ equation"))
            return *d;
          SynthResult subject = type_synth(ctx, n.subject, st);
          if (auto* d = std::get_if<Diagnostic>(&subject)) return *d;
          if (auto d = type_check(ctx, n.eq, mk_eq(n.subject, n.target), st)) return *d;
          return std::get<TypePtr>(subject);
        } else {
          const char* what = std::is_same_v<T, Lam>         ? "a λ-abstraction"
                             : std::is_same_v<T, ErasedLam> ? "an erased λ-abstraction"
                             : std::is_same_v<T, TypeLam>   ? "a type abstraction"
                             : std::is_same_v<T, Pair>      ? "a dependent pair"
                             : std::is_same_v<T, Beta>      ? "a β-proof"
                                                            : "a δ-elimination";
          return make_diag(DiagCode::NotSynthesizable,
                           std::string("cannot synthesize a type for ") + what +
                               "; annotate with χ",
                           t->span);
        }
      },
      t->node);
}

} // namespace cdle
