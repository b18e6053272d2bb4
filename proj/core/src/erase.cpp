#include "cdle/erase.hpp"

#include <vector>

namespace cdle {

PurePtr mk_pvar(Name n) { return std::make_shared<PureTerm>(PureTerm{pure::Var{std::move(n)}}); }
PurePtr mk_pbound(std::uint32_t idx) { return std::make_shared<PureTerm>(PureTerm{pure::Bound{idx}}); }
PurePtr mk_plam(std::string hint, PurePtr body) { return std::make_shared<PureTerm>(PureTerm{pure::Lam{std::move(hint), std::move(body)}}); }
PurePtr mk_papp(PurePtr fn, PurePtr arg) { return std::make_shared<PureTerm>(PureTerm{pure::App{std::move(fn), std::move(arg)}}); }

namespace {

// One stack entry per term binder in scope inside the fragment being erased.
// Lam binders survive erasure, ErasedLam binders do not; an occurrence of a
// dropped binder's variable becomes a free variable with the reserved id 0.
struct BinderInfo {
  bool kept;
  const std::string* hint;
};

PurePtr erase_at(const AnnTerm& t, std::vector<BinderInfo>& stack) {
  using namespace term;
  return std::visit(
      [&](const auto& n) -> PurePtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return mk_pvar(n.name);
        } else if constexpr (std::is_same_v<T, Bound>) {
          if (n.index < stack.size()) {
            const BinderInfo& b = stack[stack.size() - 1 - n.index];
            std::uint32_t pure_idx = 0;
            for (std::uint32_t i = 0; i < n.index; ++i)
              if (stack[stack.size() - 1 - i].kept) ++pure_idx;
            if (b.kept) return mk_pbound(pure_idx);
            return mk_pvar(Name{Namespace::TermVar, 0, *b.hint});
          }
          // Dangling index of an enclosing, unerased binder outside the
          // fragment: keep it an index, adjusted for dropped binders.
          std::uint32_t kept_in_stack = 0;
          for (const auto& b : stack)
            if (b.kept) ++kept_in_stack;
          return mk_pbound(kept_in_stack + (n.index - static_cast<std::uint32_t>(stack.size())));
        } else if constexpr (std::is_same_v<T, Lam>) {
          stack.push_back({true, &n.hint});
          auto body = erase_at(*n.body, stack);
          stack.pop_back();
          return mk_plam(n.hint, body);
        } else if constexpr (std::is_same_v<T, ErasedLam>) {
          stack.push_back({false, &n.hint});
          auto body = erase_at(*n.body, stack);
          stack.pop_back();
          return body;
        } else if constexpr (std::is_same_v<T, TypeLam>) {
          return erase_at(*n.body, stack);
        } else if constexpr (std::is_same_v<T, App>) {
          return mk_papp(erase_at(*n.fn, stack), erase_at(*n.arg, stack));
        } else if constexpr (std::is_same_v<T, ErasedApp>) {
          return erase_at(*n.fn, stack);
        } else if constexpr (std::is_same_v<T, TypeApp>) {
          return erase_at(*n.fn, stack);
        } else if constexpr (std::is_same_v<T, Pair>) {
          return erase_at(*n.fst, stack);
        } else if constexpr (std::is_same_v<T, Proj>) {
          return erase_at(*n.sub, stack);
        } else if constexpr (std::is_same_v<T, Beta>) {
          return erase_at(*n.witness, stack);
        } else if constexpr (std::is_same_v<T, Delta>) {
          return erase_at(*n.sub, stack);
        } else if constexpr (std::is_same_v<T, Rho>) {
          return erase_at(*n.body, stack);
        } else if constexpr (std::is_same_v<T, Chi>) {
          return erase_at(*n.body, stack);
        } else {
          return erase_at(*n.target, stack);
        }
      },
      t.node);
}

} // namespace

PurePtr erase(const TermPtr& t) {
  std::vector<BinderInfo> stack;
  return erase_at(*t, stack);
}

TermPtr embed(const PurePtr& p) {
  using namespace pure;
  return std::visit(
      [&](const auto& n) -> TermPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) return mk_var(n.name);
        else if constexpr (std::is_same_v<T, Bound>) return mk_bound(n.index);
        else if constexpr (std::is_same_v<T, Lam>) return mk_lam(n.hint, embed(n.body));
        else return mk_app(embed(n.fn), embed(n.arg));
      },
      p->node);
}

NameSet free_vars(const PurePtr& p) {
  using namespace pure;
  NameSet s;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) s.insert(n.name);
        else if constexpr (std::is_same_v<T, Bound>) {}
        else if constexpr (std::is_same_v<T, Lam>) s.merge(free_vars(n.body));
        else {
          s.merge(free_vars(n.fn));
          s.merge(free_vars(n.arg));
        }
      },
      p->node);
  return s;
}

bool alpha_eq(const PurePtr& a, const PurePtr& b) {
  using namespace pure;
  if (a->node.index() != b->node.index()) return false;
  if (auto* v = std::get_if<Var>(&a->node)) return v->name == std::get<Var>(b->node).name;
  if (auto* v = std::get_if<Bound>(&a->node)) return v->index == std::get<Bound>(b->node).index;
  if (auto* l = std::get_if<Lam>(&a->node)) return alpha_eq(l->body, std::get<Lam>(b->node).body);
  const auto& x = std::get<App>(a->node);
  const auto& y = std::get<App>(b->node);
  return alpha_eq(x.fn, y.fn) && alpha_eq(x.arg, y.arg);
}

std::size_t term_size(const PurePtr& p) {
  using namespace pure;
  return std::visit(
      [&](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var> || std::is_same_v<T, Bound>) return 1;
        else if constexpr (std::is_same_v<T, Lam>) return 1 + term_size(n.body);
        else return 1 + term_size(n.fn) + term_size(n.arg);
      },
      p->node);
}

} // namespace cdle
