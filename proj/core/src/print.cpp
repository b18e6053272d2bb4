#include "cdle/print.hpp"

#include <map>
#include <vector>

namespace cdle {

namespace {

// Precedence: 0 atoms, 2 applications, 3 binders and prefix operators.
constexpr int kAtom = 0;
constexpr int kApp = 2;
constexpr int kBinder = 3;

struct Printer {
  std::map<std::string, int> used;
  std::vector<std::string> term_names;
  std::vector<std::string> type_names;

  void note_frees(const NameSet& fv) {
    for (const auto& n : fv) ++used[n.spelling];
  }

  std::string push(Namespace ns, const std::string& hint) {
    std::string base = hint.empty() ? (ns == Namespace::TermVar ? "x" : "X") : hint;
    std::string name = base;
    while (used[name] > 0) name += "'";
    ++used[name];
    (ns == Namespace::TermVar ? term_names : type_names).push_back(name);
    return name;
  }

  void pop(Namespace ns) {
    auto& stack = ns == Namespace::TermVar ? term_names : type_names;
    --used[stack.back()];
    stack.pop_back();
  }

  std::string bound(Namespace ns, std::uint32_t idx) const {
    const auto& stack = ns == Namespace::TermVar ? term_names : type_names;
    if (idx < stack.size()) return stack[stack.size() - 1 - idx];
    return "#" + std::to_string(idx);
  }

  static std::string wrap(std::string s, bool needed) {
    return needed ? "(" + std::move(s) + ")" : std::move(s);
  }

  std::string term(const TermPtr& t, int max);
  std::string type(const TypePtr& t, int max);
  std::string kind(const KindPtr& k, int max);
  std::string pure(const PurePtr& p, int max);
};

std::string Printer::term(const TermPtr& t, int max) {
  using namespace term;
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return n.name.spelling.empty() ? "_" + std::to_string(n.name.id) : n.name.spelling;
        } else if constexpr (std::is_same_v<T, Bound>) {
          return bound(Namespace::TermVar, n.index);
        } else if constexpr (std::is_same_v<T, Lam>) {
          std::string x = push(Namespace::TermVar, n.hint);
          std::string body = term(n.body, kBinder);
          pop(Namespace::TermVar);
          return wrap("λ " + x + " . " + body, max < kBinder);
        } else if constexpr (std::is_same_v<T, ErasedLam>) {
          std::string x = push(Namespace::TermVar, n.hint);
          std::string body = term(n.body, kBinder);
          pop(Namespace::TermVar);
          return wrap("Λ " + x + " . " + body, max < kBinder);
        } else if constexpr (std::is_same_v<T, TypeLam>) {
          std::string x = push(Namespace::TypeVar, n.hint);
          std::string body = term(n.body, kBinder);
          pop(Namespace::TypeVar);
          return wrap("Λ " + x + " . " + body, max < kBinder);
        } else if constexpr (std::is_same_v<T, App>) {
          return wrap(term(n.fn, kApp) + " " + term(n.arg, kAtom), max < kApp);
        } else if constexpr (std::is_same_v<T, ErasedApp>) {
          return wrap(term(n.fn, kApp) + " -" + term(n.arg, kAtom), max < kApp);
        } else if constexpr (std::is_same_v<T, TypeApp>) {
          return wrap(term(n.fn, kApp) + " · " + type(n.arg, kAtom), max < kApp);
        } else if constexpr (std::is_same_v<T, Pair>) {
          return "[ " + term(n.fst, kBinder) + " , " + term(n.snd, kBinder) + " ]";
        } else if constexpr (std::is_same_v<T, Proj>) {
          return term(n.sub, kAtom) + (n.which == 1 ? ".1" : ".2");
        } else if constexpr (std::is_same_v<T, Beta>) {
          return "β{" + term(n.witness, kBinder) + "}";
        } else if constexpr (std::is_same_v<T, Delta>) {
          return wrap("δ " + term(n.sub, kAtom), max < kBinder);
        } else if constexpr (std::is_same_v<T, Rho>) {
          return wrap("ρ " + term(n.eq, kAtom) + " - " + term(n.body, kAtom), max < kBinder);
        } else if constexpr (std::is_same_v<T, Chi>) {
          return wrap("χ " + type(n.ann, kAtom) + " - " + term(n.body, kAtom), max < kBinder);
        } else {
          return wrap("φ " + term(n.eq, kAtom) + " - " + term(n.subject, kAtom) + " { " +
                          term(n.target, kBinder) + " }",
                      max < kBinder);
        }
      },
      t->node);
}

std::string Printer::type(const TypePtr& t, int max) {
  using namespace type;
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return n.name.spelling.empty() ? "_" + std::to_string(n.name.id) : n.name.spelling;
        } else if constexpr (std::is_same_v<T, Bound>) {
          return bound(Namespace::TypeVar, n.index);
        } else if constexpr (std::is_same_v<T, All>) {
          std::string dom = kind(n.dom, kApp);
          std::string x = push(Namespace::TypeVar, n.hint);
          std::string body = type(n.body, kBinder);
          pop(Namespace::TypeVar);
          return wrap("∀ " + x + " : " + dom + " . " + body, max < kBinder);
        } else if constexpr (std::is_same_v<T, AllTerm> || std::is_same_v<T, Pi> ||
                             std::is_same_v<T, Iota> || std::is_same_v<T, LamTerm>) {
          const char* sym = std::is_same_v<T, AllTerm> ? "∀"
                            : std::is_same_v<T, Pi>    ? "Π"
                            : std::is_same_v<T, Iota>  ? "ι"
                                                       : "λ";
          std::string dom = type(n.dom, kApp);
          std::string x = push(Namespace::TermVar, n.hint);
          std::string body = type(n.body, kBinder);
          pop(Namespace::TermVar);
          return wrap(std::string(sym) + " " + x + " : " + dom + " . " + body, max < kBinder);
        } else if constexpr (std::is_same_v<T, LamType>) {
          std::string dom = kind(n.dom, kApp);
          std::string x = push(Namespace::TypeVar, n.hint);
          std::string body = type(n.body, kBinder);
          pop(Namespace::TypeVar);
          return wrap("λ " + x + " : " + dom + " . " + body, max < kBinder);
        } else if constexpr (std::is_same_v<T, AppTerm>) {
          return wrap(type(n.fn, kApp) + " " + term(n.arg, kAtom), max < kApp);
        } else if constexpr (std::is_same_v<T, AppType>) {
          return wrap(type(n.fn, kApp) + " · " + type(n.arg, kAtom), max < kApp);
        } else {
          return "{ " + term(n.lhs, kBinder) + " ≃ " + term(n.rhs, kBinder) + " }";
        }
      },
      t->node);
}

std::string Printer::kind(const KindPtr& k, int max) {
  using namespace kind;
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Star>) {
          return "★";
        } else if constexpr (std::is_same_v<T, PiTerm>) {
          std::string dom = type(n.dom, kApp);
          std::string x = push(Namespace::TermVar, n.hint);
          std::string body = kind(n.body, kBinder);
          pop(Namespace::TermVar);
          return wrap("Π " + x + " : " + dom + " . " + body, max < kBinder);
        } else {
          std::string dom = kind(n.dom, kApp);
          std::string x = push(Namespace::TypeVar, n.hint);
          std::string body = kind(n.body, kBinder);
          pop(Namespace::TypeVar);
          return wrap("Π " + x + " : " + dom + " . " + body, max < kBinder);
        }
      },
      k->node);
}

std::string Printer::pure(const PurePtr& p, int max) {
  using namespace pure;
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return n.name.spelling.empty() ? "_" + std::to_string(n.name.id) : n.name.spelling;
        } else if constexpr (std::is_same_v<T, Bound>) {
          return bound(Namespace::TermVar, n.index);
        } else if constexpr (std::is_same_v<T, Lam>) {
          std::string x = push(Namespace::TermVar, n.hint);
          std::string body = pure(n.body, kBinder);
          pop(Namespace::TermVar);
          return wrap("λ " + x + " . " + body, max < kBinder);
        } else {
          return wrap(pure(n.fn, kApp) + " " + pure(n.arg, kAtom), max < kApp);
        }
      },
      p->node);
}

} // namespace

std::string print_term(const TermPtr& t) {
  Printer p;
  p.note_frees(free_vars(t));
  return p.term(t, kBinder);
}

std::string print_type(const TypePtr& t) {
  Printer p;
  p.note_frees(free_vars(t));
  return p.type(t, kBinder);
}

std::string print_kind(const KindPtr& k) {
  Printer p;
  p.note_frees(free_vars(k));
  return p.kind(k, kBinder);
}

std::string print_pure(const PurePtr& p) {
  Printer pr;
  pr.note_frees(free_vars(p));
  return pr.pure(p, kBinder);
}

} // namespace cdle
