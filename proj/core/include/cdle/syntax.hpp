#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cdle/span.hpp"

namespace cdle {

// Term variables and type variables come from distinct namespaces and never
// compare equal, even when spelled alike.
enum class Namespace : std::uint8_t { TermVar, TypeVar };

/// A free variable. Identity is (namespace, id); the spelling is only for
/// printing and never participates in comparisons.
struct Name {
  Namespace ns = Namespace::TermVar;
  std::uint64_t id = 0;
  std::string spelling;

  friend bool operator==(const Name& a, const Name& b) {
    return a.ns == b.ns && a.id == b.id;
  }
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    if (auto c = a.ns <=> b.ns; c != 0) return c;
    return a.id <=> b.id;
  }
};

using NameSet = std::set<Name>;

/// Issues fresh identities. Id 0 is reserved for variables that escape an
/// erased binder during erasure and is never handed out.
struct NameSupply {
  std::uint64_t next = 1;
  Name fresh(Namespace ns, std::string spelling) {
    return Name{ns, next++, std::move(spelling)};
  }
};

struct AnnTerm;
struct TypeExpr;
struct KindExpr;
using TermPtr = std::shared_ptr<const AnnTerm>;
using TypePtr = std::shared_ptr<const TypeExpr>;
using KindPtr = std::shared_ptr<const KindExpr>;

// Bound variables are de Bruijn indices counted per namespace: a term-level
// index counts only term binders between occurrence and binder, a type-level
// index counts only type binders. Free variables are Names. This makes
// alpha-equivalence plain structural equality.

namespace term {
struct Var { Name name; };
struct Bound { std::uint32_t index = 0; };
struct Lam { std::string hint; TermPtr body; };          // λ x . t
struct ErasedLam { std::string hint; TermPtr body; };    // Λ x . t
struct TypeLam { std::string hint; TermPtr body; };      // Λ X . t
struct App { TermPtr fn; TermPtr arg; };                 // t t'
struct ErasedApp { TermPtr fn; TermPtr arg; };           // t -t'
struct TypeApp { TermPtr fn; TypePtr arg; };             // t · T
struct Pair { TermPtr fst; TermPtr snd; };               // [ t , t' ]
struct Proj { TermPtr sub; std::uint8_t which = 1; };    // t.1 / t.2
struct Beta { TermPtr witness; };                        // β{ t }
struct Delta { TermPtr sub; };                           // δ t
struct Rho { TermPtr eq; TermPtr body; };                // ρ t - t'
struct Chi { TypePtr ann; TermPtr body; };               // χ T - t
struct Phi { TermPtr eq; TermPtr subject; TermPtr target; }; // φ t - t'{ t'' }
} // namespace term

struct AnnTerm {
  using Node = std::variant<term::Var, term::Bound, term::Lam, term::ErasedLam,
                            term::TypeLam, term::App, term::ErasedApp,
                            term::TypeApp, term::Pair, term::Proj, term::Beta,
                            term::Delta, term::Rho, term::Chi, term::Phi>;
  Node node;
  SourceSpan span;
};

namespace type {
struct Var { Name name; };
struct Bound { std::uint32_t index = 0; };
struct All { std::string hint; KindPtr dom; TypePtr body; };      // ∀ X : κ . T
struct AllTerm { std::string hint; TypePtr dom; TypePtr body; };  // ∀ x : T . T'
struct Pi { std::string hint; TypePtr dom; TypePtr body; };       // Π x : T . T'
struct Iota { std::string hint; TypePtr dom; TypePtr body; };     // ι x : T . T'
struct LamTerm { std::string hint; TypePtr dom; TypePtr body; };  // λ x : T . T'
struct LamType { std::string hint; KindPtr dom; TypePtr body; };  // λ X : κ . T
struct AppTerm { TypePtr fn; TermPtr arg; };                      // T t
struct AppType { TypePtr fn; TypePtr arg; };                      // T · T'
struct Eq { TermPtr lhs; TermPtr rhs; };                          // { t ≃ t' }
} // namespace type

struct TypeExpr {
  using Node = std::variant<type::Var, type::Bound, type::All, type::AllTerm,
                            type::Pi, type::Iota, type::LamTerm, type::LamType,
                            type::AppTerm, type::AppType, type::Eq>;
  Node node;
  SourceSpan span;
};

namespace kind {
struct Star {};
struct PiTerm { std::string hint; TypePtr dom; KindPtr body; };  // Π x : T . κ
struct PiType { std::string hint; KindPtr dom; KindPtr body; };  // Π X : κ . κ'
} // namespace kind

struct KindExpr {
  using Node = std::variant<kind::Star, kind::PiTerm, kind::PiType>;
  Node node;
  SourceSpan span;
};

// Constructors. Spans default to "unknown"; the parser passes real ones.
TermPtr mk_var(Name n, SourceSpan sp = {});
TermPtr mk_bound(std::uint32_t idx, SourceSpan sp = {});
TermPtr mk_lam(std::string hint, TermPtr body, SourceSpan sp = {});
TermPtr mk_erased_lam(std::string hint, TermPtr body, SourceSpan sp = {});
TermPtr mk_type_lam(std::string hint, TermPtr body, SourceSpan sp = {});
TermPtr mk_app(TermPtr fn, TermPtr arg, SourceSpan sp = {});
TermPtr mk_erased_app(TermPtr fn, TermPtr arg, SourceSpan sp = {});
TermPtr mk_type_app(TermPtr fn, TypePtr arg, SourceSpan sp = {});
TermPtr mk_pair(TermPtr fst, TermPtr snd, SourceSpan sp = {});
TermPtr mk_proj(TermPtr sub, std::uint8_t which, SourceSpan sp = {});
TermPtr mk_beta(TermPtr witness, SourceSpan sp = {});
TermPtr mk_delta(TermPtr sub, SourceSpan sp = {});
TermPtr mk_rho(TermPtr eq, TermPtr body, SourceSpan sp = {});
TermPtr mk_chi(TypePtr ann, TermPtr body, SourceSpan sp = {});
TermPtr mk_phi(TermPtr eq, TermPtr subject, TermPtr target, SourceSpan sp = {});

TypePtr mk_tvar(Name n, SourceSpan sp = {});
TypePtr mk_tbound(std::uint32_t idx, SourceSpan sp = {});
TypePtr mk_all(std::string hint, KindPtr dom, TypePtr body, SourceSpan sp = {});
TypePtr mk_all_term(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp = {});
TypePtr mk_pi(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp = {});
TypePtr mk_iota(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp = {});
TypePtr mk_tlam_term(std::string hint, TypePtr dom, TypePtr body, SourceSpan sp = {});
TypePtr mk_tlam_type(std::string hint, KindPtr dom, TypePtr body, SourceSpan sp = {});
TypePtr mk_app_term(TypePtr fn, TermPtr arg, SourceSpan sp = {});
TypePtr mk_app_type(TypePtr fn, TypePtr arg, SourceSpan sp = {});
TypePtr mk_eq(TermPtr lhs, TermPtr rhs, SourceSpan sp = {});

KindPtr mk_star(SourceSpan sp = {});
KindPtr mk_pi_term(std::string hint, TypePtr dom, KindPtr body, SourceSpan sp = {});
KindPtr mk_pi_type(std::string hint, KindPtr dom, KindPtr body, SourceSpan sp = {});

// Free variables of both namespaces. Bound indices are invisible.
NameSet free_vars(const TermPtr& t);
NameSet free_vars(const TypePtr& t);
NameSet free_vars(const KindPtr& k);

// Capture-avoiding substitution of a free variable. The replacement must be
// locally closed (no dangling indices), which every kernel value is; under
// that invariant no index shifting is ever required.
TermPtr subst_term(const Name& x, const TermPtr& value, const TermPtr& target);
TypePtr subst_term(const Name& x, const TermPtr& value, const TypePtr& target);
KindPtr subst_term(const Name& x, const TermPtr& value, const KindPtr& target);
TermPtr subst_type(const Name& X, const TypePtr& value, const TermPtr& target);
TypePtr subst_type(const Name& X, const TypePtr& value, const TypePtr& target);
KindPtr subst_type(const Name& X, const TypePtr& value, const KindPtr& target);

// Instantiation of the variable bound by the binder whose body is given:
// index 0 of the respective namespace is replaced by a locally closed value.
TermPtr open_term(const TermPtr& body, const TermPtr& value);
TypePtr open_term(const TypePtr& body, const TermPtr& value);
KindPtr open_term(const KindPtr& body, const TermPtr& value);
TermPtr open_type(const TermPtr& body, const TypePtr& value);
TypePtr open_type(const TypePtr& body, const TypePtr& value);
KindPtr open_type(const KindPtr& body, const TypePtr& value);

// Abstraction: turn a free variable back into the variable bound by a binder
// that is about to wrap the expression (index 0 at the outside).
TypePtr close_term(const TypePtr& body, const Name& x);
KindPtr close_term(const KindPtr& body, const Name& x);
TypePtr close_type(const TypePtr& body, const Name& X);
KindPtr close_type(const KindPtr& body, const Name& X);

// Alpha-equivalence: structural equality modulo hints and spans.
bool alpha_eq(const TermPtr& a, const TermPtr& b);
bool alpha_eq(const TypePtr& a, const TypePtr& b);
bool alpha_eq(const KindPtr& a, const KindPtr& b);

/// Ordered telescope of declarations x:T and X:κ.
class Context {
public:
  struct TermDecl { Name name; TypePtr type; };
  struct TypeDecl { Name name; KindPtr kind; };
  using Entry = std::variant<TermDecl, TypeDecl>;

  void push_term(Name n, TypePtr t) { entries_.push_back(TermDecl{std::move(n), std::move(t)}); }
  void push_type(Name n, KindPtr k) { entries_.push_back(TypeDecl{std::move(n), std::move(k)}); }
  void pop() { entries_.pop_back(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Classifier of the most recent declaration of the name, if any.
  const TypePtr* lookup_term(const Name& n) const;
  const KindPtr* lookup_kind(const Name& n) const;
  bool declares(const Name& n) const;
  NameSet domain() const;

private:
  std::vector<Entry> entries_;
};

/// Every entry's classifier may mention earlier names only, and identities
/// must be distinct.
bool well_scoped(const Context& ctx);

} // namespace cdle
