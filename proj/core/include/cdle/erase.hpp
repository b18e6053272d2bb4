#pragma once

#include <memory>
#include <variant>

#include "cdle/syntax.hpp"

namespace cdle {

struct PureTerm;
using PurePtr = std::shared_ptr<const PureTerm>;

// Pure untyped lambda terms: the image of erasure and the only thing the
// kernel ever reduces for equality. Same locally nameless discipline as the
// annotated syntax, with a single (term) index space.
namespace pure {
struct Var { Name name; };
struct Bound { std::uint32_t index = 0; };
struct Lam { std::string hint; PurePtr body; };
struct App { PurePtr fn; PurePtr arg; };
} // namespace pure

struct PureTerm {
  using Node = std::variant<pure::Var, pure::Bound, pure::Lam, pure::App>;
  Node node;
};

PurePtr mk_pvar(Name n);
PurePtr mk_pbound(std::uint32_t idx);
PurePtr mk_plam(std::string hint, PurePtr body);
PurePtr mk_papp(PurePtr fn, PurePtr arg);

/// |t|: strips annotations, type abstraction/application, erased arguments
/// and proof constructs. Total. A variable whose Λ-binder is erased surfaces
/// as a free variable with the reserved id 0, which no context ever declares.
PurePtr erase(const TermPtr& t);

/// The evident injection of pure terms into annotated terms; erase(embed(p))
/// is p.
TermPtr embed(const PurePtr& p);

NameSet free_vars(const PurePtr& p);
bool alpha_eq(const PurePtr& a, const PurePtr& b);

/// Node count: Var and Bound are 1, Lam is 1 + body, App is 1 + fn + arg.
std::size_t term_size(const PurePtr& p);

} // namespace cdle
