#include "cdle/parse.hpp"

#include <cctype>

#include "cdle/print.hpp"
#include "lex.hpp"

namespace cdle {

namespace {

bool upper_initial(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan sp = a;
  sp.end = b.end;
  sp.end_line = b.end_line;
  sp.end_col = b.end_col;
  return sp;
}

struct Parser {
  const std::vector<Token>& toks;
  NameSupply& names;
  const FreeScope* frees = nullptr;
  std::size_t pos = 0;
  std::optional<Diagnostic> err;

  struct Binder {
    std::string spelling;
    Namespace ns;
  };
  std::vector<Binder> scope;
  std::map<std::string, Name> toplevel;

  const Token& peek(std::size_t off = 0) const {
    std::size_t i = pos + off;
    return i < toks.size() ? toks[i] : toks.back();
  }
  const Token& prev() const { return toks[pos == 0 ? 0 : pos - 1]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& take() {
    const Token& t = peek();
    if (pos + 1 < toks.size()) ++pos;
    return t;
  }

  void fail(std::string msg, const SourceSpan& sp) {
    if (!err) {
      Diagnostic d;
      d.code = DiagCode::ParseError;
      d.message = std::move(msg);
      d.span = sp;
      err = d;
    }
  }

  bool expect(Tok k, const char* what) {
    if (at(k)) {
      take();
      return true;
    }
    fail(std::string("expected ") + what, peek().span);
    return false;
  }

  // Resolution: nearest binder of the spelling first, then earlier
  // definitions, then the caller-provided free scope.
  TermPtr resolve_term(const Token& id) {
    std::uint32_t idx = 0;
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->ns != Namespace::TermVar) continue;
      if (it->spelling == id.text) return mk_bound(idx, id.span);
      ++idx;
    }
    if (auto d = toplevel.find(id.text); d != toplevel.end()) return mk_var(d->second, id.span);
    if (frees)
      if (auto f = frees->find(id.text); f != frees->end() && f->second.ns == Namespace::TermVar)
        return mk_var(f->second, id.span);
    fail("unbound variable '" + id.text + "'", id.span);
    return nullptr;
  }

  TypePtr resolve_type(const Token& id) {
    std::uint32_t idx = 0;
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->ns != Namespace::TypeVar) continue;
      if (it->spelling == id.text) return mk_tbound(idx, id.span);
      ++idx;
    }
    if (auto d = toplevel.find(id.text); d != toplevel.end()) return mk_tvar(d->second, id.span);
    if (frees)
      if (auto f = frees->find(id.text); f != frees->end() && f->second.ns == Namespace::TypeVar)
        return mk_tvar(f->second, id.span);
    fail("unbound type variable '" + id.text + "'", id.span);
    return nullptr;
  }

  bool starts_aterm() const {
    switch (peek().kind) {
      case Tok::Beta:
      case Tok::LBrack:
      case Tok::LParen:
        return true;
      case Tok::Ident:
        return !upper_initial(peek().text);
      default:
        return false;
    }
  }

  // ---- kinds ----

  KindPtr parse_kind() {
    SourceSpan start = peek().span;
    if (at(Tok::Star)) {
      take();
      return mk_star(start);
    }
    if (at(Tok::Pi)) {
      take();
      if (!at(Tok::Ident)) {
        fail("expected a binder name after Π", peek().span);
        return nullptr;
      }
      Token id = take();
      if (!expect(Tok::Colon, "':'")) return nullptr;
      if (upper_initial(id.text)) {
        KindPtr dom = parse_kind();
        if (!dom) return nullptr;
        if (!expect(Tok::Dot, "'.'")) return nullptr;
        scope.push_back({id.text, Namespace::TypeVar});
        KindPtr body = parse_kind();
        scope.pop_back();
        if (!body) return nullptr;
        return mk_pi_type(id.text, dom, body, merge(start, prev().span));
      }
      TypePtr dom = parse_type();
      if (!dom) return nullptr;
      if (!expect(Tok::Dot, "'.'")) return nullptr;
      scope.push_back({id.text, Namespace::TermVar});
      KindPtr body = parse_kind();
      scope.pop_back();
      if (!body) return nullptr;
      return mk_pi_term(id.text, dom, body, merge(start, prev().span));
    }
    if (at(Tok::LParen)) {
      take();
      KindPtr k = parse_kind();
      if (!k) return nullptr;
      if (!expect(Tok::RParen, "')'")) return nullptr;
      return k;
    }
    fail("expected a kind", peek().span);
    return nullptr;
  }

  // ---- types ----

  TypePtr parse_type() {
    SourceSpan start = peek().span;
    if (at(Tok::All)) {
      take();
      if (!at(Tok::Ident)) {
        fail("expected a binder name after ∀", peek().span);
        return nullptr;
      }
      Token id = take();
      if (!expect(Tok::Colon, "':'")) return nullptr;
      if (upper_initial(id.text)) {
        KindPtr dom = parse_kind();
        if (!dom) return nullptr;
        if (!expect(Tok::Dot, "'.'")) return nullptr;
        scope.push_back({id.text, Namespace::TypeVar});
        TypePtr body = parse_type();
        scope.pop_back();
        if (!body) return nullptr;
        return mk_all(id.text, dom, body, merge(start, prev().span));
      }
      TypePtr dom = parse_type();
      if (!dom) return nullptr;
      if (!expect(Tok::Dot, "'.'")) return nullptr;
      scope.push_back({id.text, Namespace::TermVar});
      TypePtr body = parse_type();
      scope.pop_back();
      if (!body) return nullptr;
      return mk_all_term(id.text, dom, body, merge(start, prev().span));
    }
    if (at(Tok::Pi) || at(Tok::Iota)) {
      bool is_pi = at(Tok::Pi);
      take();
      if (!at(Tok::Ident) || upper_initial(peek().text)) {
        fail(is_pi ? "Π binds a term variable at the type level" : "ι binds a term variable",
             peek().span);
        return nullptr;
      }
      Token id = take();
      if (!expect(Tok::Colon, "':'")) return nullptr;
      TypePtr dom = parse_type();
      if (!dom) return nullptr;
      if (!expect(Tok::Dot, "'.'")) return nullptr;
      scope.push_back({id.text, Namespace::TermVar});
      TypePtr body = parse_type();
      scope.pop_back();
      if (!body) return nullptr;
      SourceSpan sp = merge(start, prev().span);
      return is_pi ? mk_pi(id.text, dom, body, sp) : mk_iota(id.text, dom, body, sp);
    }
    if (at(Tok::LamLower)) {
      take();
      if (!at(Tok::Ident)) {
        fail("expected a binder name after λ", peek().span);
        return nullptr;
      }
      Token id = take();
      if (!expect(Tok::Colon, "':'")) return nullptr;
      if (upper_initial(id.text)) {
        KindPtr dom = parse_kind();
        if (!dom) return nullptr;
        if (!expect(Tok::Dot, "'.'")) return nullptr;
        scope.push_back({id.text, Namespace::TypeVar});
        TypePtr body = parse_type();
        scope.pop_back();
        if (!body) return nullptr;
        return mk_tlam_type(id.text, dom, body, merge(start, prev().span));
      }
      TypePtr dom = parse_type();
      if (!dom) return nullptr;
      if (!expect(Tok::Dot, "'.'")) return nullptr;
      scope.push_back({id.text, Namespace::TermVar});
      TypePtr body = parse_type();
      scope.pop_back();
      if (!body) return nullptr;
      return mk_tlam_term(id.text, dom, body, merge(start, prev().span));
    }
    return parse_app_type();
  }

  TypePtr parse_app_type() {
    SourceSpan start = peek().span;
    TypePtr head = parse_atom_type();
    if (!head) return nullptr;
    for (;;) {
      if (at(Tok::Cdot)) {
        take();
        TypePtr arg = parse_atom_type();
        if (!arg) return nullptr;
        head = mk_app_type(head, arg, merge(start, prev().span));
        continue;
      }
      if (starts_aterm()) {
        TermPtr arg = parse_atom_term();
        if (!arg) return nullptr;
        head = mk_app_term(head, arg, merge(start, prev().span));
        continue;
      }
      if (at(Tok::Ident) && upper_initial(peek().text)) {
        fail("type arguments must be applied with '·'", peek().span);
        return nullptr;
      }
      return head;
    }
  }

  TypePtr parse_atom_type() {
    SourceSpan start = peek().span;
    if (at(Tok::Ident)) {
      if (!upper_initial(peek().text)) {
        fail("expected a type, found term variable '" + peek().text + "'", peek().span);
        return nullptr;
      }
      return resolve_type(take());
    }
    if (at(Tok::LBrace)) {
      take();
      TermPtr lhs = parse_term();
      if (!lhs) return nullptr;
      if (!expect(Tok::Simeq, "'≃'")) return nullptr;
      TermPtr rhs = parse_term();
      if (!rhs) return nullptr;
      if (!expect(Tok::RBrace, "'}'")) return nullptr;
      return mk_eq(lhs, rhs, merge(start, prev().span));
    }
    if (at(Tok::LParen)) {
      take();
      TypePtr t = parse_type();
      if (!t) return nullptr;
      if (!expect(Tok::RParen, "')'")) return nullptr;
      return t;
    }
    fail("expected a type", peek().span);
    return nullptr;
  }

  // ---- terms ----

  TermPtr parse_term() {
    SourceSpan start = peek().span;
    if (at(Tok::LamLower)) {
      take();
      if (!at(Tok::Ident) || upper_initial(peek().text)) {
        fail("λ binds a term variable; use Λ for type variables", peek().span);
        return nullptr;
      }
      Token id = take();
      if (!expect(Tok::Dot, "'.'")) return nullptr;
      scope.push_back({id.text, Namespace::TermVar});
      TermPtr body = parse_term();
      scope.pop_back();
      if (!body) return nullptr;
      return mk_lam(id.text, body, merge(start, prev().span));
    }
    if (at(Tok::LamUpper)) {
      take();
      if (!at(Tok::Ident)) {
        fail("expected a binder name after Λ", peek().span);
        return nullptr;
      }
      Token id = take();
      if (!expect(Tok::Dot, "'.'")) return nullptr;
      bool is_type = upper_initial(id.text);
      scope.push_back({id.text, is_type ? Namespace::TypeVar : Namespace::TermVar});
      TermPtr body = parse_term();
      scope.pop_back();
      if (!body) return nullptr;
      SourceSpan sp = merge(start, prev().span);
      return is_type ? mk_type_lam(id.text, body, sp) : mk_erased_lam(id.text, body, sp);
    }
    return parse_app_term();
  }

  TermPtr parse_app_term() {
    SourceSpan start = peek().span;
    TermPtr head = parse_prefix_term();
    if (!head) return nullptr;
    for (;;) {
      if (starts_aterm()) {
        TermPtr arg = parse_atom_term();
        if (!arg) return nullptr;
        head = mk_app(head, arg, merge(start, prev().span));
        continue;
      }
      if (at(Tok::Dash)) {
        take();
        TermPtr arg = parse_atom_term();
        if (!arg) return nullptr;
        head = mk_erased_app(head, arg, merge(start, prev().span));
        continue;
      }
      if (at(Tok::Cdot)) {
        take();
        TypePtr arg = parse_atom_type();
        if (!arg) return nullptr;
        head = mk_type_app(head, arg, merge(start, prev().span));
        continue;
      }
      if (at(Tok::Ident) && upper_initial(peek().text)) {
        fail("a term is applied to a type with '·'", peek().span);
        return nullptr;
      }
      return head;
    }
  }

  TermPtr parse_prefix_term() {
    SourceSpan start = peek().span;
    if (at(Tok::Delta)) {
      take();
      TermPtr sub = parse_atom_term();
      if (!sub) return nullptr;
      return mk_delta(sub, merge(start, prev().span));
    }
    if (at(Tok::Rho)) {
      take();
      TermPtr eq = parse_atom_term();
      if (!eq) return nullptr;
      if (!expect(Tok::Dash, "'-'")) return nullptr;
      TermPtr body = parse_atom_term();
      if (!body) return nullptr;
      return mk_rho(eq, body, merge(start, prev().span));
    }
    if (at(Tok::Chi)) {
      take();
      TypePtr ann = parse_atom_type();
      if (!ann) return nullptr;
      if (!expect(Tok::Dash, "'-'")) return nullptr;
      TermPtr body = parse_atom_term();
      if (!body) return nullptr;
      return mk_chi(ann, body, merge(start, prev().span));
    }
    if (at(Tok::Phi)) {
      take();
      TermPtr eq = parse_atom_term();
      if (!eq) return nullptr;
      if (!expect(Tok::Dash, "'-'")) return nullptr;
      TermPtr subject = parse_atom_term();
      if (!subject) return nullptr;
      if (!expect(Tok::LBrace, "'{'")) return nullptr;
      TermPtr target = parse_term();
      if (!target) return nullptr;
      if (!expect(Tok::RBrace, "'}'")) return nullptr;
      return mk_phi(eq, subject, target, merge(start, prev().span));
    }
    return parse_atom_term();
  }

  TermPtr parse_atom_term() {
    SourceSpan start = peek().span;
    TermPtr atom;
    if (at(Tok::Ident)) {
      if (upper_initial(peek().text)) {
        fail("expected a term, found type variable '" + peek().text + "'", peek().span);
        return nullptr;
      }
      atom = resolve_term(take());
    } else if (at(Tok::Beta)) {
      take();
      if (!expect(Tok::LBrace, "'{'")) return nullptr;
      TermPtr witness = parse_term();
      if (!witness) return nullptr;
      if (!expect(Tok::RBrace, "'}'")) return nullptr;
      atom = mk_beta(witness, merge(start, prev().span));
    } else if (at(Tok::LBrack)) {
      take();
      TermPtr fst = parse_term();
      if (!fst) return nullptr;
      if (!expect(Tok::Comma, "','")) return nullptr;
      TermPtr snd = parse_term();
      if (!snd) return nullptr;
      if (!expect(Tok::RBrack, "']'")) return nullptr;
      atom = mk_pair(fst, snd, merge(start, prev().span));
    } else if (at(Tok::LParen)) {
      take();
      TermPtr t = parse_term();
      if (!t) return nullptr;
      if (!expect(Tok::RParen, "')'")) return nullptr;
      atom = t;
    } else {
      fail("expected a term", peek().span);
      return nullptr;
    }
    while (atom && (at(Tok::Proj1) || at(Tok::Proj2))) {
      std::uint8_t which = at(Tok::Proj1) ? 1 : 2;
      take();
      atom = mk_proj(atom, which, merge(start, prev().span));
    }
    return atom;
  }

  // ---- declarations ----

  std::optional<Decl> parse_decl() {
    SourceSpan start = peek().span;
    if (at(Tok::Def)) {
      take();
      if (!at(Tok::Ident)) {
        fail("expected a name after def", peek().span);
        return std::nullopt;
      }
      Token id = take();
      if (!expect(Tok::Colon, "':'")) return std::nullopt;
      bool is_type = upper_initial(id.text);
      Define def;
      if (is_type) {
        KindPtr cls = parse_kind();
        if (!cls) return std::nullopt;
        if (!expect(Tok::Equals, "'='")) return std::nullopt;
        TypePtr body = parse_type();
        if (!body) return std::nullopt;
        def.classifier = cls;
        def.body = body;
      } else {
        TypePtr cls = parse_type();
        if (!cls) return std::nullopt;
        if (!expect(Tok::Equals, "'='")) return std::nullopt;
        TermPtr body = parse_term();
        if (!body) return std::nullopt;
        def.classifier = cls;
        def.body = body;
      }
      if (!expect(Tok::Dot, "'.' at end of definition")) return std::nullopt;
      def.name = names.fresh(is_type ? Namespace::TypeVar : Namespace::TermVar, id.text);
      toplevel[id.text] = def.name; // later declarations see the newest binding
      return Decl{std::move(def), merge(start, prev().span)};
    }
    if (at(Tok::DirCheck) || at(Tok::DirFail)) {
      bool is_fail = at(Tok::DirFail);
      take();
      TermPtr t = parse_term();
      if (!t) return std::nullopt;
      if (!expect(Tok::Colon, "':'")) return std::nullopt;
      TypePtr ty = parse_type();
      if (!ty) return std::nullopt;
      if (!expect(Tok::Dot, "'.' at end of directive")) return std::nullopt;
      SourceSpan sp = merge(start, prev().span);
      if (is_fail) return Decl{FailDirective{t, ty}, sp};
      return Decl{CheckDirective{t, ty}, sp};
    }
    if (at(Tok::DirConv)) {
      take();
      TypePtr lhs = parse_type();
      if (!lhs) return std::nullopt;
      if (!expect(Tok::Cong, "'≅'")) return std::nullopt;
      TypePtr rhs = parse_type();
      if (!rhs) return std::nullopt;
      if (!expect(Tok::Dot, "'.' at end of directive")) return std::nullopt;
      return Decl{ConvDirective{lhs, rhs}, merge(start, prev().span)};
    }
    if (at(Tok::DirNorm)) {
      take();
      TermPtr t = parse_term();
      if (!t) return std::nullopt;
      if (!expect(Tok::Dot, "'.' at end of directive")) return std::nullopt;
      return Decl{NormDirective{t}, merge(start, prev().span)};
    }
    if (at(Tok::DirSynth)) {
      take();
      TermPtr t = parse_term();
      if (!t) return std::nullopt;
      if (!expect(Tok::Dot, "'.' at end of directive")) return std::nullopt;
      return Decl{SynthDirective{t}, merge(start, prev().span)};
    }
    fail("expected a declaration or directive", peek().span);
    return std::nullopt;
  }
};

} // namespace

ParseResult parse_file(std::string_view text, const std::string& filename, NameSupply& names) {
  ParseResult out;
  LexResult lexed = lex(text, filename);
  if (lexed.error) {
    out.error = lexed.error;
    return out;
  }
  Parser p{lexed.tokens, names};
  while (!p.at(Tok::End)) {
    auto d = p.parse_decl();
    if (!d) {
      out.error = p.err;
      return out;
    }
    out.decls.push_back(std::move(*d));
  }
  return out;
}

namespace {

template <class T, class Fn>
std::variant<T, Diagnostic> parse_entry(std::string_view text, NameSupply& names,
                                        const FreeScope& frees, Fn fn) {
  LexResult lexed = lex(text, "<input>");
  if (lexed.error) return *lexed.error;
  Parser p{lexed.tokens, names};
  p.frees = &frees;
  T result = fn(p);
  if (!result) {
    if (!p.err) p.fail("parse error", p.peek().span);
    return *p.err;
  }
  if (!p.at(Tok::End)) {
    p.fail("trailing input after expression", p.peek().span);
    return *p.err;
  }
  return result;
}

} // namespace

std::variant<TermPtr, Diagnostic> parse_term(std::string_view text, NameSupply& names,
                                             const FreeScope& frees) {
  return parse_entry<TermPtr>(text, names, frees, [](Parser& p) { return p.parse_term(); });
}

std::variant<TypePtr, Diagnostic> parse_type(std::string_view text, NameSupply& names,
                                             const FreeScope& frees) {
  return parse_entry<TypePtr>(text, names, frees, [](Parser& p) { return p.parse_type(); });
}

std::variant<KindPtr, Diagnostic> parse_kind(std::string_view text, NameSupply& names,
                                             const FreeScope& frees) {
  return parse_entry<KindPtr>(text, names, frees, [](Parser& p) { return p.parse_kind(); });
}

std::string print_decl(const Decl& d) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Define>) {
          std::string cls = std::holds_alternative<TypePtr>(n.classifier)
                                ? print_type(std::get<TypePtr>(n.classifier))
                                : print_kind(std::get<KindPtr>(n.classifier));
          std::string body = std::holds_alternative<TermPtr>(n.body)
                                 ? print_term(std::get<TermPtr>(n.body))
                                 : print_type(std::get<TypePtr>(n.body));
          return "def " + n.name.spelling + " : " + cls + " = " + body + " .";
        } else if constexpr (std::is_same_v<T, CheckDirective>) {
          return "#check " + print_term(n.term) + " : " + print_type(n.type) + " .";
        } else if constexpr (std::is_same_v<T, FailDirective>) {
          return "#fail " + print_term(n.term) + " : " + print_type(n.type) + " .";
        } else if constexpr (std::is_same_v<T, ConvDirective>) {
          return "#conv " + print_type(n.lhs) + " ≅ " + print_type(n.rhs) + " .";
        } else if constexpr (std::is_same_v<T, NormDirective>) {
          return "#norm " + print_term(n.term) + " .";
        } else {
          return "#synth " + print_term(n.term) + " .";
        }
      },
      d.node);
}

} // namespace cdle
