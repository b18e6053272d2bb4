#include "cdle/elab.hpp"

#include "cdle/print.hpp"

namespace cdle {

namespace {

std::string position(const SourceSpan& sp) {
  return (sp.known() ? sp.file : "<input>") + ":" + std::to_string(sp.line);
}

} // namespace

TermPtr Elaborator::inline_defs(TermPtr t) const {
  for (const auto& d : defs_)
    t = d.term_body ? subst_term(d.name, d.term_body, t) : subst_type(d.name, d.type_body, t);
  return t;
}

TypePtr Elaborator::inline_defs(TypePtr t) const {
  for (const auto& d : defs_)
    t = d.term_body ? subst_term(d.name, d.term_body, t) : subst_type(d.name, d.type_body, t);
  return t;
}

KindPtr Elaborator::inline_defs(KindPtr k) const {
  for (const auto& d : defs_)
    k = d.term_body ? subst_term(d.name, d.term_body, k) : subst_type(d.name, d.type_body, k);
  return k;
}

DeclReport Elaborator::process(const Decl& decl) {
  DeclReport report;
  report.span = decl.span;

  Budget budget{opts_.fuel};
  CheckState st{budget, names_, opts_.tracer, &report.warnings, opts_.fuel};
  Context ctx;

  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Define>) {
          report.what = "def " + n.name.spelling;
          for (const auto& d : defs_)
            if (d.name.spelling == n.name.spelling) {
              Diagnostic dup;
              dup.code = DiagCode::DuplicateName;
              dup.message = "'" + n.name.spelling + "' is already defined";
              dup.span = decl.span;
              report.errors.push_back(dup);
              break;
            }
          if (std::holds_alternative<TypePtr>(n.classifier)) {
            TypePtr cls = inline_defs(std::get<TypePtr>(n.classifier));
            TermPtr body = inline_defs(std::get<TermPtr>(n.body));
            KindSynthResult k = kind_synth(ctx, cls, st);
            if (auto* d = std::get_if<Diagnostic>(&k)) {
              report.errors.push_back(*d);
              return;
            }
            if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(k)->node)) {
              Diagnostic d;
              d.code = DiagCode::KindMismatch;
              d.message = "classifier of a term definition must have kind ★";
              d.span = decl.span;
              d.expected = "★";
              d.actual = print_kind(std::get<KindPtr>(k));
              report.errors.push_back(d);
              return;
            }
            if (auto d = type_check(ctx, body, cls, st)) {
              report.errors.push_back(*d);
              return;
            }
            defs_.push_back({n.name, cls, nullptr, mk_chi(cls, body, body->span), nullptr});
            if (opts_.print_erased)
              report.output.push_back("erased " + n.name.spelling + " = " +
                                      print_pure(erase(body)));
          } else {
            KindPtr cls = inline_defs(std::get<KindPtr>(n.classifier));
            TypePtr body = inline_defs(std::get<TypePtr>(n.body));
            if (auto d = wf_kind(ctx, cls, st)) {
              report.errors.push_back(*d);
              return;
            }
            KindSynthResult k = kind_synth(ctx, body, st);
            if (auto* d = std::get_if<Diagnostic>(&k)) {
              report.errors.push_back(*d);
              return;
            }
            switch (convert_kinds(std::get<KindPtr>(k), cls, st.fuel, st.names)) {
              case ConvOutcome::Convertible:
                break;
              case ConvOutcome::NotConvertible: {
                Diagnostic d;
                d.code = DiagCode::KindMismatch;
                d.message = "type definition does not match its declared kind";
                d.span = decl.span;
                d.expected = print_kind(cls);
                d.actual = print_kind(std::get<KindPtr>(k));
                report.errors.push_back(d);
                return;
              }
              default: {
                Diagnostic d;
                d.code = DiagCode::FuelExhausted;
                d.message = "step budget exhausted";
                d.span = decl.span;
                d.fuel = opts_.fuel;
                report.errors.push_back(d);
                return;
              }
            }
            defs_.push_back({n.name, nullptr, cls, nullptr, body});
          }
        } else if constexpr (std::is_same_v<T, CheckDirective> ||
                             std::is_same_v<T, FailDirective>) {
          constexpr bool is_fail = std::is_same_v<T, FailDirective>;
          report.what = is_fail ? "#fail" : "#check";
          TypePtr ty = inline_defs(n.type);
          TermPtr t = inline_defs(n.term);
          std::optional<Diagnostic> failure;
          KindSynthResult k = kind_synth(ctx, ty, st);
          if (auto* d = std::get_if<Diagnostic>(&k)) {
            failure = *d;
          } else if (!std::holds_alternative<kind::Star>(std::get<KindPtr>(k)->node)) {
            Diagnostic d;
            d.code = DiagCode::KindMismatch;
            d.message = "checked type must have kind ★";
            d.span = decl.span;
            d.expected = "★";
            d.actual = print_kind(std::get<KindPtr>(k));
            failure = d;
          } else {
            failure = type_check(ctx, t, ty, st);
          }
          if constexpr (is_fail) {
            // A rejection is what the directive asserts; running out of fuel
            // proves nothing and fails the directive honestly.
            if (!failure) {
              Diagnostic d;
              d.code = DiagCode::UnexpectedSuccess;
              d.message = "term was expected to be rejected but checks";
              d.span = decl.span;
              report.errors.push_back(d);
            } else if (failure->code == DiagCode::FuelExhausted) {
              report.errors.push_back(*failure);
            }
          } else {
            if (failure) report.errors.push_back(*failure);
            else if (opts_.print_erased)
              report.output.push_back("erased " + position(decl.span) + " = " +
                                      print_pure(erase(t)));
          }
        } else if constexpr (std::is_same_v<T, ConvDirective>) {
          report.what = "#conv";
          TypePtr lhs = inline_defs(n.lhs);
          TypePtr rhs = inline_defs(n.rhs);
          switch (convert_types(lhs, rhs, st.fuel, st.names)) {
            case ConvOutcome::Convertible:
              break;
            case ConvOutcome::NotConvertible: {
              Diagnostic d;
              d.code = DiagCode::ConversionFailed;
              d.message = "types are not convertible";
              d.span = decl.span;
              d.expected = print_type(lhs);
              d.actual = print_type(rhs);
              report.errors.push_back(d);
              break;
            }
            default: {
              Diagnostic d;
              d.code = DiagCode::FuelExhausted;
              d.message = "step budget exhausted";
              d.span = decl.span;
              d.fuel = opts_.fuel;
              report.errors.push_back(d);
            }
          }
        } else if constexpr (std::is_same_v<T, NormDirective>) {
          report.what = "#norm";
          PurePtr p = erase(inline_defs(n.term));
          NormResult r = normalize(p, budget);
          if (r.normal())
            report.output.push_back(position(decl.span) + ": norm: normal " +
                                    print_pure(r.term));
          else
            report.output.push_back(position(decl.span) + ": norm: exhausted after " +
                                    std::to_string(r.steps) + " steps: " + print_pure(r.term));
        } else {
          report.what = "#synth";
          SynthResult s = type_synth(ctx, inline_defs(n.term), st);
          if (auto* d = std::get_if<Diagnostic>(&s)) report.errors.push_back(*d);
          else
            report.output.push_back(position(decl.span) + ": synth: " +
                                    print_type(std::get<TypePtr>(s)));
        }
      },
      decl.node);

  report.ok = report.errors.empty();
  if (!report.ok) all_ok_ = false;
  return report;
}

ElabResult elaborate(const std::vector<Decl>& decls, NameSupply& names, const ElabOptions& opts) {
  Elaborator el(names, opts);
  ElabResult out;
  for (const auto& d : decls) out.reports.push_back(el.process(d));
  out.all_ok = el.all_ok();
  return out;
}

} // namespace cdle
