#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdle/elab.hpp"
#include "cdle/parse.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StdoutTracer final : cdle::Tracer {
  std::ostream& out;
  explicit StdoutTracer(std::ostream& os) : out(os) {}
  void rule(std::string_view name, const std::string& judgment, int depth) override {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << name << ": " << judgment << "\n";
  }
};

void emit_diag(const cdle::Diagnostic& d, bool json) {
  std::cerr << (json ? d.render_json() : d.render()) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdle — kernel checker for the Calculus of Dependent Lambda Eliminations"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Type-check declaration files");
  std::vector<std::string> files;
  std::uint64_t fuel = 0;
  bool print_erased = false, json_errors = false, trace = false;
  bool fuel_given = false;
  check->add_option("--fuel", fuel, "Step budget per declaration (default 100000)")
      ->each([&](const std::string&) { fuel_given = true; });
  check->add_flag("--print-erased", print_erased, "Print erasures of checked terms");
  check->add_flag("--json-errors", json_errors, "Emit diagnostics as JSON objects");
  check->add_flag("--trace", trace, "Log every classification rule applied");
  check->add_option("files", files, "Declaration files (.ced)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!fuel_given) {
    fuel = 100000;
    if (const char* env = std::getenv("CDLE_FUEL")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) {
        std::cerr << "cdle: CDLE_FUEL must be a positive integer\n";
        return kExitUsage;
      }
      fuel = v;
    }
  }
  if (fuel == 0) {
    std::cerr << "cdle: --fuel must be positive\n";
    return kExitUsage;
  }

  bool any_parse_error = false;
  bool any_check_error = false;

  for (const std::string& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      cdle::Diagnostic d;
      d.code = cdle::DiagCode::Usage;
      d.message = "cannot open file '" + path + "'";
      d.span.file = path;
      emit_diag(d, json_errors);
      any_parse_error = true;
      continue;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    cdle::NameSupply names;
    cdle::ParseResult parsed = cdle::parse_file(buf.str(), path, names);
    if (parsed.error) {
      emit_diag(*parsed.error, json_errors);
      any_parse_error = true;
      continue;
    }

    StdoutTracer tracer(std::cout);
    cdle::ElabOptions opts;
    opts.fuel = fuel;
    opts.print_erased = print_erased;
    opts.tracer = trace ? &tracer : nullptr;

    cdle::ElabResult result = cdle::elaborate(parsed.decls, names, opts);
    for (const auto& report : result.reports) {
      for (const auto& line : report.output) std::cout << line << "\n";
      for (const auto& w : report.warnings) emit_diag(w, json_errors);
      for (const auto& e : report.errors) emit_diag(e, json_errors);
    }
    if (!result.all_ok) any_check_error = true;
  }

  if (any_parse_error) return kExitUsage;
  return any_check_error ? kExitCheckFailed : kExitOk;
}
