#include "mltt/frontend/driver.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "mltt/conversion.hpp"
#include "mltt/frontend/parser.hpp"
#include "mltt/frontend/printer.hpp"
#include "mltt/frontend/resolve.hpp"
#include "mltt/normalizer.hpp"
#include "mltt/typing.hpp"

namespace mltt::frontend {

namespace {

/// A piece of source text with a display name, for locating spans.
struct Source {
  std::string name;
  std::string text;
};

/// A diagnostic tied to the source its span points into.
struct Failure {
  Diagnostic diag;
  std::optional<Source> source;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, bool json, std::uint64_t fuel)
      : out_(out), err_(err), json_(json), fuel_(fuel) {}

  std::uint64_t fuel() const { return fuel_; }

  int emit(const Failure& f) const {
    const Diagnostic& d = f.diag;
    const int code = exit_code(d.kind);
    if (json_) {
      nlohmann::json j = {{"kind", diag_kind_name(d.kind)},
                          {"message", d.message},
                          {"span", {{"start", d.span.start}, {"end", d.span.end}}},
                          {"exit", code}};
      if (f.source) j["source"] = f.source->name;
      err_ << j.dump() << '\n';
      return code;
    }
    std::string where = "<unknown>";
    if (f.source) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < d.span.start && i < f.source->text.size(); ++i) {
        if (f.source->text[i] == '\n') ++line, col = 1;
        else ++col;
      }
      where = f.source->name + ":" + std::to_string(line) + ":" + std::to_string(col);
    }
    err_ << where << ": error[" << diag_kind_name(d.kind) << "]: " << d.message << '\n';
    return code;
  }

  int success(const std::string& result) const {
    if (json_) {
      out_ << nlohmann::json{{"result", result}, {"exit", 0}}.dump() << '\n';
    } else {
      out_ << result << '\n';
    }
    return 0;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool json_;
  std::uint64_t fuel_;
};

class FailureError : public std::exception {
 public:
  explicit FailureError(Failure f) : failure_(std::move(f)) {}
  const Failure& failure() const { return failure_; }
  const char* what() const noexcept override { return failure_.diag.message.c_str(); }

 private:
  Failure failure_;
};

[[noreturn]] void fail(const Source& src, DiagKind kind, std::string message, Span span) {
  throw FailureError({{Diagnostic::Severity::error, kind, std::move(message), span}, src});
}

std::string render_type_error(const TypeError& e, std::vector<std::string> names) {
  std::string msg = e.message();
  if (e.expected()) msg += "\n  expected: " + print(*e.expected(), names);
  if (e.actual()) msg += "\n  actual:   " + print(*e.actual(), names);
  return msg;
}

/// Translate a failed kernel judgement about `subject` into a diagnostic.
template <class A>
A unwrap(const CheckResult<A>& r, const Source& src, const SurfaceTerm& subject,
         const Term& core, const std::vector<std::string>& scope) {
  switch (r.status()) {
    case Status::ok: return r.value();
    case Status::type_error: {
      const TypeError& e = r.type_error();
      std::vector<std::string> names = scope;
      const Span span = locate(subject, core, e.path(), names);
      fail(src, DiagKind::type, render_type_error(e, names), span);
    }
    case Status::out_of_fuel:
      fail(src, DiagKind::fuel, "out of fuel (raise the budget with --fuel)", subject.span);
    case Status::ill_formed:
      fail(src, DiagKind::internal, "ill-formed term: " + r.message(), subject.span);
  }
  fail(src, DiagKind::internal, "unreachable", subject.span);
}

Source read_source(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(Source{path, ""}, DiagKind::parse, "cannot open file '" + path + "'", {0, 0});
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

template <class F>
auto with_parse_errors(const Source& src, F&& f) {
  try {
    return f();
  } catch (const DiagnosticError& e) {
    throw FailureError({e.diagnostic(), src});
  }
}

/// An expression given on the command line, parsed and resolved.
struct Expr {
  const Source* source;
  SurfaceTerm surface;
  Term core;
};

Expr load_expr(const Source& src, const DefTable& defs) {
  return with_parse_errors(src, [&] {
    SurfaceTerm s = parse_term(src.text);
    Term t = resolve(s, {}, defs);
    return Expr{&src, std::move(s), std::move(t)};
  });
}

struct Prelude {
  std::optional<Source> source;
  std::vector<Definition> file;
  DefTable defs;
};

void load_prelude(Prelude& p, const std::string& path) {
  if (path.empty()) return;
  p.source = read_source(path);
  with_parse_errors(*p.source, [&] {
    p.file = parse_file(p.source->text);
    resolve_file(p.file, p.defs);
    return 0;
  });
}

void require_type(const Session& s, const Expr& ty) {
  unwrap(wf_ty(Context{}, ty.core, s.fuel()), *ty.source, ty.surface, ty.core, {});
}

void require_check(const Session& s, const Expr& e, const Term& ty) {
  unwrap(check(Context{}, e.core, ty, s.fuel()), *e.source, e.surface, e.core, {});
}

// The declared type as written, on one line.
std::string source_text(const Source& src, Span span) {
  std::string out;
  for (std::size_t i = span.start; i < span.end && i < src.text.size(); ++i) {
    const char c = src.text[i];
    const bool space = c == ' ' || c == '\n' || c == '\t' || c == '\r';
    if (!space) out += c;
    else if (!out.empty() && out.back() != ' ') out += ' ';
  }
  return out;
}

int cmd_check_file(const Session& s, const std::string& path) {
  const Source src = read_source(path);
  std::vector<Definition> file;
  DefTable defs;
  std::vector<ResolvedDefinition> resolved;
  with_parse_errors(src, [&] {
    file = parse_file(src.text);
    resolved = resolve_file(file, defs);
    return 0;
  });
  std::string report;
  for (const ResolvedDefinition& d : resolved) {
    unwrap(wf_ty(Context{}, d.type, s.fuel()), src, d.source->type, d.type, {});
    unwrap(check(Context{}, d.body, d.type, s.fuel()), src, d.source->body, d.body, {});
    if (!report.empty()) report += '\n';
    report += d.source->name + " : " + source_text(src, d.source->type.span);
  }
  if (report.empty()) report = "no definitions";
  return s.success(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type checker for a dependent type theory with Pi, Sigma, Nat, Id, Empty and Type",
               "mltt"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t fuel = kDefaultFuel;
  bool json = false;
  app.add_option("--fuel", fuel, "Step budget per judgement")->capture_default_str();
  app.add_flag("--json", json, "Machine-readable output and diagnostics");

  std::string file, expr, type, defs_path;
  std::vector<std::string> exprs;

  CLI::App* check_cmd = app.add_subcommand("check", "Check a file, or an expression against a type");
  check_cmd->add_option("file", file, "File of definitions");
  check_cmd->add_option("-e,--expr", expr, "Expression");
  check_cmd->add_option("-t,--type", type, "Type to check against");
  check_cmd->add_option("--defs", defs_path, "Definitions available to the expression");

  CLI::App* infer_cmd = app.add_subcommand("infer", "Infer the type of an expression");
  infer_cmd->add_option("-e,--expr", expr, "Expression")->required();
  infer_cmd->add_option("--defs", defs_path, "Definitions available to the expression");

  CLI::App* nf_cmd = app.add_subcommand("nf", "Print the eta-long normal form of an expression");
  nf_cmd->add_option("-e,--expr", expr, "Expression")->required();
  nf_cmd->add_option("-t,--type", type, "Type to normalize at (inferred if absent)");
  nf_cmd->add_option("--defs", defs_path, "Definitions available to the expression");

  CLI::App* conv_cmd = app.add_subcommand("conv", "Decide conversion of two expressions at a type");
  conv_cmd->add_option("-e,--expr", exprs, "Expressions to compare")->required()->expected(2);
  conv_cmd->add_option("-t,--type", type, "Type to compare at")->required();
  conv_cmd->add_option("--defs", defs_path, "Definitions available to the expressions");

  std::vector<std::string> argv_store{"mltt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mltt: " << e.what() << '\n';
    return 2;
  }

  const Session session(out, err, json, fuel);
  try {
    Prelude prelude;
    load_prelude(prelude, defs_path);
    const Source expr_src{"<expr>", expr};
    const Source type_src{"<type>", type};

    if (check_cmd->parsed()) {
      if (!file.empty()) return cmd_check_file(session, file);
      if (expr.empty() || type.empty()) {
        err << "mltt check: give a FILE, or both -e EXPR and -t TYPE\n";
        return 2;
      }
      const Expr ty = load_expr(type_src, prelude.defs);
      const Expr e = load_expr(expr_src, prelude.defs);
      require_type(session, ty);
      require_check(session, e, ty.core);
      return session.success("ok");
    }

    if (infer_cmd->parsed()) {
      const Expr e = load_expr(expr_src, prelude.defs);
      const Term ty = unwrap(infer(Context{}, e.core, session.fuel()), expr_src, e.surface, e.core, {});
      return session.success(print(ty));
    }

    if (nf_cmd->parsed()) {
      const Expr e = load_expr(expr_src, prelude.defs);
      std::optional<Term> at;
      if (!type.empty()) {
        const Expr ty = load_expr(type_src, prelude.defs);
        require_type(session, ty);
        require_check(session, e, ty.core);
        at = ty.core;
      } else {
        at = unwrap(infer(Context{}, e.core, session.fuel()), expr_src, e.surface, e.core, {});
      }
      const Term normal = unwrap(nf_tm(Context{}, e.core, *at, session.fuel() * kOracleFuelFactor),
                                 expr_src, e.surface, e.core, {});
      return session.success(print(normal));
    }

    if (conv_cmd->parsed()) {
      const Source lhs_src{"<expr 1>", exprs.at(0)};
      const Source rhs_src{"<expr 2>", exprs.at(1)};
      const Expr ty = load_expr(type_src, prelude.defs);
      const Expr lhs = load_expr(lhs_src, prelude.defs);
      const Expr rhs = load_expr(rhs_src, prelude.defs);
      require_type(session, ty);
      require_check(session, lhs, ty.core);
      require_check(session, rhs, ty.core);
      const CheckResult<Unit> r = conv_tm(Context{}, lhs.core, rhs.core, ty.core, session.fuel());
      if (r.status() == Status::type_error) {
        fail(rhs_src, DiagKind::type,
             "not convertible: " + render_type_error(r.type_error(), {}), rhs.surface.span);
      }
      unwrap(r, rhs_src, rhs.surface, rhs.core, {});
      return session.success("convertible");
    }
  } catch (const FailureError& f) {
    return session.emit(f.failure());
  }
  return 2;
}

}  // namespace mltt::frontend
