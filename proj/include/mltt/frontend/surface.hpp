#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt::frontend {

/// Half-open byte range into the source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
};

/// Named mirror of Term. `tag == Tag::Var` is a name reference; every other
/// node has exactly the children of the core constructor with the same tag,
/// in the same order, so a child path into a core term is also a path here.
struct SurfaceTerm {
  Tag tag = Tag::Var;
  std::string name;                  // Var only
  std::vector<std::string> binders;  // names bound by this node, outermost first
  std::vector<SurfaceTerm> children;
  Span span;
};

struct Definition {
  std::string name;
  SurfaceTerm type;
  SurfaceTerm body;
  Span span;       // whole definition
  Span name_span;
};

enum class DiagKind { parse, type, fuel, internal };

std::string_view diag_kind_name(DiagKind kind);
int exit_code(DiagKind kind);

struct Diagnostic {
  enum class Severity { error, note };
  Severity severity = Severity::error;
  DiagKind kind = DiagKind::parse;
  std::string message;
  Span span;
};

/// Thrown by the parser and the resolver.
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

bool is_keyword(std::string_view word);

}  // namespace mltt::frontend
