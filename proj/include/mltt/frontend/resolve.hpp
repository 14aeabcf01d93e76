#pragma once

#include <map>
#include <string>
#include <vector>

#include "mltt/frontend/surface.hpp"
#include "mltt/syntax.hpp"

namespace mltt::frontend {

/// Closed core terms for earlier definitions, inlined on reference.
using DefTable = std::map<std::string, Term, std::less<>>;

/// Names become de Bruijn indices by innermost-first lookup in `scope`
/// (innermost last); otherwise a definition is inlined. The binder name "_"
/// is never found. Throws DiagnosticError on unbound names.
Term resolve(const SurfaceTerm& s, const std::vector<std::string>& scope, const DefTable& defs);

struct ResolvedDefinition {
  const Definition* source;
  Term type;
  Term body;
};

/// Resolve a whole file in order, each body seeing only earlier definitions.
/// Rejects duplicate names. `defs` receives every resolved body.
std::vector<ResolvedDefinition> resolve_file(const std::vector<Definition>& file, DefTable& defs);

/// Pack every resolved definition into one closed term, a right-nested tuple
/// `pair(T1, _. rest, b1, ...)` terminated by zero. It checks exactly when every
/// definition's type is well-formed and its body checks against it.
Term inline_file(const std::vector<ResolvedDefinition>& defs);

/// Follow a core child path down the surface tree as far as the two stay
/// aligned, collecting the binder names crossed. Where the surface tree stops
/// (at an inlined reference), the remaining binders get placeholder names.
/// Returns the span of the deepest aligned node.
Span locate(const SurfaceTerm& root, const Term& core, const std::vector<std::uint8_t>& path,
            std::vector<std::string>& names);

}  // namespace mltt::frontend
