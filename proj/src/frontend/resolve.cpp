#include "mltt/frontend/resolve.hpp"

#include <set>

namespace mltt::frontend {

namespace {

Term resolve_in(const SurfaceTerm& s, std::vector<std::string>& scope, const DefTable& defs) {
  if (s.tag == Tag::Var) {
    if (s.name != "_") {
      for (std::size_t k = scope.size(); k-- > 0;)
        if (scope[k] == s.name) return Term::var(static_cast<std::uint32_t>(scope.size() - 1 - k));
      if (auto it = defs.find(s.name); it != defs.end()) return it->second;
    }
    throw DiagnosticError({Diagnostic::Severity::error, DiagKind::type,
                           "unbound identifier '" + s.name + "'", s.span});
  }
  std::vector<Term> kids;
  kids.reserve(s.children.size());
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    const std::uint32_t k = binders_at(s.tag, i);
    for (std::uint32_t b = 0; b < k; ++b) scope.push_back(s.binders.at(b));
    kids.push_back(resolve_in(s.children[i], scope, defs));
    scope.resize(scope.size() - k);
  }
  return Term::make(s.tag, kids);
}

}  // namespace

Term resolve(const SurfaceTerm& s, const std::vector<std::string>& scope, const DefTable& defs) {
  std::vector<std::string> names = scope;
  return resolve_in(s, names, defs);
}

std::vector<ResolvedDefinition> resolve_file(const std::vector<Definition>& file, DefTable& defs) {
  std::vector<ResolvedDefinition> out;
  std::set<std::string, std::less<>> seen;
  for (const Definition& d : file) {
    if (!seen.insert(d.name).second)
      throw DiagnosticError({Diagnostic::Severity::error, DiagKind::type,
                             "duplicate definition '" + d.name + "'", d.name_span});
    Term ty = resolve(d.type, {}, defs);
    Term body = resolve(d.body, {}, defs);
    defs.insert_or_assign(d.name, body);
    out.push_back({&d, std::move(ty), std::move(body)});
  }
  return out;
}

Term inline_file(const std::vector<ResolvedDefinition>& defs) {
  Term packed = Term::zero();
  Term packed_ty = Term::nat();
  for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
    // Everything is closed, so the rest's type needs no weakening.
    packed = Term::pair(it->type, packed_ty, it->body, packed);
    packed_ty = Term::sigma(it->type, packed_ty);
  }
  return packed;
}

Span locate(const SurfaceTerm& root, const Term& core, const std::vector<std::uint8_t>& path,
            std::vector<std::string>& names) {
  const SurfaceTerm* s = &root;
  Term t = core;
  Span span = root.span;
  for (std::uint8_t k : path) {
    if (k >= t.arity()) break;
    const std::uint32_t nbind = binders_at(t.tag(), k);
    const bool aligned = s != nullptr && s->tag == t.tag() && k < s->children.size();
    for (std::uint32_t b = 0; b < nbind; ++b) {
      if (aligned) names.push_back(s->binders.at(b));
      else names.push_back("_");
    }
    s = aligned ? &s->children[k] : nullptr;
    if (s != nullptr) span = s->span;
    t = t.child(k);
  }
  return span;
}

}  // namespace mltt::frontend
