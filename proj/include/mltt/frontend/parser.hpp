#pragma once

// Surface grammar:
//
//   term ::= ident | Type | Nat | Empty | zero | succ term
//          | (x : term) -> term | term -> term
//          | (x : term) ** term | term ** term
//          | \(x : term) => term | term term
//          | pair(A, x. B, a, b) | fst term | snd term
//          | natrec(x. P, hz, hs, n)
//          | Id A a b | refl A a
//          | idrec(A, a, y e. P, hr, b, p)
//          | exfalso(x. P, e)
//          | ( term )
//   file ::= { def ident : term := term }
//
// Application binds tightest and associates left; ** binds tighter than ->;
// both associate right.
// The arguments of the prefix forms (succ, fst, snd, Id, refl) are atoms.
// "--" starts a comment running to the end of the line.

#include <string_view>
#include <vector>

#include "mltt/frontend/surface.hpp"

namespace mltt::frontend {

/// Parse a single term spanning the whole input. Throws DiagnosticError.
SurfaceTerm parse_term(std::string_view text);

/// Parse a sequence of definitions. Throws DiagnosticError.
std::vector<Definition> parse_file(std::string_view text);

}  // namespace mltt::frontend
