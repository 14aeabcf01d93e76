#pragma once

#include <string>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt::frontend {

/// Render `t` in surface syntax. `names` gives the free variables, innermost
/// last. Binders get fresh names that shadow nothing, so the output parses and
/// resolves back to an alpha-equivalent term. Shadowed, anonymous or keyword
/// entries in `names` are renamed first.
std::string print(const Term& t, const std::vector<std::string>& names = {});

}  // namespace mltt::frontend
