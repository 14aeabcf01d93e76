#pragma once

// Typed algorithmic conversion.
//
// conv_ty compares types, conv_tm compares terms at a type given as input
// (which is what lets it apply eta at Pi and Sigma), and conv_ne compares
// neutrals while synthesizing their common type from the head variable.
// All three share one fuel budget with weak-head reduction.

#include <cstdint>
#include <vector>

#include "mltt/result.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

void conv_ty(const Context& ctx, const Term& a, const Term& b, Fuel& fuel);
void conv_tm(const Context& ctx, const Term& t, const Term& u, const Term& ty, Fuel& fuel);
Term conv_ne(const Context& ctx, const Term& n, const Term& m, Fuel& fuel);

CheckResult<Unit> conv_ty(const Context& ctx, const Term& a, const Term& b,
                          std::uint64_t fuel = kDefaultFuel);
CheckResult<Unit> conv_tm(const Context& ctx, const Term& t, const Term& u, const Term& ty,
                          std::uint64_t fuel = kDefaultFuel);
CheckResult<Term> conv_ne(const Context& ctx, const Term& n, const Term& m,
                          std::uint64_t fuel = kDefaultFuel);

/// Test hook: number of App(_, Var 0) wrappers conversion has built since
/// the last reset. Only the Pi eta rule of conv_tm builds them.
std::uint64_t eta_wrappers_built();
/// The terms that were wrapped, unlifted, in the order they were wrapped.
const std::vector<Term>& eta_wrapped_terms();
void reset_eta_wrappers_built();

}  // namespace mltt
