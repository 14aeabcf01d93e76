#pragma once

// Deep, type-directed normalization to eta-long normal form.
//
// This is the reference oracle for conversion: two terms are convertible at a
// type exactly when their eta-long normal forms at that type are
// alpha-equivalent. It shares syntax and whnf with the kernel and nothing
// else, so a bug in the conversion checker does not hide itself here.

#include <cstdint>

#include "mltt/result.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

/// Deep normalization needs more steps than checking; oracle budgets default
/// to this multiple of the kernel's.
inline constexpr std::uint64_t kOracleFuelFactor = 100;
inline constexpr std::uint64_t kDefaultOracleFuel = kDefaultFuel * kOracleFuelFactor;

Term nf_ty(const Context& ctx, const Term& ty, Fuel& fuel);
Term nf_tm(const Context& ctx, const Term& t, const Term& ty, Fuel& fuel);

CheckResult<Term> nf_ty(const Context& ctx, const Term& ty, std::uint64_t fuel = kDefaultOracleFuel);
CheckResult<Term> nf_tm(const Context& ctx, const Term& t, const Term& ty,
                        std::uint64_t fuel = kDefaultOracleFuel);
CheckResult<bool> oracle_conv(const Context& ctx, const Term& t, const Term& u, const Term& ty,
                              std::uint64_t fuel = kDefaultOracleFuel);

}  // namespace mltt
