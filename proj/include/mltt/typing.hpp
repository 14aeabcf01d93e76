#pragma once

// Bidirectional type inference and checking.
//
// Every judgement distinguishes inputs (assumed well-formed by the caller and
// never re-checked), the subject (validated here), and outputs (guaranteed
// well-formed on success). For infer(ctx, t) the context is an input, t the
// subject and the returned type the output; for check(ctx, t, ty) both ctx and
// ty are inputs.
//
// Building with MLTT_CHECK_CONTRACTS makes the fuel-count entry points verify
// their inputs first and report violations as IllFormed.

#include <cstdint>

#include "mltt/result.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

void check_ctx(const Context& ctx, Fuel& fuel);
void wf_ty(const Context& ctx, const Term& ty, Fuel& fuel);
Term infer(const Context& ctx, const Term& t, Fuel& fuel);
/// Inference followed by weak-head reduction of the inferred type.
Term infer_red(const Context& ctx, const Term& t, Fuel& fuel);
void check(const Context& ctx, const Term& t, const Term& ty, Fuel& fuel);

CheckResult<Unit> check_ctx(const Context& ctx, std::uint64_t fuel = kDefaultFuel);
CheckResult<Unit> wf_ty(const Context& ctx, const Term& ty, std::uint64_t fuel = kDefaultFuel);
CheckResult<Term> infer(const Context& ctx, const Term& t, std::uint64_t fuel = kDefaultFuel);
CheckResult<Term> infer_red(const Context& ctx, const Term& t, std::uint64_t fuel = kDefaultFuel);
CheckResult<Unit> check(const Context& ctx, const Term& t, const Term& ty,
                        std::uint64_t fuel = kDefaultFuel);

}  // namespace mltt
