#include "mltt/typing.hpp"

#include <string>

#include "mltt/conversion.hpp"
#include "mltt/reduction.hpp"

namespace mltt {

namespace {

// Run a premise about child `k` of the current subject, recording the
// position in any type error it raises.
template <class F>
decltype(auto) at(std::uint8_t k, F&& premise) {
  try {
    return premise();
  } catch (TypeError& e) {
    e.push_parent(k);
    throw;
  }
}

TypeError expected_former(ErrorKind kind, std::string_view former, const Term& actual) {
  return TypeError(kind,
                   "expected a " + std::string(former) + " type, got " +
                       std::string(tag_name(actual.tag())),
                   std::nullopt, actual);
}

}  // namespace

void check_ctx(const Context& ctx, Fuel& fuel) {
  Context prefix;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const Term& entry = ctx.entries()[i];
    try {
      wf_ty(prefix, entry, fuel);
    } catch (const TypeError& e) {
      // The path starts with the entry's position in the context.
      TypeError located(e.kind(), "context entry " + std::to_string(i) + ": " + e.message(),
                        e.expected(), e.actual());
      for (auto k = e.path().rbegin(); k != e.path().rend(); ++k) located.push_parent(*k);
      located.push_parent(static_cast<std::uint8_t>(i));
      throw located;
    }
    prefix = prefix.extend(entry);
  }
}

void wf_ty(const Context& ctx, const Term& ty, Fuel& fuel) {
  fuel.burn();
  switch (ty.tag()) {
    case Tag::Univ:
    case Tag::Nat:
    case Tag::Empty: return;
    case Tag::Pi:
    case Tag::Sigma:
      at(0, [&] { wf_ty(ctx, ty.dom(), fuel); });
      at(1, [&] { wf_ty(ctx.extend(ty.dom()), ty.cod(), fuel); });
      return;
    case Tag::Id:
      at(0, [&] { wf_ty(ctx, ty.child(0), fuel); });
      at(1, [&] { check(ctx, ty.child(1), ty.child(0), fuel); });
      at(2, [&] { check(ctx, ty.child(2), ty.child(0), fuel); });
      return;
    default: break;
  }
  // Anything else is a type only as an element of the universe. Large types
  // are always headed by a type former, so nothing is lost here.
  const Term inferred = infer(ctx, ty, fuel);
  try {
    conv_ty(ctx, inferred, Term::univ(), fuel);
  } catch (const TypeError&) {
    throw TypeError(ErrorKind::not_a_type, "expected a type, got a term", Term::univ(), inferred);
  }
}

Term infer(const Context& ctx, const Term& t, Fuel& fuel) {
  fuel.burn();
  const Term univ = Term::univ();
  switch (t.tag()) {
    case Tag::Var: return ctx_lookup(ctx, t.index());

    case Tag::Univ:
      throw TypeError(ErrorKind::universe_has_no_type, "Type is not an element of any type");

    case Tag::Nat:
    case Tag::Empty: return univ;

    case Tag::Pi:
    case Tag::Sigma:
      at(0, [&] { check(ctx, t.dom(), univ, fuel); });
      at(1, [&] { check(ctx.extend(t.dom()), t.cod(), univ, fuel); });
      return univ;

    case Tag::Id:
      at(0, [&] { check(ctx, t.child(0), univ, fuel); });
      at(1, [&] { check(ctx, t.child(1), t.child(0), fuel); });
      at(2, [&] { check(ctx, t.child(2), t.child(0), fuel); });
      return univ;

    case Tag::Lam: {
      at(0, [&] { wf_ty(ctx, t.dom(), fuel); });
      Term body_ty = at(1, [&] { return infer(ctx.extend(t.dom()), t.body(), fuel); });
      return Term::pi(t.dom(), std::move(body_ty));
    }

    case Tag::App: {
      const Term fn_ty = at(0, [&] {
        Term ty = infer_red(ctx, t.fn(), fuel);
        if (!ty.is(Tag::Pi)) throw expected_former(ErrorKind::expected_pi, "function", ty);
        return ty;
      });
      at(1, [&] { check(ctx, t.arg(), fn_ty.dom(), fuel); });
      return subst1(fn_ty.cod(), t.arg());
    }

    case Tag::Pair: {
      const Term& dom = t.child(0);
      const Term& cod = t.child(1);
      at(0, [&] { wf_ty(ctx, dom, fuel); });
      at(1, [&] { wf_ty(ctx.extend(dom), cod, fuel); });
      at(2, [&] { check(ctx, t.child(2), dom, fuel); });
      at(3, [&] { check(ctx, t.child(3), subst1(cod, t.child(2)), fuel); });
      return Term::sigma(dom, cod);
    }

    case Tag::Fst:
    case Tag::Snd: {
      const Term pair_ty = at(0, [&] {
        Term ty = infer_red(ctx, t.child(0), fuel);
        if (!ty.is(Tag::Sigma)) throw expected_former(ErrorKind::expected_sigma, "pair", ty);
        return ty;
      });
      if (t.is(Tag::Fst)) return pair_ty.dom();
      return subst1(pair_ty.cod(), Term::fst(t.child(0)));
    }

    case Tag::Zero: return Term::nat();

    case Tag::Succ:
      at(0, [&] { check(ctx, t.child(0), Term::nat(), fuel); });
      return Term::nat();

    case Tag::NatElim: {
      const Term& motive = t.child(0);
      at(0, [&] { wf_ty(ctx.extend(Term::nat()), motive, fuel); });
      at(1, [&] { check(ctx, t.child(1), subst1(motive, Term::zero()), fuel); });
      at(2, [&] { check(ctx, t.child(2), nat_step_type(motive), fuel); });
      at(3, [&] { check(ctx, t.child(3), Term::nat(), fuel); });
      return subst1(motive, t.child(3));
    }

    case Tag::Refl:
      at(0, [&] { wf_ty(ctx, t.child(0), fuel); });
      at(1, [&] { check(ctx, t.child(1), t.child(0), fuel); });
      return Term::id(t.child(0), t.child(1), t.child(1));

    case Tag::IdElim: {
      const Term& ty = t.child(0);
      const Term& lhs = t.child(1);
      const Term& motive = t.child(2);
      const Term& rhs = t.child(4);
      const Term& proof = t.child(5);
      at(0, [&] { wf_ty(ctx, ty, fuel); });
      at(1, [&] { check(ctx, lhs, ty, fuel); });
      at(2, [&] {
        const Context inner = ctx.extend(ty).extend(id_motive_proof_type(ty, lhs));
        wf_ty(inner, motive, fuel);
      });
      at(3, [&] { check(ctx, t.child(3), subst2(motive, lhs, Term::refl(ty, lhs)), fuel); });
      at(4, [&] { check(ctx, rhs, ty, fuel); });
      at(5, [&] { check(ctx, proof, Term::id(ty, lhs, rhs), fuel); });
      return subst2(motive, rhs, proof);
    }

    case Tag::EmptyElim: {
      const Term& motive = t.child(0);
      at(0, [&] { wf_ty(ctx.extend(Term::empty()), motive, fuel); });
      at(1, [&] { check(ctx, t.child(1), Term::empty(), fuel); });
      return subst1(motive, t.child(1));
    }
  }
  throw IllFormed("unknown term constructor");
}

Term infer_red(const Context& ctx, const Term& t, Fuel& fuel) {
  return whnf(infer(ctx, t, fuel), fuel);
}

void check(const Context& ctx, const Term& t, const Term& ty, Fuel& fuel) {
  fuel.burn();
  const Term inferred = infer(ctx, t, fuel);
  try {
    conv_ty(ctx, inferred, ty, fuel);
  } catch (const TypeError& e) {
    throw TypeError(ErrorKind::type_mismatch, "type mismatch: " + e.message(), ty, inferred);
  }
}

namespace {

#ifdef MLTT_CHECK_CONTRACTS
void require(bool ok, const char* what) {
  if (!ok) throw IllFormed(std::string("precondition violated: ") + what);
}
void require_ctx(const Context& ctx, Fuel& fuel) {
  require(run_fuelled(fuel.remaining(), [&](Fuel& f) { check_ctx(ctx, f); }).ok(),
          "context is not well-formed");
}
void require_ty(const Context& ctx, const Term& ty, Fuel& fuel) {
  require(run_fuelled(fuel.remaining(), [&](Fuel& f) { wf_ty(ctx, ty, f); }).ok(),
          "type is not well-formed");
}
#else
void require_ctx(const Context&, Fuel&) {}
void require_ty(const Context&, const Term&, Fuel&) {}
#endif

}  // namespace

CheckResult<Unit> check_ctx(const Context& ctx, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) { check_ctx(ctx, f); });
}

CheckResult<Unit> wf_ty(const Context& ctx, const Term& ty, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) {
    require_ctx(ctx, f);
    wf_ty(ctx, ty, f);
  });
}

CheckResult<Term> infer(const Context& ctx, const Term& t, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) {
    require_ctx(ctx, f);
    return infer(ctx, t, f);
  });
}

CheckResult<Term> infer_red(const Context& ctx, const Term& t, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) {
    require_ctx(ctx, f);
    return infer_red(ctx, t, f);
  });
}

CheckResult<Unit> check(const Context& ctx, const Term& t, const Term& ty, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) {
    require_ctx(ctx, f);
    require_ty(ctx, ty, f);
    check(ctx, t, ty, f);
  });
}

}  // namespace mltt
