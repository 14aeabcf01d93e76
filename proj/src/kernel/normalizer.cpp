#include "mltt/normalizer.hpp"

#include <string>
#include <utility>

#include "mltt/reduction.hpp"

namespace mltt {

namespace {

struct Reified {
  Term normal;
  Term type;  // the neutral's type, not normalized
};

Reified nf_ne(const Context& ctx, const Term& n, Fuel& fuel);

Term nf_small_type(const Context& ctx, const Term& a, Fuel& fuel) {
  const Term univ = Term::univ();
  switch (a.tag()) {
    case Tag::Nat:
    case Tag::Empty: return a;
    case Tag::Pi:
    case Tag::Sigma: {
      Term dom = nf_tm(ctx, a.dom(), univ, fuel);
      Term cod = nf_tm(ctx.extend(a.dom()), a.cod(), univ, fuel);
      return Term::make(a.tag(), std::array{dom, cod});
    }
    case Tag::Id:
      return Term::id(nf_tm(ctx, a.child(0), univ, fuel), nf_tm(ctx, a.child(1), a.child(0), fuel),
                      nf_tm(ctx, a.child(2), a.child(0), fuel));
    default:
      if (is_neutral(a)) return nf_ne(ctx, a, fuel).normal;
      throw IllFormed(std::string(tag_name(a.tag())) + " is not an element of Type");
  }
}

Reified nf_ne(const Context& ctx, const Term& n, Fuel& fuel) {
  fuel.burn();
  switch (n.tag()) {
    case Tag::Var: return {n, ctx_lookup(ctx, n.index())};

    case Tag::App: {
      auto [fn, fn_ty] = nf_ne(ctx, n.fn(), fuel);
      const Term pi = whnf(fn_ty, fuel);
      if (!pi.is(Tag::Pi)) throw IllFormed("applied neutral does not have a function type");
      return {Term::app(fn, nf_tm(ctx, n.arg(), pi.dom(), fuel)), subst1(pi.cod(), n.arg())};
    }

    case Tag::Fst:
    case Tag::Snd: {
      auto [p, p_ty] = nf_ne(ctx, n.child(0), fuel);
      const Term sigma = whnf(p_ty, fuel);
      if (!sigma.is(Tag::Sigma)) throw IllFormed("projected neutral does not have a pair type");
      if (n.is(Tag::Fst)) return {Term::fst(p), sigma.dom()};
      return {Term::snd(p), subst1(sigma.cod(), Term::fst(n.child(0)))};
    }

    case Tag::NatElim: {
      const Term& motive = n.child(0);
      Term scrut = nf_ne(ctx, n.child(3), fuel).normal;
      Term motive_nf = nf_ty(ctx.extend(Term::nat()), motive, fuel);
      Term base = nf_tm(ctx, n.child(1), subst1(motive, Term::zero()), fuel);
      Term step = nf_tm(ctx, n.child(2), nat_step_type(motive), fuel);
      return {Term::nat_elim(motive_nf, base, step, scrut), subst1(motive, n.child(3))};
    }

    case Tag::IdElim: {
      const Term& ty = n.child(0);
      const Term& lhs = n.child(1);
      const Term& motive = n.child(2);
      Term proof = nf_ne(ctx, n.child(5), fuel).normal;
      Term ty_nf = nf_ty(ctx, ty, fuel);
      Term lhs_nf = nf_tm(ctx, lhs, ty, fuel);
      const Context inner = ctx.extend(ty).extend(id_motive_proof_type(ty, lhs));
      Term motive_nf = nf_ty(inner, motive, fuel);
      Term base = nf_tm(ctx, n.child(3), subst2(motive, lhs, Term::refl(ty, lhs)), fuel);
      Term rhs_nf = nf_tm(ctx, n.child(4), ty, fuel);
      return {Term::id_elim(ty_nf, lhs_nf, motive_nf, base, rhs_nf, proof),
              subst2(motive, n.child(4), n.child(5))};
    }

    case Tag::EmptyElim: {
      const Term& motive = n.child(0);
      Term scrut = nf_ne(ctx, n.child(1), fuel).normal;
      Term motive_nf = nf_ty(ctx.extend(Term::empty()), motive, fuel);
      return {Term::empty_elim(motive_nf, scrut), subst1(motive, n.child(1))};
    }

    default: throw IllFormed(std::string(tag_name(n.tag())) + " is not a neutral term");
  }
}

}  // namespace

Term nf_ty(const Context& ctx, const Term& ty, Fuel& fuel) {
  fuel.burn();
  const Term a = whnf(ty, fuel);
  switch (a.tag()) {
    case Tag::Univ:
    case Tag::Nat:
    case Tag::Empty: return a;
    case Tag::Pi:
    case Tag::Sigma: {
      Term dom = nf_ty(ctx, a.dom(), fuel);
      Term cod = nf_ty(ctx.extend(a.dom()), a.cod(), fuel);
      return Term::make(a.tag(), std::array{dom, cod});
    }
    case Tag::Id:
      return Term::id(nf_ty(ctx, a.child(0), fuel), nf_tm(ctx, a.child(1), a.child(0), fuel),
                      nf_tm(ctx, a.child(2), a.child(0), fuel));
    default:
      if (is_neutral(a)) return nf_ne(ctx, a, fuel).normal;
      throw IllFormed(std::string(tag_name(a.tag())) + " is not a type");
  }
}

Term nf_tm(const Context& ctx, const Term& t, const Term& ty, Fuel& fuel) {
  fuel.burn();
  const Term type = whnf(ty, fuel);
  switch (type.tag()) {
    case Tag::Pi: {
      const Term body = Term::app(lift(t, 1), Term::var(0));
      return Term::lam(nf_ty(ctx, type.dom(), fuel),
                       nf_tm(ctx.extend(type.dom()), body, type.cod(), fuel));
    }
    case Tag::Sigma: {
      const Term first = Term::fst(t);
      return Term::pair(nf_ty(ctx, type.dom(), fuel),
                        nf_ty(ctx.extend(type.dom()), type.cod(), fuel),
                        nf_tm(ctx, first, type.dom(), fuel),
                        nf_tm(ctx, Term::snd(t), subst1(type.cod(), first), fuel));
    }
    case Tag::Nat: {
      // Peel successors in a loop, then normalize whatever core remains.
      std::uint32_t succs = 0;
      Term core = whnf(t, fuel);
      while (core.is(Tag::Succ)) {
        fuel.burn();
        ++succs;
        core = whnf(core.child(0), fuel);
      }
      Term out = core.is(Tag::Zero) ? core : nf_ne(ctx, core, fuel).normal;
      for (std::uint32_t i = 0; i < succs; ++i) out = Term::succ(out);
      return out;
    }
    case Tag::Univ: return nf_small_type(ctx, whnf(t, fuel), fuel);
    case Tag::Id: {
      const Term v = whnf(t, fuel);
      if (v.is(Tag::Refl))
        return Term::refl(nf_ty(ctx, v.child(0), fuel), nf_tm(ctx, v.child(1), v.child(0), fuel));
      return nf_ne(ctx, v, fuel).normal;
    }
    default: {
      if (!type.is(Tag::Empty) && !is_neutral(type))
        throw IllFormed(std::string(tag_name(type.tag())) + " is not a type");
      return nf_ne(ctx, whnf(t, fuel), fuel).normal;
    }
  }
}

CheckResult<Term> nf_ty(const Context& ctx, const Term& ty, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) { return nf_ty(ctx, ty, f); });
}

CheckResult<Term> nf_tm(const Context& ctx, const Term& t, const Term& ty, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) { return nf_tm(ctx, t, ty, f); });
}

CheckResult<bool> oracle_conv(const Context& ctx, const Term& t, const Term& u, const Term& ty,
                              std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) {
    const Term a = nf_tm(ctx, t, ty, f);
    const Term b = nf_tm(ctx, u, ty, f);
    return alpha_eq(a, b);
  });
}

}  // namespace mltt
