#include "mltt/conversion.hpp"

#include <string>

#include "mltt/reduction.hpp"

namespace mltt {

namespace {

thread_local std::uint64_t g_eta_wrappers = 0;
thread_local std::vector<Term> g_eta_wrapped;

TypeError head_mismatch(const Term& a, const Term& b) {
  return TypeError(ErrorKind::head_mismatch,
                   "head mismatch: " + std::string(tag_name(a.tag())) + " vs " +
                       std::string(tag_name(b.tag())),
                   a, b);
}

TypeError neutral_mismatch(const Term& n, const Term& m, std::string_view why) {
  return TypeError(ErrorKind::neutral_mismatch, "neutral terms differ: " + std::string(why), n, m);
}

// Both sides already in whnf and not both neutral; compare as elements of
// the universe.
void conv_small_types(const Context& ctx, const Term& a, const Term& b, Fuel& fuel) {
  const Term univ = Term::univ();
  if (a.tag() != b.tag()) throw head_mismatch(a, b);
  switch (a.tag()) {
    case Tag::Nat:
    case Tag::Empty: return;
    case Tag::Pi:
    case Tag::Sigma:
      conv_tm(ctx, a.dom(), b.dom(), univ, fuel);
      conv_tm(ctx.extend(a.dom()), a.cod(), b.cod(), univ, fuel);
      return;
    case Tag::Id:
      conv_tm(ctx, a.child(0), b.child(0), univ, fuel);
      conv_tm(ctx, a.child(1), b.child(1), a.child(0), fuel);
      conv_tm(ctx, a.child(2), b.child(2), a.child(0), fuel);
      return;
    default: throw head_mismatch(a, b);
  }
}

}  // namespace

void conv_ty(const Context& ctx, const Term& a, const Term& b, Fuel& fuel) {
  fuel.burn();
  const Term x = whnf(a, fuel);
  const Term y = whnf(b, fuel);
  if (is_neutral(x) && is_neutral(y)) {
    conv_ne(ctx, x, y, fuel);
    return;
  }
  if (x.tag() != y.tag() || !is_type_head(x.tag())) throw head_mismatch(x, y);
  switch (x.tag()) {
    case Tag::Pi:
    case Tag::Sigma:
      conv_ty(ctx, x.dom(), y.dom(), fuel);
      conv_ty(ctx.extend(x.dom()), x.cod(), y.cod(), fuel);
      return;
    case Tag::Id:
      conv_ty(ctx, x.child(0), y.child(0), fuel);
      conv_tm(ctx, x.child(1), y.child(1), x.child(0), fuel);
      conv_tm(ctx, x.child(2), y.child(2), x.child(0), fuel);
      return;
    default: return;  // Univ, Nat, Empty
  }
}

void conv_tm(const Context& ctx, const Term& t, const Term& u, const Term& ty, Fuel& fuel) {
  fuel.burn();
  const Term type = whnf(ty, fuel);

  // Types with an eta rule: expand both sides unconditionally.
  if (type.is(Tag::Pi)) {
    g_eta_wrappers += 2;
    g_eta_wrapped.push_back(t);
    g_eta_wrapped.push_back(u);
    const Term x = Term::var(0);
    conv_tm(ctx.extend(type.dom()), Term::app(lift(t, 1), x), Term::app(lift(u, 1), x),
            type.cod(), fuel);
    return;
  }
  if (type.is(Tag::Sigma)) {
    const Term t1 = Term::fst(t);
    conv_tm(ctx, t1, Term::fst(u), type.dom(), fuel);
    conv_tm(ctx, Term::snd(t), Term::snd(u), subst1(type.cod(), t1), fuel);
    return;
  }
  if (!is_type_head(type.tag()) && !is_neutral(type))
    throw IllFormed("conversion at " + std::string(tag_name(type.tag())) + ", which is not a type");

  Term a = whnf(t, fuel);
  Term b = whnf(u, fuel);
  if (type.is(Tag::Nat)) {
    // Strip matching successors iteratively; numerals can be long.
    while (a.is(Tag::Succ) && b.is(Tag::Succ)) {
      fuel.burn();
      a = whnf(a.child(0), fuel);
      b = whnf(b.child(0), fuel);
    }
  }
  if (is_neutral(a) && is_neutral(b)) {
    conv_ne(ctx, a, b, fuel);
    return;
  }
  switch (type.tag()) {
    case Tag::Nat:
      if (a.is(Tag::Zero) && b.is(Tag::Zero)) return;
      throw head_mismatch(a, b);
    case Tag::Univ: conv_small_types(ctx, a, b, fuel); return;
    case Tag::Id:
      // Annotations are not compared: well-typedness at this Id type already
      // forces them to be convertible.
      if (a.is(Tag::Refl) && b.is(Tag::Refl)) return;
      throw head_mismatch(a, b);
    default:
      // Empty or a neutral type: only neutral inhabitants, compared above.
      throw head_mismatch(a, b);
  }
}

Term conv_ne(const Context& ctx, const Term& n, const Term& m, Fuel& fuel) {
  fuel.burn();
  if (n.tag() != m.tag()) throw neutral_mismatch(n, m, "different eliminators");
  switch (n.tag()) {
    case Tag::Var:
      if (n.index() != m.index()) throw neutral_mismatch(n, m, "stuck on different variables");
      return ctx_lookup(ctx, n.index());

    case Tag::App: {
      const Term fn_ty = whnf(conv_ne(ctx, n.fn(), m.fn(), fuel), fuel);
      if (!fn_ty.is(Tag::Pi)) throw IllFormed("applied neutral does not have a function type");
      conv_tm(ctx, n.arg(), m.arg(), fn_ty.dom(), fuel);
      return subst1(fn_ty.cod(), n.arg());
    }

    case Tag::Fst:
    case Tag::Snd: {
      const Term pair_ty = whnf(conv_ne(ctx, n.child(0), m.child(0), fuel), fuel);
      if (!pair_ty.is(Tag::Sigma)) throw IllFormed("projected neutral does not have a pair type");
      if (n.is(Tag::Fst)) return pair_ty.dom();
      return subst1(pair_ty.cod(), Term::fst(n.child(0)));
    }

    case Tag::NatElim: {
      const Term& motive = n.child(0);
      conv_ne(ctx, n.child(3), m.child(3), fuel);
      conv_ty(ctx.extend(Term::nat()), motive, m.child(0), fuel);
      conv_tm(ctx, n.child(1), m.child(1), subst1(motive, Term::zero()), fuel);
      conv_tm(ctx, n.child(2), m.child(2), nat_step_type(motive), fuel);
      return subst1(motive, n.child(3));
    }

    case Tag::IdElim: {
      const Term& ty = n.child(0);
      const Term& lhs = n.child(1);
      const Term& motive = n.child(2);
      conv_ne(ctx, n.child(5), m.child(5), fuel);
      conv_ty(ctx.extend(ty).extend(id_motive_proof_type(ty, lhs)), motive, m.child(2), fuel);
      conv_tm(ctx, n.child(3), m.child(3), subst2(motive, lhs, Term::refl(ty, lhs)), fuel);
      return subst2(motive, n.child(4), n.child(5));
    }

    case Tag::EmptyElim: {
      const Term& motive = n.child(0);
      conv_ne(ctx, n.child(1), m.child(1), fuel);
      conv_ty(ctx.extend(Term::empty()), motive, m.child(0), fuel);
      return subst1(motive, n.child(1));
    }

    default: throw IllFormed(std::string(tag_name(n.tag())) + " is not a neutral term");
  }
}

CheckResult<Unit> conv_ty(const Context& ctx, const Term& a, const Term& b, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) { conv_ty(ctx, a, b, f); });
}

CheckResult<Unit> conv_tm(const Context& ctx, const Term& t, const Term& u, const Term& ty,
                          std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) { conv_tm(ctx, t, u, ty, f); });
}

CheckResult<Term> conv_ne(const Context& ctx, const Term& n, const Term& m, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) { return conv_ne(ctx, n, m, f); });
}

std::uint64_t eta_wrappers_built() { return g_eta_wrappers; }
const std::vector<Term>& eta_wrapped_terms() { return g_eta_wrapped; }
void reset_eta_wrappers_built() {
  g_eta_wrappers = 0;
  g_eta_wrapped.clear();
}

}  // namespace mltt
