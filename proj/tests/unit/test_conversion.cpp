#include <doctest.h>

#include "gen.hpp"
#include "mltt/conversion.hpp"
#include "mltt/normalizer.hpp"
#include "mltt/reduction.hpp"
#include "mltt/typing.hpp"

using namespace mltt;
using mltt::testing::Rng;
using mltt::testing::TypedGen;

namespace {

const Term nat = Term::nat();
const Term zero = Term::zero();
const Term univ = Term::univ();
Term v(std::uint32_t i) { return Term::var(i); }
Term id_nat() { return Term::lam(nat, v(0)); }
Term add(const Term& a, const Term& b) {
  return testing::programs::apply(testing::programs::add(), a, b);
}

}  // namespace

TEST_CASE("conv_ty examples") {
  CHECK(conv_ty(Context{}, nat, nat).ok());
  CHECK(conv_ty(Context{}, Term::pi(nat, nat),
                Term::pi(nat, Term::app(Term::lam(univ, v(0)), nat))).ok());
  const CheckResult<Unit> bad = conv_ty(Context{}, nat, univ);
  REQUIRE(bad.status() == Status::type_error);
  CHECK(bad.type_error().kind() == ErrorKind::head_mismatch);
  CHECK(conv_ty(Context{}, Term::id(nat, zero, zero), Term::id(nat, zero, Term::succ(zero)))
            .status() == Status::type_error);
  CHECK(conv_ty(Context{Term::pi(nat, univ)}, Term::app(v(0), zero),
                Term::app(v(0), Term::app(id_nat(), zero))).ok());
  CHECK(conv_ty(Context{Term::pi(nat, univ)}, Term::app(v(0), zero), Term::app(v(0), Term::numeral(1)))
            .status() == Status::type_error);
}

TEST_CASE("conv_tm examples") {
  const Term fn = Term::pi(nat, nat);
  CHECK(conv_tm(Context{fn}, v(0), Term::lam(nat, Term::app(v(1), v(0))), fn).ok());
  const Term sg = Term::sigma(nat, nat);
  CHECK(conv_tm(Context{sg}, v(0), Term::pair(nat, nat, Term::fst(v(0)), Term::snd(v(0))), sg).ok());
  CHECK(conv_tm(Context{}, zero, Term::succ(zero), nat).status() == Status::type_error);
  CHECK(conv_tm(Context{}, add(Term::numeral(2), Term::numeral(2)), Term::numeral(4), nat).ok());
  CHECK(conv_tm(Context{}, add(Term::numeral(2), Term::numeral(2)), Term::numeral(5), nat).status() ==
        Status::type_error);
}

TEST_CASE("conv_tm at the universe, identity types, Empty and neutral types") {
  CHECK(conv_tm(Context{}, Term::pi(nat, nat), Term::pi(nat, Term::app(Term::lam(univ, v(0)), nat)),
                univ).ok());
  CHECK(conv_tm(Context{}, nat, Term::empty(), univ).status() == Status::type_error);
  // Refl annotations are not compared.
  const Term eq = Term::id(nat, zero, zero);
  CHECK(conv_tm(Context{}, Term::refl(nat, zero), Term::refl(nat, Term::app(id_nat(), zero)), eq).ok());
  CHECK(conv_tm(Context{Term::empty()}, v(0), v(0), Term::empty()).ok());
  CHECK(conv_tm(Context{Term::empty(), Term::empty()}, v(0), v(1), Term::empty()).status() ==
        Status::type_error);
  const Context fam{Term::pi(nat, univ), Term::app(v(0), zero)};
  CHECK(conv_tm(fam, v(0), v(0), Term::app(v(1), zero)).ok());
}

TEST_CASE("conv_ne examples") {
  CHECK(conv_ne(Context{nat}, v(0), v(0)).value() == nat);
  const CheckResult<Term> diff = conv_ne(Context{nat, nat}, v(0), v(1));
  REQUIRE(diff.status() == Status::type_error);
  CHECK(diff.type_error().kind() == ErrorKind::neutral_mismatch);
  const Context fn{Term::pi(nat, nat)};
  CHECK(conv_ne(fn, Term::app(v(0), zero), Term::app(v(0), Term::app(id_nat(), zero))).value() == nat);
  CHECK(conv_ne(fn, Term::app(v(0), zero), Term::app(v(0), Term::succ(zero))).status() ==
        Status::type_error);
  // Recursors: scrutinee, motive, base and step are compared.
  const Term step = Term::lam(nat, Term::lam(nat, Term::succ(v(0))));
  const Term r1 = Term::nat_elim(nat, zero, step, v(0));
  const Term r2 = Term::nat_elim(nat, Term::app(id_nat(), zero), step, v(0));
  CHECK(conv_ne(Context{nat}, r1, r2).value() == nat);
  const Term r3 = Term::nat_elim(nat, Term::succ(zero), step, v(0));
  CHECK(conv_ne(Context{nat}, r1, r3).status() == Status::type_error);
  const Term p = Term::fst(v(0));
  CHECK(conv_ne(Context{Term::sigma(nat, nat)}, Term::snd(v(0)), Term::snd(v(0))).value() == nat);
  CHECK(conv_ne(Context{Term::sigma(nat, nat)}, p, Term::snd(v(0))).status() == Status::type_error);
}

// The neutral itself and every head prefix of its spine.
static std::vector<Term> spine_prefixes(const Term& n) {
  std::vector<Term> out{n};
  const Term* p = &n;
  while (!p->is(Tag::Var)) {
    switch (p->tag()) {
      case Tag::App:
      case Tag::Fst:
      case Tag::Snd: p = &p->child(0); break;
      case Tag::NatElim: p = &p->child(3); break;
      case Tag::IdElim: p = &p->child(5); break;
      case Tag::EmptyElim: p = &p->child(1); break;
      default: return out;
    }
    out.push_back(*p);
  }
  return out;
}

TEST_CASE("conv_ne never eta-expands the neutral it compares") {
  Rng rng(41);
  for (const Context& ctx : testing::sample_contexts()) {
    TypedGen gen(rng, ctx);
    for (int n = 0; n < 30; ++n) {
      const Term ty = gen.type(2);
      std::optional<Term> t = gen.term(ty, 3);
      if (!t) continue;
      const CheckResult<Term> w = whnf(*t);
      if (!w || !is_neutral(w.value())) continue;
      reset_eta_wrappers_built();
      CHECK(conv_ne(ctx, w.value(), w.value()).ok());
      CHECK(eta_wrapped_terms().size() == eta_wrappers_built());
      for (const Term& p : spine_prefixes(w.value()))
        for (const Term& wrapped : eta_wrapped_terms()) CHECK_FALSE(wrapped == p);
    }
  }
  // A first-order spine builds none at all.
  reset_eta_wrappers_built();
  const Term sg = Term::sigma(nat, nat);
  CHECK(conv_ne(Context{Term::pi(nat, nat)}, Term::app(v(0), zero), Term::app(v(0), zero)).ok());
  CHECK(conv_ne(Context{sg}, Term::snd(v(0)), Term::snd(v(0))).ok());
  CHECK(conv_ne(Context{Term::empty()}, Term::empty_elim(nat, v(0)), Term::empty_elim(nat, v(0))).ok());
  CHECK(eta_wrappers_built() == 0);
  // The Pi rule of conv_tm does build them.
  reset_eta_wrappers_built();
  CHECK(conv_tm(Context{Term::pi(nat, nat)}, v(0), v(0), Term::pi(nat, nat)).ok());
  CHECK(eta_wrappers_built() == 2);
}

TEST_CASE("PER laws, stability and oracle agreement on generated terms") {
  Rng rng(42);
  int equal = 0, unequal = 0;
  for (const Context& ctx : testing::sample_contexts()) {
    TypedGen gen(rng, ctx);
    for (int n = 0; n < 40; ++n) {
      const Term ty = gen.type(2);
      std::optional<Term> t = gen.term(ty, 3);
      if (!t) continue;
      const Term u = rng.chance(0.5) ? gen.variant(*t, ty, 3) : gen.term(ty, 3).value_or(*t);
      const Term w = gen.variant(u, ty, 2);
      REQUIRE(check(ctx, u, ty).ok());
      REQUIRE(check(ctx, w, ty).ok());
      CHECK(conv_tm(ctx, *t, *t, ty).ok());
      const bool tu = conv_tm(ctx, *t, u, ty).ok();
      CHECK(conv_tm(ctx, u, *t, ty).ok() == tu);
      CHECK(conv_tm(ctx, u, w, ty).ok());
      CHECK(conv_tm(ctx, *t, w, ty).ok() == tu);
      const CheckResult<bool> oracle = oracle_conv(ctx, *t, u, ty);
      REQUIRE(oracle.ok());
      CHECK(oracle.value() == tu);
      (tu ? equal : unequal)++;
      if (tu) {
        const Term ty2 = gen.variant(ty, univ, 2);
        CHECK(conv_ty(ctx, ty, ty2).ok());
        CHECK(conv_tm(ctx, *t, u, ty2).ok());
      }
    }
  }
  CHECK(equal > 50);
  CHECK(unequal > 50);
}

TEST_CASE("neutral comparison implies conversion at non-eta types") {
  Rng rng(43);
  for (const Context& ctx : testing::sample_contexts()) {
    TypedGen gen(rng, ctx);
    for (int n = 0; n < 30; ++n) {
      const Term ty = gen.type(2);
      std::optional<Term> t = gen.term(ty, 3);
      if (!t) continue;
      const CheckResult<Term> w = whnf(*t);
      const CheckResult<Term> wty = whnf(ty);
      if (!w || !wty || !is_neutral(w.value())) continue;
      if (wty.value().is(Tag::Pi) || wty.value().is(Tag::Sigma)) continue;
      const Term u = gen.variant(*t, ty, 2);
      const CheckResult<Term> wu = whnf(u);
      if (!wu || !is_neutral(wu.value())) continue;
      const CheckResult<Term> ne = conv_ne(ctx, w.value(), wu.value());
      REQUIRE(ne.ok());
      CHECK(conv_ty(ctx, ne.value(), ty).ok());
      CHECK(conv_tm(ctx, *t, u, ne.value()).ok());
    }
  }
}
