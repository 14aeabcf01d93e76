#include <doctest.h>

#include "gen.hpp"
#include "mltt/conversion.hpp"
#include "mltt/normalizer.hpp"
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

Term nf_ok(const Context& ctx, const Term& t, const Term& ty) {
  CheckResult<Term> r = nf_tm(ctx, t, ty);
  INFO(r.message());
  REQUIRE(r.ok());
  return r.value();
}

bool is_numeral(const Term& t) {
  const Term* p = &t;
  while (p->is(Tag::Succ)) p = &p->child(0);
  return p->is(Tag::Zero);
}

}  // namespace

TEST_CASE("nf_ty examples") {
  CHECK(nf_ty(Context{}, Term::pi(nat, Term::app(Term::lam(univ, v(0)), nat))).value() ==
        Term::pi(nat, nat));
  CHECK(nf_ty(Context{}, nat).value() == nat);
  CHECK(nf_ty(Context{}, Term::id(nat, zero, Term::app(id_nat(), zero))).value() ==
        Term::id(nat, zero, zero));
  // A neutral type is normalized along its spine.
  const Context fam{Term::pi(nat, univ)};
  CHECK(nf_ty(fam, Term::app(v(0), Term::app(id_nat(), zero))).value() == Term::app(v(0), zero));
}

TEST_CASE("nf_tm examples") {
  const Term fn = Term::pi(nat, nat);
  CHECK(nf_ok(Context{fn}, v(0), fn) == Term::lam(nat, Term::app(v(1), v(0))));
  const Term prod = testing::programs::apply(testing::programs::mul(), Term::numeral(3),
                                             Term::numeral(2));
  CHECK(nf_ok(Context{}, prod, nat) == Term::numeral(3 * 2));
  CHECK(nf_ok(Context{}, zero, nat) == zero);
}

TEST_CASE("eta-long forms at Sigma, Id and the universe") {
  const Term sg = Term::sigma(nat, nat);
  CHECK(nf_ok(Context{sg}, v(0), sg) == Term::pair(nat, nat, Term::fst(v(0)), Term::snd(v(0))));
  // Refl keeps its own annotation, normalized.
  const Term eq = Term::id(nat, zero, zero);
  CHECK(nf_ok(Context{}, Term::refl(nat, Term::app(id_nat(), zero)), eq) == Term::refl(nat, zero));
  CHECK(nf_ok(Context{}, Term::pi(nat, Term::app(Term::lam(univ, v(0)), nat)), univ) ==
        Term::pi(nat, nat));
  // A neutral function argument inside a spine is itself eta-expanded.
  const Context ho{Term::pi(Term::pi(nat, nat), nat), Term::pi(nat, nat)};
  CHECK(nf_ok(ho, Term::app(v(1), v(0)), nat) ==
        Term::app(v(1), Term::lam(nat, Term::app(v(1), v(0)))));
}

TEST_CASE("oracle_conv examples") {
  const Term fn = Term::pi(nat, nat);
  CHECK(oracle_conv(Context{fn}, v(0), Term::lam(nat, Term::app(v(1), v(0))), fn).value());
  CHECK_FALSE(oracle_conv(Context{}, zero, Term::succ(zero), nat).value());
  const Term sum = testing::programs::apply(testing::programs::add(), Term::numeral(2),
                                            Term::numeral(2));
  CHECK(oracle_conv(Context{}, sum, Term::numeral(4), nat).value());
}

TEST_CASE("out of fuel") {
  const Term prod = testing::programs::apply(testing::programs::mul(), Term::numeral(7),
                                             Term::numeral(6));
  CHECK(nf_tm(Context{}, prod, nat, 100).status() == Status::out_of_fuel);
  CHECK(nf_tm(Context{}, prod, nat).value() == Term::numeral(42));
}

TEST_CASE("idempotence, soundness against conversion, canonicity") {
  Rng rng(51);
  int closed_nats = 0;
  for (const Context& ctx : testing::sample_contexts()) {
    TypedGen gen(rng, ctx);
    for (int n = 0; n < 40; ++n) {
      const Term ty = rng.chance(0.3) ? nat : gen.type(2);
      std::optional<Term> t = gen.term(ty, 3);
      if (!t) continue;
      const Term normal = nf_ok(ctx, *t, ty);
      CHECK(nf_ok(ctx, normal, ty) == normal);
      CHECK(check(ctx, normal, ty).ok());
      CHECK(conv_tm(ctx, *t, normal, ty).ok());
      CHECK(nf_ty(ctx, nf_ty(ctx, ty).value()).value() == nf_ty(ctx, ty).value());
      if (ctx.empty() && alpha_eq(ty, nat)) {
        ++closed_nats;
        CHECK(is_numeral(normal));
      }
    }
  }
  CHECK(closed_nats > 5);
}
