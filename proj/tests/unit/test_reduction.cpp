#include <doctest.h>

#include "gen.hpp"
#include "mltt/normalizer.hpp"
#include "mltt/reduction.hpp"

using namespace mltt;
using mltt::testing::Rng;

namespace {

const Term nat = Term::nat();
const Term zero = Term::zero();
Term v(std::uint32_t i) { return Term::var(i); }
Term id_nat() { return Term::lam(nat, v(0)); }

Term whnf_ok(const Term& t) {
  CheckResult<Term> r = whnf(t);
  REQUIRE(r.ok());
  return r.value();
}

}  // namespace

TEST_CASE("whnf examples") {
  CHECK(whnf_ok(Term::app(id_nat(), zero)) == zero);
  const Term lazy = Term::succ(Term::app(id_nat(), zero));
  CHECK(whnf_ok(lazy) == lazy);
  CHECK(whnf_ok(Term::fst(Term::pair(nat, nat, zero, Term::succ(zero)))) == zero);
  CHECK(whnf_ok(Term::snd(Term::pair(nat, nat, zero, Term::succ(zero)))) == Term::succ(zero));
}

TEST_CASE("whnf of add 2 1 is a successor whose normal form is 3") {
  const Term t = testing::programs::apply(testing::programs::add(), Term::numeral(2),
                                          Term::numeral(1));
  const Term w = whnf_ok(t);
  REQUIRE(w.is(Tag::Succ));
  // Only the head is evaluated: the predecessor is still a recursor call.
  CHECK(w.child(0).is(Tag::NatElim));
  CheckResult<Term> n = nf_tm(Context{}, t, nat);
  REQUIRE(n.ok());
  CHECK(n.value() == Term::numeral(3));
}

TEST_CASE("iota rules") {
  const Term step = Term::lam(nat, Term::lam(nat, Term::succ(v(0))));
  CHECK(whnf_ok(Term::nat_elim(nat, Term::numeral(5), step, zero)) == Term::numeral(5));
  const Term j = Term::id_elim(nat, zero, nat, Term::numeral(2), zero, Term::refl(nat, zero));
  CHECK(whnf_ok(j) == Term::numeral(2));
}

TEST_CASE("neutral terms are rebuilt") {
  const Term n = Term::app(Term::fst(v(1)), Term::app(id_nat(), zero));
  CHECK(whnf_ok(n) == n);
  const Term stuck = Term::nat_elim(nat, zero, v(0), v(3));
  CHECK(whnf_ok(stuck) == stuck);
  // A redex under a neutral's head reduces.
  const Term head_redex = Term::app(Term::app(Term::lam(nat, v(1)), zero), zero);
  CHECK(whnf_ok(head_redex) == Term::app(v(0), zero));
}

TEST_CASE("ill-formed and out-of-fuel outcomes") {
  CHECK(whnf(Term::fst(zero)).status() == Status::ill_formed);
  CHECK(whnf(Term::app(zero, zero)).status() == Status::ill_formed);
  CHECK(whnf(Term::empty_elim(nat, zero)).status() == Status::ill_formed);
  const Term self = Term::lam(nat, Term::app(v(0), v(0)));
  CHECK(whnf(Term::app(self, self), 1000).status() == Status::out_of_fuel);
  CHECK(whnf(Term::app(id_nat(), zero), 0).status() == Status::out_of_fuel);
}

TEST_CASE("classify") {
  CHECK(classify(Term::lam(nat, v(0))).kind == WhnfKind::canonical_term);
  CHECK(classify(Term::app(v(0), zero)).kind == WhnfKind::neutral);
  CHECK(classify(Term::app(id_nat(), zero)).kind == WhnfKind::not_whnf);
  CHECK(classify(Term::pi(nat, nat)).kind == WhnfKind::canonical_type);
  CHECK(classify(Term::univ()).kind == WhnfKind::canonical_type);
  CHECK(classify(Term::refl(nat, zero)).kind == WhnfKind::canonical_term);
  CHECK(classify(Term::fst(Term::app(v(2), zero))).kind == WhnfKind::neutral);
}

TEST_CASE("zip") {
  CHECK(zip(v(0), {}) == v(0));
  const std::vector<Frame> one{frame::AppArg{zero}};
  CHECK(zip(v(0), one) == Term::app(v(0), zero));
  const std::vector<Frame> two{frame::Fst{}, frame::AppArg{zero}};
  CHECK(zip(v(1), two) == Term::app(Term::fst(v(1)), zero));
}

TEST_CASE("unzip and zip round-trip on neutrals") {
  Rng rng(21);
  int neutrals = 0;
  for (int n = 0; n < 2000; ++n) {
    const Term t = testing::raw_term(rng, 3, 4);
    if (!is_neutral(t)) continue;
    ++neutrals;
    const Spine s = unzip(t);
    CHECK(s.head.is(Tag::Var));
    CHECK(zip(s.head, s.frames) == t);
  }
  CHECK(neutrals > 50);
}

TEST_CASE("determinism, idempotence and fixpoints on random raw terms") {
  Rng rng(22);
  for (int n = 0; n < 1000; ++n) {
    const Term t = testing::raw_term(rng, 2, 5);
    const std::vector<Term> reducts = head_reducts(t);
    CHECK(reducts.size() <= 1);
    if (!reducts.empty()) CHECK(classify(t).kind == WhnfKind::not_whnf);
    if (classify(t).kind != WhnfKind::not_whnf) {
      CHECK(reducts.empty());
      CHECK(whnf_ok(t) == t);
    }
    CheckResult<Term> r = whnf(t, 10'000);
    if (!r) continue;
    CHECK(is_whnf(r.value()));
    CheckResult<Term> again = whnf(r.value(), 10'000);
    REQUIRE(again.ok());
    CHECK(again.value() == r.value());
  }
}

TEST_CASE("the machine agrees with iterated one-step reduction") {
  Rng rng(23);
  for (int n = 0; n < 1000; ++n) {
    Term t = testing::raw_term(rng, 2, 4);
    CheckResult<Term> r = whnf(t, 10'000);
    if (!r) continue;
    for (int steps = 0; steps < 1000; ++steps) {
      std::vector<Term> next = head_reducts(t);
      if (next.empty()) break;
      t = next.front();
    }
    CHECK(t == r.value());
  }
}

TEST_CASE("fuel monotonicity") {
  Rng rng(24);
  for (int n = 0; n < 500; ++n) {
    const Term t = testing::raw_term(rng, 2, 4);
    Fuel fuel(10'000);
    std::optional<Term> w;
    try {
      w = whnf(t, fuel);
    } catch (const std::exception&) {
      continue;
    }
    const std::uint64_t needed = fuel.used();
    CheckResult<Term> exact = whnf(t, needed);
    REQUIRE(exact.ok());
    CHECK(exact.value() == *w);
    CHECK(whnf(t, needed * 3 + 7).value() == *w);
    if (needed > 0) CHECK(whnf(t, needed - 1).status() == Status::out_of_fuel);
  }
}
