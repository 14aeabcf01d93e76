#pragma once
// Random term generators and sample programs shared by the test binaries.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 eng_;
};

/// A well-scoped term over `scope` free variables. Every constructor can
/// appear; eliminators often get a canonical scrutinee, matching or not, so
/// head redexes (and stuck ill-formed terms) are common.
Term raw_term(Rng& rng, std::uint32_t scope, int depth);

/// Type-directed generation of well-typed terms in a fixed context.
class TypedGen {
 public:
  TypedGen(Rng& rng, Context ctx) : rng_(rng), ctx_(std::move(ctx)) {}

  const Context& context() const { return ctx_; }

  /// A small type, i.e. one that is also a term of Type.
  Term type(int depth) { return type_in(ctx_, depth); }
  /// A term of `ty`, or nullopt if none was found (e.g. at Empty).
  std::optional<Term> term(const Term& ty, int depth) { return term_in(ctx_, ty, depth); }
  /// A term convertible to `t` at `ty`, built by expansions and reductions.
  Term variant(const Term& t, const Term& ty, int depth) { return variant_in(ctx_, t, ty, depth); }

  Term type_in(const Context& ctx, int depth);
  std::optional<Term> term_in(const Context& ctx, const Term& ty, int depth);
  Term variant_in(const Context& ctx, const Term& t, const Term& ty, int depth);

 private:
  std::optional<Term> intro(const Context& ctx, const Term& whnf_ty, int depth);
  std::optional<Term> from_context(const Context& ctx, const Term& ty, int depth);
  std::optional<Term> detour(const Context& ctx, const Term& ty, int depth);
  bool same_type(const Context& ctx, const Term& a, const Term& b);

  Rng& rng_;
  Context ctx_;
};

/// Contexts with variables of assorted types: functions, pairs, a type
/// family, reflexive equations, an abstract type with an element.
std::vector<Context> sample_contexts();

namespace programs {
/// \m n. natrec(_. Nat, n, \k ih. succ ih, m)
Term add();
/// \m n. natrec(_. Nat, zero, \k ih. add n ih, m)
Term mul();
Term apply(const Term& f, const Term& a, const Term& b);
}  // namespace programs

/// Apply a parallel substitution by structural recursion: `sigma(i)` is the
/// image of free variable i, and going under a binder shifts the image and
/// keeps the new variable. Independent of the kernel's lift/subst code.
Term apply_subst(const Term& t, const std::function<Term(std::uint32_t)>& sigma);

Term naive_lift(const Term& t, std::uint32_t amount, std::uint32_t cutoff);
Term naive_subst1(const Term& body, const Term& arg);

}  // namespace mltt::testing
