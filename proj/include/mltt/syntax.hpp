#pragma once

// Core syntax: de Bruijn terms, contexts, lifting and substitution.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace mltt {

enum class Tag : std::uint8_t {
  Var,
  Univ,
  Pi,
  Lam,
  App,
  Sigma,
  Pair,
  Fst,
  Snd,
  Nat,
  Zero,
  Succ,
  NatElim,
  Id,
  Refl,
  IdElim,
  Empty,
  EmptyElim,
};

std::string_view tag_name(Tag tag);

/// Number of children a node with this tag carries.
std::size_t arity(Tag tag);

/// Number of binders the given child of a node with this tag sits under.
/// Pi/Lam/Sigma bind one variable in child 1, Pair in child 1 (the family),
/// NatElim and EmptyElim in child 0 (the motive), IdElim two in child 2.
std::uint32_t binders_at(Tag tag, std::size_t child);

class Term;

namespace detail {
struct Node;
}

/// Immutable, shared term. Copies are cheap; equality is structural, which is
/// alpha-equivalence because the core carries no names.
class Term {
 public:
  static Term var(std::uint32_t index);
  static Term univ();
  static Term pi(Term dom, Term cod);
  static Term lam(Term dom, Term body);
  static Term app(Term fn, Term arg);
  static Term sigma(Term dom, Term cod);
  static Term pair(Term dom, Term cod, Term fst, Term snd);
  static Term fst(Term pair);
  static Term snd(Term pair);
  static Term nat();
  static Term zero();
  static Term succ(Term pred);
  static Term nat_elim(Term motive, Term base, Term step, Term scrut);
  static Term id(Term ty, Term lhs, Term rhs);
  static Term refl(Term ty, Term tm);
  static Term id_elim(Term ty, Term lhs, Term motive, Term base, Term rhs, Term proof);
  static Term empty();
  static Term empty_elim(Term motive, Term scrut);

  /// Succ^n(Zero).
  static Term numeral(std::uint32_t n);

  /// Generic constructor; `children.size()` must equal `arity(tag)`.
  static Term make(Tag tag, std::span<const Term> children);

  Tag tag() const;
  bool is(Tag tag) const { return this->tag() == tag; }
  std::uint32_t index() const;  // Var only
  std::size_t arity() const;
  const Term& child(std::size_t i) const;
  std::span<const Term> children() const;

  /// Least k such that every free index is < k.
  std::uint32_t free_bound() const;
  bool closed() const { return free_bound() == 0; }

  // Named views; valid only on the matching tags.
  const Term& dom() const { return child(0); }   // Pi, Lam, Sigma, Pair
  const Term& cod() const { return child(1); }   // Pi, Sigma, Pair
  const Term& body() const { return child(1); }  // Lam
  const Term& fn() const { return child(0); }    // App
  const Term& arg() const { return child(1); }   // App

  /// The eliminated subterm of an eliminator (App fn, projection pair,
  /// recursor scrutinee). Nullopt on introduction forms and types.
  std::optional<std::size_t> scrutinee_slot() const;

  friend bool operator==(const Term& a, const Term& b);

  const void* identity() const { return node_.get(); }

 private:
  explicit Term(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::Node> node_;
};

namespace detail {
struct Node {
  Tag tag;
  std::uint32_t index = 0;
  std::uint32_t free_bound = 0;
  std::vector<Term> children;
};
}  // namespace detail

/// Structural equality; one traversal with pointer short-cut.
bool alpha_eq(const Term& t, const Term& u);

/// Shift every free index >= cutoff by `amount`.
Term lift(const Term& t, std::uint32_t amount, std::uint32_t cutoff = 0);

/// Replace index `depth` by `arg` (lifted by `depth`), decrement indices above.
Term subst_at(const Term& body, std::uint32_t depth, const Term& arg);

/// Instantiate the single binder of `body` with `arg`.
Term subst1(const Term& body, const Term& arg);

/// Instantiate a two-binder body: the outer binder gets `outer`, the inner `inner`.
Term subst2(const Term& body, const Term& outer, const Term& inner);

/// True if index `i` occurs free in `t`.
bool occurs(const Term& t, std::uint32_t i);

/// Ordered telescope, innermost binding last. Entry k is a type in the
/// context formed by entries 0..k-1.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<Term> types) : types_(types) {}
  explicit Context(std::vector<Term> types) : types_(std::move(types)) {}

  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }

  /// Copy extended with one more binding.
  Context extend(Term type) const;
  /// Type of de Bruijn index i, weakened to live in this context.
  /// Nullopt when i is out of range.
  std::optional<Term> lookup(std::uint32_t i) const;

  const std::vector<Term>& entries() const { return types_; }

 private:
  std::vector<Term> types_;
};

/// Throws TypeError (unbound variable) when i is out of range.
Term ctx_lookup(const Context& ctx, std::uint32_t i);

// Typing schemes for eliminators, shared by the checker and the normalizer.

/// Pi(n : Nat). P[n] -> P[succ n] for a motive P over one Nat binder.
Term nat_step_type(const Term& motive);

/// The Id type the second binder of an IdElim motive ranges over, stated in
/// the context extended by the first binder (y : ty).
Term id_motive_proof_type(const Term& ty, const Term& lhs);

}  // namespace mltt
