#include "mltt/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "mltt/result.hpp"

namespace mltt {

namespace {

struct TagInfo {
  std::string_view name;
  std::uint8_t arity;
  std::array<std::uint8_t, 6> binders;
};

constexpr TagInfo kTagInfo[] = {
    {"Var", 0, {}},
    {"Univ", 0, {}},
    {"Pi", 2, {0, 1}},
    {"Lam", 2, {0, 1}},
    {"App", 2, {}},
    {"Sigma", 2, {0, 1}},
    {"Pair", 4, {0, 1, 0, 0}},
    {"Fst", 1, {}},
    {"Snd", 1, {}},
    {"Nat", 0, {}},
    {"Zero", 0, {}},
    {"Succ", 1, {}},
    {"NatElim", 4, {1, 0, 0, 0}},
    {"Id", 3, {}},
    {"Refl", 2, {}},
    {"IdElim", 6, {0, 0, 2, 0, 0, 0}},
    {"Empty", 0, {}},
    {"EmptyElim", 2, {1, 0}},
};

const TagInfo& info(Tag tag) { return kTagInfo[static_cast<std::size_t>(tag)]; }

}  // namespace

std::string_view tag_name(Tag tag) { return info(tag).name; }
std::size_t arity(Tag tag) { return info(tag).arity; }
std::uint32_t binders_at(Tag tag, std::size_t child) { return info(tag).binders[child]; }

Term Term::make(Tag tag, std::span<const Term> children) {
  assert(children.size() == mltt::arity(tag));
  auto node = std::make_shared<detail::Node>();
  node->tag = tag;
  node->children.assign(children.begin(), children.end());
  std::uint32_t bound = 0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const std::uint32_t b = children[i].free_bound();
    const std::uint32_t k = binders_at(tag, i);
    if (b > k) bound = std::max(bound, b - k);
  }
  node->free_bound = bound;
  return Term(std::move(node));
}

Term Term::var(std::uint32_t index) {
  auto node = std::make_shared<detail::Node>();
  node->tag = Tag::Var;
  node->index = index;
  node->free_bound = index + 1;
  return Term(std::move(node));
}

namespace {
Term leaf(Tag tag) { return Term::make(tag, {}); }

template <class... Ts>
Term node(Tag tag, Ts... ts) {
  const std::array<Term, sizeof...(Ts)> children{std::move(ts)...};
  return Term::make(tag, children);
}
}  // namespace

// Leaves are immutable and context-free; share one node each.
Term Term::univ() { static const Term t = leaf(Tag::Univ); return t; }
Term Term::nat() { static const Term t = leaf(Tag::Nat); return t; }
Term Term::zero() { static const Term t = leaf(Tag::Zero); return t; }
Term Term::empty() { static const Term t = leaf(Tag::Empty); return t; }

Term Term::pi(Term dom, Term cod) { return node(Tag::Pi, dom, cod); }
Term Term::lam(Term dom, Term body) { return node(Tag::Lam, dom, body); }
Term Term::app(Term fn, Term arg) { return node(Tag::App, fn, arg); }
Term Term::sigma(Term dom, Term cod) { return node(Tag::Sigma, dom, cod); }
Term Term::pair(Term dom, Term cod, Term fst, Term snd) {
  return node(Tag::Pair, dom, cod, fst, snd);
}
Term Term::fst(Term pair) { return node(Tag::Fst, pair); }
Term Term::snd(Term pair) { return node(Tag::Snd, pair); }
Term Term::succ(Term pred) { return node(Tag::Succ, pred); }
Term Term::nat_elim(Term motive, Term base, Term step, Term scrut) {
  return node(Tag::NatElim, motive, base, step, scrut);
}
Term Term::id(Term ty, Term lhs, Term rhs) { return node(Tag::Id, ty, lhs, rhs); }
Term Term::refl(Term ty, Term tm) { return node(Tag::Refl, ty, tm); }
Term Term::id_elim(Term ty, Term lhs, Term motive, Term base, Term rhs, Term proof) {
  return node(Tag::IdElim, ty, lhs, motive, base, rhs, proof);
}
Term Term::empty_elim(Term motive, Term scrut) { return node(Tag::EmptyElim, motive, scrut); }

Term Term::numeral(std::uint32_t n) {
  Term t = zero();
  for (std::uint32_t i = 0; i < n; ++i) t = succ(t);
  return t;
}

Tag Term::tag() const { return node_->tag; }
std::uint32_t Term::index() const {
  assert(tag() == Tag::Var);
  return node_->index;
}
std::size_t Term::arity() const { return node_->children.size(); }
const Term& Term::child(std::size_t i) const { return node_->children[i]; }
std::span<const Term> Term::children() const { return node_->children; }
std::uint32_t Term::free_bound() const { return node_->free_bound; }

std::optional<std::size_t> Term::scrutinee_slot() const {
  switch (tag()) {
    case Tag::App: return 0;
    case Tag::Fst:
    case Tag::Snd: return 0;
    case Tag::NatElim: return 3;
    case Tag::IdElim: return 5;
    case Tag::EmptyElim: return 1;
    default: return std::nullopt;
  }
}

bool alpha_eq(const Term& t, const Term& u) {
  if (t.identity() == u.identity()) return true;
  if (t.tag() != u.tag()) return false;
  if (t.tag() == Tag::Var) return t.index() == u.index();
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (!alpha_eq(t.child(i), u.child(i))) return false;
  return true;
}

bool operator==(const Term& a, const Term& b) { return alpha_eq(a, b); }

namespace {

template <class OnVar>
Term map_vars(const Term& t, std::uint32_t depth, const OnVar& on_var) {
  if (t.free_bound() <= depth) return t;
  if (t.is(Tag::Var)) return on_var(t.index(), depth);
  std::array<Term, 6> buf{Term::zero(), Term::zero(), Term::zero(),
                          Term::zero(), Term::zero(), Term::zero()};
  bool changed = false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    buf[i] = map_vars(t.child(i), depth + binders_at(t.tag(), i), on_var);
    changed = changed || buf[i].identity() != t.child(i).identity();
  }
  if (!changed) return t;
  return Term::make(t.tag(), std::span<const Term>(buf.data(), t.arity()));
}

}  // namespace

Term lift(const Term& t, std::uint32_t amount, std::uint32_t cutoff) {
  if (amount == 0) return t;
  return map_vars(t, cutoff, [amount](std::uint32_t i, std::uint32_t) {
    return Term::var(i + amount);
  });
}

Term subst_at(const Term& body, std::uint32_t depth, const Term& arg) {
  // `here` counts binders above the occurrence; only indices >= here reach us.
  return map_vars(body, depth, [&arg](std::uint32_t i, std::uint32_t here) {
    if (i == here) return lift(arg, here);
    return Term::var(i - 1);
  });
}

Term subst1(const Term& body, const Term& arg) { return subst_at(body, 0, arg); }

Term subst2(const Term& body, const Term& outer, const Term& inner) {
  return subst1(subst1(body, lift(inner, 1)), outer);
}

bool occurs(const Term& t, std::uint32_t i) {
  if (t.free_bound() <= i) return false;
  if (t.is(Tag::Var)) return t.index() == i;
  for (std::size_t k = 0; k < t.arity(); ++k)
    if (occurs(t.child(k), i + binders_at(t.tag(), k))) return true;
  return false;
}

Context Context::extend(Term type) const {
  Context out;
  out.types_.reserve(types_.size() + 1);
  out.types_ = types_;
  out.types_.push_back(std::move(type));
  return out;
}

std::optional<Term> Context::lookup(std::uint32_t i) const {
  if (i >= types_.size()) return std::nullopt;
  return lift(types_[types_.size() - 1 - i], i + 1);
}

Term ctx_lookup(const Context& ctx, std::uint32_t i) {
  if (auto ty = ctx.lookup(i)) return *std::move(ty);
  throw TypeError(ErrorKind::unbound_variable,
                  "unbound variable #" + std::to_string(i) + " in a context of length " +
                      std::to_string(ctx.size()));
}

Term nat_step_type(const Term& motive) {
  // In Γ, n : Nat, ih : P[n] the conclusion is P[succ n]: weaken P past the
  // two new binders (keeping its own bound variable), then plug succ n.
  const Term conclusion = subst1(lift(motive, 2, 1), Term::succ(Term::var(1)));
  return Term::pi(Term::nat(), Term::pi(motive, conclusion));
}

Term id_motive_proof_type(const Term& ty, const Term& lhs) {
  return Term::id(lift(ty, 1), lift(lhs, 1), Term::var(0));
}

}  // namespace mltt

namespace mltt {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unbound_variable: return "unbound variable";
    case ErrorKind::universe_has_no_type: return "universe has no type";
    case ErrorKind::not_a_type: return "not a type";
    case ErrorKind::expected_pi: return "expected a function type";
    case ErrorKind::expected_sigma: return "expected a pair type";
    case ErrorKind::type_mismatch: return "type mismatch";
    case ErrorKind::head_mismatch: return "head mismatch";
    case ErrorKind::neutral_mismatch: return "neutral mismatch";
  }
  return "unknown";
}

}  // namespace mltt
