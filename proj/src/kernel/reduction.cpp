#include "mltt/reduction.hpp"

#include <algorithm>
#include <string>

namespace mltt {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Term plug(const Term& hole, const Frame& f) {
  return std::visit(overloaded{
      [&](const frame::AppArg& a) { return Term::app(hole, a.arg); },
      [&](const frame::Fst&) { return Term::fst(hole); },
      [&](const frame::Snd&) { return Term::snd(hole); },
      [&](const frame::NatElim& n) { return Term::nat_elim(n.motive, n.base, n.step, hole); },
      [&](const frame::IdElim& j) {
        return Term::id_elim(j.ty, j.lhs, j.motive, j.base, j.rhs, hole);
      },
      [&](const frame::EmptyElim& e) { return Term::empty_elim(e.motive, hole); },
  }, f);
}

std::string_view frame_name(const Frame& f) {
  return std::visit(overloaded{
      [](const frame::AppArg&) { return std::string_view("application"); },
      [](const frame::Fst&) { return std::string_view("fst"); },
      [](const frame::Snd&) { return std::string_view("snd"); },
      [](const frame::NatElim&) { return std::string_view("natrec"); },
      [](const frame::IdElim&) { return std::string_view("idrec"); },
      [](const frame::EmptyElim&) { return std::string_view("exfalso"); },
  }, f);
}

// Peel the outermost eliminator of `t`, if any.
std::optional<std::pair<Term, Frame>> peel(const Term& t) {
  switch (t.tag()) {
    case Tag::App: return std::pair{t.fn(), Frame{frame::AppArg{t.arg()}}};
    case Tag::Fst: return std::pair{t.child(0), Frame{frame::Fst{}}};
    case Tag::Snd: return std::pair{t.child(0), Frame{frame::Snd{}}};
    case Tag::NatElim:
      return std::pair{t.child(3), Frame{frame::NatElim{t.child(0), t.child(1), t.child(2)}}};
    case Tag::IdElim:
      return std::pair{t.child(5), Frame{frame::IdElim{t.child(0), t.child(1), t.child(2),
                                                       t.child(3), t.child(4)}}};
    case Tag::EmptyElim: return std::pair{t.child(1), Frame{frame::EmptyElim{t.child(0)}}};
    default: return std::nullopt;
  }
}

// Contract a canonical head against the frame directly above it.
Term fire(const Term& head, const Frame& f) {
  const auto mismatch = [&]() -> IllFormed {
    return IllFormed(std::string(tag_name(head.tag())) + " cannot be eliminated by " +
                     std::string(frame_name(f)));
  };
  return std::visit(overloaded{
      [&](const frame::AppArg& a) {
        if (!head.is(Tag::Lam)) throw mismatch();
        return subst1(head.body(), a.arg);
      },
      [&](const frame::Fst&) {
        if (!head.is(Tag::Pair)) throw mismatch();
        return head.child(2);
      },
      [&](const frame::Snd&) {
        if (!head.is(Tag::Pair)) throw mismatch();
        return head.child(3);
      },
      [&](const frame::NatElim& n) {
        if (head.is(Tag::Zero)) return n.base;
        if (!head.is(Tag::Succ)) throw mismatch();
        const Term& pred = head.child(0);
        return Term::app(Term::app(n.step, pred), Term::nat_elim(n.motive, n.base, n.step, pred));
      },
      [&](const frame::IdElim& j) {
        if (!head.is(Tag::Refl)) throw mismatch();
        return j.base;
      },
      [&](const frame::EmptyElim&) -> Term { throw mismatch(); },
  }, f);
}

}  // namespace

Term zip(Term head, std::span<const Frame> frames) {
  for (const Frame& f : frames) head = plug(head, f);
  return head;
}

Spine unzip(const Term& t) {
  Spine s{t, {}};
  while (auto p = peel(s.head)) {
    s.head = std::move(p->first);
    s.frames.push_back(std::move(p->second));
  }
  // peel walks outside-in; frames are stored innermost first.
  std::reverse(s.frames.begin(), s.frames.end());
  return s;
}

bool is_type_head(Tag tag) {
  switch (tag) {
    case Tag::Univ:
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Nat:
    case Tag::Id:
    case Tag::Empty: return true;
    default: return false;
  }
}

WhnfView classify(const Term& t) {
  if (is_type_head(t.tag())) return {WhnfKind::canonical_type, t};
  switch (t.tag()) {
    case Tag::Lam:
    case Tag::Pair:
    case Tag::Zero:
    case Tag::Succ:
    case Tag::Refl: return {WhnfKind::canonical_term, t};
    case Tag::Var: return {WhnfKind::neutral, t};
    default: break;
  }
  const Term& scrut = t.child(*t.scrutinee_slot());
  if (classify(scrut).kind == WhnfKind::neutral) return {WhnfKind::neutral, t};
  return {WhnfKind::not_whnf, t};
}

bool is_whnf(const Term& t) { return classify(t).kind != WhnfKind::not_whnf; }
bool is_neutral(const Term& t) { return classify(t).kind == WhnfKind::neutral; }

Term whnf(const Term& t, Fuel& fuel) {
  Term head = t;
  std::vector<Frame> stack;  // back() is the innermost frame
  for (;;) {
    if (auto p = peel(head)) {
      fuel.burn();
      head = std::move(p->first);
      stack.push_back(std::move(p->second));
      continue;
    }
    if (head.is(Tag::Var)) {
      while (!stack.empty()) {
        fuel.burn();
        head = plug(head, stack.back());
        stack.pop_back();
      }
      return head;
    }
    if (stack.empty()) return head;
    fuel.burn();
    head = fire(head, stack.back());
    stack.pop_back();
  }
}

CheckResult<Term> whnf(const Term& t, std::uint64_t fuel) {
  return run_fuelled(fuel, [&](Fuel& f) { return whnf(t, f); });
}

std::vector<Term> head_reducts(const Term& t) {
  std::vector<Term> out;
  const auto rule = [&](bool applies, auto&& reduct) {
    if (applies) out.push_back(reduct());
  };
  switch (t.tag()) {
    case Tag::App:
      rule(t.fn().is(Tag::Lam), [&] { return subst1(t.fn().body(), t.arg()); });
      break;
    case Tag::Fst:
      rule(t.child(0).is(Tag::Pair), [&] { return t.child(0).child(2); });
      break;
    case Tag::Snd:
      rule(t.child(0).is(Tag::Pair), [&] { return t.child(0).child(3); });
      break;
    case Tag::NatElim: {
      const Term& n = t.child(3);
      rule(n.is(Tag::Zero), [&] { return t.child(1); });
      rule(n.is(Tag::Succ), [&] {
        const Term& m = n.child(0);
        return Term::app(Term::app(t.child(2), m),
                         Term::nat_elim(t.child(0), t.child(1), t.child(2), m));
      });
      break;
    }
    case Tag::IdElim:
      rule(t.child(5).is(Tag::Refl), [&] { return t.child(3); });
      break;
    default: break;
  }
  // Congruence: reduce inside the scrutinee position only.
  if (auto slot = t.scrutinee_slot()) {
    for (const Term& r : head_reducts(t.child(*slot))) {
      std::vector<Term> kids(t.children().begin(), t.children().end());
      kids[*slot] = r;
      out.push_back(Term::make(t.tag(), kids));
    }
  }
  return out;
}

}  // namespace mltt
