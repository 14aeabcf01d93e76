#pragma once

// Weak-head reduction as a stack machine over elimination frames.

#include <cstdint>
#include <variant>
#include <vector>

#include "mltt/result.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

namespace frame {
struct AppArg { Term arg; };
struct Fst {};
struct Snd {};
struct NatElim { Term motive, base, step; };
struct IdElim { Term ty, lhs, motive, base, rhs; };
struct EmptyElim { Term motive; };
}  // namespace frame

/// One elimination form with a hole where its scrutinee goes.
using Frame = std::variant<frame::AppArg, frame::Fst, frame::Snd, frame::NatElim, frame::IdElim,
                           frame::EmptyElim>;

/// Wrap `head` in `frames`, innermost (frames.front()) first.
Term zip(Term head, std::span<const Frame> frames);

/// Split an eliminator spine into its head and frames (innermost first).
struct Spine {
  Term head;
  std::vector<Frame> frames;
};
Spine unzip(const Term& t);

enum class WhnfKind : std::uint8_t { canonical_type, canonical_term, neutral, not_whnf };

struct WhnfView {
  WhnfKind kind;
  Term term;
};

/// Classify the head of `t`. Eliminators stuck on a mismatched canonical
/// form (e.g. fst zero) are neither canonical nor neutral and report not_whnf.
WhnfView classify(const Term& t);
bool is_whnf(const Term& t);
bool is_neutral(const Term& t);
bool is_type_head(Tag tag);

Term whnf(const Term& t, Fuel& fuel);
CheckResult<Term> whnf(const Term& t, std::uint64_t fuel = kDefaultFuel);

/// All one-step head reducts of `t`, computed from the reduction rules
/// directly rather than through the machine. Determinism means the result
/// never has more than one element.
std::vector<Term> head_reducts(const Term& t);

}  // namespace mltt
