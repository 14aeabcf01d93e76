#pragma once

// Fuel and the four-way outcome of every kernel judgement.

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt {

using Unit = std::monostate;

enum class Status : std::uint8_t { ok, type_error, out_of_fuel, ill_formed };

enum class ErrorKind : std::uint8_t {
  unbound_variable,
  universe_has_no_type,
  not_a_type,
  expected_pi,
  expected_sigma,
  type_mismatch,
  head_mismatch,
  neutral_mismatch,
};

std::string_view error_kind_name(ErrorKind kind);

/// A genuine typing or conversion failure.
class TypeError : public std::exception {
 public:
  TypeError(ErrorKind kind, std::string message) : kind_(kind), message_(std::move(message)) {}
  TypeError(ErrorKind kind, std::string message, std::optional<Term> expected,
            std::optional<Term> actual)
      : kind_(kind), message_(std::move(message)), expected_(std::move(expected)),
        actual_(std::move(actual)) {}

  const char* what() const noexcept override { return message_.c_str(); }
  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::optional<Term>& expected() const { return expected_; }
  const std::optional<Term>& actual() const { return actual_; }

  /// Child indices leading from the judgement's subject to the offending
  /// subterm. Terms in expected()/actual() live in the context extended by
  /// the binders crossed along this path.
  const std::vector<std::uint8_t>& path() const { return path_; }
  void push_parent(std::uint8_t child) { path_.insert(path_.begin(), child); }

 private:
  ErrorKind kind_;
  std::string message_;
  std::optional<Term> expected_;
  std::optional<Term> actual_;
  std::vector<std::uint8_t> path_;
};

class OutOfFuel : public std::exception {
 public:
  const char* what() const noexcept override { return "out of fuel"; }
};

/// A canonical form met an eliminator it cannot interact with. Unreachable
/// on inputs satisfying the judgement's preconditions.
class IllFormed : public std::exception {
 public:
  explicit IllFormed(std::string message) : message_(std::move(message)) {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

/// Step budget shared by every routine taking part in one judgement.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget) : budget_(budget), remaining_(budget) {}

  void burn() {
    if (remaining_ == 0) throw OutOfFuel{};
    --remaining_;
  }
  std::uint64_t remaining() const { return remaining_; }
  std::uint64_t used() const { return budget_ - remaining_; }

 private:
  std::uint64_t budget_;
  std::uint64_t remaining_;
};

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

template <class A>
class CheckResult {
 public:
  using Outcome = std::variant<A, TypeError, OutOfFuel, IllFormed>;

  CheckResult(A value) : outcome_(std::in_place_index<0>, std::move(value)) {}
  CheckResult(TypeError e) : outcome_(std::move(e)) {}
  CheckResult(OutOfFuel e) : outcome_(e) {}
  CheckResult(IllFormed e) : outcome_(std::move(e)) {}

  Status status() const { return static_cast<Status>(outcome_.index()); }
  bool ok() const { return outcome_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const A& value() const { return std::get<0>(outcome_); }
  const TypeError& type_error() const { return std::get<TypeError>(outcome_); }
  const IllFormed& ill_formed() const { return std::get<IllFormed>(outcome_); }
  const Outcome& outcome() const { return outcome_; }

  std::string message() const {
    return std::visit([](const auto& v) -> std::string {
      if constexpr (std::is_base_of_v<std::exception, std::decay_t<decltype(v)>>) return v.what();
      else return "ok";
    }, outcome_);
  }

 private:
  Outcome outcome_;
};

/// Run `f(fuel)` against a fresh budget, turning kernel exceptions into a
/// CheckResult.
template <class F>
auto run_fuelled(std::uint64_t budget, F&& f) {
  using R = std::invoke_result_t<F, Fuel&>;
  using A = std::conditional_t<std::is_void_v<R>, Unit, R>;
  Fuel fuel(budget);
  try {
    if constexpr (std::is_void_v<R>) {
      f(fuel);
      return CheckResult<A>(Unit{});
    } else {
      return CheckResult<A>(f(fuel));
    }
  } catch (const TypeError& e) {
    return CheckResult<A>(e);
  } catch (const OutOfFuel& e) {
    return CheckResult<A>(e);
  } catch (const IllFormed& e) {
    return CheckResult<A>(e);
  }
}

}  // namespace mltt
