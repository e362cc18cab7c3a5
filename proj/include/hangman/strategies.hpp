#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "hangman/core.hpp"
#include "hangman/solver.hpp"

namespace hangman {

/// Honest reveal: the positions of s in `secret` among the blank cells.
Positions honest_answer(const GameState& state, Symbol s, const Word& secret);

/// GreedyCheater: keep the largest occurrence-pattern class of s.
/// Ties go to the smaller reveal set, then the lexicographically smaller one.
Positions greedy_answer(const GameState& state, Symbol s);

/// Reveal maximizing [B empty] + value of the successor, same tie-break as greedy.
Positions optimal_answer(const GameState& state, Symbol s, Solver& solver);

/// Setter behaviour: maps (state, guess) to the set of revealed positions.
class SetterStrategy {
 public:
  virtual ~SetterStrategy() = default;

  virtual std::string_view name() const = 0;
  virtual Positions answer(const GameState& state, Symbol s) const = 0;

  /// True when answers depend only on (mask, consistent set, guess), so an
  /// evaluation may cache by state and skip symbols that no consistent word uses.
  virtual bool state_deterministic() const { return false; }
};

class HonestSetter final : public SetterStrategy {
 public:
  explicit HonestSetter(Word secret) : secret_(std::move(secret)) {}

  std::string_view name() const override { return "honest"; }
  Positions answer(const GameState& state, Symbol s) const override {
    return honest_answer(state, s, secret_);
  }
  bool state_deterministic() const override { return true; }

  const Word& secret() const noexcept { return secret_; }

 private:
  Word secret_;
};

class GreedySetter final : public SetterStrategy {
 public:
  std::string_view name() const override { return "greedy"; }
  Positions answer(const GameState& state, Symbol s) const override {
    return greedy_answer(state, s);
  }
  bool state_deterministic() const override { return true; }
};

/// Optimal setter backed by a (possibly shared) solver table.
class OptimalSetter final : public SetterStrategy {
 public:
  explicit OptimalSetter(std::shared_ptr<Solver> solver) : solver_(std::move(solver)) {}

  std::string_view name() const override { return "optimal"; }
  Positions answer(const GameState& state, Symbol s) const override {
    return optimal_answer(state, s, *solver_);
  }
  bool state_deterministic() const override { return true; }

  Solver& solver() const noexcept { return *solver_; }

 private:
  std::shared_ptr<Solver> solver_;
};

/// Builds "honest", "greedy" or "optimal". Honest requires a secret.
std::unique_ptr<SetterStrategy> make_setter(std::string_view name,
                                            std::shared_ptr<const Lexicon> lexicon,
                                            std::optional<Word> secret = std::nullopt);

bool is_setter_name(std::string_view name);

struct EvaluationResult {
  int value = 0;
  PrincipalLine principal_line;
};

/// Minimum number of failed guesses an optimal guesser suffers from `state`
/// against a fixed setter. The game ends when the mask is complete or one
/// consistent word is left.
EvaluationResult evaluate_setter(const GameState& state, const SetterStrategy& setter);

}  // namespace hangman
