#include "hangman/strategies.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <unordered_map>

namespace hangman {

namespace {

// Occurrence-pattern classes of s over the consistent words, keyed by reveal set.
std::map<Positions, std::size_t> class_sizes(const GameState& state, Symbol s) {
  std::map<Positions, std::size_t> sizes;
  for (auto idx : state.consistent) {
    ++sizes[occurrence_pattern(state.mask, (*state.lexicon)[idx], s)];
  }
  return sizes;
}

bool uses_symbol(const GameState& state, Symbol s) {
  for (auto idx : state.consistent) {
    if (!occurrence_pattern(state.mask, (*state.lexicon)[idx], s).empty()) return true;
  }
  return false;
}

struct StateKey {
  Mask mask;
  AlphabetSet remaining;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return k.mask.hash() * 31 + k.remaining.hash();
  }
};

class Evaluator {
 public:
  explicit Evaluator(const SetterStrategy& setter)
      : setter_(setter), cache_(setter.state_deterministic()) {}

  EvaluationResult run(const GameState& state) {
    if (state.mask.complete() || state.consistent.size() == 1) return {};

    StateKey key{state.mask, state.remaining};
    if (cache_) {
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    EvaluationResult best{INT_MAX, {}};
    for (Symbol s : state.remaining.members()) {
      if (cache_ && !uses_symbol(state, s)) continue;
      Positions reveal = setter_.answer(state, s);
      GameState next = apply_answer(state, s, reveal);
      EvaluationResult child = run(next);
      const int v = (reveal.empty() ? 1 : 0) + child.value;
      if (v < best.value) {
        best.value = v;
        best.principal_line.clear();
        best.principal_line.push_back(Move{s, std::move(reveal)});
        best.principal_line.insert(best.principal_line.end(), child.principal_line.begin(),
                                   child.principal_line.end());
        if (v == 0) break;
      }
    }
    if (best.value == INT_MAX) throw std::logic_error("no guess available in a live state");
    if (cache_) memo_.emplace(std::move(key), best);
    return best;
  }

 private:
  const SetterStrategy& setter_;
  bool cache_;
  std::unordered_map<StateKey, EvaluationResult, StateKeyHash> memo_;
};

}  // namespace

Positions honest_answer(const GameState& state, Symbol s, const Word& secret) {
  if (!precedes(state.mask, secret.as_mask())) {
    throw Error(Error::Kind::contract, "secret is inconsistent with the mask");
  }
  for (std::size_t i = 0; i < secret.length(); ++i) {
    if (state.mask.is_blank(i) && state.guessed.contains(Symbol(secret[i]))) {
      throw Error(Error::Kind::contract, "secret holds a guessed symbol in a hidden cell");
    }
  }
  return occurrence_pattern(state.mask, secret, s);
}

Positions greedy_answer(const GameState& state, Symbol s) {
  const auto sizes = class_sizes(state, s);
  Positions best;
  std::size_t best_size = 0;
  for (const auto& [reveal, size] : sizes) {
    if (size > best_size || (size == best_size && reveal_order_less(reveal, best))) {
      best_size = size;
      best = reveal;
    }
  }
  return best;
}

Positions optimal_answer(const GameState& state, Symbol s, Solver& solver) {
  return solver.best_reply(state, s);
}

bool is_setter_name(std::string_view name) {
  return name == "honest" || name == "greedy" || name == "optimal";
}

std::unique_ptr<SetterStrategy> make_setter(std::string_view name,
                                            std::shared_ptr<const Lexicon> lexicon,
                                            std::optional<Word> secret) {
  if (name == "honest") {
    if (!secret) throw Error(Error::Kind::contract, "honest setter needs a secret word");
    return std::make_unique<HonestSetter>(std::move(*secret));
  }
  if (name == "greedy") return std::make_unique<GreedySetter>();
  if (name == "optimal") {
    return std::make_unique<OptimalSetter>(std::make_shared<Solver>(std::move(lexicon)));
  }
  throw Error(Error::Kind::contract, "unknown setter '" + std::string(name) + "'");
}

EvaluationResult evaluate_setter(const GameState& state, const SetterStrategy& setter) {
  if (state.consistent.empty()) throw Error(Error::Kind::contract, "state has no consistent word");
  Evaluator ev(setter);
  return ev.run(state);
}

}  // namespace hangman
