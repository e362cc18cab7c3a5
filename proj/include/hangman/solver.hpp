#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hangman/core.hpp"

namespace hangman {

/// One turn of play: the guesser's symbol and the positions the setter revealed.
struct Move {
  Symbol guess;
  Positions reveal;

  friend bool operator==(const Move&, const Move&) = default;
};

using PrincipalLine = std::vector<Move>;

struct SolveReport {
  int value = 0;
  std::size_t states_expanded = 0;
  std::size_t table_size = 0;
  PrincipalLine principal_line;
};

/// Size limits for the memoized solver. Only symbols that occur in some word count
/// toward `max_used_symbols`; the others can never be worth guessing.
struct SolverLimits {
  std::size_t max_used_symbols = 24;
  std::size_t max_word_length = 32;
  std::size_t max_words = 4096;
};

bool within_limits(const Lexicon& lexicon, const SolverLimits& limits = {});

/// Exact minimax value of Evil Hangman over a fixed root lexicon.
///
/// The guesser picks a remaining symbol, the setter picks one of the occurrence
/// pattern classes of that symbol over the consistent words, and an empty reveal
/// costs the guesser one life. Values are memoized on (mask, remaining alphabet),
/// which determines the consistent set given the root lexicon.
///
/// A Solver owns its table and is not internally synchronized.
class Solver {
 public:
  explicit Solver(std::shared_ptr<const Lexicon> lexicon, const SolverLimits& limits = {});

  const Lexicon& lexicon() const noexcept { return *lexicon_; }

  /// Value of an arbitrary legal state over this solver's lexicon.
  int value(const GameState& state);

  /// Setter's optimal reveal for guess `s`; ties go to the smaller, then
  /// lexicographically smaller, position set.
  Positions best_reply(const GameState& state, Symbol s);

  /// Line of optimal play from `state` until the word is determined.
  PrincipalLine principal_line(const GameState& state);

  SolveReport solve();

  std::size_t states_expanded() const noexcept { return states_expanded_; }
  std::size_t table_size() const noexcept { return table_.size(); }

 private:
  struct Key {
    std::vector<SymbolId> mask;
    std::uint64_t remaining;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  struct Class {
    std::uint32_t pattern;  // bit i set = position i+1 revealed
    std::vector<std::uint32_t> words;
  };

  int search(const std::vector<SymbolId>& mask, std::uint64_t remaining,
             const std::vector<std::uint32_t>& consistent);
  std::vector<Class> classes_of(const std::vector<SymbolId>& mask, SymbolId symbol,
                                const std::vector<std::uint32_t>& consistent) const;
  std::uint64_t compact_remaining(const AlphabetSet& remaining) const;
  void check_state(const GameState& state) const;

  std::shared_ptr<const Lexicon> lexicon_;
  std::vector<SymbolId> used_;                  // compact index -> symbol id (ascending)
  std::vector<int> compact_of_;                 // symbol id -> compact index or -1
  std::unordered_map<Key, int, KeyHash> table_;
  std::size_t states_expanded_ = 0;
};

SolveReport solve(const Lexicon& lexicon);

/// Reference evaluator: plain minimax over every remaining symbol and every
/// subset of blank positions, without a table or early termination.
SolveReport brute_force_solve(const Lexicon& lexicon);

/// True iff the setter can force at least `d` failed guesses.
bool decide(const Lexicon& lexicon, int d);

/// Number of failed guesses when `line` is replayed from the fresh state.
/// Throws Error if the line is not legal play.
int replay_fails(std::shared_ptr<const Lexicon> lexicon, const PrincipalLine& line);

}  // namespace hangman
