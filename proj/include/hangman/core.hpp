#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hangman {

/// Raised when an operation's precondition is violated or a game rule is broken.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    contract,            // malformed input or precondition violation
    inconsistent_answer, // a reveal would leave no consistent word
    repeated_guess,      // symbol already guessed
    guardrail,           // instance too large for an exhaustive routine
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

using SymbolId = std::uint16_t;

/// A letter of the alphabet [1..sigma]. Id 0 is reserved for the blank cell.
struct Symbol {
  SymbolId id = 0;

  constexpr Symbol() = default;
  constexpr explicit Symbol(SymbolId v) : id(v) {}

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

inline constexpr SymbolId kBlank = 0;

/// 1-indexed word positions, kept sorted ascending.
using Positions = std::vector<std::size_t>;

/// Dynamic bitset over [1..sigma].
class AlphabetSet {
 public:
  AlphabetSet() = default;
  explicit AlphabetSet(std::size_t sigma, bool full = false);

  static AlphabetSet full(std::size_t sigma) { return AlphabetSet(sigma, true); }

  std::size_t capacity() const noexcept { return sigma_; }
  bool contains(Symbol s) const noexcept;
  void insert(Symbol s);
  void erase(Symbol s);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Members in ascending order.
  std::vector<Symbol> members() const;
  AlphabetSet complement() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const AlphabetSet&, const AlphabetSet&) = default;

 private:
  std::size_t sigma_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// The guesser's knowledge: one cell per position, each blank or a revealed symbol.
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::vector<SymbolId> cells);

  static Mask blank(std::size_t k) { return Mask(std::vector<SymbolId>(k, kBlank)); }

  std::size_t length() const noexcept { return cells_.size(); }
  bool is_blank(std::size_t i) const { return cells_.at(i) == kBlank; }
  SymbolId operator[](std::size_t i) const { return cells_[i]; }
  std::span<const SymbolId> cells() const noexcept { return cells_; }
  bool complete() const noexcept;

  std::size_t hash() const noexcept;

  friend auto operator<=>(const Mask&, const Mask&) = default;

 private:
  std::vector<SymbolId> cells_;
};

/// A fully revealed mask.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<SymbolId> cells);
  explicit Word(Mask m);

  std::size_t length() const noexcept { return mask_.length(); }
  SymbolId operator[](std::size_t i) const { return mask_[i]; }
  const Mask& as_mask() const noexcept { return mask_; }
  bool contains(Symbol s) const noexcept;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Mask mask_;
};

/// A finite set of distinct, equal-length words over [1..sigma]. Word order is preserved.
class Lexicon {
 public:
  Lexicon(std::vector<Word> words, std::size_t sigma);

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t word_length() const noexcept { return words_.front().length(); }
  std::size_t sigma() const noexcept { return sigma_; }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  std::vector<Word> words_;
  std::size_t sigma_;
};

// Mask algebra. All binary operations require equal lengths.
bool precedes(const Mask& a, const Mask& b);
Mask overlay(const Mask& a, const Mask& b);
Mask meet(const Mask& a, const Mask& b);
Mask reveal_with_word(const Mask& m, const Word& w, Symbol s);
Positions blanks(const Mask& m);
Mask pattern_mask(Symbol s, const Positions& positions, std::size_t k);

/// Indices (ascending) of words w with m ⪯ w and no guessed symbol in a blank cell of m.
std::vector<std::size_t> consistent_set(const Lexicon& lexicon, const Mask& m,
                                        const AlphabetSet& guessed);

/// Positions (1-indexed) where w holds s among the blank cells of m.
Positions occurrence_pattern(const Mask& m, const Word& w, Symbol s);

struct GameState {
  std::shared_ptr<const Lexicon> lexicon;
  Mask mask;
  AlphabetSet remaining;
  AlphabetSet guessed;
  int failed = 0;
  std::vector<std::size_t> consistent;

  static GameState fresh(std::shared_ptr<const Lexicon> lexicon);

  bool finished_by_reveal() const noexcept { return mask.complete(); }
};

/// Moves s from remaining to guessed and reveals it at exactly `reveal`.
GameState apply_answer(const GameState& state, Symbol s, const Positions& reveal);

/// Reveal sets are ordered by size, then lexicographically.
bool reveal_order_less(const Positions& a, const Positions& b);

}  // namespace hangman
