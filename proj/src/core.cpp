#include "hangman/core.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace hangman {

namespace {

void require_same_length(const Mask& a, const Mask& b) {
  if (a.length() != b.length()) {
    throw Error(Error::Kind::contract, "mask length mismatch: " + std::to_string(a.length()) +
                                           " vs " + std::to_string(b.length()));
  }
}

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// AlphabetSet

AlphabetSet::AlphabetSet(std::size_t sigma, bool full)
    : sigma_(sigma), bits_((sigma + 63) / 64, 0) {
  if (full) {
    for (std::size_t id = 1; id <= sigma; ++id) insert(Symbol(static_cast<SymbolId>(id)));
  }
}

bool AlphabetSet::contains(Symbol s) const noexcept {
  if (s.id == 0 || s.id > sigma_) return false;
  const std::size_t i = s.id - 1;
  return (bits_[i / 64] >> (i % 64)) & 1U;
}

void AlphabetSet::insert(Symbol s) {
  if (s.id == 0 || s.id > sigma_) {
    throw Error(Error::Kind::contract, "symbol " + std::to_string(s.id) + " outside alphabet");
  }
  const std::size_t i = s.id - 1;
  bits_[i / 64] |= (std::uint64_t{1} << (i % 64));
}

void AlphabetSet::erase(Symbol s) {
  if (s.id == 0 || s.id > sigma_) return;
  const std::size_t i = s.id - 1;
  bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t AlphabetSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Symbol> AlphabetSet::members() const {
  std::vector<Symbol> out;
  for (std::size_t id = 1; id <= sigma_; ++id) {
    Symbol s(static_cast<SymbolId>(id));
    if (contains(s)) out.push_back(s);
  }
  return out;
}

AlphabetSet AlphabetSet::complement() const {
  AlphabetSet out(sigma_);
  for (std::size_t id = 1; id <= sigma_; ++id) {
    Symbol s(static_cast<SymbolId>(id));
    if (!contains(s)) out.insert(s);
  }
  return out;
}

std::size_t AlphabetSet::hash() const noexcept {
  std::size_t h = sigma_;
  for (auto w : bits_) h = mix(h, std::hash<std::uint64_t>{}(w));
  return h;
}

// ---------------------------------------------------------------------------
// Mask / Word / Lexicon

Mask::Mask(std::vector<SymbolId> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw Error(Error::Kind::contract, "mask length must be at least 1");
}

bool Mask::complete() const noexcept {
  return std::none_of(cells_.begin(), cells_.end(), [](SymbolId c) { return c == kBlank; });
}

std::size_t Mask::hash() const noexcept {
  std::size_t h = cells_.size();
  for (auto c : cells_) h = mix(h, c);
  return h;
}

Word::Word(std::vector<SymbolId> cells) : Word(Mask(std::move(cells))) {}

Word::Word(Mask m) : mask_(std::move(m)) {
  if (!mask_.complete()) throw Error(Error::Kind::contract, "a word may not contain blanks");
}

bool Word::contains(Symbol s) const noexcept {
  const auto cells = mask_.cells();
  return std::find(cells.begin(), cells.end(), s.id) != cells.end();
}

Lexicon::Lexicon(std::vector<Word> words, std::size_t sigma)
    : words_(std::move(words)), sigma_(sigma) {
  if (words_.empty()) throw Error(Error::Kind::contract, "lexicon must contain at least one word");
  const std::size_t k = words_.front().length();
  std::set<Word> seen;
  for (const auto& w : words_) {
    if (w.length() != k) {
      throw Error(Error::Kind::contract, "lexicon words must share one length");
    }
    for (auto c : w.as_mask().cells()) {
      if (c > sigma_) {
        throw Error(Error::Kind::contract,
                    "symbol id " + std::to_string(c) + " exceeds sigma " + std::to_string(sigma_));
      }
    }
    if (!seen.insert(w).second) throw Error(Error::Kind::contract, "duplicate word in lexicon");
  }
}

// ---------------------------------------------------------------------------
// Mask algebra

bool precedes(const Mask& a, const Mask& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a[i] != kBlank && a[i] != b[i]) return false;
  }
  return true;
}

Mask overlay(const Mask& a, const Mask& b) {
  require_same_length(a, b);
  std::vector<SymbolId> out(a.cells().begin(), a.cells().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == kBlank) out[i] = b[i];
  }
  return Mask(std::move(out));
}

Mask meet(const Mask& a, const Mask& b) {
  require_same_length(a, b);
  std::vector<SymbolId> out(a.length(), kBlank);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (a[i] == b[i]) out[i] = a[i];
  }
  return Mask(std::move(out));
}

Mask reveal_with_word(const Mask& m, const Word& w, Symbol s) {
  if (!precedes(m, w.as_mask())) {
    throw Error(Error::Kind::contract, "mask is not consistent with the word");
  }
  if (s.id == kBlank) throw Error(Error::Kind::contract, "cannot guess the blank symbol");
  std::vector<SymbolId> only_s(m.length(), kBlank);
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (w[i] == s.id) only_s[i] = s.id;
  }
  return overlay(m, Mask(std::move(only_s)));
}

Positions blanks(const Mask& m) {
  Positions out;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (m[i] == kBlank) out.push_back(i + 1);
  }
  return out;
}

Mask pattern_mask(Symbol s, const Positions& positions, std::size_t k) {
  std::vector<SymbolId> cells(k, kBlank);
  for (auto p : positions) {
    if (p < 1 || p > k) {
      throw Error(Error::Kind::contract, "position " + std::to_string(p) + " out of range");
    }
    cells[p - 1] = s.id;
  }
  return Mask(std::move(cells));
}

std::vector<std::size_t> consistent_set(const Lexicon& lexicon, const Mask& m,
                                        const AlphabetSet& guessed) {
  require_same_length(m, lexicon[0].as_mask());
  std::vector<std::size_t> out;
  for (std::size_t idx = 0; idx < lexicon.size(); ++idx) {
    const Word& w = lexicon[idx];
    bool ok = true;
    for (std::size_t i = 0; i < m.length() && ok; ++i) {
      if (m[i] == kBlank) {
        ok = !guessed.contains(Symbol(w[i]));
      } else {
        ok = m[i] == w[i];
      }
    }
    if (ok) out.push_back(idx);
  }
  return out;
}

Positions occurrence_pattern(const Mask& m, const Word& w, Symbol s) {
  Positions out;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (m[i] == kBlank && w[i] == s.id) out.push_back(i + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Game transitions

GameState GameState::fresh(std::shared_ptr<const Lexicon> lexicon) {
  if (!lexicon) throw Error(Error::Kind::contract, "game state requires a lexicon");
  GameState st;
  st.mask = Mask::blank(lexicon->word_length());
  st.remaining = AlphabetSet::full(lexicon->sigma());
  st.guessed = AlphabetSet(lexicon->sigma());
  st.consistent.resize(lexicon->size());
  for (std::size_t i = 0; i < lexicon->size(); ++i) st.consistent[i] = i;
  st.lexicon = std::move(lexicon);
  return st;
}

GameState apply_answer(const GameState& state, Symbol s, const Positions& reveal) {
  if (state.guessed.contains(s)) {
    throw Error(Error::Kind::repeated_guess, "symbol already guessed");
  }
  if (!state.remaining.contains(s)) {
    throw Error(Error::Kind::contract, "symbol " + std::to_string(s.id) + " outside alphabet");
  }
  const std::size_t k = state.mask.length();
  Positions sorted = reveal;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Error::Kind::contract, "duplicate reveal position");
  }
  for (auto p : sorted) {
    if (p < 1 || p > k || !state.mask.is_blank(p - 1)) {
      throw Error(Error::Kind::contract, "reveal position " + std::to_string(p) + " is not blank");
    }
  }

  std::vector<std::size_t> survivors;
  for (auto idx : state.consistent) {
    if (occurrence_pattern(state.mask, (*state.lexicon)[idx], s) == sorted) {
      survivors.push_back(idx);
    }
  }
  if (survivors.empty()) {
    throw Error(Error::Kind::inconsistent_answer, "inconsistent answer");
  }

  GameState next;
  next.lexicon = state.lexicon;
  next.mask = overlay(state.mask, pattern_mask(s, sorted, k));
  next.remaining = state.remaining;
  next.remaining.erase(s);
  next.guessed = state.guessed;
  next.guessed.insert(s);
  next.failed = state.failed + (sorted.empty() ? 1 : 0);
  next.consistent = std::move(survivors);
  return next;
}

bool reveal_order_less(const Positions& a, const Positions& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace hangman
