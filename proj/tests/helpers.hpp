#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hangman/core.hpp"
#include "hangman/text.hpp"

namespace testing_helpers {

inline hangman::Mask M(const std::string& s) { return hangman::parse_mask(s, 26); }
inline hangman::Word W(const std::string& s) { return hangman::parse_word(s, 26); }
inline hangman::Symbol S(char c) { return hangman::Symbol(static_cast<hangman::SymbolId>(c - 'a' + 1)); }

/// Lexicon over letters; sigma defaults to the largest letter used.
inline std::shared_ptr<const hangman::Lexicon> lex(const std::vector<std::string>& words,
                                                   std::size_t sigma = 0) {
  std::vector<hangman::Word> ws;
  std::size_t max_id = 0;
  for (const auto& w : words) {
    ws.push_back(W(w));
    for (char c : w) max_id = std::max<std::size_t>(max_id, static_cast<std::size_t>(c - 'a' + 1));
  }
  return std::make_shared<const hangman::Lexicon>(std::move(ws), sigma ? sigma : max_id);
}

inline std::shared_ptr<const hangman::Lexicon> fig2() {
  return lex({"abbc", "abcb", "abcc", "dddd", "eeee"});
}

inline std::vector<std::string> words_of(const hangman::GameState& st) {
  std::vector<std::string> out;
  for (auto idx : st.consistent) {
    out.push_back(hangman::format_word((*st.lexicon)[idx], st.lexicon->sigma()));
  }
  return out;
}

}  // namespace testing_helpers
