#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hangman/core.hpp"

namespace hangman {

// External text forms. For sigma <= 26 symbols are the letters a..z and a blank
// prints as '_'; larger alphabets use whitespace-separated decimal tokens.

inline constexpr std::size_t kLetterAlphabetLimit = 26;

std::string format_symbol(Symbol s, std::size_t sigma);
std::string format_mask(const Mask& m, std::size_t sigma);
inline std::string format_word(const Word& w, std::size_t sigma) {
  return format_mask(w.as_mask(), sigma);
}
std::string format_positions(const Positions& p);

/// Parses a single symbol. Throws Error(contract) on bad text or id > sigma.
Symbol parse_symbol(std::string_view text, std::size_t sigma);
Mask parse_mask(std::string_view text, std::size_t sigma);
Word parse_word(std::string_view text, std::size_t sigma);

/// Reads the lexicon file format: one word per line, '#' comments, optional
/// "sigma=<n>" header. Throws Error(contract) on malformed input.
Lexicon read_lexicon(std::istream& in);
Lexicon read_lexicon_file(const std::string& path);
Lexicon parse_lexicon(std::string_view text);

/// Writes a lexicon; a sigma header is emitted only when sigma exceeds the largest used id.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);
std::string format_lexicon(const Lexicon& lexicon);

}  // namespace hangman
