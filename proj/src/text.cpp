#include "hangman/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hangman {

namespace {

bool uses_letters(std::size_t sigma) { return sigma <= kLetterAlphabetLimit; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t parse_decimal(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Error::Kind::contract, "bad number '" + std::string(s) + "'");
  }
  return v;
}

SymbolId checked_id(std::size_t id, std::size_t sigma) {
  if (id == 0 || id > sigma || id > 0xFFFF) {
    throw Error(Error::Kind::contract,
                "symbol " + std::to_string(id) + " outside alphabet [1.." + std::to_string(sigma) + "]");
  }
  return static_cast<SymbolId>(id);
}

// Raw ids of one lexicon line, unchecked against sigma.
std::vector<SymbolId> line_ids(std::string_view line, bool& decimal_mode, bool& mode_known) {
  const bool decimal = line.find_first_of(" \t") != std::string_view::npos || all_digits(line);
  if (mode_known && decimal != decimal_mode) {
    throw Error(Error::Kind::contract, "lexicon mixes letter and decimal words");
  }
  decimal_mode = decimal;
  mode_known = true;
  std::vector<SymbolId> ids;
  if (decimal) {
    for (auto tok : split_ws(line)) {
      if (!all_digits(tok)) throw Error(Error::Kind::contract, "bad token '" + std::string(tok) + "'");
      const auto v = parse_decimal(tok);
      if (v == 0 || v > 0xFFFF) throw Error(Error::Kind::contract, "symbol id out of range");
      ids.push_back(static_cast<SymbolId>(v));
    }
  } else {
    for (char c : line) {
      if (c < 'a' || c > 'z') {
        throw Error(Error::Kind::contract, std::string("bad letter '") + c + "'");
      }
      ids.push_back(static_cast<SymbolId>(c - 'a' + 1));
    }
  }
  return ids;
}

}  // namespace

std::string format_symbol(Symbol s, std::size_t sigma) {
  if (s.id == kBlank) return "_";
  if (uses_letters(sigma)) return std::string(1, static_cast<char>('a' + s.id - 1));
  return std::to_string(s.id);
}

std::string format_mask(const Mask& m, std::size_t sigma) {
  std::string out;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (!uses_letters(sigma) && i > 0) out += ' ';
    out += format_symbol(Symbol(m[i]), sigma);
  }
  return out;
}

std::string format_positions(const Positions& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "}";
}

Symbol parse_symbol(std::string_view text, std::size_t sigma) {
  text = trim(text);
  if (all_digits(text)) return Symbol(checked_id(parse_decimal(text), sigma));
  if (text.size() == 1) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
    if (c >= 'a' && c <= 'z') return Symbol(checked_id(static_cast<std::size_t>(c - 'a' + 1), sigma));
  }
  throw Error(Error::Kind::contract, "bad symbol '" + std::string(text) + "'");
}

Mask parse_mask(std::string_view text, std::size_t sigma) {
  text = trim(text);
  std::vector<SymbolId> cells;
  if (uses_letters(sigma) && text.find_first_of(" \t") == std::string_view::npos) {
    for (char c : text) {
      cells.push_back(c == '_' ? kBlank : parse_symbol(std::string_view(&c, 1), sigma).id);
    }
  } else {
    for (auto tok : split_ws(text)) {
      cells.push_back(tok == "_" ? kBlank : parse_symbol(tok, sigma).id);
    }
  }
  return Mask(std::move(cells));
}

Word parse_word(std::string_view text, std::size_t sigma) { return Word(parse_mask(text, sigma)); }

Lexicon read_lexicon(std::istream& in) {
  std::vector<std::vector<SymbolId>> rows;
  std::size_t header_sigma = 0;
  bool decimal = false;
  bool mode_known = false;
  std::string raw;
  while (std::getline(in, raw)) {
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("sigma=")) {
      if (!rows.empty() || header_sigma != 0) {
        throw Error(Error::Kind::contract, "sigma header must precede all words");
      }
      header_sigma = parse_decimal(trim(line.substr(6)));
      if (header_sigma == 0) throw Error(Error::Kind::contract, "sigma must be positive");
      continue;
    }
    rows.push_back(line_ids(line, decimal, mode_known));
  }
  if (rows.empty()) throw Error(Error::Kind::contract, "lexicon must contain at least one word");

  std::size_t max_id = 0;
  for (const auto& r : rows) {
    for (auto c : r) max_id = std::max<std::size_t>(max_id, c);
  }
  std::size_t sigma = max_id;
  if (header_sigma != 0) {
    if (header_sigma < max_id) {
      throw Error(Error::Kind::contract, "sigma header smaller than largest symbol used");
    }
    sigma = header_sigma;
  }
  std::vector<Word> words;
  words.reserve(rows.size());
  for (auto& r : rows) words.emplace_back(std::move(r));
  return Lexicon(std::move(words), sigma);
}

Lexicon read_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::contract, "cannot open lexicon file '" + path + "'");
  return read_lexicon(in);
}

Lexicon parse_lexicon(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_lexicon(in);
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  std::size_t max_id = 0;
  for (const auto& w : lexicon.words()) {
    for (auto c : w.as_mask().cells()) max_id = std::max<std::size_t>(max_id, c);
  }
  if (lexicon.sigma() != max_id) out << "sigma=" << lexicon.sigma() << '\n';
  for (const auto& w : lexicon.words()) out << format_word(w, lexicon.sigma()) << '\n';
}

std::string format_lexicon(const Lexicon& lexicon) {
  std::ostringstream out;
  write_lexicon(out, lexicon);
  return out.str();
}

}  // namespace hangman
