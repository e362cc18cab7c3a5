#include "hangman/solver.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

namespace hangman {

namespace {

Positions positions_of(std::uint32_t pattern) {
  Positions out;
  for (std::size_t i = 0; pattern != 0; ++i, pattern >>= 1) {
    if (pattern & 1U) out.push_back(i + 1);
  }
  return out;
}

std::size_t count_blanks(const std::vector<SymbolId>& mask) {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), kBlank));
}

}  // namespace

bool within_limits(const Lexicon& lexicon, const SolverLimits& limits) {
  std::vector<bool> used(lexicon.sigma() + 1, false);
  std::size_t n_used = 0;
  for (const auto& w : lexicon.words()) {
    for (auto c : w.as_mask().cells()) {
      if (!used[c]) {
        used[c] = true;
        ++n_used;
      }
    }
  }
  return n_used <= limits.max_used_symbols && n_used <= 64 &&
         lexicon.word_length() <= limits.max_word_length && lexicon.word_length() <= 32 &&
         lexicon.size() <= limits.max_words;
}

std::size_t Solver::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(k.remaining);
  for (auto c : k.mask) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Solver::Solver(std::shared_ptr<const Lexicon> lexicon, const SolverLimits& limits)
    : lexicon_(std::move(lexicon)) {
  if (!lexicon_) throw Error(Error::Kind::contract, "solver requires a lexicon");
  if (!within_limits(*lexicon_, limits)) {
    throw Error(Error::Kind::guardrail, "lexicon exceeds solver limits");
  }
  compact_of_.assign(lexicon_->sigma() + 1, -1);
  std::vector<bool> used(lexicon_->sigma() + 1, false);
  for (const auto& w : lexicon_->words()) {
    for (auto c : w.as_mask().cells()) used[c] = true;
  }
  for (std::size_t id = 1; id <= lexicon_->sigma(); ++id) {
    if (used[id]) {
      compact_of_[id] = static_cast<int>(used_.size());
      used_.push_back(static_cast<SymbolId>(id));
    }
  }
}

std::vector<Solver::Class> Solver::classes_of(const std::vector<SymbolId>& mask, SymbolId symbol,
                                              const std::vector<std::uint32_t>& consistent) const {
  std::vector<Class> classes;
  for (auto idx : consistent) {
    const Word& w = (*lexicon_)[idx];
    std::uint32_t pattern = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i] == kBlank && w[i] == symbol) pattern |= (1U << i);
    }
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const Class& c) { return c.pattern == pattern; });
    if (it == classes.end()) {
      classes.push_back(Class{pattern, {idx}});
    } else {
      it->words.push_back(idx);
    }
  }
  // Largest classes first; the setter's tie-break order within equal sizes.
  std::sort(classes.begin(), classes.end(), [](const Class& a, const Class& b) {
    if (a.words.size() != b.words.size()) return a.words.size() > b.words.size();
    return reveal_order_less(positions_of(a.pattern), positions_of(b.pattern));
  });
  return classes;
}

int Solver::search(const std::vector<SymbolId>& mask, std::uint64_t remaining,
                   const std::vector<std::uint32_t>& consistent) {
  if (count_blanks(mask) == 0 || consistent.size() == 1) return 0;

  Key key{mask, remaining};
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  ++states_expanded_;

  int best = INT_MAX;
  for (std::uint64_t bits = remaining; bits != 0 && best > 0; bits &= bits - 1) {
    const auto b = static_cast<unsigned>(std::countr_zero(bits));
    const SymbolId symbol = used_[b];
    auto classes = classes_of(mask, symbol, consistent);
    // A symbol absent from every consistent blank is a pure loss for the guesser.
    if (classes.size() == 1 && classes.front().pattern == 0) continue;

    const std::uint64_t child_remaining = remaining & ~(std::uint64_t{1} << b);
    int setter = 0;
    for (const auto& cls : classes) {
      std::vector<SymbolId> child = mask;
      for (std::size_t i = 0; i < child.size(); ++i) {
        if (cls.pattern & (1U << i)) child[i] = symbol;
      }
      const int v = (cls.pattern == 0 ? 1 : 0) + search(child, child_remaining, cls.words);
      setter = std::max(setter, v);
      if (setter >= best) break;  // the guesser already has something at least as good
    }
    best = std::min(best, setter);
  }
  if (best == INT_MAX) throw std::logic_error("no productive guess in a live state");
  table_.emplace(std::move(key), best);
  return best;
}

std::uint64_t Solver::compact_remaining(const AlphabetSet& remaining) const {
  std::uint64_t bits = 0;
  for (std::size_t b = 0; b < used_.size(); ++b) {
    if (remaining.contains(Symbol(used_[b]))) bits |= (std::uint64_t{1} << b);
  }
  return bits;
}

void Solver::check_state(const GameState& state) const {
  if (state.lexicon != lexicon_ &&
      (!state.lexicon || state.lexicon->words() != lexicon_->words())) {
    throw Error(Error::Kind::contract, "state belongs to a different lexicon");
  }
  if (state.consistent.empty()) throw Error(Error::Kind::contract, "state has no consistent word");
}

int Solver::value(const GameState& state) {
  check_state(state);
  std::vector<SymbolId> mask(state.mask.cells().begin(), state.mask.cells().end());
  std::vector<std::uint32_t> consistent(state.consistent.begin(), state.consistent.end());
  return search(mask, compact_remaining(state.remaining), consistent);
}

Positions Solver::best_reply(const GameState& state, Symbol s) {
  check_state(state);
  if (!state.remaining.contains(s)) {
    throw Error(Error::Kind::contract, "symbol is not in the remaining alphabet");
  }
  std::vector<SymbolId> mask(state.mask.cells().begin(), state.mask.cells().end());
  std::vector<std::uint32_t> consistent(state.consistent.begin(), state.consistent.end());
  const std::uint64_t remaining = compact_remaining(state.remaining);
  const int b = s.id < compact_of_.size() ? compact_of_[s.id] : -1;
  if (b < 0) return {};  // no word uses s: the only legal answer is a rejection
  const std::uint64_t child_remaining = remaining & ~(std::uint64_t{1} << b);

  int best_score = -1;
  Positions best;
  for (const auto& cls : classes_of(mask, s.id, consistent)) {
    std::vector<SymbolId> child = mask;
    for (std::size_t i = 0; i < child.size(); ++i) {
      if (cls.pattern & (1U << i)) child[i] = s.id;
    }
    const int score = (cls.pattern == 0 ? 1 : 0) + search(child, child_remaining, cls.words);
    Positions reveal = positions_of(cls.pattern);
    if (score > best_score || (score == best_score && reveal_order_less(reveal, best))) {
      best_score = score;
      best = std::move(reveal);
    }
  }
  return best;
}

PrincipalLine Solver::principal_line(const GameState& start) {
  check_state(start);
  PrincipalLine line;
  GameState state = start;
  while (!state.mask.complete() && state.consistent.size() > 1) {
    int best_score = INT_MAX;
    Move best_move;
    for (Symbol s : state.remaining.members()) {
      const int b = s.id < compact_of_.size() ? compact_of_[s.id] : -1;
      if (b < 0) continue;
      Positions reply = best_reply(state, s);
      GameState next = apply_answer(state, s, reply);
      const int score = (reply.empty() ? 1 : 0) + value(next);
      bool productive = !reply.empty() || next.consistent.size() < state.consistent.size();
      if (!productive) continue;
      if (score < best_score) {
        best_score = score;
        best_move = Move{s, std::move(reply)};
      }
    }
    if (best_score == INT_MAX) throw std::logic_error("principal line stalled");
    state = apply_answer(state, best_move.guess, best_move.reveal);
    line.push_back(std::move(best_move));
  }
  return line;
}

SolveReport Solver::solve() {
  GameState root = GameState::fresh(lexicon_);
  SolveReport report;
  report.value = value(root);
  report.principal_line = principal_line(root);
  report.states_expanded = states_expanded_;
  report.table_size = table_.size();
  return report;
}

SolveReport solve(const Lexicon& lexicon) {
  Solver solver(std::make_shared<const Lexicon>(lexicon));
  return solver.solve();
}

// ---------------------------------------------------------------------------
// Reference evaluator

namespace {

struct BruteResult {
  int value;
  PrincipalLine line;
};

BruteResult brute(const GameState& state, std::size_t& nodes) {
  ++nodes;
  if (state.mask.complete()) return {0, {}};

  const Positions open = blanks(state.mask);
  BruteResult best{INT_MAX, {}};
  for (Symbol s : state.remaining.members()) {
    BruteResult setter{-1, {}};
    Positions setter_reveal;
    for (std::uint32_t subset = 0; subset < (1U << open.size()); ++subset) {
      Positions reveal;
      for (std::size_t j = 0; j < open.size(); ++j) {
        if (subset & (1U << j)) reveal.push_back(open[j]);
      }
      const Mask candidate = overlay(state.mask, pattern_mask(s, reveal, state.mask.length()));
      // The reveal is legal iff some consistent word has s exactly at `reveal`.
      bool legal = false;
      for (auto idx : state.consistent) {
        const Word& w = (*state.lexicon)[idx];
        if (!precedes(candidate, w.as_mask())) continue;
        bool exact = true;
        for (auto p : open) {
          const bool revealed = std::find(reveal.begin(), reveal.end(), p) != reveal.end();
          if (!revealed && w[p - 1] == s.id) exact = false;
        }
        if (exact) {
          legal = true;
          break;
        }
      }
      if (!legal) continue;
      BruteResult child = brute(apply_answer(state, s, reveal), nodes);
      const int score = (reveal.empty() ? 1 : 0) + child.value;
      if (score > setter.value ||
          (score == setter.value && reveal_order_less(reveal, setter_reveal))) {
        setter = {score, std::move(child.line)};
        setter_reveal = reveal;
      }
    }
    if (setter.value < best.value) {
      best.value = setter.value;
      best.line.clear();
      best.line.push_back(Move{s, setter_reveal});
      best.line.insert(best.line.end(), setter.line.begin(), setter.line.end());
    }
  }
  return best;
}

}  // namespace

SolveReport brute_force_solve(const Lexicon& lexicon) {
  if (lexicon.size() > 12 || lexicon.sigma() > 8 || lexicon.word_length() > 5) {
    throw Error(Error::Kind::guardrail, "instance too large for oracle");
  }
  auto shared = std::make_shared<const Lexicon>(lexicon);
  std::size_t nodes = 0;
  BruteResult r = brute(GameState::fresh(shared), nodes);
  SolveReport report;
  report.value = r.value;
  report.principal_line = std::move(r.line);
  report.states_expanded = nodes;
  report.table_size = 0;
  return report;
}

bool decide(const Lexicon& lexicon, int d) {
  if (d < 0) throw Error(Error::Kind::contract, "d must be non-negative");
  if (d == 0) return true;
  return solve(lexicon).value >= d;
}

int replay_fails(std::shared_ptr<const Lexicon> lexicon, const PrincipalLine& line) {
  GameState state = GameState::fresh(std::move(lexicon));
  for (const auto& move : line) state = apply_answer(state, move.guess, move.reveal);
  return state.failed;
}

}  // namespace hangman
