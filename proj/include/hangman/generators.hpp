#pragma once

#include <string>

#include "hangman/core.hpp"
#include "hangman/graphs.hpp"

namespace hangman {

/// Shape of the anti-greedy family for a given m.
struct AdversarialFamilySpec {
  std::size_t m = 0;
  std::size_t k = 0;      // smallest k with 2^(k-1) - 2 >= m + 1
  std::size_t sigma = 0;  // m + 3
  Symbol alpha{1}, beta{2}, gamma{3};

  static AdversarialFamilySpec for_m(std::size_t m);
  Symbol eta(std::size_t j) const { return Symbol(static_cast<SymbolId>(3 + j)); }  // j in 1..m
};

/// m + 1 words alpha·s over the smallest mixed {beta, gamma} strings s (both
/// symbols present, beta < gamma), followed by eta_j^k for j = 1..m.
Lexicon adversarial_family(std::size_t m);

struct SeparationReport {
  std::size_t m = 0;
  int greedy_value = 0;
  int optimal_value = 0;

  bool holds() const noexcept { return greedy_value == 0 && optimal_value == static_cast<int>(m); }
};

/// Greedy loss versus optimal loss on adversarial_family(m). Requires m <= 3.
SeparationReport verify_separation(std::size_t m);

struct ReductionInstance {
  CubicGraph graph;
  Lexicon lexicon;
  std::size_t gamma = 0;
  int game_value = 0;

  bool holds() const noexcept { return game_value == static_cast<int>(gamma) - 1; }
};

/// Proper encoding of g with its domination number and game value (n <= 12).
ReductionInstance build_reduction(const CubicGraph& g);

/// (gamma(g) <= d) == !decide(encoding, d).
bool verify_domination_equivalence(const CubicGraph& g, int d);

/// Same, reusing an already built instance.
bool verify_domination_equivalence(const ReductionInstance& instance, int d);

/// key=value lines.
std::string format_report(const SeparationReport& r);
std::string format_report(const ReductionInstance& r);

}  // namespace hangman
