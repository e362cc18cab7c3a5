#include "hangman/generators.hpp"

#include <memory>
#include <sstream>

#include "hangman/solver.hpp"
#include "hangman/strategies.hpp"

namespace hangman {

AdversarialFamilySpec AdversarialFamilySpec::for_m(std::size_t m) {
  if (m < 1) throw Error(Error::Kind::contract, "adversarial family needs m >= 1");
  if (m > 1000) throw Error(Error::Kind::guardrail, "m too large");
  AdversarialFamilySpec spec;
  spec.m = m;
  spec.sigma = m + 3;
  spec.k = 2;
  while ((std::size_t{1} << (spec.k - 1)) < m + 3) ++spec.k;
  return spec;
}

Lexicon adversarial_family(std::size_t m) {
  const auto spec = AdversarialFamilySpec::for_m(m);
  const std::size_t tail = spec.k - 1;
  std::vector<Word> words;

  // Bit i of `code` (most significant first) picks gamma over beta, so counting
  // upwards walks the {beta, gamma} strings in lexicographic order.
  for (std::uint64_t code = 0; words.size() < m + 1; ++code) {
    if (code == 0 || code == (std::uint64_t{1} << tail) - 1) continue;  // pure strings
    std::vector<SymbolId> cells{spec.alpha.id};
    for (std::size_t i = 0; i < tail; ++i) {
      const bool g = (code >> (tail - 1 - i)) & 1U;
      cells.push_back(g ? spec.gamma.id : spec.beta.id);
    }
    words.emplace_back(std::move(cells));
  }
  for (std::size_t j = 1; j <= m; ++j) {
    words.emplace_back(std::vector<SymbolId>(spec.k, spec.eta(j).id));
  }
  return Lexicon(std::move(words), spec.sigma);
}

SeparationReport verify_separation(std::size_t m) {
  if (m > 3) throw Error(Error::Kind::guardrail, "separation check is limited to m <= 3");
  auto lexicon = std::make_shared<const Lexicon>(adversarial_family(m));
  SeparationReport report;
  report.m = m;
  report.greedy_value = evaluate_setter(GameState::fresh(lexicon), GreedySetter{}).value;
  report.optimal_value = Solver(lexicon).solve().value;
  return report;
}

ReductionInstance build_reduction(const CubicGraph& g) {
  if (g.size() > 12) throw Error(Error::Kind::guardrail, "reduction check is limited to n <= 12");
  Lexicon lexicon = proper_encode(g);
  if (!properness_check(lexicon)) throw std::logic_error("encoding is not proper");
  const auto cert = dominating_number(g);
  const int value = solve(lexicon).value;
  return ReductionInstance{g, std::move(lexicon), cert.gamma, value};
}

bool verify_domination_equivalence(const ReductionInstance& instance, int d) {
  if (d < 0) throw Error(Error::Kind::contract, "d must be non-negative");
  // decide(L, d) is value >= d; reuse the solved value rather than re-solving.
  const bool setter_wins = d == 0 || instance.game_value >= d;
  return (instance.gamma <= static_cast<std::size_t>(d)) == !setter_wins;
}

bool verify_domination_equivalence(const CubicGraph& g, int d) {
  if (g.size() > 12) throw Error(Error::Kind::guardrail, "reduction check is limited to n <= 12");
  if (d < 0) throw Error(Error::Kind::contract, "d must be non-negative");
  const auto gamma = dominating_number(g).gamma;
  return (gamma <= static_cast<std::size_t>(d)) == !decide(proper_encode(g), d);
}

std::string format_report(const SeparationReport& r) {
  std::ostringstream out;
  out << "m=" << r.m << "\ngreedy=" << r.greedy_value << "\noptimal=" << r.optimal_value
      << "\nok=" << (r.holds() ? "true" : "false") << '\n';
  return out.str();
}

std::string format_report(const ReductionInstance& r) {
  std::ostringstream out;
  out << "n=" << r.graph.size() << "\ngamma=" << r.gamma << "\nvalue=" << r.game_value
      << "\nok=" << (r.holds() ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace hangman
