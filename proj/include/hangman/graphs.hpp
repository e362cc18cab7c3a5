#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hangman/core.hpp"

namespace hangman {

/// Simple undirected 3-regular graph. Vertex v carries the label Symbol(v + 1).
class CubicGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Validates simplicity and 3-regularity; throws Error(contract) otherwise.
  CubicGraph(std::vector<std::string> names, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return names_.size(); }
  const std::array<std::size_t, 3>& neighbors(std::size_t v) const { return adj_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const;
  Symbol label(std::size_t v) const { return Symbol(static_cast<SymbolId>(v + 1)); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Each undirected edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::array<std::size_t, 3>> adj_;
};

/// Reads "u v" edge lines ('#' comments); names get ids in order of first appearance.
CubicGraph parse_graph(std::string_view text);
CubicGraph read_graph_file(const std::string& path);

/// "k4", "k33", "cube" or "petersen".
std::optional<CubicGraph> builtin_graph(std::string_view name);
std::vector<std::string> builtin_graph_names();

/// Built-in name, else a path to a graph file.
CubicGraph load_graph(const std::string& name_or_path);

/// Pairing-model sample with rejection of loops and multi-edges. Deterministic in seed.
CubicGraph random_cubic(std::size_t n, std::uint64_t seed);

/// Bipartite graph with `size` nodes per side; adjacency[l] lists right-side neighbors of l.
struct BipartiteGraph {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t edge_count() const;
};

/// left u⁻ joined to right v⁺ for every ordered pair of adjacent (u, v).
BipartiteGraph double_cover(const CubicGraph& g);

/// match[l] = right node matched to left node l.
using Matching = std::vector<std::size_t>;

/// Perfect matching of a regular bipartite graph (Hopcroft–Karp).
/// Throws Error(contract) when the input is not r-regular with r >= 1.
Matching perfect_matching(const BipartiteGraph& b);

enum class EdgeColor : std::uint8_t { red = 0, green = 1, blue = 2 };

/// Coloring of the symmetric digraph of a cubic graph: out[u][c] is the head
/// of the arc leaving u with color c.
struct EdgeColoring {
  std::vector<std::array<std::size_t, 3>> out;

  std::size_t target(std::size_t u, EdgeColor c) const {
    return out.at(u)[static_cast<std::size_t>(c)];
  }
};

/// Each vertex leaves and receives exactly one arc of every color, and arcs
/// follow graph edges.
bool is_proper_coloring(const CubicGraph& g, const EdgeColoring& coloring);

/// Decomposes the double cover into three perfect matchings (red, blue, then
/// green as the remainder) and colors arc (u, v) like the edge (u⁻, v⁺).
EdgeColoring three_color(const CubicGraph& g);

/// One word per vertex u: label(u), red target, green target, blue target.
Lexicon proper_encode(const CubicGraph& g);

/// True iff every symbol of [1..sigma] appears exactly once in each position.
/// Requires words of length 4.
bool properness_check(const Lexicon& lexicon);

struct DominationCertificate {
  std::size_t gamma = 0;
  std::vector<std::size_t> witness;
};

bool dominates(const CubicGraph& g, std::span<const std::size_t> vertices);

/// Minimum dominating set by increasing-size exhaustive search (n <= 20).
DominationCertificate dominating_number(const CubicGraph& g);

}  // namespace hangman
