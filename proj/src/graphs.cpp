#include "hangman/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace hangman {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return names;
}

CubicGraph from_pairs(std::vector<std::string> names,
                      std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<CubicGraph::Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return CubicGraph(std::move(names), edges);
}

}  // namespace

// ---------------------------------------------------------------------------
// CubicGraph

CubicGraph::CubicGraph(std::vector<std::string> names, const std::vector<Edge>& edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n < 4 || n % 2 != 0) {
    throw Error(Error::Kind::contract, "a cubic graph needs an even number (>= 4) of vertices");
  }
  std::vector<std::vector<std::size_t>> adj(n);
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(Error::Kind::contract, "edge endpoint out of range");
    if (u == v) throw Error(Error::Kind::contract, "self-loop on '" + names_[u] + "'");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error(Error::Kind::contract,
                  "repeated edge '" + names_[u] + "'-'" + names_[v] + "'");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  adj_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() != 3) {
      throw Error(Error::Kind::contract, "vertex '" + names_[v] + "' has degree " +
                                             std::to_string(adj[v].size()) + ", expected 3");
    }
    std::sort(adj[v].begin(), adj[v].end());
    std::copy(adj[v].begin(), adj[v].end(), adj_[v].begin());
  }
}

bool CubicGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nb = adj_.at(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<CubicGraph::Edge> CubicGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

CubicGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::map<std::string, std::size_t> ids;
  std::vector<std::string> names;
  std::vector<CubicGraph::Edge> edges;
  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;
    if (!(fields >> v) || (fields >> extra)) {
      throw Error(Error::Kind::contract, "line " + std::to_string(lineno) + ": expected 'u v'");
    }
    const auto a = id_of(u);
    const auto b = id_of(v);
    edges.emplace_back(a, b);
  }
  return CubicGraph(std::move(names), edges);
}

CubicGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::contract, "cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::optional<CubicGraph> builtin_graph(std::string_view name) {
  if (name == "k4") {
    return from_pairs({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "k33") {
    return from_pairs({"a", "b", "c", "x", "y", "z"},
                      {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  }
  if (name == "cube") {
    // Vertices are 3-bit strings; edges flip one bit.
    std::vector<CubicGraph::Edge> edges;
    for (std::size_t v = 0; v < 8; ++v) {
      for (std::size_t bit = 1; bit < 8; bit <<= 1) {
        if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
      }
    }
    return CubicGraph({"000", "001", "010", "011", "100", "101", "110", "111"}, edges);
  }
  if (name == "petersen") {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<CubicGraph::Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      edges.emplace_back(i, i + 5);
    }
    return CubicGraph(numbered_names(10), edges);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_graph_names() { return {"k4", "k33", "cube", "petersen"}; }

CubicGraph load_graph(const std::string& name_or_path) {
  if (auto g = builtin_graph(name_or_path)) return *g;
  return read_graph_file(name_or_path);
}

CubicGraph random_cubic(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw Error(Error::Kind::contract, "random cubic graph needs even n >= 4");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> stubs(3 * n);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = i / 3;

  for (int attempt = 0; attempt < 100000; ++attempt) {
    // Fisher–Yates on raw engine output keeps the sample identical across standard libraries.
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[rng() % (i + 1)]);
    }
    std::set<CubicGraph::Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const auto u = std::min(stubs[i], stubs[i + 1]);
      const auto v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && edges.insert({u, v}).second;
    }
    if (simple) {
      return CubicGraph(numbered_names(n), std::vector<CubicGraph::Edge>(edges.begin(), edges.end()));
    }
  }
  throw Error(Error::Kind::contract, "pairing model failed to produce a simple graph");
}

// ---------------------------------------------------------------------------
// Matchings and colorings

std::size_t BipartiteGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& nb : adjacency) m += nb.size();
  return m;
}

BipartiteGraph double_cover(const CubicGraph& g) {
  BipartiteGraph b;
  b.size = g.size();
  b.adjacency.resize(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto& nb = g.neighbors(u);
    b.adjacency[u].assign(nb.begin(), nb.end());
  }
  return b;
}

Matching perfect_matching(const BipartiteGraph& b) {
  const std::size_t n = b.size;
  if (n == 0 || b.adjacency.size() != n) {
    throw Error(Error::Kind::contract, "bipartite graph must have equal non-empty sides");
  }
  const std::size_t r = b.adjacency[0].size();
  std::vector<std::size_t> right_degree(n, 0);
  for (const auto& nb : b.adjacency) {
    if (nb.size() != r || r == 0) throw Error(Error::Kind::contract, "graph is not regular");
    std::set<std::size_t> distinct(nb.begin(), nb.end());
    if (distinct.size() != nb.size()) throw Error(Error::Kind::contract, "parallel edges");
    for (auto v : nb) {
      if (v >= n) throw Error(Error::Kind::contract, "right node out of range");
      ++right_degree[v];
    }
  }
  if (std::any_of(right_degree.begin(), right_degree.end(), [r](auto d) { return d != r; })) {
    throw Error(Error::Kind::contract, "graph is not regular");
  }

  // Hopcroft–Karp: BFS layers from free left nodes, then vertex-disjoint augmenting DFS.
  std::vector<std::size_t> match_left(n, kNone), match_right(n, kNone), dist(n);
  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < n; ++l) {
      dist[l] = match_left[l] == kNone ? 0 : kNone;
      if (dist[l] == 0) q.push(l);
    }
    while (!q.empty()) {
      const auto l = q.front();
      q.pop();
      for (auto rr : b.adjacency[l]) {
        const auto next = match_right[rr];
        if (next == kNone) {
          found = true;
        } else if (dist[next] == kNone) {
          dist[next] = dist[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, std::size_t l) -> bool {
    for (auto rr : b.adjacency[l]) {
      const auto next = match_right[rr];
      if (next == kNone || (dist[next] == dist[l] + 1 && self(self, next))) {
        match_left[l] = rr;
        match_right[rr] = l;
        return true;
      }
    }
    dist[l] = kNone;
    return false;
  };
  std::size_t size = 0;
  while (bfs()) {
    for (std::size_t l = 0; l < n; ++l) {
      if (match_left[l] == kNone && dfs(dfs, l)) ++size;
    }
  }
  if (size != n) throw std::logic_error("regular bipartite graph without a perfect matching");
  return match_left;
}

bool is_proper_coloring(const CubicGraph& g, const EdgeColoring& coloring) {
  const std::size_t n = g.size();
  if (coloring.out.size() != n) return false;
  std::vector<std::array<int, 3>> incoming(n, {0, 0, 0});
  for (std::size_t u = 0; u < n; ++u) {
    std::set<std::size_t> heads;
    for (std::size_t c = 0; c < 3; ++c) {
      const auto v = coloring.out[u][c];
      if (v >= n || !g.adjacent(u, v)) return false;
      heads.insert(v);
      ++incoming[v][c];
    }
    if (heads.size() != 3) return false;
  }
  return std::all_of(incoming.begin(), incoming.end(),
                     [](const auto& in) { return in[0] == 1 && in[1] == 1 && in[2] == 1; });
}

EdgeColoring three_color(const CubicGraph& g) {
  BipartiteGraph b = double_cover(g);
  EdgeColoring coloring;
  coloring.out.assign(g.size(), {kNone, kNone, kNone});

  auto take = [&](EdgeColor color, const Matching& m) {
    for (std::size_t u = 0; u < g.size(); ++u) {
      coloring.out[u][static_cast<std::size_t>(color)] = m[u];
      auto& nb = b.adjacency[u];
      nb.erase(std::find(nb.begin(), nb.end(), m[u]));
    }
  };
  take(EdgeColor::red, perfect_matching(b));
  take(EdgeColor::blue, perfect_matching(b));
  // What is left is 1-regular, i.e. already a perfect matching.
  Matching rest(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) rest[u] = b.adjacency[u].front();
  take(EdgeColor::green, rest);
  return coloring;
}

Lexicon proper_encode(const CubicGraph& g) {
  const EdgeColoring coloring = three_color(g);
  std::vector<Word> words;
  words.reserve(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    words.emplace_back(std::vector<SymbolId>{
        g.label(u).id,
        g.label(coloring.target(u, EdgeColor::red)).id,
        g.label(coloring.target(u, EdgeColor::green)).id,
        g.label(coloring.target(u, EdgeColor::blue)).id,
    });
  }
  return Lexicon(std::move(words), g.size());
}

bool properness_check(const Lexicon& lexicon) {
  if (lexicon.word_length() != 4) {
    throw Error(Error::Kind::contract, "properness is defined for words of length 4");
  }
  const std::size_t sigma = lexicon.sigma();
  std::vector<std::array<std::size_t, 4>> seen(sigma + 1, {0, 0, 0, 0});
  for (const auto& w : lexicon.words()) {
    for (std::size_t p = 0; p < 4; ++p) ++seen[w[p]][p];
  }
  for (std::size_t id = 1; id <= sigma; ++id) {
    for (std::size_t p = 0; p < 4; ++p) {
      if (seen[id][p] != 1) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Domination

bool dominates(const CubicGraph& g, std::span<const std::size_t> vertices) {
  std::vector<bool> covered(g.size(), false);
  for (auto v : vertices) {
    covered.at(v) = true;
    for (auto w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

DominationCertificate dominating_number(const CubicGraph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw Error(Error::Kind::guardrail, "graph too large for exhaustive domination");
  std::vector<std::uint32_t> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = 1U << v;
    for (auto w : g.neighbors(v)) closed[v] |= 1U << w;
  }
  const std::uint32_t all = (n == 32) ? ~0U : ((1U << n) - 1);

  for (std::size_t size = 1; size <= n; ++size) {
    // Lexicographic enumeration of size-subsets via a selector vector.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::uint32_t cover = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (pick[v]) cover |= closed[v];
      }
      if (cover == all) {
        DominationCertificate cert;
        cert.gamma = size;
        for (std::size_t v = 0; v < n; ++v) {
          if (pick[v]) cert.witness.push_back(v);
        }
        return cert;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw std::logic_error("no dominating set found");
}

}  // namespace hangman
