#pragma once

// Test-only reference routines. Everything here works from the raw
// definitions and must not call into the code paths it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "scatter/generator.hpp"
#include "scatter/graph.hpp"
#include "scatter/rational.hpp"

namespace scatter {

inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.to_string(); }

inline void PrintTo(const VertexSet& s, std::ostream* os) {
  *os << '{';
  for (Vertex v : s) *os << (v == s.front() ? "" : ",") << v;
  *os << '}';
}

}  // namespace scatter

namespace scatter::testing {

inline Graph fixture(const std::string& name) {
  return read_graph_file(std::string(SCATTER_FIXTURE_DIR) + "/" + name);
}

inline Graph make(Vertex n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(n, e);
}

inline Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make(n, e);
}

inline bool adjacent(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u))
    if (w == v) return true;
  return false;
}

/// omega(G - removed) via union-find over the edge list.
inline std::size_t uf_components(const Graph& g, const std::vector<char>& removed) {
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t count = 0;
  for (Vertex v = 0; v < g.n(); ++v) count += !removed[v];
  for (auto [u, v] : g.edges()) {
    if (removed[u] || removed[v]) continue;
    auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

inline std::size_t uf_components(const Graph& g, const VertexSet& removed) {
  return uf_components(g, removed.mask(g.n()));
}

inline VertexSet from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return VertexSet(out);
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!adjacent(g, s[i], s[j])) return false;
  return true;
}

/// Maximal cliques by enumerating all vertex subsets (n <= 22).
inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
  const Vertex n = g.n();
  std::vector<std::uint64_t> cliques;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = from_mask(mask);
    if (!is_clique(g, s.vector())) continue;
    bool maximal = true;
    for (Vertex v = 0; v < n && maximal; ++v) {
      if (mask >> v & 1) continue;
      auto grown = s.vector();
      grown.push_back(v);
      if (is_clique(g, grown)) maximal = false;
    }
    if (maximal) cliques.push_back(mask);
  }
  std::vector<VertexSet> out;
  for (auto m : cliques) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

/// Elimination order by definition: every vertex's later neighbors are
/// pairwise adjacent.
inline bool brute_is_peo(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(g.n());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    if (!is_clique(g, later)) return false;
  }
  return true;
}

/// Elimination order built by repeatedly removing a simplicial vertex,
/// largest id first. Empty if the graph is not chordal.
inline std::vector<Vertex> simplicial_elimination(const Graph& g) {
  std::vector<char> gone(g.n(), 0);
  std::vector<Vertex> order;
  for (Vertex step = 0; step < g.n(); ++step) {
    Vertex pick = -1;
    for (Vertex v = g.n() - 1; v >= 0 && pick < 0; --v) {
      if (gone[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex w : g.neighbors(v))
        if (!gone[w]) nb.push_back(w);
      if (is_clique(g, nb)) pick = v;
    }
    if (pick < 0) return {};
    gone[pick] = 1;
    order.push_back(pick);
  }
  return order;
}

/// Minimal vertex separators: S is a minimal u-v separator iff u and v fall
/// in different components of G - S and every vertex of S has neighbors in
/// both of those components. Exhaustive over subsets (small n only).
inline std::vector<VertexSet> brute_minimal_separators(const Graph& g) {
  const Vertex n = g.n();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) removed[v] = mask >> v & 1;
    // Component labels by repeated flooding.
    std::vector<int> comp(n, -1);
    int c = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (removed[s] || comp[s] >= 0) continue;
      std::vector<Vertex> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
          if (!removed[y] && comp[y] < 0) {
            comp[y] = c;
            stack.push_back(y);
          }
      }
      ++c;
    }
    // Components fully attached to S.
    int full = 0;
    for (int k = 0; k < c; ++k) {
      bool all = true;
      for (Vertex s = 0; s < n && all; ++s) {
        if (!removed[s]) continue;
        bool touches = false;
        for (Vertex y : g.neighbors(s)) touches |= comp[y] == k;
        all = touches;
      }
      full += all;
    }
    if (full >= 2) out.push_back(from_mask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Generic boundary-clique test: Q has a simplicial vertex and some other
/// maximal clique Q' meets Q exactly in Q's non-simplicial vertices.
inline bool brute_is_boundary_clique(const Graph& g, const std::vector<VertexSet>& cliques,
                                     std::size_t q) {
  std::vector<Vertex> non_simplicial;
  bool has_simplicial = false;
  for (Vertex v : cliques[q]) {
    std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    if (is_clique(g, nb))
      has_simplicial = true;
    else
      non_simplicial.push_back(v);
  }
  if (!has_simplicial) return false;
  for (std::size_t o = 0; o < cliques.size(); ++o) {
    if (o == q) continue;
    std::vector<Vertex> meet;
    std::set_intersection(cliques[q].begin(), cliques[q].end(), cliques[o].begin(),
                          cliques[o].end(), std::back_inserter(meet));
    if (meet == non_simplicial) return true;
  }
  return false;
}

/// Random strictly chordal graph with n <= max_n.
inline Graph random_strictly_chordal(std::mt19937_64& rng, Vertex max_n) {
  for (;;) {
    GenParams p;
    p.seed = rng();
    p.block_count = std::uniform_int_distribution<int>(1, std::max(1, max_n / 2))(rng);
    p.max_block_size = std::uniform_int_distribution<int>(2, 5)(rng);
    p.max_twins = std::uniform_int_distribution<int>(0, 3)(rng);
    Graph g = generate_strictly_chordal(p);
    if (g.n() <= max_n) return g;
  }
}


/// All subsets S with omega(G - S) != 1 attaining the maximum of
/// omega(G - S) - |S|, plus that maximum. Non-complete graphs only.
struct BruteScattering {
  std::int64_t value = 0;
  std::vector<std::uint64_t> maximizers;
};

inline BruteScattering brute_scattering(const Graph& g) {
  BruteScattering out;
  bool any = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    const auto w = static_cast<std::int64_t>(uf_components(g, from_mask(mask)));
    if (w == 1) continue;
    const std::int64_t value = w - std::popcount(mask);
    if (!any || value > out.value) {
      any = true;
      out.value = value;
      out.maximizers.clear();
    }
    if (value == out.value) out.maximizers.push_back(mask);
  }
  return out;
}

/// min |S| / omega(G - S) over subsets with omega(G - S) > 1.
inline Rational brute_toughness(const Graph& g) {
  Rational best = Rational::infinite();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    const auto w = static_cast<std::int64_t>(uf_components(g, from_mask(mask)));
    if (w > 1) best = std::min(best, Rational(std::popcount(mask), w));
  }
  return best;
}

/// Adds a true twin of v: a new vertex adjacent to v and all of N(v).
inline Graph with_true_twin(const Graph& g, Vertex v) {
  auto edges = g.edges();
  const Vertex twin = g.n();
  edges.emplace_back(v, twin);
  for (Vertex w : g.neighbors(v)) edges.emplace_back(w, twin);
  return make(g.n() + 1, edges);
}

}  // namespace scatter::testing
