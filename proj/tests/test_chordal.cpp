#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "scatter/chordal.hpp"
#include "scatter/errors.hpp"
#include "support.hpp"

namespace scatter {
namespace {

using testing::fixture;
using testing::make;

// Random chordal graph: each new vertex is attached to a random nonempty
// subset of a random maximal clique of the graph so far.
Graph random_chordal(std::mt19937_64& rng, Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Graph so_far = make(v, edges);
    const auto cliques = testing::brute_maximal_cliques(so_far);
    const auto& q = cliques[rng() % cliques.size()];
    bool any = false;
    for (Vertex u : q)
      if (rng() % 2) {
        edges.emplace_back(u, v);
        any = true;
      }
    if (!any) edges.emplace_back(q.front(), v);
  }
  return make(n, edges);
}

Graph random_graph(std::mt19937_64& rng, Vertex n, int percent) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
  return make(n, edges);
}

void expect_chordless_cycle(const Graph& g, const std::vector<Vertex>& c) {
  ASSERT_GE(c.size(), 4u);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == c.size() - 1);
      EXPECT_EQ(g.has_edge(c[i], c[j]), consecutive) << c[i] << " " << c[j];
    }
}

void expect_valid_clique_tree(const Graph& g, const CliqueTree& ct) {
  auto cliques = ct.cliques;
  std::sort(cliques.begin(), cliques.end());
  ASSERT_EQ(cliques, testing::brute_maximal_cliques(g));
  ASSERT_EQ(ct.edges.size() + 1, ct.cliques.size());

  const std::size_t q = ct.cliques.size();
  std::vector<std::vector<std::size_t>> adj(q);
  for (const auto& e : ct.edges) {
    EXPECT_LT(e.parent, e.child);
    std::vector<Vertex> meet;
    std::set_intersection(ct.cliques[e.parent].begin(), ct.cliques[e.parent].end(),
                          ct.cliques[e.child].begin(), ct.cliques[e.child].end(),
                          std::back_inserter(meet));
    EXPECT_FALSE(meet.empty());
    EXPECT_EQ(e.separator.vector(), meet);
    adj[e.parent].push_back(e.child);
    adj[e.child].push_back(e.parent);
  }
  // Clique-intersection property on every pair, via the unique tree path.
  for (std::size_t a = 0; a < q; ++a) {
    std::vector<std::int64_t> parent(q, -2);
    parent[a] = -1;
    std::vector<std::size_t> stack{a};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : adj[x])
        if (parent[y] == -2) {
          parent[y] = static_cast<std::int64_t>(x);
          stack.push_back(y);
        }
    }
    for (std::size_t b = 0; b < q; ++b) {
      ASSERT_NE(parent[b], -2) << "clique tree is disconnected";
      std::vector<Vertex> meet;
      std::set_intersection(ct.cliques[a].begin(), ct.cliques[a].end(), ct.cliques[b].begin(),
                            ct.cliques[b].end(), std::back_inserter(meet));
      for (auto x = static_cast<std::int64_t>(b); x != -1; x = parent[x])
        for (Vertex v : meet) EXPECT_TRUE(ct.cliques[x].contains(v));
    }
  }
}

TEST(McsOrder, EveryOrderingOfACliqueIsPeo) {
  const Graph k3 = testing::complete(3);
  std::vector<Vertex> order{0, 1, 2};
  do {
    EXPECT_TRUE(verify_peo(k3, order));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(McsOrder, FourCycleHasNoPeo) {
  const Graph c4 = fixture("c4.gr");
  EXPECT_FALSE(verify_peo(c4, mcs_order(c4)));
  std::vector<Vertex> order{0, 1, 2, 3};
  do {
    EXPECT_FALSE(verify_peo(c4, order));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(McsOrder, PathOnThreeVerticesAgainstEnumeration) {
  // Brute force: the middle vertex must not be eliminated first.
  const Graph p3 = testing::path(3);
  std::vector<Vertex> order{0, 1, 2};
  int peos = 0;
  do {
    const bool expected = testing::brute_is_peo(p3, order);
    EXPECT_EQ(expected, order[0] != 1);
    EXPECT_EQ(verify_peo(p3, order), expected);
    peos += expected;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(peos, 4);
  EXPECT_TRUE(testing::brute_is_peo(p3, mcs_order(p3)));
}

TEST(McsOrder, IsPermutationAndPeoIffChordal) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 10);
    const Graph g = trial % 2 ? random_chordal(rng, n) : random_graph(rng, n, 40);
    auto order = mcs_order(g);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v = 0; v < n; ++v) ASSERT_EQ(sorted[v], v);
    const bool chordal = !testing::simplicial_elimination(g).empty();
    EXPECT_EQ(verify_peo(g, order), chordal);
    EXPECT_EQ(testing::brute_is_peo(g, order), chordal);
  }
}

TEST(VerifyPeo, MatchesDefinitionOnRandomOrders) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 9);
    const Graph g = random_graph(rng, n, 50);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(verify_peo(g, order), testing::brute_is_peo(g, order));
  }
}

TEST(VerifyPeo, TreeLeafPruningOrder) {
  const Graph g = fixture("fig2_g2.gr");
  // Leaves 5..12, then the inner vertices, then the center.
  std::vector<Vertex> order{5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 0};
  EXPECT_TRUE(verify_peo(g, order));
  EXPECT_TRUE(verify_peo(fixture("fig2_g1.gr"), mcs_order(fixture("fig2_g1.gr"))));
}

TEST(VerifyPeo, FailureReportsNonAdjacentLaterNeighbors) {
  const Graph p3 = testing::path(3);
  const auto check = check_peo(p3, {1, 0, 2});
  ASSERT_FALSE(check);
  EXPECT_EQ(check.vertex, 1);
  EXPECT_FALSE(p3.has_edge(check.follower, check.other));
}

TEST(BuildCliqueTree, CompleteGraphIsOneClique) {
  const Graph k4 = testing::complete(4);
  const auto ct = build_clique_tree(k4, mcs_order(k4));
  ASSERT_EQ(ct.cliques.size(), 1u);
  EXPECT_EQ(ct.cliques[0], (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(ct.edges.empty());
}

TEST(BuildCliqueTree, PathOnThreeVertices) {
  const auto ct = build_clique_tree(testing::path(3), mcs_order(testing::path(3)));
  auto cliques = ct.cliques;
  std::sort(cliques.begin(), cliques.end());
  EXPECT_EQ(cliques, (std::vector<VertexSet>{{0, 1}, {1, 2}}));
  ASSERT_EQ(ct.edges.size(), 1u);
  EXPECT_EQ(ct.edges[0].separator, VertexSet{1});
}

TEST(BuildCliqueTree, FigureG2MatchesBruteForceCliques) {
  const Graph g = fixture("fig2_g2.gr");
  ASSERT_EQ(testing::brute_maximal_cliques(g).size(), 12u);
  const auto ct = build_clique_tree(g, mcs_order(g));
  EXPECT_EQ(ct.cliques.size(), 12u);
  EXPECT_EQ(ct.edges.size(), 11u);
  expect_valid_clique_tree(g, ct);
}

TEST(BuildCliqueTree, ValidOnFixtures) {
  for (const char* name : {"fig2_g1.gr", "fig2_g2.gr", "bowtie.gr", "two_k4.gr", "p5.gr",
                           "double_star.gr", "gem.gr", "dart.gr", "diamond.gr"}) {
    SCOPED_TRACE(name);
    const Graph g = fixture(name);
    expect_valid_clique_tree(g, build_clique_tree(g, mcs_order(g)));
  }
}

TEST(BuildCliqueTree, ValidForAnyPeoOnRandomChordalGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_chordal(rng, 2 + static_cast<Vertex>(rng() % 10));
    SCOPED_TRACE(serialize_dimacs(g));
    expect_valid_clique_tree(g, build_clique_tree(g, mcs_order(g)));
    expect_valid_clique_tree(g, build_clique_tree(g, testing::simplicial_elimination(g)));
  }
}

TEST(BuildCliqueTree, RejectsNonChordalWithChordlessCycle) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_graph(rng, 4 + static_cast<Vertex>(rng() % 7), 35);
    if (!testing::simplicial_elimination(g).empty()) continue;
    ++checked;
    try {
      build_clique_tree(g, mcs_order(g));
      FAIL() << "expected NotChordal";
    } catch (const NotChordal& e) {
      expect_chordless_cycle(g, e.cycle);
    }
  }
  EXPECT_GT(checked, 50);
  try {
    build_clique_tree(fixture("c4.gr"), mcs_order(fixture("c4.gr")));
    FAIL();
  } catch (const NotChordal& e) {
    EXPECT_EQ(e.cycle.size(), 4u);
  }
}

TEST(BuildCliqueTree, RejectsDisconnected) {
  const Graph g = make(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(build_clique_tree(g, mcs_order(g)), NotConnected);
}

TEST(FindChordlessCycle, NoneOnChordalGraphs) {
  EXPECT_FALSE(find_chordless_cycle(fixture("fig2_g1.gr")).has_value());
  const auto c = find_chordless_cycle(make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 5u);
}

TEST(MinimalVertexSeparators, FigureG2) {
  const Graph g = fixture("fig2_g2.gr");
  const auto seps = minimal_vertex_separators(build_clique_tree(g, mcs_order(g)));
  ASSERT_EQ(seps.size(), 5u);
  EXPECT_EQ(seps[0].vertices, VertexSet{0});
  EXPECT_EQ(seps[0].multiplicity, 3u);
  for (Vertex v = 1; v <= 4; ++v) {
    EXPECT_EQ(seps[v].vertices, VertexSet{v});
    EXPECT_EQ(seps[v].multiplicity, 2u);
  }
  // Oracle: omega(G - S) = mu(S) + 1 by independent component counting.
  EXPECT_EQ(testing::uf_components(g, VertexSet{0}), 4u);
  EXPECT_EQ(testing::uf_components(g, VertexSet{1}), 3u);
  for (const auto& s : seps) EXPECT_EQ(testing::uf_components(g, s.vertices), s.multiplicity + 1);
}

TEST(MinimalVertexSeparators, FigureOne) {
  const Graph g = fixture("fig1.gr");
  const auto seps = minimal_vertex_separators(build_clique_tree(g, mcs_order(g)));
  ASSERT_EQ(seps.size(), 2u);
  EXPECT_EQ(seps[0].vertices, (VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_EQ(seps[0].multiplicity, 4u);
  EXPECT_EQ(seps[1].vertices, (VertexSet{10, 11, 12, 13, 14, 15, 16}));
  EXPECT_EQ(seps[1].multiplicity, 2u);
}

TEST(MinimalVertexSeparators, PathOnThreeVertices) {
  const auto seps = minimal_vertex_separators(build_clique_tree(testing::path(3), mcs_order(testing::path(3))));
  ASSERT_EQ(seps.size(), 1u);
  EXPECT_EQ(seps[0].vertices, VertexSet{1});
  EXPECT_EQ(seps[0].multiplicity, 1u);
  EXPECT_EQ(seps[0].boundary_count, 2u);
}

TEST(MinimalVertexSeparators, MatchBruteForceOnRandomChordalGraphs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_chordal(rng, 2 + static_cast<Vertex>(rng() % 9));
    SCOPED_TRACE(serialize_dimacs(g));
    const auto ct = build_clique_tree(g, mcs_order(g));
    const auto seps = minimal_vertex_separators(ct);
    std::vector<VertexSet> got;
    std::size_t total = 0;
    for (const auto& s : seps) {
      got.push_back(s.vertices);
      total += s.multiplicity;
      EXPECT_LE(s.boundary_count, s.adjacent_cliques.size());
    }
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    EXPECT_EQ(got, testing::brute_minimal_separators(g));
    EXPECT_EQ(total, ct.edges.size());
  }
}

TEST(MinimalVertexSeparators, MultisetIsIndependentOfThePeo) {
  std::mt19937_64 rng(59);
  auto summary = [](const std::vector<SeparatorInfo>& seps) {
    std::map<std::vector<Vertex>, std::size_t> out;
    for (const auto& s : seps) out[s.vertices.vector()] = s.multiplicity;
    return out;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = trial % 2 ? random_chordal(rng, 2 + static_cast<Vertex>(rng() % 10))
                              : testing::random_strictly_chordal(rng, 14);
    const auto a = minimal_vertex_separators(build_clique_tree(g, mcs_order(g)));
    const auto b = minimal_vertex_separators(build_clique_tree(g, testing::simplicial_elimination(g)));
    EXPECT_EQ(summary(a), summary(b));
  }
}

TEST(MinimalVertexSeparators, StrictlyChordalProperties) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_strictly_chordal(rng, 14);
    const auto ct = build_clique_tree(g, mcs_order(g));
    const auto seps = minimal_vertex_separators(ct);
    auto cliques = ct.cliques;
    for (const auto& s : seps) {
      // omega(G - S) = mu(S) + 1 and exactly mu(S) + 1 cliques contain S.
      EXPECT_EQ(testing::uf_components(g, s.vertices), s.multiplicity + 1);
      EXPECT_EQ(s.adjacent_cliques.size(), s.multiplicity + 1);
      std::size_t containing = 0, boundary = 0;
      for (std::size_t q = 0; q < cliques.size(); ++q) {
        if (!std::includes(cliques[q].begin(), cliques[q].end(), s.vertices.begin(), s.vertices.end()))
          continue;
        ++containing;
        boundary += testing::brute_is_boundary_clique(g, cliques, q);
      }
      EXPECT_EQ(containing, s.multiplicity + 1);
      EXPECT_EQ(s.boundary_count, boundary);
    }
    // Vertices outside every separator are simplicial: exactly one clique.
    std::vector<char> in_sep(g.n(), 0);
    for (const auto& s : seps)
      for (Vertex v : s.vertices) in_sep[v] = 1;
    for (Vertex v = 0; v < g.n(); ++v) {
      int holders = 0;
      for (const auto& q : cliques) holders += q.contains(v);
      if (!in_sep[v]) EXPECT_EQ(holders, 1);
      else EXPECT_GE(holders, 2);
    }
  }
}

TEST(MinimalVertexSeparators, AreMinimalSeparatorsOnFixtures) {
  for (const char* name : {"fig2_g1.gr", "fig2_g2.gr", "double_star.gr", "p5.gr", "two_k4.gr"}) {
    SCOPED_TRACE(name);
    const Graph g = fixture(name);
    for (const auto& s : minimal_vertex_separators(build_clique_tree(g, mcs_order(g)))) {
      ASSERT_LE(s.vertices.size(), 6u);
      EXPECT_GT(testing::uf_components(g, s.vertices), 1u);
      const auto& v = s.vertices.vector();
      for (std::uint64_t sub = 0; sub + 1 < (std::uint64_t{1} << v.size()); ++sub) {
        std::vector<Vertex> part;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (sub >> i & 1) part.push_back(v[i]);
        EXPECT_EQ(testing::uf_components(g, VertexSet(part)), 1u);
      }
    }
  }
}

TEST(DumpCliqueTree, ListsCliquesAndEdges) {
  const auto text = dump_clique_tree(build_clique_tree(testing::path(3), mcs_order(testing::path(3))));
  EXPECT_NE(text.find("clique 0:"), std::string::npos);
  EXPECT_NE(text.find("edge 0 1: 2"), std::string::npos);
}

}  // namespace
}  // namespace scatter
