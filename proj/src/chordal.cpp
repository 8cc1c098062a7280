#include "scatter/chordal.hpp"

#include <algorithm>
#include <cstdint>

#include "scatter/errors.hpp"

namespace scatter {

Ordering mcs_order(const Graph& g) {
  const Vertex n = g.n();
  // Buckets of unvisited vertices keyed by visited-neighbor count, as
  // intrusive doubly linked lists.
  std::vector<Vertex> head(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Vertex> next(n, -1), prev(n, -1);
  std::vector<std::int32_t> weight(n, 0);
  std::vector<char> visited(n, 0);

  auto unlink = [&](Vertex v) {
    if (prev[v] >= 0) next[prev[v]] = next[v];
    else head[weight[v]] = next[v];
    if (next[v] >= 0) prev[next[v]] = prev[v];
  };
  auto push = [&](Vertex v) {
    prev[v] = -1;
    next[v] = head[weight[v]];
    if (next[v] >= 0) prev[next[v]] = v;
    head[weight[v]] = v;
  };
  for (Vertex v = n - 1; v >= 0; --v) push(v);

  Ordering order(n);
  std::int32_t top = 0;
  for (Vertex i = n - 1; i >= 0; --i) {
    while (top > 0 && head[top] < 0) --top;
    const Vertex v = head[top];
    unlink(v);
    visited[v] = 1;
    order[i] = v;
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      unlink(w);
      ++weight[w];
      push(w);
      top = std::max(top, weight[w]);
    }
  }
  return order;
}

PeoCheck check_peo(const Graph& g, const Ordering& order) {
  const Vertex n = g.n();
  std::vector<std::int32_t> pos(n);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::int32_t>(i);
  std::vector<Vertex> follower(n);
  std::vector<std::int32_t> index(n);
  for (std::int32_t i = 0; i < n; ++i) {
    const Vertex w = order[i];
    follower[w] = w;
    index[w] = i;
    for (Vertex v : g.neighbors(w)) {
      if (pos[v] >= i) continue;
      index[v] = i;
      if (follower[v] == v) follower[v] = w;
    }
    for (Vertex v : g.neighbors(w)) {
      if (pos[v] >= i) continue;
      if (index[follower[v]] < i) return {false, v, follower[v], w};
    }
  }
  return {};
}

bool verify_peo(const Graph& g, const Ordering& order) {
  return static_cast<bool>(check_peo(g, order));
}

namespace {

// Looks for a chordless cycle through v whose two neighbors of v on the
// cycle are non-adjacent: a component of G - N[v] with two non-adjacent
// attachments in N(v).
std::optional<std::vector<Vertex>> chordless_cycle_through(const Graph& g, Vertex v) {
  const Vertex n = g.n();
  std::vector<char> blocked(n, 0);
  blocked[v] = 1;
  for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  const auto comps = connected_components(g, blocked);

  std::vector<std::vector<Vertex>> attach(comps.count);
  std::vector<std::int32_t> seen(n, -1);
  for (Vertex x : g.neighbors(v))
    for (Vertex y : g.neighbors(x)) {
      const auto c = comps.component[y];
      if (c >= 0 && seen[x] != c) {
        seen[x] = c;
        attach[c].push_back(x);
      }
    }

  std::vector<char> in_set(n, 0);
  for (std::size_t c = 0; c < comps.count; ++c) {
    const auto& a = attach[c];
    if (a.size() < 2) continue;
    for (Vertex x : a) in_set[x] = 1;
    Vertex x0 = -1, y0 = -1;
    for (Vertex x : a) {
      std::size_t adjacent = 0;
      for (Vertex y : g.neighbors(x)) adjacent += in_set[y];
      if (adjacent + 1 < a.size()) {
        x0 = x;
        for (Vertex y : a)
          if (y != x && !g.has_edge(x, y)) { y0 = y; break; }
        break;
      }
    }
    for (Vertex x : a) in_set[x] = 0;
    if (x0 < 0) continue;

    // Shortest x0 -> y0 path whose interior lies in component c.
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue{x0};
    parent[x0] = x0;
    bool found = false;
    for (std::size_t h = 0; h < queue.size() && !found; ++h) {
      const Vertex u = queue[h];
      for (Vertex w : g.neighbors(u)) {
        if (parent[w] >= 0) continue;
        if (w == y0 && u != x0) {
          parent[w] = u;
          found = true;
          break;
        }
        if (comps.component[w] == static_cast<std::int32_t>(c)) {
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (!found) continue;
    std::vector<Vertex> cycle{v};
    std::vector<Vertex> path;
    for (Vertex u = y0; u != x0; u = parent[u]) path.push_back(u);
    path.push_back(x0);
    cycle.insert(cycle.end(), path.rbegin(), path.rend());
    return cycle;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g, Vertex hint) {
  if (hint >= 0) {
    if (auto c = chordless_cycle_through(g, hint)) return c;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == hint) continue;
    if (auto c = chordless_cycle_through(g, v)) return c;
  }
  return std::nullopt;
}

CliqueTree build_clique_tree(const Graph& g, const Ordering& peo) {
  const Vertex n = g.n();
  if (static_cast<Vertex>(peo.size()) != n)
    throw std::invalid_argument("ordering is not a permutation of V");
  if (auto check = check_peo(g, peo); !check) {
    auto cycle = find_chordless_cycle(g, check.vertex);
    if (!cycle) throw InternalError("zero fill-in test failed on a chordal graph");
    throw NotChordal(std::move(*cycle));
  }
  if (n == 0) throw NotConnected("empty graph");
  if (!is_connected(g)) {
    auto comps = connected_components(g, VertexSet{});
    Vertex other = 0;
    while (comps.component[other] == 0) ++other;
    throw NotConnected(0, other);
  }

  std::vector<std::int32_t> pos(n);
  for (std::int32_t i = 0; i < n; ++i) pos[peo[i]] = i;

  // later[v]: neighbors eliminated after v; follower[v]: the earliest of them.
  auto later = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) out.push_back(w);
    return out;
  };
  std::vector<std::int32_t> later_count(n, 0);
  std::vector<Vertex> follower(n, -1);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) {
        ++later_count[v];
        if (follower[v] < 0 || pos[w] < pos[follower[v]]) follower[v] = w;
      }

  // C(x) = {x} + later(x) is non-maximal iff some u with follower x has
  // |later(u)| = |later(x)| + 1; the earliest such u absorbs x.
  std::vector<Vertex> absorber(n, -1);
  for (Vertex u : peo) {
    const Vertex x = follower[u];
    if (x >= 0 && later_count[u] == later_count[x] + 1 && absorber[x] < 0) absorber[x] = u;
  }
  std::vector<Vertex> head(n);
  for (Vertex x : peo) head[x] = absorber[x] < 0 ? x : head[absorber[x]];

  auto is_top = [&](Vertex x) {
    return follower[x] < 0 || absorber[follower[x]] != x;
  };

  CliqueTree ct;
  ct.peo = peo;
  std::vector<std::int32_t> clique_of_head(n, -1);
  std::vector<Vertex> tops;
  for (std::int32_t i = n - 1; i >= 0; --i) {
    const Vertex x = peo[i];
    if (!is_top(x)) continue;
    const Vertex h = head[x];
    clique_of_head[h] = static_cast<std::int32_t>(ct.cliques.size());
    auto members = later(h);
    members.insert(std::lower_bound(members.begin(), members.end(), h), h);
    ct.cliques.push_back(VertexSet::from_sorted(std::move(members)));
    tops.push_back(x);
  }
  for (Vertex x : tops) {
    if (follower[x] < 0) continue;
    ct.edges.push_back({static_cast<std::size_t>(clique_of_head[head[follower[x]]]),
                        static_cast<std::size_t>(clique_of_head[head[x]]),
                        VertexSet::from_sorted(later(x))});
  }
  if (ct.edges.size() + 1 != ct.cliques.size())
    throw InternalError("clique tree is not a tree");
  return ct;
}

std::vector<SeparatorInfo> minimal_vertex_separators(const CliqueTree& ct) {
  // Equal separators share their smallest vertex, so each edge only has to
  // be compared against the groups chained under that vertex. A size and
  // fingerprint check precedes the exact comparison.
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  const std::size_t edge_count = ct.edges.size();
  std::size_t max_vertex = 0;
  for (const auto& e : ct.edges) max_vertex = std::max<std::size_t>(max_vertex, e.separator.vector().back());
  const std::size_t fronts = edge_count ? max_vertex + 1 : 0;

  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> chain_head(fronts, kNone);
  std::vector<std::size_t> chain_next;
  std::vector<std::size_t> representative;  // an edge index per group
  std::vector<std::uint64_t> fingerprint;
  std::vector<std::size_t> multiplicity;
  std::vector<std::size_t> group_of_edge(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e) {
    const auto& sep = ct.edges[e].separator;
    std::uint64_t sum = 0;
    for (Vertex v : sep) sum += mix(static_cast<std::uint64_t>(v));
    std::size_t group = chain_head[sep.front()];
    while (group != kNone) {
      const auto& other = ct.edges[representative[group]].separator;
      if (fingerprint[group] == sum && other.size() == sep.size() && other == sep) break;
      group = chain_next[group];
    }
    if (group == kNone) {
      group = representative.size();
      representative.push_back(e);
      fingerprint.push_back(sum);
      multiplicity.push_back(0);
      chain_next.push_back(chain_head[sep.front()]);
      chain_head[sep.front()] = group;
    }
    ++multiplicity[group];
    group_of_edge[e] = group;
  }

  // Final order: by sorted vertex list, i.e. by smallest vertex and then by
  // the rest, which only matters when separators overlap.
  const std::size_t groups = representative.size();
  std::vector<std::size_t> rank(groups);
  std::vector<SeparatorInfo> out;
  out.reserve(groups);
  std::vector<std::size_t> bucket;
  for (std::size_t v = 0; v < fronts; ++v) {
    bucket.clear();
    for (std::size_t gi = chain_head[v]; gi != kNone; gi = chain_next[gi]) bucket.push_back(gi);
    if (bucket.size() > 1)
      std::sort(bucket.begin(), bucket.end(), [&](std::size_t a, std::size_t b) {
        return ct.edges[representative[a]].separator < ct.edges[representative[b]].separator;
      });
    for (std::size_t gi : bucket) {
      rank[gi] = out.size();
      out.push_back({ct.edges[representative[gi]].separator, multiplicity[gi], {}, 0});
      out.back().adjacent_cliques.reserve(multiplicity[gi] + 1);
    }
  }

  // Incident separators per clique in compressed form, then adjacent cliques
  // per separator (appended in ascending clique order, so already sorted).
  const std::size_t cliques = ct.cliques.size();
  std::vector<std::size_t> offset(cliques + 1, 0);
  for (const auto& e : ct.edges) {
    ++offset[e.parent + 1];
    ++offset[e.child + 1];
  }
  for (std::size_t q = 0; q < cliques; ++q) offset[q + 1] += offset[q];
  std::vector<std::size_t> incident(2 * edge_count);
  {
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    for (std::size_t e = 0; e < edge_count; ++e) {
      const std::size_t s = rank[group_of_edge[e]];
      incident[cursor[ct.edges[e].parent]++] = s;
      incident[cursor[ct.edges[e].child]++] = s;
    }
  }
  std::vector<std::size_t> distinct(cliques, 0);
  std::vector<std::size_t> last_clique(out.size(), kNone);
  for (std::size_t q = 0; q < cliques; ++q) {
    for (std::size_t i = offset[q]; i < offset[q + 1]; ++i) {
      const std::size_t s = incident[i];
      if (last_clique[s] == q) continue;
      last_clique[s] = q;
      out[s].adjacent_cliques.push_back(q);
      ++distinct[q];
    }
  }
  for (auto& info : out)
    for (std::size_t q : info.adjacent_cliques)
      if (distinct[q] == 1) ++info.boundary_count;
  return out;
}

std::string dump_clique_tree(const CliqueTree& ct) {
  auto list = [](const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
  };
  std::string out;
  for (std::size_t i = 0; i < ct.cliques.size(); ++i)
    out += "clique " + std::to_string(i) + ": " + list(ct.cliques[i]) + "\n";
  for (const auto& e : ct.edges)
    out += "edge " + std::to_string(e.parent) + " " + std::to_string(e.child) + ": " +
           list(e.separator) + "\n";
  return out;
}

}  // namespace scatter
