#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scatter {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and deduplicates `members`.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  /// Wraps an already sorted, duplicate-free vector without re-checking.
  static VertexSet from_sorted(std::vector<Vertex> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  Vertex front() const { return members_.front(); }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  std::span<const Vertex> view() const noexcept { return members_; }
  const std::vector<Vertex>& vector() const noexcept { return members_; }

  /// Membership mask of length n for O(1) lookups.
  std::vector<char> mask(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph in compressed adjacency form.
/// Neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1. Parallel edges are collapsed and
  /// counted; self-loops and out-of-range ids throw std::invalid_argument.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex n() const noexcept { return n_; }
  std::size_t m() const noexcept { return targets_.size() / 2; }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], degree(v)};
  }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_complete() const noexcept {
    return m() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

  /// Number of repeated edges dropped at construction.
  std::size_t duplicate_edges() const noexcept { return duplicates_; }

  /// Edges as (min, max), sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copy in which vertex i is old vertex order[i]; order must be a
  /// permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> order) const;

  /// Breadth-first renumbering from vertex 0 in a single traversal: vertex i
  /// of the result is old vertex order[i]. Returns nullopt when g is
  /// disconnected, with `order` covering only the component of vertex 0.
  std::optional<Graph> bfs_relabeled(std::vector<Vertex>& order) const;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::size_t duplicates_ = 0;
};

/// Parses either the DIMACS-like format (`p edge n m`, `e u v`, 1-based) or
/// the plain edge list (`n m` header, `u v` 0-based). Throws ParseError.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Canonical DIMACS-like text: header plus edges sorted by (min, max).
std::string serialize_dimacs(const Graph& g);

struct ComponentLabels {
  std::size_t count = 0;
  /// Component id per vertex, -1 for removed vertices. Ids follow the
  /// smallest vertex of each component.
  std::vector<std::int32_t> component;
};

/// Components of g - removed (omega(G - S)).
ComponentLabels connected_components(const Graph& g, const VertexSet& removed);
ComponentLabels connected_components(const Graph& g,
                                     std::span<const char> removed_mask);

bool is_connected(const Graph& g);

/// Breadth-first visit order from `source`, neighbors in ascending order.
/// Covers only the component of `source`.
std::vector<Vertex> bfs_order(const Graph& g, Vertex source = 0);

/// Graph induced by `keep`, relabelled 0..|keep|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace scatter
