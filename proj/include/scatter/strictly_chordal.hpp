#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scatter/chordal.hpp"

namespace scatter {

/// Vertex shared by two distinct separators (indices into the separator list).
struct SharedSeparatorVertex {
  Vertex vertex;
  std::size_t first;
  std::size_t second;
};

/// Disjointness check: a single pass assigning each vertex at most one
/// separator. Returns the first conflict found, if any.
std::optional<SharedSeparatorVertex> find_shared_separator_vertex(
    const std::vector<SeparatorInfo>& seps);

bool is_strictly_chordal(const std::vector<SeparatorInfo>& seps);

/// Neighbor lists in compressed form; lists[v] is a view of node v's list.
struct AdjacencyLists {
  std::vector<std::size_t> offset{0};
  std::vector<std::size_t> target;
  std::span<const std::size_t> operator[](std::size_t v) const noexcept {
    return {target.data() + offset[v], offset[v + 1] - offset[v]};
  }
  std::size_t size() const noexcept { return offset.size() - 1; }
};

enum class NodeStatus : std::uint8_t { Mvs, TrueClique, FalseClique };

/// Clique-bipartite tree CB(G). Nodes 0..clique_count-1 are maximal cliques
/// in clique-tree order; the remaining nodes are separators in list order.
/// `card`, `mu`, `status`, `entry` and `parent` are the mutable labels of the
/// scattering-set traversal.
struct CliqueBipartite {
  std::size_t clique_count = 0;
  std::size_t separator_count = 0;
  /// Ascending neighbor lists.
  AdjacencyLists adjacency;

  std::vector<std::int64_t> card;
  std::vector<std::int64_t> mu;  // separators only; 0 on clique nodes
  std::vector<NodeStatus> status;
  std::vector<std::size_t> entry;
  std::vector<std::int64_t> parent;  // -1 for none

  std::size_t node_count() const noexcept { return clique_count + separator_count; }
  std::size_t edge_count() const noexcept;
  bool is_separator_node(std::size_t v) const noexcept { return v >= clique_count; }
  std::size_t separator_node(std::size_t sep_index) const noexcept {
    return clique_count + sep_index;
  }
  /// Restores the initial labels.
  void reset_labels(const CliqueTree& ct, const std::vector<SeparatorInfo>& seps);
};

/// Throws NotStrictlyChordal if separators overlap and InternalError if the
/// result is not a tree.
CliqueBipartite build_cb(const CliqueTree& ct, const std::vector<SeparatorInfo>& seps);

/// True iff the bipartite graph is connected with |edges| = |nodes| - 1.
bool is_tree(const CliqueBipartite& cb);

/// Number of leaf clique nodes adjacent to each separator node.
std::vector<std::size_t> leaf_clique_counts(const CliqueBipartite& cb);

/// Whether some separator S has |B(S)| = mu(S), counting leaves of cb.
bool border_mvs_exists(const CliqueBipartite& cb, const std::vector<SeparatorInfo>& seps);

/// Graphviz dot dump (debugging only).
std::string dump_cb(const CliqueBipartite& cb, const CliqueTree& ct,
                    const std::vector<SeparatorInfo>& seps);

}  // namespace scatter
