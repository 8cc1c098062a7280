#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scatter/graph.hpp"

namespace scatter {

/// Elimination ordering: order[0] is eliminated first.
using Ordering = std::vector<Vertex>;

/// Maximum cardinality search. Returns the reverse of the visit order, which
/// is a perfect elimination ordering exactly when g is chordal.
Ordering mcs_order(const Graph& g);

/// Outcome of the zero fill-in test. On failure, `vertex` has two later
/// neighbors `follower` and `other` that are not adjacent.
struct PeoCheck {
  bool ok = true;
  Vertex vertex = -1;
  Vertex follower = -1;
  Vertex other = -1;
  explicit operator bool() const noexcept { return ok; }
};

PeoCheck check_peo(const Graph& g, const Ordering& order);
bool verify_peo(const Graph& g, const Ordering& order);

/// Some chordless cycle of length >= 4, or nullopt for chordal graphs.
/// Tries the vertex reported by `hint` first; worst case O(n (n + m)).
std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g,
                                                        Vertex hint = -1);

struct CliqueTreeEdge {
  std::size_t parent;  // clique index
  std::size_t child;   // clique index, always > parent
  VertexSet separator;
};

struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<CliqueTreeEdge> edges;
  Ordering peo;
};

/// Clique tree from any perfect elimination ordering: one maximal clique per
/// supernode chain of the elimination tree, linked to the clique holding the
/// chain top's follower. Clique 0 is the root; parents precede children.
/// Throws NotChordal if `peo` fails the zero fill-in test, NotConnected if g
/// is disconnected.
CliqueTree build_clique_tree(const Graph& g, const Ordering& peo);

struct SeparatorInfo {
  VertexSet vertices;
  std::size_t multiplicity = 0;
  /// Endpoints of the clique-tree edges labelled with this separator.
  std::vector<std::size_t> adjacent_cliques;
  /// Adjacent cliques that contain no other separator (leaves of CB(G)).
  std::size_t boundary_count = 0;
};

/// Distinct minimal vertex separators with multiplicities, ordered by their
/// sorted vertex lists (for disjoint separators: by smallest vertex).
std::vector<SeparatorInfo> minimal_vertex_separators(const CliqueTree& ct);

/// Human-readable dump of cliques and tree edges (1-based vertex ids).
std::string dump_clique_tree(const CliqueTree& ct);

}  // namespace scatter
