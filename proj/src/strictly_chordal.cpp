#include "scatter/strictly_chordal.hpp"

#include <algorithm>

#include "scatter/errors.hpp"

namespace scatter {

std::optional<SharedSeparatorVertex> find_shared_separator_vertex(
    const std::vector<SeparatorInfo>& seps) {
  Vertex max_vertex = -1;
  for (const auto& s : seps)
    if (!s.vertices.empty()) max_vertex = std::max(max_vertex, s.vertices.vector().back());
  std::vector<std::int64_t> owner(static_cast<std::size_t>(max_vertex + 1), -1);
  for (std::size_t i = 0; i < seps.size(); ++i)
    for (Vertex v : seps[i].vertices) {
      if (owner[v] >= 0) return SharedSeparatorVertex{v, static_cast<std::size_t>(owner[v]), i};
      owner[v] = static_cast<std::int64_t>(i);
    }
  return std::nullopt;
}

bool is_strictly_chordal(const std::vector<SeparatorInfo>& seps) {
  return !find_shared_separator_vertex(seps).has_value();
}

std::size_t CliqueBipartite::edge_count() const noexcept {
  return adjacency.target.size() / 2;
}

void CliqueBipartite::reset_labels(const CliqueTree& ct, const std::vector<SeparatorInfo>& seps) {
  const std::size_t nodes = node_count();
  card.assign(nodes, 0);
  mu.assign(nodes, 0);
  status.assign(nodes, NodeStatus::TrueClique);
  entry.assign(nodes, 0);
  parent.assign(nodes, -1);
  for (std::size_t q = 0; q < clique_count; ++q)
    card[q] = static_cast<std::int64_t>(ct.cliques[q].size());
  for (std::size_t s = 0; s < separator_count; ++s) {
    const std::size_t v = separator_node(s);
    card[v] = static_cast<std::int64_t>(seps[s].vertices.size());
    mu[v] = static_cast<std::int64_t>(seps[s].multiplicity);
    status[v] = NodeStatus::Mvs;
  }
}

CliqueBipartite build_cb(const CliqueTree& ct, const std::vector<SeparatorInfo>& seps) {
  if (auto shared = find_shared_separator_vertex(seps))
    throw NotStrictlyChordal(shared->vertex, seps[shared->first].vertices,
                             seps[shared->second].vertices);

  CliqueBipartite cb;
  cb.clique_count = ct.cliques.size();
  cb.separator_count = seps.size();
  auto& offset = cb.adjacency.offset;
  offset.assign(cb.node_count() + 1, 0);
  for (std::size_t s = 0; s < seps.size(); ++s) {
    offset[cb.separator_node(s) + 1] = seps[s].adjacent_cliques.size();
    for (std::size_t q : seps[s].adjacent_cliques) ++offset[q + 1];
  }
  for (std::size_t v = 0; v < cb.node_count(); ++v) offset[v + 1] += offset[v];
  cb.adjacency.target.resize(offset.back());
  // Separators in ascending order, so clique lists come out sorted too.
  std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
  for (std::size_t s = 0; s < seps.size(); ++s) {
    const std::size_t v = cb.separator_node(s);
    for (std::size_t q : seps[s].adjacent_cliques) {
      cb.adjacency.target[cursor[v]++] = q;
      cb.adjacency.target[cursor[q]++] = v;
    }
  }
  cb.reset_labels(ct, seps);
  if (!is_tree(cb)) throw InternalError("clique-bipartite graph is not a tree");
  return cb;
}

bool is_tree(const CliqueBipartite& cb) {
  const std::size_t nodes = cb.node_count();
  if (nodes == 0 || cb.edge_count() + 1 != nodes) return false;
  std::vector<char> seen(nodes, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : cb.adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == nodes;
}

std::vector<std::size_t> leaf_clique_counts(const CliqueBipartite& cb) {
  std::vector<std::size_t> out(cb.separator_count, 0);
  for (std::size_t s = 0; s < cb.separator_count; ++s)
    for (std::size_t q : cb.adjacency[cb.separator_node(s)])
      if (cb.adjacency[q].size() == 1) ++out[s];
  return out;
}

bool border_mvs_exists(const CliqueBipartite& cb, const std::vector<SeparatorInfo>& seps) {
  const auto leaves = leaf_clique_counts(cb);
  for (std::size_t s = 0; s < seps.size(); ++s)
    if (leaves[s] == seps[s].multiplicity) return true;
  return false;
}

std::string dump_cb(const CliqueBipartite& cb, const CliqueTree& ct,
                    const std::vector<SeparatorInfo>& seps) {
  auto list = [](const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : ",") + std::to_string(v + 1);
    return out;
  };
  std::string out = "graph CB {\n";
  for (std::size_t q = 0; q < cb.clique_count; ++q)
    out += "  n" + std::to_string(q) + " [shape=box,label=\"Q" + std::to_string(q) + " {" +
           list(ct.cliques[q]) + "}\"];\n";
  for (std::size_t s = 0; s < cb.separator_count; ++s)
    out += "  n" + std::to_string(cb.separator_node(s)) + " [label=\"S" + std::to_string(s) +
           " {" + list(seps[s].vertices) + "} mu=" + std::to_string(seps[s].multiplicity) +
           "\"];\n";
  for (std::size_t s = 0; s < cb.separator_count; ++s) {
    const std::size_t v = cb.separator_node(s);
    for (std::size_t q : cb.adjacency[v])
      out += "  n" + std::to_string(v) + " -- n" + std::to_string(q) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace scatter
