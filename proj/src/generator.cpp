#include "scatter/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace scatter {

namespace {

constexpr std::uint64_t kTwinStream = 0x632be59bd9b4e019ULL;

std::int32_t uniform(std::mt19937_64& rng, std::int32_t lo, std::int32_t hi) {
  return std::uniform_int_distribution<std::int32_t>(lo, hi)(rng);
}

}  // namespace

void validate(const GenParams& p) {
  if (p.block_count < 1) throw std::invalid_argument("block_count must be >= 1");
  if (p.max_block_size < 2) throw std::invalid_argument("max_block_size must be >= 2");
  if (p.max_twins < 0) throw std::invalid_argument("max_twins must be >= 0");
  if (p.target_n && *p.target_n < 1) throw std::invalid_argument("target_n must be >= 1");
}

std::int32_t effective_block_count(const GenParams& p) {
  if (!p.target_n) return p.block_count;
  // E[vertices] = (1 + B * K/2) * (1 + T/2).
  const double per_vertex = 1.0 + p.max_twins / 2.0;
  const double per_block = p.max_block_size / 2.0;
  const double blocks = (static_cast<double>(*p.target_n) / per_vertex - 1.0) / per_block;
  return static_cast<std::int32_t>(std::max(1.0, std::round(blocks)));
}

Graph random_block_graph(const GenParams& p) {
  validate(p);
  std::mt19937_64 rng(p.seed);
  const std::int32_t blocks = effective_block_count(p);
  std::vector<Edge> edges;
  Vertex n = 0;
  for (std::int32_t b = 0; b < blocks; ++b) {
    const std::int32_t size = uniform(rng, 2, p.max_block_size);
    std::vector<Vertex> members;
    if (b > 0) members.push_back(uniform(rng, 0, n - 1));
    while (static_cast<std::int32_t>(members.size()) < size) members.push_back(n++);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }
  return Graph::from_edges(n, edges);
}

Graph add_true_twins(const Graph& g, const GenParams& p) {
  validate(p);
  std::mt19937_64 rng(p.seed ^ kTwinStream);
  const Vertex base = g.n();
  // twin_class[v] lists v followed by its copies.
  std::vector<std::vector<Vertex>> twin_class(base);
  Vertex n = base;
  for (Vertex v = 0; v < base; ++v) {
    twin_class[v].push_back(v);
    const std::int32_t copies = uniform(rng, 0, p.max_twins);
    for (std::int32_t c = 0; c < copies; ++c) twin_class[v].push_back(n++);
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < base; ++v) {
    const auto& cls = twin_class[v];
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) edges.emplace_back(cls[i], cls[j]);
  }
  for (auto [u, v] : g.edges())
    for (Vertex a : twin_class[u])
      for (Vertex b : twin_class[v]) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph generate_strictly_chordal(const GenParams& params) {
  return add_true_twins(random_block_graph(params), params);
}

}  // namespace scatter
