#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "scatter/graph.hpp"

namespace scatter {

/// Parameters of the strictly chordal generator. Identical parameters give
/// identical graphs (within one build of this library).
struct GenParams {
  std::uint64_t seed = 42;
  std::int32_t block_count = 8;
  std::int32_t max_block_size = 4;
  std::int32_t max_twins = 1;
  /// When set, block_count is derived so the expected vertex count matches.
  std::optional<std::size_t> target_n;
};

/// Throws std::invalid_argument for out-of-range parameters.
void validate(const GenParams& params);

/// block_count, or the value implied by target_n.
std::int32_t effective_block_count(const GenParams& params);

/// Connected block graph: a first clique, then each further clique (size
/// uniform in [2, max_block_size]) glued at a uniformly chosen existing vertex.
Graph random_block_graph(const GenParams& params);

/// Blows every vertex v up into a clique of 1 + t_v true twins, t_v uniform
/// in [0, max_twins]. Original vertices keep their ids; twins are appended.
Graph add_true_twins(const Graph& g, const GenParams& params);

/// add_true_twins(random_block_graph(params), params).
Graph generate_strictly_chordal(const GenParams& params);

}  // namespace scatter
