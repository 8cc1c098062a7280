#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "scatter/chordal.hpp"
#include "scatter/graph.hpp"
#include "scatter/rational.hpp"
#include "scatter/strictly_chordal.hpp"

namespace scatter {

/// Which branch of the case analysis produced the scattering number.
enum class Case { Complete, SingleMvs, ToughGe1, TypeA, TypeB };

std::string_view to_string(Case c) noexcept;

struct ScatteringResult {
  std::int64_t number = 0;
  VertexSet set;
};

struct VulnerabilityReport {
  Rational toughness = Rational::infinite();
  VertexSet tough_set;
  /// Empty for complete graphs.
  std::optional<std::int64_t> scattering_number;
  VertexSet scattering_set;
  Case kind = Case::Complete;
  /// In caller numbering, ordered by smallest vertex. adjacent_cliques index
  /// the internal clique tree and do not match build_clique_tree(g, ...).
  std::vector<SeparatorInfo> separators;
};

/// min over separators of |S| / (mu(S) + 1), with the argmin separator
/// (first in list order on ties). Throws CompleteGraph when `seps` is empty.
std::pair<Rational, VertexSet> toughness(const std::vector<SeparatorInfo>& seps);

Case classify(const std::vector<SeparatorInfo>& seps);

/// Exactly one separator: mu(S) + 1 - |S|, attained by S.
ScatteringResult scattering_single_mvs(const SeparatorInfo& s);

/// tau >= 1: max over separators of mu(S) + 1 - |S| (first argmax on ties).
ScatteringResult scattering_tough_ge_1(const std::vector<SeparatorInfo>& seps);

/// Type A: sc = 1, attained by the first separator with |S| = mu(S).
ScatteringResult scattering_type_a(const std::vector<SeparatorInfo>& seps);

/// Post-order depth-first traversal of CB(G) from its first separator node,
/// mutating the labels of `cb`. Returns the separator indices collected in SC,
/// ascending.
std::vector<std::size_t> scattering_separators_type_b(CliqueBipartite& cb);

/// Union of the separators chosen by the traversal.
VertexSet scattering_set_type_b(CliqueBipartite& cb, const std::vector<SeparatorInfo>& seps);

/// Wall time spent in each pipeline stage of analyze().
struct StageTimings {
  std::chrono::nanoseconds connectivity{0};
  std::chrono::nanoseconds ordering{0};
  std::chrono::nanoseconds clique_tree{0};
  std::chrono::nanoseconds separators{0};
  std::chrono::nanoseconds scattering{0};
  std::chrono::nanoseconds total() const {
    return connectivity + ordering + clique_tree + separators + scattering;
  }
};

/// Full pipeline: connectivity, chordality, strict chordality, toughness,
/// dispatch and the case-specific scattering computation. Throws
/// NotConnected, NotChordal or NotStrictlyChordal. Internally works on a
/// breadth-first renumbering of g; everything returned uses g's ids.
VulnerabilityReport analyze(const Graph& g, StageTimings* timings = nullptr);

}  // namespace scatter
