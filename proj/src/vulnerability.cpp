#include "scatter/vulnerability.hpp"

#include <algorithm>

#include "scatter/errors.hpp"

namespace scatter {

std::string_view to_string(Case c) noexcept {
  switch (c) {
    case Case::Complete: return "complete";
    case Case::SingleMvs: return "single_mvs";
    case Case::ToughGe1: return "tough_ge_1";
    case Case::TypeA: return "type_a";
    case Case::TypeB: return "type_b";
  }
  return "unknown";
}

namespace {

std::int64_t size_of(const SeparatorInfo& s) { return static_cast<std::int64_t>(s.vertices.size()); }
std::int64_t mu_of(const SeparatorInfo& s) { return static_cast<std::int64_t>(s.multiplicity); }

}  // namespace

std::pair<Rational, VertexSet> toughness(const std::vector<SeparatorInfo>& seps) {
  if (seps.empty()) throw CompleteGraph();
  std::size_t best = 0;
  Rational best_value(size_of(seps[0]), mu_of(seps[0]) + 1);
  for (std::size_t i = 1; i < seps.size(); ++i) {
    Rational value(size_of(seps[i]), mu_of(seps[i]) + 1);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  return {best_value, seps[best].vertices};
}

Case classify(const std::vector<SeparatorInfo>& seps) {
  if (seps.empty()) return Case::Complete;
  if (seps.size() == 1) return Case::SingleMvs;
  const bool tough = std::all_of(seps.begin(), seps.end(),
                                 [](const auto& s) { return size_of(s) >= mu_of(s) + 1; });
  if (tough) return Case::ToughGe1;
  const bool type_a = std::all_of(seps.begin(), seps.end(),
                                  [](const auto& s) { return size_of(s) >= mu_of(s); });
  return type_a ? Case::TypeA : Case::TypeB;
}

ScatteringResult scattering_single_mvs(const SeparatorInfo& s) {
  return {mu_of(s) + 1 - size_of(s), s.vertices};
}

ScatteringResult scattering_tough_ge_1(const std::vector<SeparatorInfo>& seps) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < seps.size(); ++i)
    if (mu_of(seps[i]) - size_of(seps[i]) > mu_of(seps[best]) - size_of(seps[best])) best = i;
  return scattering_single_mvs(seps[best]);
}

ScatteringResult scattering_type_a(const std::vector<SeparatorInfo>& seps) {
  for (const auto& s : seps)
    if (size_of(s) == mu_of(s)) return {1, s.vertices};
  throw InternalError("type A graph without a separator of size mu(S)");
}

std::vector<std::size_t> scattering_separators_type_b(CliqueBipartite& cb) {
  if (cb.separator_count == 0) return {};
  const std::size_t root = cb.separator_node(0);
  std::vector<std::size_t> chosen;
  std::size_t entry_order = 0;

  auto finish = [&](std::size_t v) {
    if (cb.status[v] != NodeStatus::Mvs) {
      if (cb.status[v] == NodeStatus::FalseClique) --cb.mu[cb.parent[v]];
      return;
    }
    if (v == root || cb.card[v] >= cb.mu[v]) return;
    chosen.push_back(v);
    const auto p = static_cast<std::size_t>(cb.parent[v]);
    const auto pp = static_cast<std::size_t>(cb.parent[p]);
    // The parent clique vanishes when nothing but the grandparent
    // separator is left in it.
    if (cb.card[p] == cb.card[v] + cb.card[pp])
      cb.status[p] = NodeStatus::FalseClique;
    else
      cb.card[p] -= cb.card[v];
  };

  struct Frame {
    std::size_t node;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  cb.parent[root] = -1;
  cb.entry[root] = ++entry_order;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& adj = cb.adjacency[top.node];
    if (top.next_child < adj.size()) {
      const std::size_t w = adj[top.next_child++];
      if (cb.entry[w] == 0) {
        cb.parent[w] = static_cast<std::int64_t>(top.node);
        cb.entry[w] = ++entry_order;
        stack.push_back({w, 0});
      }
      continue;
    }
    const std::size_t v = top.node;
    stack.pop_back();
    finish(v);
  }
  if (cb.card[root] < cb.mu[root]) chosen.push_back(root);

  std::vector<char> picked(cb.separator_count, 0);
  for (std::size_t v : chosen) picked[v - cb.clique_count] = 1;
  std::vector<std::size_t> out;
  out.reserve(chosen.size());
  for (std::size_t s = 0; s < cb.separator_count; ++s)
    if (picked[s]) out.push_back(s);
  return out;
}

VertexSet scattering_set_type_b(CliqueBipartite& cb, const std::vector<SeparatorInfo>& seps) {
  const auto chosen = scattering_separators_type_b(cb);
  Vertex max_vertex = -1;
  for (std::size_t s : chosen) max_vertex = std::max(max_vertex, seps[s].vertices.vector().back());
  std::vector<char> in_set(static_cast<std::size_t>(max_vertex + 1), 0);
  for (std::size_t s : chosen)
    for (Vertex v : seps[s].vertices) in_set[v] = 1;
  std::vector<Vertex> members;
  for (Vertex v = 0; v <= max_vertex; ++v)
    if (in_set[v]) members.push_back(v);
  return VertexSet::from_sorted(std::move(members));
}

VulnerabilityReport analyze(const Graph& g, StageTimings* timings) {
  using Clock = std::chrono::steady_clock;
  StageTimings local;
  StageTimings& t = timings ? *timings : local;
  t = StageTimings{};
  auto stamp = Clock::now();
  auto lap = [&](std::chrono::nanoseconds& slot) {
    const auto now = Clock::now();
    slot += std::chrono::duration_cast<std::chrono::nanoseconds>(now - stamp);
    stamp = now;
  };

  if (g.n() == 0) throw NotConnected("empty graph");
  // The rest of the pipeline runs on a copy numbered in breadth-first order,
  // which keeps neighbor lists close together in memory on large inputs.
  std::vector<Vertex> visit;
  std::optional<Graph> relabeled = g.bfs_relabeled(visit);
  if (!relabeled) {
    std::vector<char> seen(g.n(), 0);
    for (Vertex v : visit) seen[v] = 1;
    Vertex other = 0;
    while (seen[other]) ++other;
    throw NotConnected(0, other);
  }
  const Graph& h = *relabeled;
  auto original = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(visit[v]);
    return out;
  };
  lap(t.connectivity);

  const Ordering peo = mcs_order(h);
  if (auto check = check_peo(h, peo); !check) {
    auto cycle = find_chordless_cycle(h, check.vertex);
    if (!cycle) throw InternalError("zero fill-in test failed on a chordal graph");
    throw NotChordal(original(*cycle));
  }
  lap(t.ordering);

  const CliqueTree ct = build_clique_tree(h, peo);
  lap(t.clique_tree);

  auto relabeled_seps = minimal_vertex_separators(ct);
  if (auto shared = find_shared_separator_vertex(relabeled_seps))
    throw NotStrictlyChordal(visit[shared->vertex],
                             VertexSet(original(relabeled_seps[shared->first].vertices.vector())),
                             VertexSet(original(relabeled_seps[shared->second].vertices.vector())));

  // Back to the caller's numbering. Separators are disjoint now, so one sweep
  // over the original ids yields sorted vertex lists, ordered by first vertex.
  VulnerabilityReport report;
  {
    std::vector<std::int64_t> owner(g.n(), -1);
    for (std::size_t s = 0; s < relabeled_seps.size(); ++s)
      for (Vertex v : relabeled_seps[s].vertices) owner[visit[v]] = static_cast<std::int64_t>(s);
    std::vector<std::vector<Vertex>> members(relabeled_seps.size());
    std::vector<std::size_t> order;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (owner[v] < 0) continue;
      auto& list = members[owner[v]];
      if (list.empty()) order.push_back(static_cast<std::size_t>(owner[v]));
      list.push_back(v);
    }
    report.separators.reserve(order.size());
    for (std::size_t s : order) {
      auto& info = relabeled_seps[s];
      info.vertices = VertexSet::from_sorted(std::move(members[s]));
      report.separators.push_back(std::move(info));
    }
  }
  const auto& seps = report.separators;
  lap(t.separators);

  report.kind = classify(seps);
  if (report.kind == Case::Complete) {
    lap(t.scattering);
    return report;
  }
  std::tie(report.toughness, report.tough_set) = toughness(seps);

  ScatteringResult sc;
  switch (report.kind) {
    case Case::SingleMvs: sc = scattering_single_mvs(seps.front()); break;
    case Case::ToughGe1: sc = scattering_tough_ge_1(seps); break;
    case Case::TypeA: sc = scattering_type_a(seps); break;
    case Case::TypeB: {
      CliqueBipartite cb = build_cb(ct, seps);
      sc.set = scattering_set_type_b(cb, seps);
      const auto in_set = sc.set.mask(g.n());
      std::vector<char> removed(h.n(), 0);
      for (Vertex v = 0; v < h.n(); ++v) removed[v] = in_set[visit[v]];
      sc.number = static_cast<std::int64_t>(connected_components(h, removed).count) -
                  static_cast<std::int64_t>(sc.set.size());
      break;
    }
    case Case::Complete: break;
  }
  report.scattering_number = sc.number;
  report.scattering_set = std::move(sc.set);
  lap(t.scattering);
  return report;
}

}  // namespace scatter
