#include "scatter/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "scatter/errors.hpp"

namespace scatter {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> members) {
  VertexSet s;
  s.members_ = std::move(members);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask(std::size_t n) const {
  std::vector<char> m(n, 0);
  for (Vertex v : members_) m[v] = 1;
  return m;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  // Two counting-sort passes give every adjacency list in ascending order
  // without a comparison sort.
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  auto bucket_by = [n](const std::vector<Edge>& in, auto key) {
    std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& a : in) ++start[key(a) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<Edge> out(in.size());
    for (const auto& a : in) out[start[key(a)]++] = a;
    return out;
  };
  arcs = bucket_by(arcs, [](const Edge& a) { return a.second; });
  arcs = bucket_by(arcs, [](const Edge& a) { return a.first; });

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.targets_.reserve(arcs.size());
  std::size_t repeated_arcs = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i] == arcs[i - 1]) {
      ++repeated_arcs;
      continue;
    }
    g.targets_.push_back(arcs[i].second);
    ++g.offsets_[arcs[i].first + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.duplicates_ = repeated_arcs / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  enum class Format { Unknown, Dimacs, Plain } format = Format::Unknown;
  long long n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  auto add_edge = [&](long long u, long long v, std::size_t line) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line, "vertex id out of range");
    if (u == v) throw ParseError(line, "self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c" || tok[0].front() == '#') continue;

    if (format == Format::Unknown) {
      if (tok[0] == "p") {
        if (tok.size() != 4 || tok[1] != "edge")
          throw ParseError(line_no, "expected 'p edge <n> <m>'");
        format = Format::Dimacs;
      } else if (tok.size() == 2) {
        format = Format::Plain;
        tok.insert(tok.begin(), std::string_view("p"));
        tok.insert(tok.begin() + 1, std::string_view("edge"));
      } else {
        throw ParseError(line_no, "missing header");
      }
      n = to_int(tok[2], line_no);
      if (n < 0 || n > INT32_MAX) throw ParseError(line_no, "invalid vertex count");
      if (to_int(tok[3], line_no) < 0) throw ParseError(line_no, "invalid edge count");
      continue;
    }

    if (format == Format::Dimacs) {
      if (tok[0] != "e" || tok.size() != 3)
        throw ParseError(line_no, "expected 'e <u> <v>'");
      add_edge(to_int(tok[1], line_no) - 1, to_int(tok[2], line_no) - 1, line_no);
    } else {
      if (tok.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
      add_edge(to_int(tok[0], line_no), to_int(tok[1], line_no), line_no);
    }
  }
  if (format == Format::Unknown) throw ParseError(line_no, "empty input");
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

ComponentLabels connected_components(const Graph& g, std::span<const char> removed) {
  ComponentLabels out;
  out.component.assign(g.n(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    if (removed[s] || out.component[s] >= 0) continue;
    const auto id = static_cast<std::int32_t>(out.count++);
    out.component[s] = id;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (removed[w] || out.component[w] >= 0) continue;
        out.component[w] = id;
        queue.push_back(w);
      }
    }
  }
  return out;
}

ComponentLabels connected_components(const Graph& g, const VertexSet& removed) {
  const auto mask = removed.mask(g.n());
  return connected_components(g, mask);
}

bool is_connected(const Graph& g) {
  return connected_components(g, VertexSet{}).count == 1;
}

std::vector<Vertex> bfs_order(const Graph& g, Vertex source) {
  std::vector<Vertex> order;
  if (g.n() == 0) return order;
  std::vector<char> seen(g.n(), 0);
  order.reserve(g.n());
  order.push_back(source);
  seen[source] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex w : g.neighbors(order[head]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

Graph Graph::relabeled(std::span<const Vertex> order) const {
  std::vector<Vertex> position(n_);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Vertex>(i);
  Graph out;
  out.n_ = n_;
  out.duplicates_ = duplicates_;
  out.offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex i = 0; i < n_; ++i) out.offsets_[i + 1] = out.offsets_[i] + degree(order[i]);
  out.targets_.resize(targets_.size());
  // Scanning new ids in ascending order fills every list already sorted.
  std::vector<std::size_t> cursor(out.offsets_.begin(), out.offsets_.end() - 1);
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex w : neighbors(order[i])) out.targets_[cursor[position[w]]++] = i;
  return out;
}

std::optional<Graph> Graph::bfs_relabeled(std::vector<Vertex>& order) const {
  order.clear();
  if (n_ == 0) return Graph{};
  std::vector<Vertex> position(n_, -1);
  Graph out;
  out.n_ = n_;
  out.duplicates_ = duplicates_;
  out.offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  out.targets_.resize(targets_.size());
  // cursor[j] is the next free slot of row j. Rows receive their entries
  // from neighbors in ascending new id, so each ends up sorted.
  std::vector<std::size_t> cursor(n_);
  order.reserve(n_);
  auto discover = [&](Vertex v) {
    const auto j = static_cast<Vertex>(order.size());
    position[v] = j;
    cursor[j] = out.offsets_[j];
    out.offsets_[j + 1] = out.offsets_[j] + degree(v);
    order.push_back(v);
  };
  discover(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : neighbors(order[i])) {
      if (position[w] < 0) discover(w);
      out.targets_[cursor[position[w]]++] = static_cast<Vertex>(i);
    }
  if (order.size() != static_cast<std::size_t>(n_)) return std::nullopt;
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.n(), -1);
  Vertex next = 0;
  for (Vertex v : keep) index[v] = next++;
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex w : g.neighbors(u))
      if (u < w && index[w] >= 0) edges.emplace_back(index[u], index[w]);
  return Graph::from_edges(next, edges);
}

}  // namespace scatter
