#include <iomanip>
#include <sstream>

#include "cli.hpp"

namespace scatter::cli {

using nlohmann::json;

json vertex_list(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

namespace {

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(6) << r.to_double();
  return os.str();
}

json separators_json(const std::vector<SeparatorInfo>& seps) {
  json out = json::array();
  for (const auto& s : seps)
    out.push_back({{"vertices", vertex_list(s.vertices)},
                   {"multiplicity", s.multiplicity},
                   {"boundary_cliques", s.boundary_count}});
  return out;
}

}  // namespace

json report_document(const Graph& g, const VulnerabilityReport& r, const StageTimings* t) {
  json doc;
  doc["n"] = g.n();
  doc["m"] = g.m();
  doc["duplicate_edges"] = g.duplicate_edges();
  doc["connected"] = true;
  doc["chordal"] = true;
  doc["strictly_chordal"] = true;
  doc["case"] = std::string(to_string(r.kind));
  doc["separators"] = separators_json(r.separators);
  if (r.toughness.is_infinite()) {
    doc["toughness"] = "infinite";
  } else {
    doc["toughness"] = {{"num", r.toughness.num()},
                        {"den", r.toughness.den()},
                        {"decimal", decimal(r.toughness)}};
  }
  doc["tough_set"] = vertex_list(r.tough_set);
  if (r.scattering_number) {
    doc["scattering"] = {{"number", *r.scattering_number},
                         {"set", vertex_list(r.scattering_set)}};
  } else {
    doc["scattering"] = "undefined";
  }
  if (t) {
    doc["timing_ns"] = {{"connectivity", t->connectivity.count()},
                        {"ordering", t->ordering.count()},
                        {"clique_tree", t->clique_tree.count()},
                        {"separators", t->separators.count()},
                        {"scattering", t->scattering.count()},
                        {"total", t->total().count()}};
  }
  return doc;
}

json failure_document(const Graph& g, const Error& error) {
  json doc;
  doc["n"] = g.n();
  doc["m"] = g.m();
  doc["duplicate_edges"] = g.duplicate_edges();
  doc["separators"] = json::array();
  doc["toughness"] = nullptr;
  doc["scattering"] = nullptr;
  json err = {{"message", error.what()}};
  if (auto* e = dynamic_cast<const NotConnected*>(&error)) {
    doc["connected"] = false;
    doc["chordal"] = nullptr;
    doc["strictly_chordal"] = false;
    err["kind"] = "not_connected";
    if (e->first >= 0) err["witness"] = {e->first + 1, e->second + 1};
  } else if (auto* e = dynamic_cast<const NotChordal*>(&error)) {
    doc["connected"] = true;
    doc["chordal"] = false;
    doc["strictly_chordal"] = false;
    err["kind"] = "not_chordal";
    json cycle = json::array();
    for (Vertex v : e->cycle) cycle.push_back(v + 1);
    err["witness"] = {{"chordless_cycle", cycle}};
  } else if (auto* e = dynamic_cast<const NotStrictlyChordal*>(&error)) {
    doc["connected"] = true;
    doc["chordal"] = true;
    doc["strictly_chordal"] = false;
    err["kind"] = "not_strictly_chordal";
    err["witness"] = {{"vertex", e->shared + 1},
                      {"separators", {vertex_list(e->first), vertex_list(e->second)}}};
  } else {
    doc["connected"] = nullptr;
    doc["chordal"] = nullptr;
    doc["strictly_chordal"] = nullptr;
    err["kind"] = "error";
  }
  doc["error"] = err;
  return doc;
}

namespace {

std::string braces(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v + 1);
  return out + "}";
}

}  // namespace

std::string describe_failure(const Error& error) {
  if (auto* e = dynamic_cast<const NotConnected*>(&error)) {
    if (e->first < 0) return "not connected: " + std::string(e->what());
    return "not connected: vertices " + std::to_string(e->first + 1) + " and " +
           std::to_string(e->second + 1) + " lie in different components";
  }
  if (auto* e = dynamic_cast<const NotChordal*>(&error)) {
    std::string out = "not chordal: chordless cycle";
    for (Vertex v : e->cycle) out += " " + std::to_string(v + 1);
    return out + " (length " + std::to_string(e->cycle.size()) + ")";
  }
  if (auto* e = dynamic_cast<const NotStrictlyChordal*>(&error)) {
    return "not strictly chordal: vertex " + std::to_string(e->shared + 1) +
           " lies in minimal separators " + braces(e->first) + " and " + braces(e->second);
  }
  return error.what();
}

std::string human_report(const Graph& g, const VulnerabilityReport& r, const StageTimings* t) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(20) << key << value << "\n";
  };
  row("vertices", std::to_string(g.n()));
  row("edges", std::to_string(g.m()));
  if (g.duplicate_edges()) row("duplicate edges", std::to_string(g.duplicate_edges()));
  row("case", std::string(to_string(r.kind)));
  row("toughness", r.toughness.is_infinite()
                       ? "infinite"
                       : r.toughness.to_string() + " (" + decimal(r.toughness) + ")");
  if (!r.tough_set.empty()) row("tough set", braces(r.tough_set));
  row("scattering number", r.scattering_number ? std::to_string(*r.scattering_number) : "undefined");
  if (r.scattering_number) row("scattering set", braces(r.scattering_set));
  if (!r.separators.empty()) {
    os << "separators:\n" << std::right << std::setw(6) << "mu" << std::setw(6) << "|B|"
       << "  vertices\n";
    for (const auto& s : r.separators)
      os << std::setw(6) << s.multiplicity << std::setw(6) << s.boundary_count << "  "
         << braces(s.vertices) << "\n";
  }
  if (t) row("analysis time", std::to_string(t->total().count() / 1000.0) + " us");
  return os.str();
}

}  // namespace scatter::cli
