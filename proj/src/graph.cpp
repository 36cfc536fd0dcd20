#include "psmt/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace psmt {

void Graph::finalize() {
  vertex_index_.clear();
  edge_index_.clear();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    vertex_index_.emplace(vertices[i].id, i);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_index_.emplace(edges[i].id, i);
  }

  const std::size_t n = vertices.size();
  out_.assign(n, {});
  in_.assign(n, {});
  edge_src_.assign(edges.size(), npos);
  edge_tgt_.assign(edges.size(), npos);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (auto s = vertex_pos(edges[e].source)) {
      edge_src_[e] = *s;
      out_[*s].push_back(e);
    }
    if (auto t = vertex_pos(edges[e].target)) {
      edge_tgt_[e] = *t;
      in_[*t].push_back(e);
    }
  }

  auto mark = [&](const std::vector<std::string>& ids, std::vector<char>& bits) {
    bits.assign(n, 0);
    for (const auto& id : ids) {
      if (auto v = vertex_pos(id)) bits[*v] = 1;
    }
  };
  mark(test_starts, test_start_);
  mark(test_ends, test_end_);
  mark(end_vertices, end_vertex_);

  start_pos_ = npos;
  if (auto v = vertex_pos(start)) start_pos_ = *v;
}

std::optional<std::size_t> Graph::vertex_pos(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::edge_pos(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Graph::labels() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& e : edges) {
    if (seen.insert(e.label).second) out.push_back(e.label);
  }
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v << '\n';
  return os.str();
}

ValidationReport validate(const Graph& g) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  std::unordered_set<std::string> vertex_ids;
  for (const auto& v : g.vertices) {
    if (!vertex_ids.insert(v.id).second) fail("duplicate vertex id '" + v.id + "'");
    if (!g.scale.contains(v.priority)) {
      fail("vertex '" + v.id + "' priority outside the model scale");
    }
  }
  std::unordered_set<std::string> edge_ids;
  for (const auto& e : g.edges) {
    if (!edge_ids.insert(e.id).second) fail("duplicate edge id '" + e.id + "'");
    if (!vertex_ids.count(e.source)) {
      fail("dangling edge endpoint: edge '" + e.id + "' source '" + e.source + "'");
    }
    if (!vertex_ids.count(e.target)) {
      fail("dangling edge endpoint: edge '" + e.id + "' target '" + e.target + "'");
    }
    if (!g.scale.contains(e.priority)) {
      fail("edge '" + e.id + "' priority outside the model scale");
    }
  }

  if (!(g.scale.scale_min < g.scale.scale_max)) {
    fail("priority scale is empty (scale_min must be below scale_max)");
  }

  if (!vertex_ids.count(g.start)) {
    fail("start vertex '" + g.start + "' is not a model vertex");
  }

  auto check_members = [&](const std::vector<std::string>& ids, const std::string& what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
      if (!vertex_ids.count(id)) fail(what + " contains unknown vertex '" + id + "'");
      if (!seen.insert(id).second) fail(what + " lists vertex '" + id + "' twice");
    }
  };
  check_members(g.test_starts, "test_starts");
  check_members(g.test_ends, "test_ends");
  check_members(g.end_vertices, "end_vertices");

  auto contains = [](const std::vector<std::string>& ids, const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  if (!contains(g.test_starts, g.start)) {
    fail("start vertex not in test_starts");
  }
  for (const auto& id : g.end_vertices) {
    if (!contains(g.test_ends, id)) {
      fail("end_vertices not contained in test_ends: '" + id + "'");
    }
  }
  return report;
}

bool is_well_formed(const Graph& g, const TestPath& p) {
  if (p.zero_length()) return p.vertex != npos && p.vertex < g.vertices.size();
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= g.edges.size()) return false;
    if (g.edge_source_pos(p.edges[i]) == npos || g.edge_target_pos(p.edges[i]) == npos) {
      return false;
    }
    if (i > 0 && g.edge_target_pos(p.edges[i - 1]) != g.edge_source_pos(p.edges[i])) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> path_vertices(const Graph& g, const TestPath& p) {
  if (p.zero_length()) return {p.vertex};
  std::vector<std::size_t> out;
  out.reserve(p.edges.size() + 1);
  out.push_back(g.edge_source_pos(p.edges.front()));
  for (std::size_t e : p.edges) out.push_back(g.edge_target_pos(e));
  return out;
}

std::size_t first_vertex(const Graph& g, const TestPath& p) {
  return p.zero_length() ? p.vertex : g.edge_source_pos(p.edges.front());
}

std::size_t last_vertex(const Graph& g, const TestPath& p) {
  return p.zero_length() ? p.vertex : g.edge_target_pos(p.edges.back());
}

bool is_subpath(const Graph& g, const TestPath& candidate, const TestPath& container) {
  if (candidate.zero_length()) {
    if (candidate.vertex == npos) return false;
    if (container.zero_length()) return container.vertex == candidate.vertex;
    const auto visited = path_vertices(g, container);
    return std::find(visited.begin(), visited.end(), candidate.vertex) != visited.end();
  }
  if (container.zero_length()) return false;
  if (candidate.edges.size() > container.edges.size()) return false;
  auto it = std::search(container.edges.begin(), container.edges.end(),
                        candidate.edges.begin(), candidate.edges.end());
  return it != container.edges.end();
}

std::string describe(const Graph& g, const TestPath& p) {
  if (p.zero_length()) {
    return p.vertex < g.vertices.size() ? g.vertices[p.vertex].id : "<invalid>";
  }
  std::string out = "[";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ", ";
    out += p.edges[i] < g.edges.size() ? g.edges[p.edges[i]].id : "<invalid>";
  }
  out += "]";
  return out;
}

}  // namespace psmt
