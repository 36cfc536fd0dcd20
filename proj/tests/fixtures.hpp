#pragma once

#include <string>
#include <vector>

#include "psmt/graph.hpp"
#include "psmt/requirements.hpp"

namespace psmt::testing {

// Triangle model: A -a-> B -b-> C -c-> A, start A, V_ts={A}, V_te=V_e={C}.
inline Graph triangle() {
  Graph g;
  g.name = "triangle";
  g.vertices = {{"A", 0.0}, {"B", 0.0}, {"C", 0.0}};
  g.edges = {{"a", "A", "B", "x", 0.0},
             {"b", "B", "C", "y", 0.0},
             {"c", "C", "A", "z", 0.0}};
  g.start = "A";
  g.test_starts = {"A"};
  g.test_ends = {"C"};
  g.end_vertices = {"C"};
  g.finalize();
  return g;
}

inline TestPath path_of(const Graph& g, const std::vector<std::string>& edge_ids) {
  TestPath p;
  for (const auto& id : edge_ids) p.edges.push_back(*g.edge_pos(id));
  return p;
}

inline TestPath vertex_path(const Graph& g, const std::string& vertex_id) {
  return TestPath{{}, *g.vertex_pos(vertex_id)};
}

}  // namespace psmt::testing
