#pragma once

#include <cstdint>
#include <string>

#include "psmt/graph.hpp"

namespace psmt {

// Requested structural properties of a generated SUT model. Vertex, edge and
// vertex-set cardinalities are matched exactly; cycle_count is approached
// best-effort (measure_properties reports what was achieved).
struct InstanceSpec {
  std::size_t vertex_count = 10;
  std::size_t edge_count = 19;
  std::size_t cycle_count = 2;
  std::size_t test_start_count = 2;  // |V_ts|
  std::size_t test_end_count = 2;    // |V_te|
  std::size_t overlap_count = 1;     // |V_ts intersect V_te|
  std::size_t end_vertex_count = 1;  // |V_e|
  PriorityScale priority_scale;
  double priority_band_min = 2.0;  // selected elements get priorities in this band
  double priority_band_max = 3.0;
  std::size_t priority_vertex_count = 3;
  std::size_t priority_edge_count = 5;
  std::uint64_t seed = 0;
  std::string name;  // defaults to a seed-derived name
};

struct PropertyReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t cycles = 0;  // distinct elementary circuits, rotations counted once
  bool cycles_capped = false;
  double avg_cycle_length = 0.0;
  std::size_t parallel_edge_groups = 0;
  std::size_t parallel_edges = 0;
  double avg_in_degree = 0.0;
  double avg_out_degree = 0.0;
  double avg_degree = 0.0;
  std::size_t test_start_count = 0;
  std::size_t test_end_count = 0;
  std::size_t overlap_count = 0;
  std::size_t end_vertex_count = 0;
  std::size_t priority_vertex_count = 0;
  std::size_t priority_edge_count = 0;
};

// Builds a valid SUT model matching the spec: every vertex reachable from the
// start vertex, exact cardinalities, priorities drawn uniformly inside/below
// the band. Deterministic per seed. Throws SpecUnsatisfiableError when the
// exact-match fields cannot be realized.
Graph generate(const InstanceSpec& spec);

// Structural statistics of a model; priority counts use the given selection
// band. Circuit enumeration is capped to keep dense graphs bounded.
PropertyReport measure_properties(const Graph& g, const PrioritySelection& selection = {},
                                  std::size_t cycle_cap = 100000);

}  // namespace psmt
