#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "psmt/graph.hpp"

namespace psmt {

// Simulated defects planted on the model. Type 1 sits on a single edge and
// activates on every visit; type 2 sits on an ordered edge pair and activates
// when a path traverses the first edge and later the second (at most once per
// pair and path). Edges are stored as positions into Graph::edges.
struct DefectSet {
  std::vector<std::size_t> type1;
  std::vector<std::pair<std::size_t, std::size_t>> type2;

  bool empty() const { return type1.empty() && type2.empty(); }
};

struct DefectActivation {
  std::size_t type1 = 0;
  std::size_t type2 = 0;
};

// Type-1 activation counting: every traversal of a defective edge, or at
// most once per path.
enum class Type1Counting { per_occurrence, per_path };

struct MetricsReport {
  std::size_t steps = 0;         // total edges over all paths
  std::size_t path_count = 0;    // |P|
  double avg_steps = 0.0;        // steps / |P|, 0 for an empty set
  std::size_t unique_steps = 0;  // distinct edges used
  double ut = 0.0;               // steps / unique_steps, 0 when unique_steps = 0
  std::size_t type1_activated = 0;
  std::size_t type2_activated = 0;
  double eff1 = 0.0;  // type1_activated / steps, 0 when steps = 0
  double eff2 = 0.0;  // type2_activated / steps, 0 when steps = 0
};

DefectActivation activate_defects(const std::vector<TestPath>& paths, const DefectSet& defects,
                                  Type1Counting counting = Type1Counting::per_occurrence);

MetricsReport compute_metrics(const std::vector<TestPath>& paths, const DefectSet& defects,
                              Type1Counting counting = Type1Counting::per_occurrence);

// Uniformly samples type-1 edges and type-2 connected ordered edge pairs,
// both without replacement; deterministic per seed. Throws
// InsufficientCandidatesError when the graph cannot host the counts.
DefectSet plant_random_defects(const Graph& g, std::size_t type1_count,
                               std::size_t type2_count, std::uint64_t seed);

// Edge existence plus type-2 pair connectivity (a walk from the first edge to
// the second must exist).
ValidationReport validate_defects(const Graph& g, const DefectSet& defects);

// Mean shortest distance (in edges) between the members of each type-2 pair;
// 0 when there are no pairs.
double average_pair_distance(const Graph& g, const DefectSet& defects);

// Number of ordered edge pairs (e1, e2) connected by a walk from e1 to e2.
std::size_t connected_pair_count(const Graph& g);

}  // namespace psmt
