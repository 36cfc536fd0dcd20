#pragma once

#include <compare>
#include <string>
#include <vector>

#include "psmt/graph.hpp"

namespace psmt {

enum class CoverageCriterion { basic, extended };

const char* to_string(CoverageCriterion c);

// One unit of the coverage universe: either a vertex that some test path must
// visit, or a short edge sequence (one edge, or two adjacent edges) that some
// test path must contain.
struct Requirement {
  enum class Kind { vertex_visit, edge_sequence };
  Kind kind = Kind::vertex_visit;
  std::size_t vertex = npos;         // vertex_visit only
  std::vector<std::size_t> edges;    // edge_sequence only, length 1 or 2

  static Requirement visit(std::size_t v) { return {Kind::vertex_visit, v, {}}; }
  static Requirement sequence(std::vector<std::size_t> es) {
    return {Kind::edge_sequence, npos, std::move(es)};
  }

  // The requirement as a (possibly zero-length) path, for sub-path checks.
  TestPath as_path() const;

  std::string describe(const Graph& g) const;

  friend bool operator==(const Requirement&, const Requirement&) = default;
  friend auto operator<=>(const Requirement&, const Requirement&) = default;
};

// Builds the requirement set for the criterion, deduplicated, in a
// deterministic order (vertices, then edges, then incident edges, then
// adjacent pairs in edge declaration order).
//
// basic: every vertex and every edge whose priority falls in the selection
// band. extended: additionally every edge incoming or outgoing to a selected
// vertex, and every adjacent edge pair with a selected member edge.
std::vector<Requirement> generate_requirements(const Graph& g, CoverageCriterion criterion,
                                               const PrioritySelection& selection);

struct FeasibilitySplit {
  std::vector<Requirement> feasible;
  std::vector<Requirement> infeasible;
};

// Partitions requirements by whether a valid test path within
// [min_length, max_length] can contain them. Infeasible requirements are
// returned, never silently dropped.
FeasibilitySplit filter_feasible(const std::vector<Requirement>& requirements, const Graph& g,
                                 std::size_t min_length, std::size_t max_length);

struct CoverageViolation {
  int rule = 0;  // 1 endpoints, 2 length range, 3 uncovered requirement, 4 sub-path
  std::string message;
};

struct CoverageReport {
  std::vector<CoverageViolation> violations;
  bool satisfied() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks the four criterion rules over an already feasibility-filtered
// requirement set: valid endpoints, lengths in range, every requirement
// covered by some path, and no path being a sub-path of another.
CoverageReport check_coverage(const std::vector<TestPath>& paths,
                              const std::vector<Requirement>& requirements, const Graph& g,
                              std::size_t min_length, std::size_t max_length);

}  // namespace psmt
