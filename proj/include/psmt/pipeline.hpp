#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psmt/graph.hpp"
#include "psmt/nswitch.hpp"
#include "psmt/reduction.hpp"
#include "psmt/requirements.hpp"

namespace psmt {

enum class ReductionKind { none, random, sorted, chvatal, ga, sa, nswitch };

const char* to_string(ReductionKind kind);
std::optional<ReductionKind> reduction_from_string(const std::string& name);
std::optional<CoverageCriterion> criterion_from_string(const std::string& name);

struct RunConfig {
  CoverageCriterion coverage = CoverageCriterion::basic;
  std::size_t min_length = 2;
  std::size_t max_length = 6;
  PrioritySelection selection;
  ReductionKind reduction = ReductionKind::sorted;
  std::uint64_t seed = 0;
  std::size_t repetitions = 3;  // stochastic variants are averaged over these
  GaConfig ga;
  SaConfig sa;
  std::size_t enum_cap = kDefaultEnumCap;
};

struct PipelineResult {
  std::vector<TestPath> paths;
  CoverageReport report;
  std::vector<Requirement> feasible;
  std::vector<Requirement> infeasible;
};

// End-to-end strategy: generate requirements for the criterion, split them by
// feasibility, find one shortest in-range path per feasible requirement,
// reduce the set with the configured variant (the baseline builds its own
// path pool instead), and normalize away sub-path duplicates. The returned
// report checks the criterion over the feasible requirements.
//
// Throws ValidationError for an invalid graph or configuration,
// NoPathsPossibleError when requirements exist but none is feasible, and
// EnumerationOverflowError from the baseline variant.
PipelineResult generate_paths(const Graph& g, const RunConfig& config);

}  // namespace psmt
