#pragma once

#include <vector>

#include "psmt/graph.hpp"
#include "psmt/requirements.hpp"

namespace psmt {

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

// Baseline strategy: exhaustively enumerate every walk whose length lies in
// [min_length, max_length] (per first edge, in edge declaration order,
// extended depth-first by declaration order), keep only valid test paths,
// then scan them in enumeration order keeping any path that covers a still
// uncovered requirement.
//
// Throws EnumerationOverflowError when the enumeration would generate more
// than enum_cap partial paths.
std::vector<TestPath> nswitch_reduce(const Graph& g, std::size_t min_length,
                                     std::size_t max_length, CoverageCriterion criterion,
                                     const PrioritySelection& selection,
                                     std::size_t enum_cap = kDefaultEnumCap);

}  // namespace psmt
