#pragma once

#include <optional>

#include "psmt/graph.hpp"
#include "psmt/requirements.hpp"

namespace psmt {

// Finds a shortest valid test path that contains the requirement and whose
// total length lies in [min_length, max_length]. A valid test path starts in
// a test-start vertex, ends in a test-end vertex, and the requirement must be
// a contiguous sub-path (a vertex requirement must be visited).
//
// The search grows two frontiers breadth-first: prefixes backward from the
// requirement's first vertex and suffixes forward from its last vertex, each
// side keeping one representative partial path per length. The returned path
// is prefix + requirement edges + suffix of minimum total length; ties are
// broken by first discovery. Returns nullopt when no such path exists.
std::optional<TestPath> find_path_in_range(const Requirement& requirement, const Graph& g,
                                           std::size_t min_length, std::size_t max_length);

}  // namespace psmt
