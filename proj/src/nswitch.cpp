#include "psmt/nswitch.hpp"

#include <map>
#include <unordered_map>

#include "psmt/errors.hpp"

namespace psmt {

namespace {

// Requirement lookup keyed by structure, so a walk's covered requirements can
// be collected in one sweep over its edges instead of per-requirement
// sub-path checks.
struct RequirementIndex {
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_vertex;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_edge;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;

  explicit RequirementIndex(const std::vector<Requirement>& reqs) {
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      const Requirement& r = reqs[i];
      if (r.kind == Requirement::Kind::vertex_visit) {
        by_vertex[r.vertex].push_back(i);
      } else if (r.edges.size() == 1) {
        by_edge[r.edges[0]].push_back(i);
      } else if (r.edges.size() == 2) {
        by_pair[{r.edges[0], r.edges[1]}].push_back(i);
      }
    }
  }

  template <class Fn>
  void for_covered(const Graph& g, const std::vector<std::size_t>& walk, Fn&& fn) const {
    auto emit = [&](const std::vector<std::size_t>* hits) {
      if (!hits) return;
      for (std::size_t r : *hits) fn(r);
    };
    auto find = [](const auto& map, const auto& key) -> const std::vector<std::size_t>* {
      auto it = map.find(key);
      return it == map.end() ? nullptr : &it->second;
    };
    if (!by_vertex.empty() && !walk.empty()) {
      emit(find(by_vertex, g.edge_source_pos(walk.front())));
      for (std::size_t e : walk) emit(find(by_vertex, g.edge_target_pos(e)));
    }
    for (std::size_t i = 0; i < walk.size(); ++i) {
      emit(find(by_edge, walk[i]));
      if (i + 1 < walk.size()) emit(find(by_pair, std::make_pair(walk[i], walk[i + 1])));
    }
  }
};

// Depth-first enumeration of walks with a fixed first edge, extended by edge
// declaration order; fn sees each walk in preorder, while its length stays
// within max_length. fn returns false to stop the whole enumeration.
template <class Fn>
bool enumerate_from_edge(const Graph& g, std::size_t first_edge, std::size_t max_length,
                         Fn&& fn) {
  static const std::vector<std::size_t> kNoEdges;
  std::vector<std::size_t> walk{first_edge};
  // Iterative DFS; frame i holds the next out-edge rank to try at depth i.
  std::vector<std::size_t> next_rank{0};
  if (!fn(walk)) return false;
  while (!next_rank.empty()) {
    const std::size_t tip = g.edge_target_pos(walk.back());
    const auto& outs = tip == npos ? kNoEdges : g.out_edges(tip);
    if (walk.size() < max_length && next_rank.back() < outs.size()) {
      const std::size_t e = outs[next_rank.back()++];
      walk.push_back(e);
      next_rank.push_back(0);
      if (!fn(walk)) return false;
    } else {
      walk.pop_back();
      next_rank.pop_back();
    }
  }
  return true;
}

}  // namespace

std::vector<TestPath> nswitch_reduce(const Graph& g, std::size_t min_length,
                                     std::size_t max_length, CoverageCriterion criterion,
                                     const PrioritySelection& selection,
                                     std::size_t enum_cap) {
  // First pass establishes whether the full enumeration fits the cap, so the
  // abort decision does not depend on how early the requirement scan stops.
  std::size_t generated = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const bool ok = enumerate_from_edge(g, e, max_length, [&](const auto&) {
      return ++generated <= enum_cap;
    });
    if (!ok) {
      throw EnumerationOverflowError(
          "bounded path enumeration exceeds the cap of " + std::to_string(enum_cap) +
          " partial paths; raise the cap or shrink the length range");
    }
  }

  const std::vector<Requirement> requirements =
      generate_requirements(g, criterion, selection);
  const RequirementIndex index(requirements);

  std::vector<char> uncovered(requirements.size(), 1);
  std::size_t remaining = requirements.size();
  std::vector<TestPath> kept;

  for (std::size_t e = 0; e < g.edges.size() && remaining > 0; ++e) {
    const std::size_t src = g.edge_source_pos(e);
    if (src == npos || !(g.is_test_start(src) || src == g.start_pos())) continue;
    enumerate_from_edge(g, e, max_length, [&](const std::vector<std::size_t>& walk) {
      if (walk.size() < min_length) return true;
      const std::size_t tip = g.edge_target_pos(walk.back());
      if (tip == npos || !(g.is_test_end(tip) || g.is_end_vertex(tip))) return true;
      bool adds = false;
      index.for_covered(g, walk, [&](std::size_t r) {
        if (uncovered[r]) adds = true;
      });
      if (adds) {
        kept.push_back(TestPath{walk, npos});
        index.for_covered(g, walk, [&](std::size_t r) {
          if (uncovered[r]) {
            uncovered[r] = 0;
            --remaining;
          }
        });
      }
      return remaining > 0;
    });
  }
  return kept;
}

}  // namespace psmt
