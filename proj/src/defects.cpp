#include "psmt/defects.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "psmt/errors.hpp"
#include "psmt/rng.hpp"

namespace psmt {

namespace {

// Vertices reachable from v by walks of length >= 0.
std::vector<char> reachable_from(const Graph& g, std::size_t v) {
  std::vector<char> seen(g.vertices.size(), 0);
  if (v >= g.vertices.size()) return seen;
  std::deque<std::size_t> queue{v};
  seen[v] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : g.out_edges(u)) {
      const std::size_t w = g.edge_target_pos(e);
      if (w != npos && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

// Shortest walk length from vertex a to vertex b, npos when unreachable.
std::size_t shortest_distance(const Graph& g, std::size_t a, std::size_t b) {
  if (a >= g.vertices.size() || b >= g.vertices.size()) return npos;
  std::vector<std::size_t> dist(g.vertices.size(), npos);
  std::deque<std::size_t> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == b) return dist[u];
    for (std::size_t e : g.out_edges(u)) {
      const std::size_t w = g.edge_target_pos(e);
      if (w != npos && dist[w] == npos) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist[b];
}

}  // namespace

DefectActivation activate_defects(const std::vector<TestPath>& paths,
                                  const DefectSet& defects, Type1Counting counting) {
  DefectActivation out;
  for (const TestPath& p : paths) {
    for (std::size_t defect : defects.type1) {
      const auto occurrences = static_cast<std::size_t>(
          std::count(p.edges.begin(), p.edges.end(), defect));
      out.type1 += counting == Type1Counting::per_occurrence
                       ? occurrences
                       : std::min<std::size_t>(occurrences, 1);
    }
    for (const auto& [e1, e2] : defects.type2) {
      auto first = std::find(p.edges.begin(), p.edges.end(), e1);
      if (first == p.edges.end()) continue;
      if (std::find(first + 1, p.edges.end(), e2) != p.edges.end()) ++out.type2;
    }
  }
  return out;
}

MetricsReport compute_metrics(const std::vector<TestPath>& paths, const DefectSet& defects,
                              Type1Counting counting) {
  MetricsReport report;
  report.path_count = paths.size();
  std::unordered_set<std::size_t> unique;
  for (const TestPath& p : paths) {
    report.steps += p.length();
    unique.insert(p.edges.begin(), p.edges.end());
  }
  report.unique_steps = unique.size();
  if (report.path_count > 0) {
    report.avg_steps = static_cast<double>(report.steps) / report.path_count;
  }
  if (report.unique_steps > 0) {
    report.ut = static_cast<double>(report.steps) / report.unique_steps;
  }
  const DefectActivation hits = activate_defects(paths, defects, counting);
  report.type1_activated = hits.type1;
  report.type2_activated = hits.type2;
  if (report.steps > 0) {
    report.eff1 = static_cast<double>(hits.type1) / report.steps;
    report.eff2 = static_cast<double>(hits.type2) / report.steps;
  }
  return report;
}

DefectSet plant_random_defects(const Graph& g, std::size_t type1_count,
                               std::size_t type2_count, std::uint64_t seed) {
  Rng rng(seed);
  if (type1_count > g.edges.size()) {
    throw InsufficientCandidatesError(
        "cannot plant " + std::to_string(type1_count) + " type-1 defects into " +
        std::to_string(g.edges.size()) + " edges");
  }
  DefectSet defects;
  defects.type1 = rng.sample_indices(g.edges.size(), type1_count);
  std::sort(defects.type1.begin(), defects.type1.end());

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t e1 = 0; e1 < g.edges.size(); ++e1) {
    const std::size_t from = g.edge_target_pos(e1);
    if (from == npos) continue;
    const std::vector<char> reach = reachable_from(g, from);
    for (std::size_t e2 = 0; e2 < g.edges.size(); ++e2) {
      const std::size_t to = g.edge_source_pos(e2);
      if (to != npos && reach[to]) candidates.emplace_back(e1, e2);
    }
  }
  if (type2_count > candidates.size()) {
    throw InsufficientCandidatesError(
        "cannot plant " + std::to_string(type2_count) + " type-2 defects; only " +
        std::to_string(candidates.size()) + " connected edge pairs exist");
  }
  for (std::size_t i : rng.sample_indices(candidates.size(), type2_count)) {
    defects.type2.push_back(candidates[i]);
  }
  std::sort(defects.type2.begin(), defects.type2.end());
  return defects;
}

ValidationReport validate_defects(const Graph& g, const DefectSet& defects) {
  ValidationReport report;
  for (std::size_t e : defects.type1) {
    if (e >= g.edges.size()) {
      report.violations.push_back("type-1 defect references an unknown edge");
    }
  }
  for (const auto& [e1, e2] : defects.type2) {
    if (e1 >= g.edges.size() || e2 >= g.edges.size()) {
      report.violations.push_back("type-2 defect references an unknown edge");
      continue;
    }
    const std::size_t from = g.edge_target_pos(e1);
    const std::size_t to = g.edge_source_pos(e2);
    if (from == npos || to == npos || !reachable_from(g, from)[to]) {
      report.violations.push_back("type-2 defect pair (" + g.edges[e1].id + ", " +
                                  g.edges[e2].id + ") is not connected by any path");
    }
  }
  return report;
}

double average_pair_distance(const Graph& g, const DefectSet& defects) {
  if (defects.type2.empty()) return 0.0;
  double total = 0.0;
  std::size_t counted = 0;
  for (const auto& [e1, e2] : defects.type2) {
    const std::size_t d = shortest_distance(g, g.edge_target_pos(e1), g.edge_source_pos(e2));
    if (d != npos) {
      total += static_cast<double>(d);
      ++counted;
    }
  }
  return counted == 0 ? 0.0 : total / counted;
}

std::size_t connected_pair_count(const Graph& g) {
  std::size_t count = 0;
  for (std::size_t e1 = 0; e1 < g.edges.size(); ++e1) {
    const std::size_t from = g.edge_target_pos(e1);
    if (from == npos) continue;
    const std::vector<char> reach = reachable_from(g, from);
    for (std::size_t e2 = 0; e2 < g.edges.size(); ++e2) {
      const std::size_t to = g.edge_source_pos(e2);
      if (to != npos && reach[to]) ++count;
    }
  }
  return count;
}

}  // namespace psmt
