#include "psmt/requirements.hpp"

#include <set>
#include <sstream>

#include "psmt/path_search.hpp"

namespace psmt {

const char* to_string(CoverageCriterion c) {
  return c == CoverageCriterion::basic ? "basic" : "extended";
}

TestPath Requirement::as_path() const {
  if (kind == Kind::vertex_visit) return TestPath{{}, vertex};
  return TestPath{edges, npos};
}

std::string Requirement::describe(const Graph& g) const {
  if (kind == Kind::vertex_visit) {
    return "vertex '" + (vertex < g.vertices.size() ? g.vertices[vertex].id : "?") + "'";
  }
  std::string out = "edges [";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ", ";
    out += edges[i] < g.edges.size() ? g.edges[edges[i]].id : "?";
  }
  return out + "]";
}

std::vector<Requirement> generate_requirements(const Graph& g, CoverageCriterion criterion,
                                               const PrioritySelection& selection) {
  std::vector<Requirement> out;
  std::set<Requirement> seen;
  auto add = [&](Requirement r) {
    if (seen.insert(r).second) out.push_back(std::move(r));
  };

  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (selection.contains(g.vertices[v].priority)) add(Requirement::visit(v));
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (selection.contains(g.edges[e].priority)) add(Requirement::sequence({e}));
  }

  if (criterion == CoverageCriterion::extended) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (!selection.contains(g.vertices[v].priority)) continue;
      for (std::size_t e : g.in_edges(v)) add(Requirement::sequence({e}));
      for (std::size_t e : g.out_edges(v)) add(Requirement::sequence({e}));
    }
    for (std::size_t e1 = 0; e1 < g.edges.size(); ++e1) {
      const std::size_t mid = g.edge_target_pos(e1);
      if (mid == npos) continue;
      for (std::size_t e2 : g.out_edges(mid)) {
        if (selection.contains(g.edges[e1].priority) ||
            selection.contains(g.edges[e2].priority)) {
          add(Requirement::sequence({e1, e2}));
        }
      }
    }
  }
  return out;
}

FeasibilitySplit filter_feasible(const std::vector<Requirement>& requirements, const Graph& g,
                                 std::size_t min_length, std::size_t max_length) {
  FeasibilitySplit split;
  for (const auto& r : requirements) {
    if (find_path_in_range(r, g, min_length, max_length)) {
      split.feasible.push_back(r);
    } else {
      split.infeasible.push_back(r);
    }
  }
  return split;
}

std::string CoverageReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << "rule " << v.rule << ": " << v.message << '\n';
  return os.str();
}

CoverageReport check_coverage(const std::vector<TestPath>& paths,
                              const std::vector<Requirement>& requirements, const Graph& g,
                              std::size_t min_length, std::size_t max_length) {
  CoverageReport report;
  auto fail = [&](int rule, std::string msg) {
    report.violations.push_back({rule, std::move(msg)});
  };

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const TestPath& p = paths[i];
    if (!is_well_formed(g, p) || p.zero_length()) {
      fail(1, "path " + describe(g, p) + " is not a connected edge sequence");
      continue;
    }
    const std::size_t fv = first_vertex(g, p);
    const std::size_t lv = last_vertex(g, p);
    if (!(g.is_test_start(fv) || fv == g.start_pos())) {
      fail(1, "path " + describe(g, p) + " does not start in a test-start vertex");
    }
    if (!(g.is_test_end(lv) || g.is_end_vertex(lv))) {
      fail(1, "path " + describe(g, p) + " does not end in a test-end vertex");
    }
    if (p.length() < min_length || p.length() > max_length) {
      fail(2, "path " + describe(g, p) + " length " + std::to_string(p.length()) +
                  " outside [" + std::to_string(min_length) + ", " +
                  std::to_string(max_length) + "]");
    }
  }

  for (const auto& r : requirements) {
    const TestPath rp = r.as_path();
    bool covered = false;
    for (const auto& p : paths) {
      if (is_subpath(g, rp, p)) {
        covered = true;
        break;
      }
    }
    if (!covered) fail(3, "requirement " + r.describe(g) + " is not covered by any path");
  }

  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (is_subpath(g, paths[i], paths[j]) || is_subpath(g, paths[j], paths[i])) {
        fail(4, "path " + describe(g, paths[i]) + " and path " + describe(g, paths[j]) +
                    " are in a sub-path relation");
      }
    }
  }
  return report;
}

}  // namespace psmt
