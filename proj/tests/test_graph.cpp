#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psmt/graph.hpp"
#include "psmt/rng.hpp"

using namespace psmt;
using namespace psmt::testing;

TEST_CASE("validate accepts the triangle model") {
  CHECK(validate(triangle()).ok());
}

TEST_CASE("validate flags machine ends outside test ends") {
  Graph g = triangle();
  g.end_vertices = {"B"};
  g.finalize();
  const auto report = validate(g);
  REQUIRE_FALSE(report.ok());
  CHECK(report.to_string().find("end_vertices not contained in test_ends") != std::string::npos);
}

TEST_CASE("validate flags dangling edge endpoints") {
  Graph g = triangle();
  g.edges.push_back({"d", "A", "X", "w", 0.0});
  g.finalize();
  const auto report = validate(g);
  REQUIRE_FALSE(report.ok());
  CHECK(report.to_string().find("dangling edge endpoint") != std::string::npos);
}

TEST_CASE("validate flags duplicate identifiers and bad priorities") {
  Graph g = triangle();
  g.vertices.push_back({"A", 0.0});
  g.edges.push_back({"a", "B", "C", "w", 9.0});
  g.finalize();
  const auto report = validate(g);
  CHECK(report.to_string().find("duplicate vertex id") != std::string::npos);
  CHECK(report.to_string().find("duplicate edge id") != std::string::npos);
  CHECK(report.to_string().find("priority outside the model scale") != std::string::npos);
}

TEST_CASE("validate flags a start vertex missing from test starts") {
  Graph g = triangle();
  g.test_starts = {"B"};
  g.finalize();
  CHECK_FALSE(validate(g).ok());
}

TEST_CASE("is_subpath matches contiguous windows only") {
  const Graph g = triangle();
  CHECK(is_subpath(g, path_of(g, {"b"}), path_of(g, {"a", "b", "c"})));
  CHECK_FALSE(is_subpath(g, path_of(g, {"a", "c"}), path_of(g, {"a", "b", "c"})));
  CHECK(is_subpath(g, vertex_path(g, "B"), path_of(g, {"a", "b"})));
  CHECK(is_subpath(g, vertex_path(g, "A"), path_of(g, {"a", "b"})));  // first vertex
  CHECK(is_subpath(g, vertex_path(g, "C"), path_of(g, {"a", "b"})));  // last vertex
  CHECK_FALSE(is_subpath(g, vertex_path(g, "C"), path_of(g, {"a"})));
  CHECK(is_subpath(g, vertex_path(g, "A"), vertex_path(g, "A")));
  CHECK_FALSE(is_subpath(g, vertex_path(g, "A"), vertex_path(g, "B")));
  CHECK_FALSE(is_subpath(g, path_of(g, {"a"}), vertex_path(g, "A")));
}

TEST_CASE("path_vertices lists endpoints in order") {
  const Graph g = triangle();
  const auto to_ids = [&](const std::vector<std::size_t>& vs) {
    std::vector<std::string> ids;
    for (std::size_t v : vs) ids.push_back(g.vertices[v].id);
    return ids;
  };
  CHECK(to_ids(path_vertices(g, path_of(g, {"a", "b"}))) ==
        std::vector<std::string>{"A", "B", "C"});
  CHECK(to_ids(path_vertices(g, vertex_path(g, "A"))) == std::vector<std::string>{"A"});
  CHECK(to_ids(path_vertices(g, path_of(g, {"a", "b", "c"}))) ==
        std::vector<std::string>{"A", "B", "C", "A"});
}

TEST_CASE("path_vertices length is path length plus one") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_multigraph(rng, 8, 12);
    for (const TestPath& p : all_walks_from_test_starts(g, 5)) {
      CHECK(path_vertices(g, p).size() == p.length() + 1);
      CHECK(is_well_formed(g, p));
    }
  }
}

TEST_CASE("mutual sub-paths are equal") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_multigraph(rng, 6, 10);
    const auto walks = all_walks_from_test_starts(g, 4);
    if (walks.size() < 2) continue;
    const TestPath& p = walks[rng.pick_index(walks.size())];
    const TestPath& q = walks[rng.pick_index(walks.size())];
    if (is_subpath(g, p, q) && is_subpath(g, q, p)) CHECK(p == q);
  }
}

TEST_CASE("graph exposes labels and index lookups") {
  const Graph g = triangle();
  CHECK(g.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(g.vertex_pos("B").value() == 1);
  CHECK_FALSE(g.vertex_pos("Z").has_value());
  CHECK(g.edge_pos("c").value() == 2);
  CHECK(g.out_edges(*g.vertex_pos("A")).size() == 1);
  CHECK(g.in_edges(*g.vertex_pos("A")).size() == 1);
}
