#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psmt/errors.hpp"
#include "psmt/nswitch.hpp"
#include "psmt/rng.hpp"

using namespace psmt;
using namespace psmt::testing;

TEST_CASE("baseline keeps the first covering walk") {
  Graph g = triangle();
  g.edges[1].priority = 3.0;  // edge b
  g.finalize();
  const auto paths = nswitch_reduce(g, 2, 3, CoverageCriterion::basic, {2.0, 3.0});
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == path_of(g, {"a", "b"}));
}

TEST_CASE("baseline returns nothing without requirements") {
  const Graph g = triangle();  // no priorities in the band
  CHECK(nswitch_reduce(g, 2, 3, CoverageCriterion::basic, {2.0, 3.0}).empty());
}

TEST_CASE("baseline output paths are valid and in range") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_multigraph(rng, 8, 12);
    const auto paths = nswitch_reduce(g, 2, 5, CoverageCriterion::extended, {1.5, 3.0});
    for (const TestPath& p : paths) {
      CHECK(is_well_formed(g, p));
      CHECK(p.length() >= 2);
      CHECK(p.length() <= 5);
      const std::size_t fv = first_vertex(g, p);
      const std::size_t lv = last_vertex(g, p);
      CHECK((g.is_test_start(fv) || fv == g.start_pos()));
      CHECK((g.is_test_end(lv) || g.is_end_vertex(lv)));
    }
    // Deterministic enumeration order.
    CHECK(paths == nswitch_reduce(g, 2, 5, CoverageCriterion::extended, {1.5, 3.0}));
  }
}

TEST_CASE("baseline covers everything any enumerated valid walk covers") {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_multigraph(rng, 7, 10);
    const auto requirements =
        generate_requirements(g, CoverageCriterion::extended, {1.0, 3.0});
    const auto paths = nswitch_reduce(g, 1, 4, CoverageCriterion::extended, {1.0, 3.0});

    // Reference: what the full valid enumeration can cover at all.
    std::vector<TestPath> valid;
    for (const TestPath& p : all_walks_from_test_starts(g, 4)) {
      const std::size_t lv = last_vertex(g, p);
      if (g.is_test_end(lv) || g.is_end_vertex(lv)) valid.push_back(p);
    }
    for (const Requirement& r : requirements) {
      bool reachable = false;
      for (const TestPath& p : valid) {
        if (is_subpath(g, r.as_path(), p)) {
          reachable = true;
          break;
        }
      }
      if (!reachable) continue;
      bool covered = false;
      for (const TestPath& p : paths) {
        if (is_subpath(g, r.as_path(), p)) {
          covered = true;
          break;
        }
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("dense graphs overflow the enumeration cap") {
  Graph g;
  g.name = "dense";
  for (int i = 0; i < 10; ++i) g.vertices.push_back({"v" + std::to_string(i), 0.0});
  int id = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      if (i == j) continue;
      g.edges.push_back({"e" + std::to_string(id++), g.vertices[i].id, g.vertices[j].id,
                         "t", 3.0});
    }
  }
  g.start = "v0";
  g.test_starts = {"v0"};
  g.test_ends = {"v1"};
  g.end_vertices = {"v1"};
  g.finalize();
  CHECK_THROWS_AS(nswitch_reduce(g, 2, 8, CoverageCriterion::basic, {2.0, 3.0}, 100000),
                  EnumerationOverflowError);
}
