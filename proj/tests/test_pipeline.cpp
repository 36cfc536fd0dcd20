#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psmt/errors.hpp"
#include "psmt/pipeline.hpp"
#include "psmt/rng.hpp"

using namespace psmt;
using namespace psmt::testing;

namespace {

Graph triangle_with_priority_b() {
  Graph g = triangle();
  g.edges[1].priority = 3.0;
  g.finalize();
  return g;
}

}  // namespace

TEST_CASE("the pipeline produces the minimal covering path") {
  const Graph g = triangle_with_priority_b();
  RunConfig config;
  config.coverage = CoverageCriterion::basic;
  config.min_length = 2;
  config.max_length = 6;
  config.reduction = ReductionKind::sorted;
  const PipelineResult result = generate_paths(g, config);
  REQUIRE(result.paths.size() == 1);
  CHECK(result.paths[0] == path_of(g, {"a", "b"}));
  CHECK(result.report.satisfied());
  CHECK(result.feasible.size() == 1);
  CHECK(result.infeasible.empty());
}

TEST_CASE("a tight lower bound forces a wrap around the cycle") {
  const Graph g = triangle_with_priority_b();
  RunConfig config;
  config.min_length = 4;
  config.max_length = 5;
  config.reduction = ReductionKind::sorted;
  const PipelineResult result = generate_paths(g, config);
  REQUIRE(result.paths.size() == 1);
  CHECK(result.paths[0] == path_of(g, {"a", "b", "c", "a", "b"}));
  CHECK(result.report.satisfied());
}

TEST_CASE("an empty selection band produces an empty result") {
  Graph g = triangle();
  g.scale = {0.0, 5.0};
  g.finalize();
  RunConfig config;
  config.selection = {4.0, 4.0};
  const PipelineResult result = generate_paths(g, config);
  CHECK(result.paths.empty());
  CHECK(result.report.satisfied());
  CHECK(result.feasible.empty());
  CHECK(result.infeasible.empty());
}

TEST_CASE("all-infeasible requirements raise NoPathsPossible") {
  Graph g = triangle();
  g.edges[2].priority = 3.0;  // edge c cannot sit on any short A->C path
  g.finalize();
  RunConfig config;
  config.min_length = 1;
  config.max_length = 3;
  try {
    generate_paths(g, config);
    FAIL("expected NoPathsPossibleError");
  } catch (const NoPathsPossibleError& e) {
    REQUIRE(e.infeasible_requirements.size() == 1);
    CHECK(e.infeasible_requirements[0].find("c") != std::string::npos);
  }
}

TEST_CASE("invalid graphs and configs are rejected") {
  Graph g = triangle();
  g.test_starts = {"B"};
  g.finalize();
  CHECK_THROWS_AS(generate_paths(g, RunConfig{}), ValidationError);

  RunConfig bad_range;
  bad_range.min_length = 5;
  bad_range.max_length = 2;
  CHECK_THROWS_AS(generate_paths(triangle(), bad_range), ValidationError);

  RunConfig bad_selection;
  bad_selection.selection = {2.0, 9.0};
  CHECK_THROWS_AS(generate_paths(triangle(), bad_selection), ValidationError);
}

TEST_CASE("every reduction satisfies coverage on random instances") {
  Rng rng(314);
  const ReductionKind kinds[] = {ReductionKind::none,    ReductionKind::random,
                                 ReductionKind::sorted,  ReductionKind::chvatal,
                                 ReductionKind::ga,      ReductionKind::sa,
                                 ReductionKind::nswitch};
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_multigraph(rng, 8, 12);
    for (ReductionKind kind : kinds) {
      RunConfig config;
      config.coverage =
          trial % 2 == 0 ? CoverageCriterion::basic : CoverageCriterion::extended;
      config.selection = {1.5, 3.0};
      config.min_length = 2;
      config.max_length = 6;
      config.reduction = kind;
      config.seed = trial;
      try {
        const PipelineResult result = generate_paths(g, config);
        CHECK(result.report.satisfied());
        ++checked;
      } catch (const NoPathsPossibleError&) {
        // legal outcome for unlucky graphs
      }
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("the baseline result is normalized like the others") {
  const Graph g = triangle_with_priority_b();
  RunConfig config;
  config.reduction = ReductionKind::nswitch;
  config.min_length = 2;
  config.max_length = 3;
  const PipelineResult result = generate_paths(g, config);
  REQUIRE(result.paths.size() == 1);
  CHECK(result.paths[0] == path_of(g, {"a", "b"}));
  CHECK(result.report.satisfied());
}
