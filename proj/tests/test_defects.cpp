#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psmt/defects.hpp"
#include "psmt/errors.hpp"
#include "psmt/rng.hpp"

using namespace psmt;
using namespace psmt::testing;

TEST_CASE("type-1 defects activate per visit") {
  const Graph g = triangle();
  const std::size_t a = *g.edge_pos("a");
  CHECK(activate_defects({path_of(g, {"a", "b"})}, {{a}, {}}).type1 == 1);
  CHECK(activate_defects({path_of(g, {"a", "b", "c", "a", "b"})}, {{a}, {}}).type1 == 2);
  // The alternative counting mode caps at one activation per path.
  CHECK(activate_defects({path_of(g, {"a", "b", "c", "a", "b"})}, {{a}, {}},
                         Type1Counting::per_path)
            .type1 == 1);
}

TEST_CASE("type-2 defects activate on ordered traversal, once per path") {
  const Graph g = triangle();
  const std::size_t a = *g.edge_pos("a");
  const std::size_t c = *g.edge_pos("c");
  CHECK(activate_defects({path_of(g, {"a", "b", "c"})}, {{}, {{a, c}}}).type2 == 1);
  CHECK(activate_defects({path_of(g, {"a", "b", "c"})}, {{}, {{c, a}}}).type2 == 0);
  // Repeating the pair inside one path still counts once; a second path
  // activates again.
  const TestPath twice = path_of(g, {"a", "b", "c", "a", "b", "c"});
  CHECK(activate_defects({twice}, {{}, {{a, c}}}).type2 == 1);
  CHECK(activate_defects({twice, path_of(g, {"a", "b", "c"})}, {{}, {{a, c}}}).type2 == 2);
}

TEST_CASE("activation is additive over path sets") {
  Rng rng(21);
  const Graph g = triangle();
  const DefectSet defects{{*g.edge_pos("a"), *g.edge_pos("b")},
                          {{*g.edge_pos("a"), *g.edge_pos("c")}}};
  const std::vector<TestPath> first = {path_of(g, {"a", "b"})};
  const std::vector<TestPath> second = {path_of(g, {"a", "b", "c"}),
                                        path_of(g, {"c", "a"})};
  std::vector<TestPath> both = first;
  both.insert(both.end(), second.begin(), second.end());
  const auto lhs = activate_defects(both, defects);
  const auto f = activate_defects(first, defects);
  const auto s = activate_defects(second, defects);
  CHECK(lhs.type1 == f.type1 + s.type1);
  CHECK(lhs.type2 == f.type2 + s.type2);
}

TEST_CASE("metrics follow their definitions exactly") {
  const Graph g = triangle();
  const DefectSet defects{{*g.edge_pos("a")}, {}};

  const auto single = compute_metrics({path_of(g, {"a", "b"})}, defects);
  CHECK(single.steps == 2);
  CHECK(single.path_count == 1);
  CHECK(single.avg_steps == 2.0);
  CHECK(single.unique_steps == 2);
  CHECK(single.ut == 1.0);
  CHECK(single.type1_activated == 1);
  CHECK(single.eff1 == 0.5);
  CHECK(single.eff2 == 0.0);

  const auto pair =
      compute_metrics({path_of(g, {"a", "b"}), path_of(g, {"a", "b", "c"})}, defects);
  CHECK(pair.steps == 5);
  CHECK(pair.unique_steps == 3);
  CHECK(pair.ut == 5.0 / 3.0);

  const auto empty = compute_metrics({}, defects);
  CHECK(empty.steps == 0);
  CHECK(empty.path_count == 0);
  CHECK(empty.avg_steps == 0.0);
  CHECK(empty.ut == 0.0);
  CHECK(empty.eff1 == 0.0);
}

TEST_CASE("eff identities hold at full precision") {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_multigraph(rng, 8, 12);
    if (g.edges.empty()) continue;
    const DefectSet defects = plant_random_defects(
        g, 1 + rng.pick_index(g.edges.size()),
        std::min<std::size_t>(3, connected_pair_count(g)), trial);
    const auto walks = all_walks_from_test_starts(g, 5);
    if (walks.empty()) continue;
    std::vector<TestPath> paths(walks.begin(),
                                walks.begin() + rng.pick_index(walks.size()) + 1);
    const auto m = compute_metrics(paths, defects);
    if (m.steps > 0) {
      CHECK(m.eff1 == static_cast<double>(m.type1_activated) / m.steps);
      CHECK(m.eff2 == static_cast<double>(m.type2_activated) / m.steps);
      CHECK(m.unique_steps <= m.steps);
      CHECK(m.ut >= 1.0);
    }
  }
}

TEST_CASE("planting is deterministic and validates") {
  const Graph g = triangle();
  const DefectSet a = plant_random_defects(g, 1, 1, 303);
  const DefectSet b = plant_random_defects(g, 1, 1, 303);
  CHECK(a.type1 == b.type1);
  CHECK(a.type2 == b.type2);
  CHECK(a.type1.size() == 1);
  CHECK(a.type2.size() == 1);
  CHECK(validate_defects(g, a).ok());
}

TEST_CASE("planting rejects impossible counts") {
  Graph g;
  g.vertices = {{"A", 0.0}, {"B", 0.0}};
  g.edges = {{"a", "A", "B", "t", 0.0}};
  g.start = "A";
  g.test_starts = {"A"};
  g.test_ends = {"B"};
  g.end_vertices = {"B"};
  g.finalize();
  CHECK_THROWS_AS(plant_random_defects(g, 2, 0, 1), InsufficientCandidatesError);
  // The single edge cannot reach itself, so no connected pair exists.
  CHECK_THROWS_AS(plant_random_defects(g, 1, 1, 1), InsufficientCandidatesError);
}

TEST_CASE("pair distance averages shortest separations") {
  const Graph g = triangle();
  const std::size_t a = *g.edge_pos("a");
  const std::size_t b = *g.edge_pos("b");
  // target(a) = B = source(b): distance 0; target(a)=B to source(a)=A is 2.
  CHECK(average_pair_distance(g, {{}, {{a, b}}}) == 0.0);
  CHECK(average_pair_distance(g, {{}, {{a, a}}}) == 2.0);
  CHECK(average_pair_distance(g, {{}, {{a, b}, {a, a}}}) == 1.0);
}
