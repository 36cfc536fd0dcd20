#include <doctest.h>

#include "fixtures.hpp"
#include "psmt/errors.hpp"
#include "psmt/instance_gen.hpp"
#include "psmt/model_io.hpp"

using namespace psmt;
using namespace psmt::testing;

TEST_CASE("generated instances match the requested cardinalities") {
  InstanceSpec spec;
  spec.vertex_count = 10;
  spec.edge_count = 19;
  spec.cycle_count = 2;
  spec.test_start_count = 2;
  spec.test_end_count = 2;
  spec.overlap_count = 1;
  spec.end_vertex_count = 1;
  spec.priority_vertex_count = 3;
  spec.priority_edge_count = 5;
  spec.seed = 7;

  const Graph g = generate(spec);
  CHECK(validate(g).ok());
  const PropertyReport p = measure_properties(g);
  CHECK(p.vertex_count == 10);
  CHECK(p.edge_count == 19);
  CHECK(p.test_start_count == 2);
  CHECK(p.test_end_count == 2);
  CHECK(p.overlap_count == 1);
  CHECK(p.end_vertex_count == 1);
  CHECK(p.priority_vertex_count == 3);
  CHECK(p.priority_edge_count == 5);
  CHECK(p.cycles >= 2);  // targeted insertion guarantees at least the target

  // Every vertex reachable from the machine start.
  std::vector<char> seen(g.vertices.size(), 0);
  std::vector<std::size_t> stack{g.start_pos()};
  seen[g.start_pos()] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.out_edges(v)) {
      const std::size_t w = g.edge_target_pos(e);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (char s : seen) CHECK(s == 1);
}

TEST_CASE("the degenerate single-vertex spec works") {
  InstanceSpec spec;
  spec.vertex_count = 1;
  spec.edge_count = 0;
  spec.cycle_count = 0;
  spec.test_start_count = 1;
  spec.test_end_count = 1;
  spec.overlap_count = 1;
  spec.end_vertex_count = 1;
  spec.priority_vertex_count = 0;
  spec.priority_edge_count = 0;
  const Graph g = generate(spec);
  CHECK(validate(g).ok());
  CHECK(g.vertices.size() == 1);
  CHECK(g.test_starts == std::vector<std::string>{"v0"});
  CHECK(g.test_ends == std::vector<std::string>{"v0"});
}

TEST_CASE("underconnected specs are rejected") {
  InstanceSpec spec;
  spec.vertex_count = 10;
  spec.edge_count = 3;
  CHECK_THROWS_AS(generate(spec), SpecUnsatisfiableError);
}

TEST_CASE("inconsistent role counts are rejected") {
  InstanceSpec spec;
  spec.vertex_count = 5;
  spec.edge_count = 8;
  spec.test_start_count = 2;
  spec.test_end_count = 2;
  spec.overlap_count = 3;
  CHECK_THROWS_AS(generate(spec), SpecUnsatisfiableError);
}

TEST_CASE("generation is bit-stable per seed") {
  InstanceSpec spec;
  spec.seed = 99;
  const Graph a = generate(spec);
  const Graph b = generate(spec);
  CHECK(model_to_json_text({a, {}}) == model_to_json_text({b, {}}));
  spec.seed = 100;
  CHECK(model_to_json_text({generate(spec), {}}) != model_to_json_text({a, {}}));
}

TEST_CASE("triangle statistics") {
  const PropertyReport p = measure_properties(triangle());
  CHECK(p.cycles == 1);
  CHECK(p.avg_cycle_length == 3.0);
  CHECK(p.parallel_edges == 0);
  CHECK(p.parallel_edge_groups == 0);
  CHECK(p.avg_in_degree == 1.0);
  CHECK(p.avg_out_degree == 1.0);
  CHECK(p.avg_degree == 2.0);
}

TEST_CASE("parallel edges are grouped") {
  Graph g;
  g.vertices = {{"A", 0.0}, {"B", 0.0}};
  g.edges = {{"a1", "A", "B", "t", 0.0}, {"a2", "A", "B", "t", 0.0}};
  g.start = "A";
  g.test_starts = {"A"};
  g.test_ends = {"B"};
  g.end_vertices = {"B"};
  g.finalize();
  const PropertyReport p = measure_properties(g);
  CHECK(p.parallel_edge_groups == 1);
  CHECK(p.parallel_edges == 2);
  CHECK(p.cycles == 0);  // it is a DAG
}

TEST_CASE("validation accepts a sample of generated specs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    InstanceSpec spec;
    spec.vertex_count = 5 + seed % 20;
    spec.edge_count = spec.vertex_count + 4 + seed % 11;
    spec.cycle_count = seed % 5;
    spec.test_start_count = 1 + seed % 3;
    spec.test_end_count = 1 + (seed / 2) % 3;
    spec.overlap_count =
        std::min({seed % 2, spec.test_start_count - 1, spec.test_end_count - 1});
    spec.end_vertex_count = 1;
    spec.priority_vertex_count = spec.vertex_count / 4;
    spec.priority_edge_count = spec.edge_count / 4;
    spec.seed = seed;
    const Graph g = generate(spec);
    CHECK(validate(g).ok());
    const PropertyReport p = measure_properties(g);
    CHECK(p.vertex_count == spec.vertex_count);
    CHECK(p.edge_count == spec.edge_count);
    CHECK(p.test_start_count == spec.test_start_count);
    CHECK(p.test_end_count == spec.test_end_count);
    CHECK(p.overlap_count == spec.overlap_count);
    CHECK(p.end_vertex_count == spec.end_vertex_count);
    CHECK(p.priority_vertex_count == spec.priority_vertex_count);
    CHECK(p.priority_edge_count == spec.priority_edge_count);
  }
}
