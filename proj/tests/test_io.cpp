#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "psmt/errors.hpp"
#include "psmt/instance_gen.hpp"
#include "psmt/model_io.hpp"

using namespace psmt;
using namespace psmt::testing;

namespace {

Model triangle_model() {
  Model m;
  m.graph = triangle();
  m.defects.type1 = {*m.graph.edge_pos("a")};
  m.defects.type2 = {{*m.graph.edge_pos("a"), *m.graph.edge_pos("b")}};
  return m;
}

}  // namespace

TEST_CASE("models round-trip through JSON") {
  const Model original = triangle_model();
  const std::string text = model_to_json_text(original);
  const Model reread = model_from_json_text(text, "test");
  CHECK(model_to_json_text(reread) == text);
  CHECK(reread.graph.vertices.size() == 3);
  CHECK(reread.graph.edges.size() == 3);
  CHECK(reread.graph.start == "A");
  CHECK(reread.graph.test_starts == std::vector<std::string>{"A"});
  CHECK(reread.defects.type1 == original.defects.type1);
  CHECK(reread.defects.type2 == original.defects.type2);
  CHECK(validate(reread.graph).ok());
}

TEST_CASE("generated instances round-trip through files") {
  InstanceSpec spec;
  spec.seed = 5;
  Model m;
  m.graph = generate(spec);
  m.defects = plant_random_defects(m.graph, 2, 2, 5);
  const auto file = std::filesystem::temp_directory_path() / "psmt_roundtrip.json";
  write_model(m, file);
  const Model reread = read_model(file);
  CHECK(model_to_json_text(reread) == model_to_json_text(m));
  std::filesystem::remove(file);
}

TEST_CASE("a missing start field is a parse error naming the field") {
  const std::string text = R"({
    "name": "broken",
    "vertices": [{"id": "A"}],
    "edges": [],
    "end_vertices": [],
    "test_starts": ["A"],
    "test_ends": []
  })";
  CHECK_THROWS_WITH_AS(model_from_json_text(text, "broken.json"),
                       doctest::Contains("missing field 'start'"), ParseError);
}

TEST_CASE("unknown defect edges are parse errors") {
  std::string text = model_to_json_text(triangle_model());
  const auto at = text.find("\"a\",");
  text.replace(text.find("\"type1\": ["), 12, "\"type1\": [\"zz\",");
  (void)at;
  CHECK_THROWS_AS(model_from_json_text(text, "bad.json"), ParseError);
}

TEST_CASE("malformed JSON is reported with context") {
  CHECK_THROWS_WITH_AS(model_from_json_text("{", "x.json"), doctest::Contains("x.json"),
                       ParseError);
}

TEST_CASE("path sets round-trip") {
  const Graph g = triangle();
  const std::vector<TestPath> paths = {path_of(g, {"a", "b"}),
                                       path_of(g, {"a", "b", "c", "a", "b"})};
  const std::string text = paths_to_json_text(paths, g);
  CHECK(paths_from_json_text(text, g, "paths") == paths);
  CHECK_THROWS_AS(paths_from_json_text(R"({"paths": [["nope"]]})", g, "paths"), ParseError);
}

TEST_CASE("dot export colors roles and paths") {
  const Graph g = triangle();
  const std::string dot = export_dot(g, {path_of(g, {"a", "b"})});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"A\" -> \"B\"") != std::string::npos);
  CHECK(dot.find("\"B\" -> \"C\"") != std::string::npos);
  CHECK(dot.find("\"C\" -> \"A\"") != std::string::npos);
  CHECK(dot.find("palegreen") != std::string::npos);   // test start
  CHECK(dot.find("lightcoral") != std::string::npos);  // test end
  CHECK(dot.find("penwidth=2") != std::string::npos);  // a path-colored edge
}

TEST_CASE("dot export marks start/end overlap in orange") {
  Graph g = triangle();
  g.test_ends = {"A", "C"};
  g.finalize();
  CHECK(export_dot(g, {}).find("orange") != std::string::npos);
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(read_model("/nonexistent/psmt-model.json"), ParseError);
}
