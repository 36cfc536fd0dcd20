#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "psmt/defects.hpp"
#include "psmt/graph.hpp"

namespace psmt {

// A model file bundles the graph with its planted defects.
struct Model {
  Graph graph;
  DefectSet defects;
};

// JSON model schema: name, vertices[{id, priority}], edges[{id, source,
// target, label, priority}], start, end_vertices[], test_starts[],
// test_ends[], optional priority_scale{min, max}, optional
// defects{type1[], type2[[e1, e2]]}.
Model model_from_json_text(const std::string& text, const std::string& context);
std::string model_to_json_text(const Model& model);

Model read_model(const std::filesystem::path& file);
void write_model(const Model& model, const std::filesystem::path& file);

// Path file schema: {model, paths: [[edge ids...], ...]}.
std::vector<TestPath> paths_from_json_text(const std::string& text, const Graph& g,
                                           const std::string& context);
std::string paths_to_json_text(const std::vector<TestPath>& paths, const Graph& g);

std::vector<TestPath> read_paths(const std::filesystem::path& file, const Graph& g);
void write_paths(const std::vector<TestPath>& paths, const Graph& g,
                 const std::filesystem::path& file);

// Graphviz export. Test-start vertices are green, test-end red, vertices in
// both orange; each test path colors its edge sequence distinctly.
std::string export_dot(const Graph& g, const std::vector<TestPath>& paths);
void write_dot(const Graph& g, const std::vector<TestPath>& paths,
               const std::filesystem::path& file);

}  // namespace psmt
