#include "psmt/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "psmt/errors.hpp"

namespace psmt {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text, const std::string& context) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(context + ": " + e.what());
  }
}

const json& need(const json& j, const char* field, const std::string& context) {
  if (!j.contains(field)) {
    throw ParseError(context + ": missing field '" + std::string(field) + "'");
  }
  return j.at(field);
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError(file.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ParseError(file.string() + ": cannot open file for writing");
  out << text;
}

std::size_t resolve_edge(const Graph& g, const std::string& id, const std::string& context) {
  auto pos = g.edge_pos(id);
  if (!pos) throw ParseError(context + ": unknown edge '" + id + "'");
  return *pos;
}

}  // namespace

Model model_from_json_text(const std::string& text, const std::string& context) {
  const json j = parse(text, context);
  Model model;
  Graph& g = model.graph;
  g.name = j.value("name", "");

  if (j.contains("priority_scale")) {
    const json& s = j.at("priority_scale");
    g.scale.scale_min = need(s, "min", context + ": priority_scale").get<double>();
    g.scale.scale_max = need(s, "max", context + ": priority_scale").get<double>();
  }

  for (const json& v : need(j, "vertices", context)) {
    Vertex vertex;
    vertex.id = need(v, "id", context + ": vertex").get<std::string>();
    vertex.priority = v.value("priority", 0.0);
    g.vertices.push_back(std::move(vertex));
  }
  for (const json& e : need(j, "edges", context)) {
    Edge edge;
    edge.id = need(e, "id", context + ": edge").get<std::string>();
    edge.source = need(e, "source", context + ": edge '" + edge.id + "'").get<std::string>();
    edge.target = need(e, "target", context + ": edge '" + edge.id + "'").get<std::string>();
    edge.label = e.value("label", "");
    edge.priority = e.value("priority", 0.0);
    g.edges.push_back(std::move(edge));
  }
  g.start = need(j, "start", context).get<std::string>();
  for (const json& id : need(j, "end_vertices", context)) {
    g.end_vertices.push_back(id.get<std::string>());
  }
  for (const json& id : need(j, "test_starts", context)) {
    g.test_starts.push_back(id.get<std::string>());
  }
  for (const json& id : need(j, "test_ends", context)) {
    g.test_ends.push_back(id.get<std::string>());
  }
  g.finalize();

  if (j.contains("defects")) {
    const json& d = j.at("defects");
    if (d.contains("type1")) {
      for (const json& id : d.at("type1")) {
        model.defects.type1.push_back(
            resolve_edge(g, id.get<std::string>(), context + ": defects.type1"));
      }
    }
    if (d.contains("type2")) {
      for (const json& pair : d.at("type2")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ParseError(context + ": defects.type2 entries must be [e1, e2] pairs");
        }
        model.defects.type2.emplace_back(
            resolve_edge(g, pair[0].get<std::string>(), context + ": defects.type2"),
            resolve_edge(g, pair[1].get<std::string>(), context + ": defects.type2"));
      }
    }
  }
  return model;
}

std::string model_to_json_text(const Model& model) {
  const Graph& g = model.graph;
  json j;
  j["name"] = g.name;
  j["priority_scale"] = {{"min", g.scale.scale_min}, {"max", g.scale.scale_max}};
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) {
    j["vertices"].push_back({{"id", v.id}, {"priority", v.priority}});
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back({{"id", e.id},
                          {"source", e.source},
                          {"target", e.target},
                          {"label", e.label},
                          {"priority", e.priority}});
  }
  j["start"] = g.start;
  j["end_vertices"] = g.end_vertices;
  j["test_starts"] = g.test_starts;
  j["test_ends"] = g.test_ends;
  json type1 = json::array();
  for (std::size_t e : model.defects.type1) type1.push_back(g.edges[e].id);
  json type2 = json::array();
  for (const auto& [e1, e2] : model.defects.type2) {
    type2.push_back({g.edges[e1].id, g.edges[e2].id});
  }
  j["defects"] = {{"type1", std::move(type1)}, {"type2", std::move(type2)}};
  return j.dump(2) + "\n";
}

Model read_model(const std::filesystem::path& file) {
  Model model = model_from_json_text(read_file(file), file.string());
  if (model.graph.name.empty()) model.graph.name = file.stem().string();
  return model;
}

void write_model(const Model& model, const std::filesystem::path& file) {
  write_file(file, model_to_json_text(model));
}

std::vector<TestPath> paths_from_json_text(const std::string& text, const Graph& g,
                                           const std::string& context) {
  const json j = parse(text, context);
  std::vector<TestPath> out;
  for (const json& path : need(j, "paths", context)) {
    TestPath p;
    for (const json& id : path) {
      p.edges.push_back(resolve_edge(g, id.get<std::string>(), context));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string paths_to_json_text(const std::vector<TestPath>& paths, const Graph& g) {
  json j;
  j["model"] = g.name;
  j["paths"] = json::array();
  for (const TestPath& p : paths) {
    json ids = json::array();
    for (std::size_t e : p.edges) ids.push_back(g.edges[e].id);
    j["paths"].push_back(std::move(ids));
  }
  return j.dump(2) + "\n";
}

std::vector<TestPath> read_paths(const std::filesystem::path& file, const Graph& g) {
  return paths_from_json_text(read_file(file), g, file.string());
}

void write_paths(const std::vector<TestPath>& paths, const Graph& g,
                 const std::filesystem::path& file) {
  write_file(file, paths_to_json_text(paths, g));
}

std::string export_dot(const Graph& g, const std::vector<TestPath>& paths) {
  static const char* kPathColors[] = {"blue",      "red",        "darkgreen", "purple",
                                      "orange3",   "deeppink",   "brown",     "cadetblue",
                                      "goldenrod", "darkviolet"};
  const std::size_t palette = sizeof(kPathColors) / sizeof(kPathColors[0]);

  std::vector<std::vector<std::size_t>> edge_paths(g.edges.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t e : paths[p].edges) {
      if (e < g.edges.size()) edge_paths[e].push_back(p);
    }
  }

  std::ostringstream os;
  os << "digraph \"" << g.name << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  \"" << g.vertices[v].id << "\"";
    const bool ts = g.is_test_start(v);
    const bool te = g.is_test_end(v);
    std::string color;
    if (ts && te) {
      color = "orange";
    } else if (ts) {
      color = "palegreen";
    } else if (te) {
      color = "lightcoral";
    }
    os << " [";
    if (!color.empty()) os << "style=filled, fillcolor=" << color << ", ";
    if (v == g.start_pos()) os << "peripheries=2, ";
    os << "label=\"" << g.vertices[v].id << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    os << "  \"" << g.edges[e].source << "\" -> \"" << g.edges[e].target << "\"";
    os << " [label=\"" << g.edges[e].id << "\"";
    if (!edge_paths[e].empty()) {
      os << ", penwidth=2, color=\"";
      for (std::size_t i = 0; i < edge_paths[e].size(); ++i) {
        if (i) os << ":";
        os << kPathColors[edge_paths[e][i] % palette];
      }
      os << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

void write_dot(const Graph& g, const std::vector<TestPath>& paths,
               const std::filesystem::path& file) {
  write_file(file, export_dot(g, paths));
}

}  // namespace psmt
