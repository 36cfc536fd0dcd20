#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace psmt {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Bounds every priority in the model must respect.
struct PriorityScale {
  double scale_min = 0.0;
  double scale_max = 3.0;
  bool contains(double p) const { return p >= scale_min && p <= scale_max; }
};

// Closed interval selecting which vertices/edges generate requirements.
struct PrioritySelection {
  double select_min = 2.0;
  double select_max = 3.0;
  bool contains(double p) const { return p >= select_min && p <= select_max; }
};

struct Vertex {
  std::string id;
  double priority = 0.0;
};

struct Edge {
  std::string id;
  std::string source;
  std::string target;
  std::string label;
  double priority = 0.0;
};

// SUT model: a directed multigraph with a machine start vertex, machine end
// vertices, designated test-start and test-end vertices, and priorities on
// vertices and edges.
//
// Fill the data members (or use read_model / generate), then call finalize()
// to build the index. Algorithms assume a finalized, validated graph and
// treat it as immutable; a finalized graph is safe to share across threads.
class Graph {
 public:
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::string start;                       // machine start, v_s
  std::vector<std::string> end_vertices;   // machine ends, V_e
  std::vector<std::string> test_starts;    // test path starts, V_ts
  std::vector<std::string> test_ends;      // test path ends, V_te
  PriorityScale scale;

  void finalize();

  std::optional<std::size_t> vertex_pos(const std::string& id) const;
  std::optional<std::size_t> edge_pos(const std::string& id) const;
  std::size_t start_pos() const { return start_pos_; }

  // Resolved endpoint positions for edge e; npos for dangling references.
  std::size_t edge_source_pos(std::size_t e) const { return edge_src_[e]; }
  std::size_t edge_target_pos(std::size_t e) const { return edge_tgt_[e]; }

  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

  bool is_test_start(std::size_t v) const { return test_start_[v] != 0; }
  bool is_test_end(std::size_t v) const { return test_end_[v] != 0; }
  bool is_end_vertex(std::size_t v) const { return end_vertex_[v] != 0; }

  // Distinct edge labels, in first-appearance order.
  std::vector<std::string> labels() const;

 private:
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::vector<std::size_t> edge_src_, edge_tgt_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::vector<char> test_start_, test_end_, end_vertex_;
  std::size_t start_pos_ = npos;
};

// A walk through the graph, stored as edge positions. An empty edge list with
// a vertex anchor models the zero-length case (a single vertex); generated
// test paths always have at least one edge, the zero-length form only appears
// as a degenerate requirement body.
struct TestPath {
  std::vector<std::size_t> edges;
  std::size_t vertex = npos;

  std::size_t length() const { return edges.size(); }
  bool zero_length() const { return edges.empty(); }

  friend bool operator==(const TestPath&, const TestPath&) = default;
  friend auto operator<=>(const TestPath&, const TestPath&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks every structural constraint of the SUT model; an empty report means
// the graph is well formed. Never throws.
ValidationReport validate(const Graph& g);

// True when consecutive edges are adjacent and all endpoints resolve; a
// zero-length path needs a valid anchor vertex.
bool is_well_formed(const Graph& g, const TestPath& p);

// Visited vertices in order: source of the first edge, then the target of
// every edge. Zero-length paths yield their single anchor vertex.
std::vector<std::size_t> path_vertices(const Graph& g, const TestPath& p);

std::size_t first_vertex(const Graph& g, const TestPath& p);
std::size_t last_vertex(const Graph& g, const TestPath& p);

// True iff candidate's edge list occurs as a contiguous window in container's
// edge list; a zero-length candidate matches iff container visits its vertex.
bool is_subpath(const Graph& g, const TestPath& candidate, const TestPath& container);

// Human-readable form, e.g. "[a, b]" or vertex id for zero-length paths.
std::string describe(const Graph& g, const TestPath& p);

}  // namespace psmt
