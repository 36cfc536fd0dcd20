#include "psmt/instance_gen.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "psmt/errors.hpp"
#include "psmt/rng.hpp"

namespace psmt {

namespace {

bool reaches(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
             std::size_t to) {
  if (from == to) return true;
  std::vector<char> seen(adj.size(), 0);
  std::deque<std::size_t> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[u]) {
      if (w == to) return true;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

void check_spec(const InstanceSpec& s) {
  auto reject = [](const std::string& why) { throw SpecUnsatisfiableError(why); };
  if (s.vertex_count == 0) reject("vertex_count must be positive");
  if (s.vertex_count > 0 && s.edge_count + 1 < s.vertex_count) {
    reject("edge_count below vertex_count - 1; the model cannot be connected");
  }
  if (s.test_start_count == 0 || s.test_start_count > s.vertex_count) {
    reject("test_start_count must be in [1, vertex_count]");
  }
  if (s.test_end_count == 0 || s.test_end_count > s.vertex_count) {
    reject("test_end_count must be in [1, vertex_count]");
  }
  if (s.overlap_count > std::min(s.test_start_count, s.test_end_count)) {
    reject("overlap_count exceeds min(test_start_count, test_end_count)");
  }
  if (s.test_start_count + s.test_end_count - s.overlap_count > s.vertex_count) {
    reject("test_starts and test_ends do not fit into vertex_count vertices");
  }
  if (s.end_vertex_count == 0 || s.end_vertex_count > s.test_end_count) {
    reject("end_vertex_count must be in [1, test_end_count]");
  }
  if (s.priority_vertex_count > s.vertex_count) reject("priority_vertex_count too large");
  if (s.priority_edge_count > s.edge_count) reject("priority_edge_count too large");
  if (!(s.priority_scale.scale_min < s.priority_scale.scale_max)) {
    reject("priority scale is empty");
  }
  if (s.priority_band_min < s.priority_scale.scale_min ||
      s.priority_band_max > s.priority_scale.scale_max ||
      s.priority_band_min > s.priority_band_max) {
    reject("priority band must lie inside the scale");
  }
}

}  // namespace

Graph generate(const InstanceSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  const std::size_t n = spec.vertex_count;

  Graph g;
  g.name = spec.name.empty() ? "instance-" + std::to_string(spec.seed) : spec.name;
  g.scale = spec.priority_scale;
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices.push_back({"v" + std::to_string(i), 0.0});
  }

  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  auto add_arc = [&](std::size_t u, std::size_t v) {
    adj[u].push_back(v);
    arcs.emplace_back(u, v);
  };

  // Random arborescence rooted at v0 keeps every vertex reachable from the
  // machine start.
  std::vector<std::size_t> attach_order(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i) attach_order[i] = i + 1;
  rng.shuffle(attach_order);
  std::vector<std::size_t> attached{0};
  for (std::size_t v : attach_order) {
    add_arc(attached[rng.pick_index(attached.size())], v);
    attached.push_back(v);
  }

  // Vertex roles are fixed before the remaining edges go in, so placement can
  // favour keeping test ends reachable from everywhere. v0 is always a test
  // start.
  g.start = g.vertices[0].id;
  std::vector<std::size_t> ts{0};
  {
    std::vector<std::size_t> others;
    for (std::size_t i = 1; i < n; ++i) others.push_back(i);
    rng.shuffle(others);
    for (std::size_t i = 0; i + 1 < spec.test_start_count; ++i) ts.push_back(others[i]);
  }
  std::sort(ts.begin(), ts.end());

  std::vector<std::size_t> te;
  {
    std::vector<std::size_t> from_ts = ts;
    rng.shuffle(from_ts);
    for (std::size_t i = 0; i < spec.overlap_count; ++i) te.push_back(from_ts[i]);
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(ts.begin(), ts.end(), i) == ts.end()) outside.push_back(i);
    }
    rng.shuffle(outside);
    for (std::size_t i = 0; i < spec.test_end_count - spec.overlap_count; ++i) {
      te.push_back(outside[i]);
    }
    std::sort(te.begin(), te.end());
  }

  std::vector<std::size_t> ve = te;
  rng.shuffle(ve);
  ve.resize(spec.end_vertex_count);
  std::sort(ve.begin(), ve.end());

  // Vertices that cannot yet reach any test end; dead zones make every
  // requirement behind them untestable.
  auto end_blind = [&] {
    std::vector<char> blind(n, 1);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t end : te) {
        if (reaches(adj, u, end)) {
          blind[u] = 0;
          break;
        }
      }
    }
    return blind;
  };

  std::size_t surplus = spec.edge_count - (n - 1);

  // Cycle budget first: a back edge u->a with a reaching u closes at least
  // one new elementary circuit.
  std::size_t cycles_added = 0;
  while (cycles_added < spec.cycle_count && surplus > 0) {
    std::vector<std::pair<std::size_t, std::size_t>> closing;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t a = 0; a < n; ++a) {
        if (reaches(adj, a, u)) closing.emplace_back(u, a);
      }
    }
    if (closing.empty()) break;
    const auto [u, a] = closing[rng.pick_index(closing.size())];
    add_arc(u, a);
    --surplus;
    ++cycles_added;
  }

  // Remaining edges avoid creating further circuits where possible, and
  // preferentially route dead zones toward a test end.
  while (surplus > 0) {
    const std::vector<char> blind = end_blind();
    std::vector<std::pair<std::size_t, std::size_t>> safe, favoured;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (reaches(adj, v, u)) continue;
        safe.emplace_back(u, v);
        if (blind[u] && !blind[v]) favoured.emplace_back(u, v);
      }
    }
    const auto& pool = !favoured.empty() ? favoured : safe;
    if (!pool.empty()) {
      const auto [u, v] = pool[rng.pick_index(pool.size())];
      add_arc(u, v);
    } else {
      add_arc(rng.pick_index(n), rng.pick_index(n));
    }
    --surplus;
  }

  for (std::size_t i = 0; i < arcs.size(); ++i) {
    g.edges.push_back({"e" + std::to_string(i), g.vertices[arcs[i].first].id,
                       g.vertices[arcs[i].second].id, "t" + std::to_string(i), 0.0});
  }

  for (std::size_t v : ts) g.test_starts.push_back(g.vertices[v].id);
  for (std::size_t v : te) g.test_ends.push_back(g.vertices[v].id);
  for (std::size_t v : ve) g.end_vertices.push_back(g.vertices[v].id);

  // Priorities: selected elements inside the band, the rest below it.
  const double lo = spec.priority_scale.scale_min;
  for (std::size_t v = 0; v < n; ++v) {
    g.vertices[v].priority = rng.real(lo, spec.priority_band_min);
  }
  for (std::size_t v : rng.sample_indices(n, spec.priority_vertex_count)) {
    g.vertices[v].priority = rng.real(spec.priority_band_min, spec.priority_band_max);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.edges[e].priority = rng.real(lo, spec.priority_band_min);
  }
  for (std::size_t e : rng.sample_indices(g.edges.size(), spec.priority_edge_count)) {
    g.edges[e].priority = rng.real(spec.priority_band_min, spec.priority_band_max);
  }

  g.finalize();
  return g;
}

namespace {

// Counts elementary circuits (closed walks repeating no vertex except the
// endpoints). Each circuit is enumerated once, anchored at its minimal
// vertex; parallel edges yield distinct circuits. Enumeration work and the
// circuit count are both capped.
struct CircuitCounter {
  const Graph& g;
  std::size_t cap;
  std::size_t count = 0;
  std::size_t total_length = 0;
  std::size_t work = 0;
  bool capped = false;
  std::vector<char> on_path;

  CircuitCounter(const Graph& graph, std::size_t cycle_cap)
      : g(graph), cap(cycle_cap), on_path(graph.vertices.size(), 0) {}

  void run() {
    for (std::size_t s = 0; s < g.vertices.size() && !capped; ++s) {
      on_path[s] = 1;
      dfs(s, s, 1);
      on_path[s] = 0;
    }
  }

  void dfs(std::size_t v, std::size_t anchor, std::size_t depth) {
    if (capped) return;
    if (++work > cap * 10) {
      capped = true;
      return;
    }
    for (std::size_t e : g.out_edges(v)) {
      const std::size_t w = g.edge_target_pos(e);
      if (w == npos) continue;
      if (w == anchor) {
        if (++count > cap) {
          capped = true;
          return;
        }
        total_length += depth;
      } else if (w > anchor && !on_path[w]) {
        on_path[w] = 1;
        dfs(w, anchor, depth + 1);
        on_path[w] = 0;
        if (capped) return;
      }
    }
  }
};

}  // namespace

PropertyReport measure_properties(const Graph& g, const PrioritySelection& selection,
                                  std::size_t cycle_cap) {
  PropertyReport r;
  r.vertex_count = g.vertices.size();
  r.edge_count = g.edges.size();

  CircuitCounter counter(g, cycle_cap);
  counter.run();
  r.cycles = counter.count;
  r.cycles_capped = counter.capped;
  if (counter.count > 0) {
    r.avg_cycle_length = static_cast<double>(counter.total_length) / counter.count;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> groups;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t s = g.edge_source_pos(e), t = g.edge_target_pos(e);
    if (s != npos && t != npos) ++groups[{s, t}];
  }
  for (const auto& [key, size] : groups) {
    if (size >= 2) {
      ++r.parallel_edge_groups;
      r.parallel_edges += size;
    }
  }

  if (!g.vertices.empty()) {
    const double n = static_cast<double>(g.vertices.size());
    std::size_t in_total = 0, out_total = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      in_total += g.in_edges(v).size();
      out_total += g.out_edges(v).size();
    }
    r.avg_in_degree = in_total / n;
    r.avg_out_degree = out_total / n;
    r.avg_degree = (in_total + out_total) / n;
  }

  r.test_start_count = g.test_starts.size();
  r.test_end_count = g.test_ends.size();
  r.end_vertex_count = g.end_vertices.size();
  for (const auto& id : g.test_starts) {
    if (std::find(g.test_ends.begin(), g.test_ends.end(), id) != g.test_ends.end()) {
      ++r.overlap_count;
    }
  }
  for (const auto& v : g.vertices) {
    if (selection.contains(v.priority)) ++r.priority_vertex_count;
  }
  for (const auto& e : g.edges) {
    if (selection.contains(e.priority)) ++r.priority_edge_count;
  }
  return r;
}

}  // namespace psmt
