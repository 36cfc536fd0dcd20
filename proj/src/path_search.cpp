#include "psmt/path_search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace psmt {

namespace {

// Partial path on one side of the search. Edges are stored in forward order;
// prefixes end at the requirement's first vertex, suffixes start at its last.
struct Partial {
  std::vector<std::size_t> edges;
};

// One search side: a FIFO queue of partial paths plus a map holding one valid
// representative per length. visited dedupes queue states by (endpoint,
// length); two partials agreeing on both are interchangeable for any join.
struct Frontier {
  std::deque<Partial> queue;
  std::map<std::size_t, Partial> by_length;
  std::set<std::pair<std::size_t, std::size_t>> visited;

  // Shortest stored length; 0 disables pruning until the first entry exists.
  std::size_t min_stored() const { return by_length.empty() ? 0 : by_length.begin()->first; }

  void push(std::size_t endpoint, Partial p) {
    if (visited.emplace(endpoint, p.edges.size()).second) {
      queue.push_back(std::move(p));
    }
  }
};

TestPath join(const Partial& prefix, const Requirement& r, const Partial& suffix) {
  TestPath p;
  p.edges.reserve(prefix.edges.size() + r.edges.size() + suffix.edges.size());
  p.edges.insert(p.edges.end(), prefix.edges.begin(), prefix.edges.end());
  p.edges.insert(p.edges.end(), r.edges.begin(), r.edges.end());
  p.edges.insert(p.edges.end(), suffix.edges.begin(), suffix.edges.end());
  return p;
}

}  // namespace

std::optional<TestPath> find_path_in_range(const Requirement& requirement, const Graph& g,
                                           std::size_t min_length, std::size_t max_length) {
  if (min_length < 1 || min_length > max_length) return std::nullopt;

  std::size_t req_first, req_last;
  const std::size_t body = requirement.edges.size();
  if (requirement.kind == Requirement::Kind::vertex_visit) {
    req_first = req_last = requirement.vertex;
  } else {
    if (requirement.edges.empty()) return std::nullopt;
    req_first = g.edge_source_pos(requirement.edges.front());
    req_last = g.edge_target_pos(requirement.edges.back());
  }
  if (req_first == npos || req_last == npos || req_first >= g.vertices.size()) {
    return std::nullopt;
  }
  if (body > max_length) return std::nullopt;

  // Edge budget available to prefix + suffix combined.
  const std::size_t budget = max_length - body;
  const std::size_t floor_total = std::max(min_length, body);

  Frontier starts, ends;
  starts.push(req_first, Partial{});
  ends.push(req_last, Partial{});

  std::size_t best_total = npos;
  std::optional<TestPath> best;

  auto consider = [&](const Partial& prefix, const Partial& suffix) {
    const std::size_t total = prefix.edges.size() + body + suffix.edges.size();
    if (total < min_length || total > max_length) return;
    if (total < best_total) {
      best_total = total;
      best = join(prefix, requirement, suffix);
    }
  };

  while (!starts.queue.empty() || !ends.queue.empty()) {
    if (best_total == floor_total) break;  // nothing shorter can exist

    if (!starts.queue.empty()) {
      Partial p = std::move(starts.queue.front());
      starts.queue.pop_front();
      const std::size_t len = p.edges.size();
      const std::size_t head = p.edges.empty() ? req_first : g.edge_source_pos(p.edges.front());
      if (g.is_test_start(head)) {
        for (const auto& [suffix_len, suffix] : ends.by_length) consider(p, suffix);
        if (len + ends.min_stored() <= budget && !starts.by_length.count(len)) {
          starts.by_length.emplace(len, p);
        }
      }
      if (len + 1 + ends.min_stored() <= budget) {
        for (std::size_t e : g.in_edges(head)) {
          Partial q;
          q.edges.reserve(len + 1);
          q.edges.push_back(e);
          q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
          starts.push(g.edge_source_pos(e), std::move(q));
        }
      }
    }

    if (!ends.queue.empty()) {
      Partial p = std::move(ends.queue.front());
      ends.queue.pop_front();
      const std::size_t len = p.edges.size();
      const std::size_t tail = p.edges.empty() ? req_last : g.edge_target_pos(p.edges.back());
      if (g.is_test_end(tail)) {
        for (const auto& [prefix_len, prefix] : starts.by_length) consider(prefix, p);
        if (len + starts.min_stored() <= budget && !ends.by_length.count(len)) {
          ends.by_length.emplace(len, p);
        }
      }
      if (len + 1 + starts.min_stored() <= budget) {
        for (std::size_t e : g.out_edges(tail)) {
          Partial q = p;
          q.edges.push_back(e);
          ends.push(g.edge_target_pos(e), std::move(q));
        }
      }
    }
  }
  return best;
}

}  // namespace psmt
