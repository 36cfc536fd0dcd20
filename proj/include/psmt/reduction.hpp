#pragma once

#include <cstdint>
#include <vector>

#include "psmt/graph.hpp"
#include "psmt/requirements.hpp"

namespace psmt {

// Set-cover view of a path set: requirements are the universe, each path is
// the subset of requirement indices it covers. Computed once, immutable
// afterwards.
struct CoverageMatrix {
  std::vector<TestPath> paths;
  std::vector<Requirement> requirements;
  std::size_t requirement_total = 0;
  // covers[i]: ascending requirement indices that path i covers.
  std::vector<std::vector<std::size_t>> covers;
  // contained_in[r]: requirements that contain requirement r as a sub-path
  // (equal duplicates are attributed to the earlier index only).
  std::vector<std::vector<std::size_t>> contained_in;

  static CoverageMatrix build(const Graph& g, std::vector<TestPath> paths,
                              std::vector<Requirement> requirements);

  std::size_t path_count() const { return covers.size(); }
  std::size_t requirement_count() const { return requirement_total; }

  // Per requirement: 1 when some path covers it.
  std::vector<char> coverable() const;
};

struct GaConfig {
  std::size_t population_size = 30;
  double initial_probability_to_set_gene = 0.2;
  double probability_to_mutate_one_gene = 0.4;
  double probability_to_mutate_zero_gene = 0.6;
  std::size_t max_generations = 100;
  std::size_t max_generations_without_improvement = 40;
};

struct SaConfig {
  double alpha = 0.8;  // geometric cooling coefficient
  double freeze_threshold = 1e-6;
};

// All reducers return ascending indices into matrix.paths. Every variant's
// output covers every requirement the input set can cover; stochastic
// variants are deterministic for a fixed seed.

// Keeps the whole path set.
std::vector<std::size_t> reduce_none(const CoverageMatrix& matrix);

// Scans paths in a uniformly random order, keeping a path iff it covers a
// still-uncovered requirement.
std::vector<std::size_t> reduce_random(const CoverageMatrix& matrix, std::uint64_t seed);

// Same scan, but ordered once by descending number of covered requirements
// (ties by ascending path index).
std::vector<std::size_t> reduce_sorted(const CoverageMatrix& matrix);

// Greedy set cover: first drops requirements that are sub-paths of another
// coverable requirement and paths covering nothing that remains, then
// repeatedly picks the path covering the most uncovered requirements
// (unit cost, ties by ascending path index).
std::vector<std::size_t> reduce_chvatal(const CoverageMatrix& matrix);

// Fitness of a path selection: maxCost - (uncovered * (|P| + 1) + selected),
// with maxCost = |R| * (|P| + 1) + |P|. Any selection covering everything
// outscores any selection that does not.
std::int64_t ga_fitness(const std::vector<char>& individual, const CoverageMatrix& matrix);

// Genetic algorithm over bit-vector individuals: roulette parent selection,
// two-point crossover, single-gene mutation, elitist survivor selection.
// The result is repaired to full coverage if the best individual falls short.
std::vector<std::size_t> reduce_ga(const CoverageMatrix& matrix, const GaConfig& config,
                                   std::uint64_t seed);

// Energy minimized by simulated annealing:
// uncovered * (|P| + 1) + selected. Equals maxCost - ga_fitness.
std::int64_t sa_energy(const std::vector<char>& point, const CoverageMatrix& matrix);

double sa_initial_temperature(std::size_t path_count);

// Simulated annealing with a geometric cooling schedule: ceil(t) single-bit
// flips per temperature level, cooling by alpha until frozen. The best point
// seen is repaired to full coverage if needed.
std::vector<std::size_t> reduce_sa(const CoverageMatrix& matrix, const SaConfig& config,
                                   std::uint64_t seed);

// Removes every path that is a contiguous sub-path of another retained path;
// of equal paths one copy is kept. Coverage is preserved. Output keeps the
// input order of the survivors.
std::vector<TestPath> enforce_no_subpath_rule(const Graph& g, const std::vector<TestPath>& paths);

// Selected matrix paths in ascending index order.
std::vector<TestPath> materialize(const CoverageMatrix& matrix,
                                  const std::vector<std::size_t>& selected);

}  // namespace psmt
