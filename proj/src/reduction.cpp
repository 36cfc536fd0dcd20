#include "psmt/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "psmt/rng.hpp"

namespace psmt {

CoverageMatrix CoverageMatrix::build(const Graph& g, std::vector<TestPath> paths,
                                     std::vector<Requirement> requirements) {
  CoverageMatrix m;
  m.paths = std::move(paths);
  m.requirements = std::move(requirements);
  m.requirement_total = m.requirements.size();
  m.covers.resize(m.paths.size());
  for (std::size_t i = 0; i < m.paths.size(); ++i) {
    for (std::size_t r = 0; r < m.requirements.size(); ++r) {
      if (is_subpath(g, m.requirements[r].as_path(), m.paths[i])) {
        m.covers[i].push_back(r);
      }
    }
  }
  m.contained_in.resize(m.requirements.size());
  for (std::size_t r1 = 0; r1 < m.requirements.size(); ++r1) {
    const TestPath p1 = m.requirements[r1].as_path();
    for (std::size_t r2 = 0; r2 < m.requirements.size(); ++r2) {
      if (r1 == r2) continue;
      const TestPath p2 = m.requirements[r2].as_path();
      if (!is_subpath(g, p1, p2)) continue;
      if (p1 == p2 && r2 > r1) continue;  // duplicate content: later index yields
      m.contained_in[r1].push_back(r2);
    }
  }
  return m;
}

std::vector<char> CoverageMatrix::coverable() const {
  std::vector<char> out(requirement_count(), 0);
  for (const auto& c : covers) {
    for (std::size_t r : c) out[r] = 1;
  }
  return out;
}

namespace {

// Shared scan of Random/Sorted: keep a path iff it covers something new.
std::vector<std::size_t> greedy_scan(const CoverageMatrix& m,
                                     const std::vector<std::size_t>& order) {
  std::vector<char> covered(m.requirement_count(), 0);
  std::size_t uncovered = covered.size();
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    if (uncovered == 0) break;
    bool adds = false;
    for (std::size_t r : m.covers[i]) {
      if (!covered[r]) {
        adds = true;
        break;
      }
    }
    if (!adds) continue;
    kept.push_back(i);
    for (std::size_t r : m.covers[i]) {
      if (!covered[r]) {
        covered[r] = 1;
        --uncovered;
      }
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Adds paths greedily until every coverable requirement in `uncovered` is
// covered. Used to repair metaheuristic results.
void repair_to_full_coverage(const CoverageMatrix& m, std::vector<char>& selected) {
  const std::vector<char> coverable = m.coverable();
  std::vector<char> covered(m.requirement_count(), 0);
  for (std::size_t i = 0; i < m.path_count(); ++i) {
    if (!selected[i]) continue;
    for (std::size_t r : m.covers[i]) covered[r] = 1;
  }
  auto missing = [&] {
    std::size_t n = 0;
    for (std::size_t r = 0; r < covered.size(); ++r) {
      if (coverable[r] && !covered[r]) ++n;
    }
    return n;
  };
  std::size_t left = missing();
  while (left > 0) {
    std::size_t best = npos, best_gain = 0;
    for (std::size_t i = 0; i < m.path_count(); ++i) {
      if (selected[i]) continue;
      std::size_t gain = 0;
      for (std::size_t r : m.covers[i]) {
        if (!covered[r]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == npos) break;  // nothing else coverable
    selected[best] = 1;
    for (std::size_t r : m.covers[best]) {
      if (!covered[r]) {
        covered[r] = 1;
        if (coverable[r]) --left;
      }
    }
  }
}

std::vector<std::size_t> selected_indices(const std::vector<char>& bits) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(i);
  }
  return out;
}

std::int64_t count_uncovered(const std::vector<char>& individual, const CoverageMatrix& m) {
  std::vector<char> covered(m.requirement_count(), 0);
  for (std::size_t i = 0; i < m.path_count(); ++i) {
    if (!individual[i]) continue;
    for (std::size_t r : m.covers[i]) covered[r] = 1;
  }
  return static_cast<std::int64_t>(std::count(covered.begin(), covered.end(), 0));
}

}  // namespace

std::vector<std::size_t> reduce_none(const CoverageMatrix& matrix) {
  std::vector<std::size_t> all(matrix.path_count());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::vector<std::size_t> reduce_random(const CoverageMatrix& matrix, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> order(matrix.path_count());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return greedy_scan(matrix, order);
}

std::vector<std::size_t> reduce_sorted(const CoverageMatrix& matrix) {
  std::vector<std::size_t> order(matrix.path_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (matrix.covers[a].size() != matrix.covers[b].size()) {
      return matrix.covers[a].size() > matrix.covers[b].size();
    }
    return a < b;
  });
  return greedy_scan(matrix, order);
}

std::vector<std::size_t> reduce_chvatal(const CoverageMatrix& matrix) {
  const std::vector<char> coverable = matrix.coverable();

  // Drop requirements subsumed by another coverable requirement; covering the
  // containing requirement covers them too.
  std::vector<char> active(matrix.requirement_count(), 1);
  for (std::size_t r = 0; r < matrix.contained_in.size(); ++r) {
    for (std::size_t super : matrix.contained_in[r]) {
      if (coverable[super]) {
        active[r] = 0;
        break;
      }
    }
  }

  std::vector<char> uncovered(matrix.requirement_count(), 0);
  std::size_t left = 0;
  for (std::size_t r = 0; r < uncovered.size(); ++r) {
    if (active[r] && coverable[r]) {
      uncovered[r] = 1;
      ++left;
    }
  }

  // Unit costs, so the best ratio is simply the largest newly covered count.
  std::vector<std::size_t> kept;
  std::vector<char> used(matrix.path_count(), 0);
  while (left > 0) {
    std::size_t best = npos, best_gain = 0;
    for (std::size_t i = 0; i < matrix.path_count(); ++i) {
      if (used[i]) continue;
      std::size_t gain = 0;
      for (std::size_t r : matrix.covers[i]) {
        if (uncovered[r]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == npos) break;
    used[best] = 1;
    kept.push_back(best);
    for (std::size_t r : matrix.covers[best]) {
      if (uncovered[r]) {
        uncovered[r] = 0;
        --left;
      }
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::int64_t ga_fitness(const std::vector<char>& individual, const CoverageMatrix& matrix) {
  const auto p = static_cast<std::int64_t>(matrix.path_count());
  const auto r = static_cast<std::int64_t>(matrix.requirement_count());
  const std::int64_t max_cost = r * (p + 1) + p;
  const std::int64_t selected = std::count(individual.begin(), individual.end(), char(1));
  return max_cost - (count_uncovered(individual, matrix) * (p + 1) + selected);
}

std::int64_t sa_energy(const std::vector<char>& point, const CoverageMatrix& matrix) {
  const auto p = static_cast<std::int64_t>(matrix.path_count());
  const std::int64_t selected = std::count(point.begin(), point.end(), char(1));
  return count_uncovered(point, matrix) * (p + 1) + selected;
}

double sa_initial_temperature(std::size_t path_count) {
  return std::pow(static_cast<double>(path_count), 2.2) * 1.5;
}

namespace {

struct Individual {
  std::vector<char> genes;
  std::int64_t fitness = 0;
};

// Roulette wheel over fitness + 1; the shift keeps the wheel positive even
// when every fitness is zero.
std::size_t spin_roulette(const std::vector<Individual>& pool, const std::vector<char>& taken,
                          Rng& rng) {
  double total = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!taken[i]) total += static_cast<double>(pool[i].fitness) + 1.0;
  }
  double target = rng.real01() * total;
  std::size_t last = npos;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (taken[i]) continue;
    last = i;
    target -= static_cast<double>(pool[i].fitness) + 1.0;
    if (target < 0.0) return i;
  }
  return last;
}

void mutate_one_gene(Individual& ind, const GaConfig& config, Rng& rng) {
  if (ind.genes.empty()) return;
  const std::size_t gene = rng.pick_index(ind.genes.size());
  const double p = ind.genes[gene] ? config.probability_to_mutate_one_gene
                                   : config.probability_to_mutate_zero_gene;
  if (rng.chance(p)) ind.genes[gene] = ind.genes[gene] ? 0 : 1;
}

}  // namespace

std::vector<std::size_t> reduce_ga(const CoverageMatrix& matrix, const GaConfig& config,
                                   std::uint64_t seed) {
  const std::size_t n = matrix.path_count();
  if (n == 0) return {};

  // The GA works on the coverable part of the universe only.
  CoverageMatrix filtered;
  {
    const std::vector<char> coverable = matrix.coverable();
    std::vector<std::size_t> remap(matrix.requirement_count(), npos);
    std::size_t next = 0;
    for (std::size_t r = 0; r < remap.size(); ++r) {
      if (coverable[r]) remap[r] = next++;
    }
    filtered.covers.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r : matrix.covers[i]) {
        filtered.covers[i].push_back(remap[r]);
      }
    }
    filtered.requirement_total = next;
  }

  Rng rng(seed);
  auto evaluate = [&](Individual& ind) { ind.fitness = ga_fitness(ind.genes, filtered); };

  std::vector<Individual> population(config.population_size);
  for (auto& ind : population) {
    ind.genes.resize(n);
    for (auto& gene : ind.genes) {
      gene = rng.chance(config.initial_probability_to_set_gene) ? 1 : 0;
    }
    evaluate(ind);
  }

  Individual best = population.front();
  for (const auto& ind : population) {
    if (ind.fitness > best.fitness) best = ind;
  }

  auto is_provable_optimum = [&](const Individual& ind) {
    const std::int64_t selected =
        std::count(ind.genes.begin(), ind.genes.end(), char(1));
    if (selected != 1) return false;
    return count_uncovered(ind.genes, filtered) == 0;
  };

  std::size_t stagnant = 0;
  for (std::size_t gen = 0; gen < config.max_generations; ++gen) {
    if (is_provable_optimum(best)) break;
    if (stagnant >= config.max_generations_without_improvement) break;

    // Crossover: populationSize/3 parent pairs give two offspring each.
    std::vector<Individual> offspring;
    const std::vector<char> none(population.size(), 0);
    for (std::size_t pair = 0; pair < config.population_size / 3; ++pair) {
      const Individual& p1 = population[spin_roulette(population, none, rng)];
      const Individual& p2 = population[spin_roulette(population, none, rng)];
      Individual c1 = p1, c2 = p2;
      if (n >= 3) {
        std::size_t a = 1 + rng.pick_index(n - 1);
        std::size_t b = 1 + rng.pick_index(n - 1);
        while (b == a) b = 1 + rng.pick_index(n - 1);
        if (a > b) std::swap(a, b);
        for (std::size_t i = a; i < b; ++i) {
          c1.genes[i] = p2.genes[i];
          c2.genes[i] = p1.genes[i];
        }
      }
      // With fewer than three genes no interior cut points exist; the
      // offspring are mutated parent copies.
      mutate_one_gene(c1, config, rng);
      mutate_one_gene(c2, config, rng);
      evaluate(c1);
      evaluate(c2);
      offspring.push_back(std::move(c1));
      offspring.push_back(std::move(c2));
    }

    std::vector<Individual> merged = std::move(population);
    for (auto& ind : offspring) merged.push_back(std::move(ind));

    // Elites survive outright, the rest of the next generation is drawn by
    // roulette without replacement.
    std::vector<std::size_t> rank(merged.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
      return merged[a].fitness > merged[b].fitness;
    });
    const std::size_t elite_count = std::min(config.population_size / 10, merged.size());

    std::vector<char> taken(merged.size(), 0);
    std::vector<Individual> next;
    for (std::size_t i = 0; i < elite_count; ++i) {
      taken[rank[i]] = 1;
      next.push_back(merged[rank[i]]);
    }
    while (next.size() < config.population_size && next.size() < merged.size()) {
      const std::size_t pick = spin_roulette(merged, taken, rng);
      if (pick == npos) break;
      taken[pick] = 1;
      next.push_back(merged[pick]);
    }
    population = std::move(next);

    std::int64_t previous_best = best.fitness;
    for (const auto& ind : population) {
      if (ind.fitness > best.fitness) best = ind;
    }
    stagnant = best.fitness > previous_best ? 0 : stagnant + 1;
  }

  std::vector<char> genes = best.genes;
  repair_to_full_coverage(matrix, genes);
  return selected_indices(genes);
}

std::vector<std::size_t> reduce_sa(const CoverageMatrix& matrix, const SaConfig& config,
                                   std::uint64_t seed) {
  const std::size_t n = matrix.path_count();
  if (n == 0) return {};

  Rng rng(seed);
  std::vector<char> point(n);
  for (auto& bit : point) bit = rng.chance(0.5) ? 1 : 0;

  const std::int64_t weight = static_cast<std::int64_t>(n) + 1;

  // Incremental energy bookkeeping: how many selected paths cover each
  // requirement, plus the running uncovered count and selection size.
  std::vector<std::size_t> cover_count(matrix.requirement_count(), 0);
  std::int64_t selected = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!point[i]) continue;
    ++selected;
    for (std::size_t r : matrix.covers[i]) ++cover_count[r];
  }
  std::int64_t uncovered = 0;
  for (std::size_t c : cover_count) {
    if (c == 0) ++uncovered;
  }
  std::int64_t energy = uncovered * weight + selected;

  std::vector<char> best_point = point;
  std::int64_t best_energy = energy;

  auto flip_delta = [&](std::size_t i) {
    std::int64_t d_uncovered = 0;
    if (point[i]) {
      for (std::size_t r : matrix.covers[i]) {
        if (cover_count[r] == 1) ++d_uncovered;
      }
      return d_uncovered * weight - 1;
    }
    for (std::size_t r : matrix.covers[i]) {
      if (cover_count[r] == 0) --d_uncovered;
    }
    return d_uncovered * weight + 1;
  };
  auto apply_flip = [&](std::size_t i, std::int64_t delta) {
    if (point[i]) {
      point[i] = 0;
      --selected;
      for (std::size_t r : matrix.covers[i]) --cover_count[r];
    } else {
      point[i] = 1;
      ++selected;
      for (std::size_t r : matrix.covers[i]) ++cover_count[r];
    }
    energy += delta;
  };

  double t = sa_initial_temperature(n);
  while (t >= config.freeze_threshold) {
    const auto trials = static_cast<std::size_t>(std::ceil(t));
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t bit = rng.pick_index(n);
      const std::int64_t delta = flip_delta(bit);
      if (delta < 0) {
        apply_flip(bit, delta);
        if (energy < best_energy) {
          best_energy = energy;
          best_point = point;
        }
      } else if (rng.real01() < std::exp(-static_cast<double>(delta) / t)) {
        apply_flip(bit, delta);
      }
    }
    t *= config.alpha;
  }

  repair_to_full_coverage(matrix, best_point);
  return selected_indices(best_point);
}

std::vector<TestPath> enforce_no_subpath_rule(const Graph& g,
                                              const std::vector<TestPath>& paths) {
  std::vector<std::size_t> order(paths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return paths[a].length() > paths[b].length();
  });

  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool contained = false;
    for (std::size_t k : kept) {
      if (is_subpath(g, paths[i], paths[k])) {
        contained = true;
        break;
      }
    }
    if (!contained) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());

  std::vector<TestPath> out;
  out.reserve(kept.size());
  for (std::size_t i : kept) out.push_back(paths[i]);
  return out;
}

std::vector<TestPath> materialize(const CoverageMatrix& matrix,
                                  const std::vector<std::size_t>& selected) {
  std::vector<TestPath> out;
  out.reserve(selected.size());
  for (std::size_t i : selected) out.push_back(matrix.paths[i]);
  return out;
}

}  // namespace psmt
