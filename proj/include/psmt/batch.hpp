#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "psmt/defects.hpp"
#include "psmt/instance_gen.hpp"
#include "psmt/pipeline.hpp"

namespace psmt {

// One (instance, configuration) cell with metrics averaged over repetitions.
struct ResultRow {
  std::string instance;
  CoverageCriterion coverage = CoverageCriterion::basic;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  ReductionKind reduction = ReductionKind::none;
  // Averages over repetitions.
  double steps = 0.0;
  double path_count = 0.0;
  double avg_steps = 0.0;
  double unique_steps = 0.0;
  double ut = 0.0;
  double type1_activated = 0.0;
  double type2_activated = 0.0;
  double eff1 = 0.0;
  double eff2 = 0.0;
  double runtime_ms = 0.0;
  double steps_variance = 0.0;
  PropertyReport properties;
  std::size_t type1_defects = 0;
  std::size_t type2_defects = 0;
  double defect_pair_distance = 0.0;
};

struct BatchResult {
  std::vector<ResultRow> rows;
  std::vector<std::string> log;  // parse failures and excluded cells
};

// Runs every configuration against every model file (*.json) in model_dir.
// Stochastic reductions run `repetitions` times with derived seeds and are
// averaged; deterministic ones repeat identically. When any reduction fails
// or yields no paths for an (instance, coverage, length-range) group, the
// whole group is dropped for that instance and noted in the log. Models
// without stored defects get a seeded random set sized relative to |E|.
BatchResult run_batch(const std::filesystem::path& model_dir,
                      const std::vector<RunConfig>& configs, std::uint64_t defect_seed);

void write_results_csv(const BatchResult& result, std::ostream& out);
void write_results_csv(const BatchResult& result, const std::filesystem::path& file);

}  // namespace psmt
