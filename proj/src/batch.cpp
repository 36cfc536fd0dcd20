#include "psmt/batch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "psmt/errors.hpp"
#include "psmt/model_io.hpp"
#include "psmt/rng.hpp"

namespace psmt {

namespace {

struct Instance {
  std::string name;
  Model model;
  PropertyReport properties;
  double defect_pair_distance = 0.0;
};

bool is_stochastic(ReductionKind kind) {
  return kind == ReductionKind::random || kind == ReductionKind::ga ||
         kind == ReductionKind::sa;
}

struct CellOutcome {
  bool failed = false;
  std::string failure;
  std::vector<MetricsReport> reps;
  double runtime_ms = 0.0;
};

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / xs.size();
}

double variance(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  const double m = mean(xs);
  double sum = 0.0;
  for (double x : xs) sum += (x - m) * (x - m);
  return sum / xs.size();
}

}  // namespace

BatchResult run_batch(const std::filesystem::path& model_dir,
                      const std::vector<RunConfig>& configs, std::uint64_t defect_seed) {
  BatchResult result;

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(model_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<Instance> instances;
  for (std::size_t i = 0; i < files.size(); ++i) {
    try {
      Instance inst;
      inst.model = read_model(files[i]);
      inst.name = inst.model.graph.name;
      const ValidationReport report = validate(inst.model.graph);
      if (!report.ok()) {
        result.log.push_back(files[i].string() + ": invalid model: " + report.to_string());
        continue;
      }
      if (inst.model.defects.empty()) {
        const std::size_t edges = inst.model.graph.edges.size();
        const auto type1 = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                        std::lround(0.20 * edges)));
        const auto type2_wanted = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::lround(0.18 * edges)));
        const std::size_t type2 =
            std::min(type2_wanted, connected_pair_count(inst.model.graph));
        inst.model.defects = plant_random_defects(inst.model.graph, type1, type2,
                                                  mix_seed(defect_seed, i));
      }
      inst.properties = measure_properties(inst.model.graph);
      inst.defect_pair_distance =
          average_pair_distance(inst.model.graph, inst.model.defects);
      instances.push_back(std::move(inst));
    } catch (const std::exception& e) {
      result.log.push_back(files[i].string() + ": " + e.what());
    }
  }

  for (std::size_t ii = 0; ii < instances.size(); ++ii) {
    const Instance& inst = instances[ii];

    // Group key (coverage, length range): a failure of any algorithm drops
    // the whole group for this instance.
    std::map<std::string, std::vector<std::pair<std::size_t, CellOutcome>>> groups;
    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      const RunConfig& base = configs[ci];
      CellOutcome outcome;
      const std::size_t reps = std::max<std::size_t>(1, base.repetitions);
      double total_ms = 0.0;
      for (std::size_t rep = 0; rep < reps && !outcome.failed; ++rep) {
        RunConfig config = base;
        config.seed = is_stochastic(base.reduction)
                          ? mix_seed(base.seed, ii * 1000 + ci, rep)
                          : base.seed;
        const auto start = std::chrono::steady_clock::now();
        try {
          const PipelineResult run = generate_paths(inst.model.graph, config);
          if (run.paths.empty()) {
            outcome.failed = true;
            outcome.failure = "no paths produced";
          } else {
            outcome.reps.push_back(compute_metrics(run.paths, inst.model.defects));
          }
        } catch (const std::exception& e) {
          outcome.failed = true;
          outcome.failure = e.what();
        }
        total_ms += std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      }
      outcome.runtime_ms = total_ms / reps;
      const std::string key = std::string(to_string(base.coverage)) + "/" +
                              std::to_string(base.min_length) + ":" +
                              std::to_string(base.max_length);
      groups[key].emplace_back(ci, std::move(outcome));
    }

    for (const auto& [key, cells] : groups) {
      const auto failed =
          std::find_if(cells.begin(), cells.end(),
                       [](const auto& cell) { return cell.second.failed; });
      if (failed != cells.end()) {
        result.log.push_back("excluded " + inst.name + " [" + key + "] for all algorithms (" +
                             to_string(configs[failed->first].reduction) + ": " +
                             failed->second.failure + ")");
        continue;
      }
      for (const auto& [ci, outcome] : cells) {
        const RunConfig& config = configs[ci];
        ResultRow row;
        row.instance = inst.name;
        row.coverage = config.coverage;
        row.min_length = config.min_length;
        row.max_length = config.max_length;
        row.reduction = config.reduction;
        std::vector<double> steps, paths, avg, unique, ut, t1, t2, eff1, eff2;
        for (const MetricsReport& m : outcome.reps) {
          steps.push_back(static_cast<double>(m.steps));
          paths.push_back(static_cast<double>(m.path_count));
          avg.push_back(m.avg_steps);
          unique.push_back(static_cast<double>(m.unique_steps));
          ut.push_back(m.ut);
          t1.push_back(static_cast<double>(m.type1_activated));
          t2.push_back(static_cast<double>(m.type2_activated));
          eff1.push_back(m.eff1);
          eff2.push_back(m.eff2);
        }
        row.steps = mean(steps);
        row.path_count = mean(paths);
        row.avg_steps = mean(avg);
        row.unique_steps = mean(unique);
        row.ut = mean(ut);
        row.type1_activated = mean(t1);
        row.type2_activated = mean(t2);
        row.eff1 = mean(eff1);
        row.eff2 = mean(eff2);
        row.steps_variance = variance(steps);
        row.runtime_ms = outcome.runtime_ms;
        row.properties = inst.properties;
        row.type1_defects = inst.model.defects.type1.size();
        row.type2_defects = inst.model.defects.type2.size();
        row.defect_pair_distance = inst.defect_pair_distance;
        result.rows.push_back(std::move(row));
      }
    }
  }
  return result;
}

void write_results_csv(const BatchResult& result, std::ostream& out) {
  out << "instance,coverage,min_len,max_len,reduction,steps,path_count,avg_steps,"
         "unique_steps,ut,type1_activated,type2_activated,eff1,eff2,runtime_ms,"
         "vertices,edges,cycles,avg_cycle_length,parallel_edge_groups,parallel_edges,"
         "avg_in_degree,avg_out_degree,avg_degree,test_starts,test_ends,ts_te_overlap,"
         "end_vertices,priority_vertices,priority_edges,type1_defects,type2_defects,"
         "defect_pair_distance,steps_var\n";
  char buffer[64];
  auto num = [&](double v, const char* fmt) {
    std::snprintf(buffer, sizeof(buffer), fmt, v);
    return std::string(buffer);
  };
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  };
  for (const ResultRow& r : result.rows) {
    out << field(r.instance) << ',' << to_string(r.coverage) << ',' << r.min_length << ','
        << r.max_length << ',' << to_string(r.reduction) << ',' << num(r.steps, "%.2f")
        << ',' << num(r.path_count, "%.2f") << ',' << num(r.avg_steps, "%.2f") << ','
        << num(r.unique_steps, "%.2f") << ',' << num(r.ut, "%.2f") << ','
        << num(r.type1_activated, "%.2f") << ',' << num(r.type2_activated, "%.2f") << ','
        << num(r.eff1, "%.3f") << ',' << num(r.eff2, "%.3f") << ','
        << num(r.runtime_ms, "%.2f") << ',' << r.properties.vertex_count << ','
        << r.properties.edge_count << ',' << r.properties.cycles << ','
        << num(r.properties.avg_cycle_length, "%.2f") << ','
        << r.properties.parallel_edge_groups << ',' << r.properties.parallel_edges << ','
        << num(r.properties.avg_in_degree, "%.2f") << ','
        << num(r.properties.avg_out_degree, "%.2f") << ','
        << num(r.properties.avg_degree, "%.2f") << ',' << r.properties.test_start_count
        << ',' << r.properties.test_end_count << ',' << r.properties.overlap_count << ','
        << r.properties.end_vertex_count << ',' << r.properties.priority_vertex_count << ','
        << r.properties.priority_edge_count << ',' << r.type1_defects << ','
        << r.type2_defects << ',' << num(r.defect_pair_distance, "%.2f") << ','
        << num(r.steps_variance, "%.4f") << '\n';
  }
}

void write_results_csv(const BatchResult& result, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ParseError(file.string() + ": cannot open file for writing");
  write_results_csv(result, out);
}

}  // namespace psmt
