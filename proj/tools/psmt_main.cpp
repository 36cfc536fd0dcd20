#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "psmt/batch.hpp"
#include "psmt/errors.hpp"
#include "psmt/instance_gen.hpp"
#include "psmt/model_io.hpp"
#include "psmt/pipeline.hpp"
#include "psmt/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;        // validation or parse failure
constexpr int kExitNoPaths = 2;        // no feasible requirement
constexpr int kExitEnumOverflow = 3;   // baseline enumeration blew the cap

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (begin <= csv.size()) {
    const std::size_t comma = csv.find(',', begin);
    const std::size_t end = comma == std::string::npos ? csv.size() : comma;
    if (end > begin) out.push_back(csv.substr(begin, end - begin));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

struct GenerateArgs {
  std::string model_file;
  std::string coverage = "basic";
  std::string reduction = "sorted";
  std::size_t min_length = 2;
  std::size_t max_length = 6;
  double select_min = 2.0;
  double select_max = 3.0;
  std::uint64_t seed = 0;
  std::size_t enum_cap = psmt::kDefaultEnumCap;
  std::string output;
  std::string dot_output;
};

psmt::RunConfig make_config(const GenerateArgs& args) {
  psmt::RunConfig config;
  const auto coverage = psmt::criterion_from_string(args.coverage);
  if (!coverage) throw psmt::ValidationError("unknown coverage '" + args.coverage + "'");
  const auto reduction = psmt::reduction_from_string(args.reduction);
  if (!reduction) throw psmt::ValidationError("unknown reduction '" + args.reduction + "'");
  config.coverage = *coverage;
  config.reduction = *reduction;
  config.min_length = args.min_length;
  config.max_length = args.max_length;
  config.selection = {args.select_min, args.select_max};
  config.seed = args.seed;
  config.enum_cap = args.enum_cap;
  return config;
}

int run_generate(const GenerateArgs& args) {
  const psmt::Model model = psmt::read_model(args.model_file);
  const psmt::PipelineResult result =
      psmt::generate_paths(model.graph, make_config(args));

  const psmt::MetricsReport metrics = psmt::compute_metrics(result.paths, model.defects);
  std::cout << "paths: " << result.paths.size() << "\n";
  std::cout << "steps: " << metrics.steps << "\n";
  std::cout << "feasible requirements: " << result.feasible.size() << "\n";
  std::cout << "infeasible requirements: " << result.infeasible.size() << "\n";
  for (const auto& r : result.infeasible) {
    std::cout << "  infeasible: " << r.describe(model.graph) << "\n";
  }
  std::cout << "coverage: " << (result.report.satisfied() ? "satisfied" : "violated")
            << "\n";
  if (!result.report.satisfied()) std::cout << result.report.to_string();

  if (!args.output.empty()) psmt::write_paths(result.paths, model.graph, args.output);
  if (!args.dot_output.empty()) {
    psmt::write_dot(model.graph, result.paths, args.dot_output);
  }
  return result.report.satisfied() ? kExitOk : kExitInvalid;
}

int run_evaluate(const std::string& model_file, const std::string& paths_file,
                 bool type1_per_path) {
  const psmt::Model model = psmt::read_model(model_file);
  const auto paths = psmt::read_paths(paths_file, model.graph);
  const psmt::MetricsReport m = psmt::compute_metrics(
      paths, model.defects,
      type1_per_path ? psmt::Type1Counting::per_path : psmt::Type1Counting::per_occurrence);
  std::printf("steps: %zu\n", m.steps);
  std::printf("path_count: %zu\n", m.path_count);
  std::printf("avg_steps: %.4f\n", m.avg_steps);
  std::printf("unique_steps: %zu\n", m.unique_steps);
  std::printf("ut: %.4f\n", m.ut);
  std::printf("type1_activated: %zu\n", m.type1_activated);
  std::printf("type2_activated: %zu\n", m.type2_activated);
  std::printf("eff1: %.4f\n", m.eff1);
  std::printf("eff2: %.4f\n", m.eff2);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prioritized variable-length test path generation for FSM models"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Generate a test path set for a model");
  generate->add_option("--model", gen.model_file, "Model JSON file")->required();
  generate->add_option("--coverage", gen.coverage, "basic | extended");
  generate->add_option("--reduction", gen.reduction,
                       "none | random | sorted | chvatal | ga | sa | nswitch");
  generate->add_option("--min-length", gen.min_length, "Minimum test path length");
  generate->add_option("--max-length", gen.max_length, "Maximum test path length");
  generate->add_option("--select-min", gen.select_min, "Priority selection lower bound");
  generate->add_option("--select-max", gen.select_max, "Priority selection upper bound");
  generate->add_option("--seed", gen.seed, "Seed for stochastic reductions");
  generate->add_option("--enum-cap", gen.enum_cap, "Baseline enumeration cap");
  generate->add_option("--output", gen.output, "Write the path set as JSON");
  generate->add_option("--dot", gen.dot_output, "Write a Graphviz visualization");

  std::string eval_model, eval_paths;
  bool eval_type1_per_path = false;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Compute metrics for a stored path set");
  evaluate->add_option("--model", eval_model, "Model JSON file")->required();
  evaluate->add_option("--paths", eval_paths, "Path set JSON file")->required();
  evaluate->add_flag("--type1-per-path", eval_type1_per_path,
                     "Count a type-1 defect at most once per path");

  std::string batch_dir, batch_out = "results.csv";
  std::string batch_coverages = "basic,extended";
  std::string batch_ranges = "2:6,4:8";
  std::string batch_reductions = "none,random,sorted,chvatal,ga,sa,nswitch";
  std::uint64_t batch_seed = 0, batch_defect_seed = 1;
  std::size_t batch_reps = 3;
  double batch_select_min = 2.0, batch_select_max = 3.0;
  std::size_t batch_cap = psmt::kDefaultEnumCap;
  CLI::App* batch = app.add_subcommand("batch", "Run a configuration grid over a model directory");
  batch->add_option("--models", batch_dir, "Directory of model JSON files")->required();
  batch->add_option("--output", batch_out, "Results CSV file");
  batch->add_option("--coverages", batch_coverages, "Comma-separated coverage criteria");
  batch->add_option("--ranges", batch_ranges, "Comma-separated min:max length ranges");
  batch->add_option("--reductions", batch_reductions, "Comma-separated reduction variants");
  batch->add_option("--seed", batch_seed, "Base seed for stochastic reductions");
  batch->add_option("--defect-seed", batch_defect_seed,
                    "Seed for planting defects into models without any");
  batch->add_option("--repetitions", batch_reps, "Runs per stochastic cell");
  batch->add_option("--select-min", batch_select_min, "Priority selection lower bound");
  batch->add_option("--select-max", batch_select_max, "Priority selection upper bound");
  batch->add_option("--enum-cap", batch_cap, "Baseline enumeration cap");

  psmt::InstanceSpec spec;
  std::string inst_out;
  std::size_t inst_type1 = kUnset, inst_type2 = kUnset;
  CLI::App* gen_instance = app.add_subcommand("gen-instance", "Generate an artificial model");
  gen_instance->add_option("--vertices", spec.vertex_count, "Vertex count");
  gen_instance->add_option("--edges", spec.edge_count, "Edge count");
  gen_instance->add_option("--cycles", spec.cycle_count, "Cycle target (best effort)");
  gen_instance->add_option("--test-starts", spec.test_start_count, "Test start count");
  gen_instance->add_option("--test-ends", spec.test_end_count, "Test end count");
  gen_instance->add_option("--overlap", spec.overlap_count, "Test start/end overlap");
  gen_instance->add_option("--end-vertices", spec.end_vertex_count, "Machine end count");
  gen_instance->add_option("--priority-vertices", spec.priority_vertex_count,
                           "Vertices prioritized into the selection band");
  gen_instance->add_option("--priority-edges", spec.priority_edge_count,
                           "Edges prioritized into the selection band");
  gen_instance->add_option("--seed", spec.seed, "Generator seed");
  gen_instance->add_option("--name", spec.name, "Model name");
  gen_instance->add_option("--type1", inst_type1, "Type-1 defects to plant (default |E|/5)");
  gen_instance->add_option("--type2", inst_type2, "Type-2 defects to plant (default 0.18|E|)");
  gen_instance->add_option("--output", inst_out, "Model JSON file")->required();

  std::string dot_model, dot_paths, dot_out;
  CLI::App* export_dot = app.add_subcommand("export-dot", "Export a model to Graphviz");
  export_dot->add_option("--model", dot_model, "Model JSON file")->required();
  export_dot->add_option("--paths", dot_paths, "Optional path set JSON to highlight");
  export_dot->add_option("--output", dot_out, "DOT output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return run_generate(gen);
    if (*evaluate) return run_evaluate(eval_model, eval_paths, eval_type1_per_path);
    if (*batch) {
      std::vector<psmt::RunConfig> configs;
      for (const std::string& cov : split_list(batch_coverages)) {
        const auto criterion = psmt::criterion_from_string(cov);
        if (!criterion) throw psmt::ValidationError("unknown coverage '" + cov + "'");
        for (const std::string& range : split_list(batch_ranges)) {
          const auto colon = range.find(':');
          if (colon == std::string::npos) {
            throw psmt::ValidationError("range '" + range + "' must be min:max");
          }
          for (const std::string& red : split_list(batch_reductions)) {
            const auto kind = psmt::reduction_from_string(red);
            if (!kind) throw psmt::ValidationError("unknown reduction '" + red + "'");
            psmt::RunConfig config;
            config.coverage = *criterion;
            config.min_length = std::stoul(range.substr(0, colon));
            config.max_length = std::stoul(range.substr(colon + 1));
            config.selection = {batch_select_min, batch_select_max};
            config.reduction = *kind;
            config.seed = batch_seed;
            config.repetitions = batch_reps;
            config.enum_cap = batch_cap;
            configs.push_back(config);
          }
        }
      }
      const psmt::BatchResult result = psmt::run_batch(batch_dir, configs, batch_defect_seed);
      psmt::write_results_csv(result, std::filesystem::path(batch_out));
      for (const std::string& line : result.log) std::cerr << line << "\n";
      std::cout << "rows: " << result.rows.size() << " -> " << batch_out << "\n";
      return result.rows.empty() && !result.log.empty() ? kExitInvalid : kExitOk;
    }
    if (*gen_instance) {
      psmt::Model model;
      model.graph = psmt::generate(spec);
      const std::size_t edges = model.graph.edges.size();
      const std::size_t type1 =
          inst_type1 != kUnset
              ? inst_type1
              : std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.20 * edges)));
      const std::size_t wanted2 =
          inst_type2 != kUnset
              ? inst_type2
              : std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.18 * edges)));
      const std::size_t type2 =
          std::min(wanted2, psmt::connected_pair_count(model.graph));
      model.defects =
          psmt::plant_random_defects(model.graph, type1, type2, psmt::mix_seed(spec.seed, 77));
      psmt::write_model(model, inst_out);
      const psmt::PropertyReport p = psmt::measure_properties(model.graph);
      std::cout << "wrote " << inst_out << ": |V|=" << p.vertex_count
                << " |E|=" << p.edge_count << " cycles=" << p.cycles
                << (p.cycles_capped ? "+" : "") << " |V_ts|=" << p.test_start_count
                << " |V_te|=" << p.test_end_count << " overlap=" << p.overlap_count
                << " |V_e|=" << p.end_vertex_count << "\n";
      return kExitOk;
    }
    if (*export_dot) {
      const psmt::Model model = psmt::read_model(dot_model);
      std::vector<psmt::TestPath> paths;
      if (!dot_paths.empty()) paths = psmt::read_paths(dot_paths, model.graph);
      psmt::write_dot(model.graph, paths, dot_out);
      std::cout << "wrote " << dot_out << "\n";
      return kExitOk;
    }
  } catch (const psmt::NoPathsPossibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& r : e.infeasible_requirements) std::cerr << "  infeasible: " << r << "\n";
    return kExitNoPaths;
  } catch (const psmt::EnumerationOverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnumOverflow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
