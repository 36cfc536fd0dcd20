#include "psmt/pipeline.hpp"

#include <algorithm>

#include "psmt/errors.hpp"
#include "psmt/path_search.hpp"

namespace psmt {

const char* to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::none: return "none";
    case ReductionKind::random: return "random";
    case ReductionKind::sorted: return "sorted";
    case ReductionKind::chvatal: return "chvatal";
    case ReductionKind::ga: return "ga";
    case ReductionKind::sa: return "sa";
    case ReductionKind::nswitch: return "nswitch";
  }
  return "?";
}

std::optional<ReductionKind> reduction_from_string(const std::string& name) {
  if (name == "none") return ReductionKind::none;
  if (name == "random") return ReductionKind::random;
  if (name == "sorted") return ReductionKind::sorted;
  if (name == "chvatal") return ReductionKind::chvatal;
  if (name == "ga") return ReductionKind::ga;
  if (name == "sa") return ReductionKind::sa;
  if (name == "nswitch") return ReductionKind::nswitch;
  return std::nullopt;
}

std::optional<CoverageCriterion> criterion_from_string(const std::string& name) {
  if (name == "basic") return CoverageCriterion::basic;
  if (name == "extended") return CoverageCriterion::extended;
  return std::nullopt;
}

PipelineResult generate_paths(const Graph& g, const RunConfig& config) {
  const ValidationReport graph_report = validate(g);
  if (!graph_report.ok()) {
    throw ValidationError("invalid model:\n" + graph_report.to_string());
  }
  if (config.min_length < 1 || config.min_length > config.max_length) {
    throw ValidationError("length range must satisfy 1 <= min_length <= max_length");
  }
  if (config.selection.select_min > config.selection.select_max ||
      config.selection.select_min < g.scale.scale_min ||
      config.selection.select_max > g.scale.scale_max) {
    throw ValidationError("priority selection must be a subinterval of the model scale");
  }

  PipelineResult result;
  const std::vector<Requirement> requirements =
      generate_requirements(g, config.coverage, config.selection);

  // One search per requirement decides feasibility and yields the initial
  // path for the feasible ones.
  std::vector<TestPath> initial;
  for (const Requirement& r : requirements) {
    auto path = find_path_in_range(r, g, config.min_length, config.max_length);
    if (!path) {
      result.infeasible.push_back(r);
      continue;
    }
    result.feasible.push_back(r);
    if (std::find(initial.begin(), initial.end(), *path) == initial.end()) {
      initial.push_back(std::move(*path));
    }
  }

  if (!requirements.empty() && result.feasible.empty()) {
    std::vector<std::string> names;
    for (const Requirement& r : result.infeasible) names.push_back(r.describe(g));
    throw NoPathsPossibleError(
        "no test paths are possible: every requirement is infeasible for length range [" +
            std::to_string(config.min_length) + ", " + std::to_string(config.max_length) +
            "]; widen the range or add test start/end vertices",
        std::move(names));
  }

  std::vector<TestPath> paths;
  if (config.reduction == ReductionKind::nswitch) {
    paths = nswitch_reduce(g, config.min_length, config.max_length, config.coverage,
                           config.selection, config.enum_cap);
  } else {
    const CoverageMatrix matrix = CoverageMatrix::build(g, initial, result.feasible);
    std::vector<std::size_t> selected;
    switch (config.reduction) {
      case ReductionKind::none: selected = reduce_none(matrix); break;
      case ReductionKind::random: selected = reduce_random(matrix, config.seed); break;
      case ReductionKind::sorted: selected = reduce_sorted(matrix); break;
      case ReductionKind::chvatal: selected = reduce_chvatal(matrix); break;
      case ReductionKind::ga: selected = reduce_ga(matrix, config.ga, config.seed); break;
      case ReductionKind::sa: selected = reduce_sa(matrix, config.sa, config.seed); break;
      case ReductionKind::nswitch: break;  // handled above
    }
    paths = materialize(matrix, selected);
  }

  result.paths = enforce_no_subpath_rule(g, paths);
  result.report = check_coverage(result.paths, result.feasible, g, config.min_length,
                                 config.max_length);
  return result;
}

}  // namespace psmt
