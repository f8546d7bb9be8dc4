#pragma once

#include <string>

#include "ivff/robustness.hpp"

namespace ivff {

/// Parses a problem document (JSON text). Sections: name, scale (builtin
/// name or inline label table), alternatives, criteria, dms, matrices.
/// Matrices are laid out criteria-as-rows; cells are scale labels or
/// [mem_lo, mem_hi, non_lo, non_hi] 4-tuples. Full format reference:
/// docs/formats.md.
///
/// Labels parse strictly unless the document opts in to repair with
/// "label_repair": true; `force_strict` overrides the opt-in.
DecisionProblem parse_problem_text(const std::string& text,
                                   bool force_strict = false);

DecisionProblem parse_problem_file(const std::string& path,
                                   bool force_strict = false);

enum class ReportFormat { Human, Machine };

/// Combined robustness result (the CLI runs both analyses).
struct RobustnessReport {
  std::string problem_name;
  Ranker ranker = Ranker::DeviationPipeline;
  LeaveOneOutReport leave_one_out;
  PerturbationReport perturbation;
};

/// Machine renderings: deterministic JSON, every number with six decimal
/// places, trailing newline. Human renderings: aligned plain-text tables.
std::string render_ranking(const RankingReport& report, ReportFormat format);
std::string render_weights(const RankingReport& report, ReportFormat format);
std::string render_copras(const CoprasReport& report, ReportFormat format);
std::string render_robustness(const RobustnessReport& report, ReportFormat format);

/// Rounding applied to every serialized number.
double round6(double v);

}  // namespace ivff
