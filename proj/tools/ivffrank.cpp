// ivffrank: ranks alternatives judged with interval-valued Fermatean fuzzy
// grades. Criterion weights come from a deviation-maximizing closed form per
// decision maker plus a disagreement-minimizing linear program for the group.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ivff/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct CommonArgs {
  std::string file;
  bool strict_labels = false;
  std::string format = "human";
  std::string dm_weights = "eq13";
  std::string collapse = "wa";
  std::string prefer = "wg";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_pipeline_flags = true) {
  cmd->add_option("file", args.file, "problem file (JSON)")->required();
  cmd->add_flag("--strict-labels", args.strict_labels,
                "reject repairable labels even when the file opts in");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  if (with_pipeline_flags) {
    cmd->add_option("--dm-weights", args.dm_weights,
                    "per-DM weight model: closed form or LP vertex")
        ->check(CLI::IsMember({"eq13", "lp"}))
        ->capture_default_str();
    cmd->add_option("--collapse", args.collapse, "operator across decision makers")
        ->check(CLI::IsMember({"wa", "wg"}))
        ->capture_default_str();
    cmd->add_option("--prefer", args.prefer, "operator across criteria")
        ->check(CLI::IsMember({"wa", "wg"}))
        ->capture_default_str();
  }
}

ivff::RunOptions run_options(const CommonArgs& args) {
  ivff::RunOptions options;
  options.dm_weight_mode = args.dm_weights == "eq13" ? ivff::DmWeightMode::ClosedForm
                                                     : ivff::DmWeightMode::Vertex;
  options.collapse_op = args.collapse == "wa" ? ivff::Aggregator::WeightedAveraging
                                              : ivff::Aggregator::WeightedGeometric;
  options.prefer_op = args.prefer == "wa" ? ivff::Aggregator::WeightedAveraging
                                          : ivff::Aggregator::WeightedGeometric;
  return options;
}

ivff::ReportFormat report_format(const CommonArgs& args) {
  return args.format == "machine" ? ivff::ReportFormat::Machine
                                  : ivff::ReportFormat::Human;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank alternatives under conflicting criteria with "
               "interval-valued Fermatean fuzzy judgments"};
  app.require_subcommand(1);

  CommonArgs validate_args;
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "parse and validate a problem file");
  add_common(cmd_validate, validate_args, false);

  CommonArgs weights_args;
  CLI::App* cmd_weights =
      app.add_subcommand("weights", "derive per-DM and group criterion weights");
  add_common(cmd_weights, weights_args);

  CommonArgs rank_args;
  CLI::App* cmd_rank =
      app.add_subcommand("rank", "full deviation-based ranking pipeline");
  add_common(cmd_rank, rank_args);

  CommonArgs copras_args;
  std::string copras_score = "normalized";
  CLI::App* cmd_copras = app.add_subcommand(
      "copras", "proportional-assessment cross-check (needs benefit/cost kinds)");
  add_common(cmd_copras, copras_args);
  cmd_copras->add_option("--score", copras_score, "relative-degree score basis")
      ->check(CLI::IsMember({"raw", "normalized"}))
      ->capture_default_str();

  CommonArgs robust_args;
  std::string robust_ranker = "md";
  std::string robust_removal = "cumulative";
  std::string robust_score = "normalized";
  double pct = 0.10;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  CLI::App* cmd_robust = app.add_subcommand(
      "robustness", "leave-one-out and weight-perturbation analysis");
  add_common(cmd_robust, robust_args);
  cmd_robust->add_option("--ranker", robust_ranker, "ranker to stress")
      ->check(CLI::IsMember({"md", "copras"}))
      ->capture_default_str();
  cmd_robust->add_option("--removal", robust_removal, "leave-one-out removal mode")
      ->check(CLI::IsMember({"cumulative", "single"}))
      ->capture_default_str();
  cmd_robust->add_option("--score", robust_score, "score basis for the copras ranker")
      ->check(CLI::IsMember({"raw", "normalized"}))
      ->capture_default_str();
  cmd_robust->add_option("--pct", pct, "weight perturbation fraction in (0, 1)")
      ->capture_default_str();
  cmd_robust->add_option("--trials", trials, "perturbation trials")
      ->capture_default_str();
  cmd_robust->add_option("--seed", seed, "perturbation seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_validate->parsed()) {
      const ivff::DecisionProblem problem =
          ivff::parse_problem_file(validate_args.file, validate_args.strict_labels);
      print_warnings(problem.warnings);
      return kExitOk;
    }

    if (cmd_weights->parsed() || cmd_rank->parsed()) {
      const CommonArgs& args = cmd_weights->parsed() ? weights_args : rank_args;
      const ivff::DecisionProblem problem =
          ivff::parse_problem_file(args.file, args.strict_labels);
      const ivff::RankingReport report = ivff::run(problem, run_options(args));
      std::cout << (cmd_weights->parsed()
                        ? ivff::render_weights(report, report_format(args))
                        : ivff::render_ranking(report, report_format(args)));
      return kExitOk;
    }

    if (cmd_copras->parsed()) {
      const ivff::DecisionProblem problem =
          ivff::parse_problem_file(copras_args.file, copras_args.strict_labels);
      const ivff::RankingReport md = ivff::run(problem, run_options(copras_args));
      const ivff::CoprasReport report = ivff::copras_rank(
          problem, md.group_weight_vector,
          copras_score == "raw" ? ivff::CoprasScoreMode::Raw
                                : ivff::CoprasScoreMode::Normalized);
      print_warnings(problem.warnings);
      std::cout << ivff::render_copras(report, report_format(copras_args));
      return kExitOk;
    }

    if (cmd_robust->parsed()) {
      const ivff::DecisionProblem problem =
          ivff::parse_problem_file(robust_args.file, robust_args.strict_labels);
      ivff::RobustnessOptions options;
      options.ranker = robust_ranker == "md" ? ivff::Ranker::DeviationPipeline
                                             : ivff::Ranker::Copras;
      options.removal = robust_removal == "cumulative" ? ivff::RemovalMode::Cumulative
                                                       : ivff::RemovalMode::Single;
      options.pipeline = run_options(robust_args);
      options.copras_score = robust_score == "raw" ? ivff::CoprasScoreMode::Raw
                                                   : ivff::CoprasScoreMode::Normalized;
      ivff::RobustnessReport report;
      report.problem_name = problem.name;
      report.ranker = options.ranker;
      report.leave_one_out = ivff::leave_one_out(problem, options);
      report.perturbation =
          ivff::perturb_weights(problem, pct, trials, seed, options);
      print_warnings(problem.warnings);
      std::cout << ivff::render_robustness(report, report_format(robust_args));
      return kExitOk;
    }
  } catch (const ivff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_internal() ? kExitInternal : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
