#include "ivff/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ivff {

const char* to_string(Ranker ranker) {
  return ranker == Ranker::DeviationPipeline ? "md" : "copras";
}

const char* to_string(RemovalMode mode) {
  return mode == RemovalMode::Cumulative ? "cumulative" : "single";
}

namespace {

// Ranks a (sub)problem with the configured ranker; weights are re-derived
// from the given judgments every time.
std::vector<RankEntry> rank_problem(const DecisionProblem& problem,
                                    const RobustnessOptions& options) {
  RunOptions pipeline = options.pipeline;
  pipeline.on_degenerate = DegenerateWeights::Uniform;
  if (options.ranker == Ranker::DeviationPipeline) {
    return run(problem, pipeline).ranking;
  }
  const RankingReport md = run(problem, pipeline);
  const CoprasReport cr =
      copras_rank(problem, md.group_weight_vector, options.copras_score);
  return cr.ranking;
}

// Positions of each alternative index within a ranking.
std::vector<std::size_t> positions(const std::vector<RankEntry>& ranking,
                                   std::size_t universe) {
  std::vector<std::size_t> pos(universe, 0);
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    pos[ranking[p].alternative] = p;
  }
  return pos;
}

// A lone survivor cannot form a decision matrix; it trivially ranks first.
// Copras pins the best utility at 100; the deviation ranker reports the
// survivor's uniform-weight aggregate score.
RankEntry rank_lone_survivor(const DecisionProblem& problem, std::size_t survivor,
                             const RobustnessOptions& options) {
  RankEntry entry;
  entry.alternative = survivor;
  entry.name = problem.alternatives[survivor];
  if (options.ranker == Ranker::Copras) {
    entry.normalized_score = 100.0;
    return entry;
  }
  const std::vector<double> influence = problem.influence_weights();
  const std::size_t n = problem.criterion_count();
  std::vector<Ivffn> row(n);
  std::vector<Ivffn> judged(problem.dm_count());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < problem.dm_count(); ++k) {
      judged[k] = problem.matrices[k].at(survivor, j);
    }
    row[j] = aggregate(options.pipeline.collapse_op, judged, influence);
  }
  const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
  entry.normalized_score =
      score_triple(aggregate(options.pipeline.prefer_op, row, uniform)).normalized;
  return entry;
}

}  // namespace

LeaveOneOutReport leave_one_out(const DecisionProblem& problem,
                                const RobustnessOptions& options) {
  problem.validate();
  const std::size_t m = problem.alternative_count();
  if (m < 3) {
    throw Error(ErrorKind::TooFewAlternatives,
                "leave-one-out needs at least 3 alternatives, got " +
                    std::to_string(m));
  }

  LeaveOneOutReport report;
  report.base_ranking = rank_problem(problem, options);
  const std::vector<std::size_t> base_pos = positions(report.base_ranking, m);

  for (std::size_t k = 1; k < m; ++k) {
    Scenario sc;
    std::vector<std::size_t> keep;
    if (options.removal == RemovalMode::Cumulative) {
      for (std::size_t i = 0; i < k; ++i) sc.removed.push_back(i);
      for (std::size_t i = k; i < m; ++i) keep.push_back(i);
      sc.description = "without " + problem.alternatives[0] + ".." +
                       problem.alternatives[k - 1];
    } else {
      sc.removed.push_back(k - 1);
      for (std::size_t i = 0; i < m; ++i) {
        if (i != k - 1) keep.push_back(i);
      }
      sc.description = "without " + problem.alternatives[k - 1];
    }

    if (keep.size() == 1) {
      sc.ranking.push_back(rank_lone_survivor(problem, keep[0], options));
    } else {
      const DecisionProblem sub = problem.select_alternatives(keep);
      const std::vector<RankEntry> sub_ranking = rank_problem(sub, options);
      // Map subproblem indices back to the original alternative indices.
      for (const RankEntry& e : sub_ranking) {
        sc.ranking.push_back(
            RankEntry{keep[e.alternative], e.name, e.normalized_score});
      }
    }

    // A reversal is any survivor pair whose relative order differs from the
    // base ranking restricted to the survivors.
    const std::vector<std::size_t> sc_pos = positions(sc.ranking, m);
    for (std::size_t a : keep) {
      for (std::size_t b : keep) {
        if (a < b) {
          const bool base_before = base_pos[a] < base_pos[b];
          const bool sc_before = sc_pos[a] < sc_pos[b];
          if (base_before != sc_before) report.rank_reversal_found = true;
        }
      }
    }
    report.scenarios.push_back(std::move(sc));
  }
  return report;
}

namespace {

// Deterministic uniform double in [0, 1); independent of the standard
// library's distribution implementation.
double next_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

PerturbationReport perturb_weights(const DecisionProblem& problem, double pct,
                                   std::size_t trials, std::uint64_t seed,
                                   const RobustnessOptions& options) {
  if (!(pct > 0.0 && pct < 1.0)) {
    throw Error(ErrorKind::BadPercentage,
                "perturbation percentage must lie in (0, 1), got " +
                    std::to_string(pct));
  }
  problem.validate();

  RunOptions pipeline = options.pipeline;
  pipeline.on_degenerate = DegenerateWeights::Uniform;
  const RankingReport base = run(problem, pipeline);
  const std::vector<double> influence = problem.influence_weights();
  const DecisionMatrix collective =
      collapse_dms(problem.matrices, influence, pipeline.collapse_op);

  const auto rank_with = [&](const WeightVector& w) -> std::vector<RankEntry> {
    if (options.ranker == Ranker::Copras) {
      return copras_rank(problem, w, options.copras_score).ranking;
    }
    const auto prefs = preference_values(collective, w, pipeline.prefer_op);
    std::vector<RankEntry> ranking;
    for (std::size_t i : rank_by_preference(prefs)) {
      ranking.push_back(
          RankEntry{i, problem.alternatives[i], prefs[i].scores.normalized});
    }
    return ranking;
  };

  PerturbationReport report;
  report.pct = pct;
  report.trials = trials;
  report.seed = seed;
  report.base_ranking = options.ranker == Ranker::Copras
                            ? rank_with(base.group_weight_vector)
                            : base.ranking;

  std::mt19937_64 gen(seed);
  const std::size_t n = base.group_weight_vector.size();
  std::size_t top_kept = 0;
  std::size_t order_kept = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double factor = 1.0 - pct + 2.0 * pct * next_unit(gen);
      w[j] = base.group_weight_vector[j] * factor;
      sum += w[j];
    }
    for (double& v : w) v /= sum;
    const std::vector<RankEntry> ranking = rank_with(WeightVector::make(std::move(w)));

    if (ranking.front().alternative == report.base_ranking.front().alternative) {
      ++top_kept;
    }
    bool same = true;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      if (ranking[i].alternative != report.base_ranking[i].alternative) {
        same = false;
        break;
      }
    }
    if (same) ++order_kept;
  }
  if (trials > 0) {
    report.top_choice_preserved =
        static_cast<double>(top_kept) / static_cast<double>(trials);
    report.full_order_preserved =
        static_cast<double>(order_kept) / static_cast<double>(trials);
  }
  return report;
}

}  // namespace ivff
