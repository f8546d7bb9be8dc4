#include "ivff/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ivff/scale.hpp"

namespace ivff {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void syntax_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SyntaxError, where + ": " + what);
}

Ivffn cell_from_json(const Json& cell, const LinguisticScale& scale,
                     bool strict_labels, const std::string& where,
                     std::vector<std::string>& warnings) {
  if (cell.is_string()) {
    const std::string label = cell.get<std::string>();
    try {
      if (strict_labels) return scale.lookup(label);
      std::optional<LabelRepair> repair;
      const Ivffn& value = scale.lookup_repairing(label, repair);
      if (repair) {
        warnings.push_back(where + ": label '" + repair->original +
                           "' repaired to '" + repair->resolved + "'");
      }
      return value;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownLabel) throw;
      throw Error(ErrorKind::UnknownLabel,
                  where + ": label '" + label + "' not in scale");
    }
  }
  if (cell.is_array() && cell.size() == 4) {
    double g[4];
    for (std::size_t i = 0; i < 4; ++i) {
      if (!cell[i].is_number()) {
        syntax_error(where, "grade tuples must hold four numbers");
      }
      g[i] = cell[i].get<double>();
    }
    try {
      return Ivffn::make(g[0], g[1], g[2], g[3]);
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.message());
    }
  }
  syntax_error(where, "cell must be a scale label or a 4-number tuple");
}

LinguisticScale scale_from_json(const Json& node, bool strict_labels,
                                std::vector<std::string>& warnings) {
  if (node.is_string()) {
    const std::string name = node.get<std::string>();
    if (normalize_label(name) == normalize_label(kBuiltinScaleName)) {
      return builtin_scale();
    }
    syntax_error("scale", "unknown built-in scale '" + name + "'");
  }
  if (node.is_object()) {
    std::vector<std::pair<std::string, Ivffn>> entries;
    for (const auto& [label, grades] : node.items()) {
      entries.emplace_back(label, cell_from_json(grades, builtin_scale(),
                                                 strict_labels,
                                                 "scale." + label, warnings));
    }
    if (entries.empty()) syntax_error("scale", "inline scale is empty");
    return LinguisticScale::from_entries(std::move(entries));
  }
  syntax_error("scale", "expected a built-in scale name or an inline label table");
}

}  // namespace

DecisionProblem parse_problem_text(const std::string& text, bool force_strict) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
  if (!doc.is_object()) syntax_error("document", "expected a JSON object");

  DecisionProblem problem;
  problem.name = doc.value("name", std::string("unnamed"));

  // A document may opt in to label repair for its own sloppy cells;
  // force_strict overrides the opt-in.
  const bool effective_strict = force_strict || !doc.value("label_repair", false);

  if (!doc.contains("alternatives") || !doc["alternatives"].is_array()) {
    syntax_error("alternatives", "expected an array of names");
  }
  for (const auto& a : doc["alternatives"]) {
    if (!a.is_string()) syntax_error("alternatives", "names must be strings");
    problem.alternatives.push_back(a.get<std::string>());
  }

  if (!doc.contains("criteria") || !doc["criteria"].is_array()) {
    syntax_error("criteria", "expected an array");
  }
  for (const auto& c : doc["criteria"]) {
    Criterion criterion;
    if (c.is_string()) {
      criterion.name = c.get<std::string>();
    } else if (c.is_object() && c.contains("name")) {
      criterion.name = c["name"].get<std::string>();
      if (c.contains("kind")) {
        const std::string kind = c["kind"].get<std::string>();
        if (kind == "benefit") {
          criterion.kind = CriterionKind::Benefit;
        } else if (kind == "cost") {
          criterion.kind = CriterionKind::Cost;
        } else {
          syntax_error("criteria." + criterion.name,
                       "kind must be 'benefit' or 'cost', got '" + kind + "'");
        }
      }
    } else {
      syntax_error("criteria", "entries must be names or {name, kind} objects");
    }
    problem.criteria.push_back(std::move(criterion));
  }

  if (!doc.contains("dms") || !doc["dms"].is_array() || doc["dms"].empty()) {
    syntax_error("dms", "expected a non-empty array of {name, lambda}");
  }
  double lambda_sum = 0.0;
  for (const auto& d : doc["dms"]) {
    if (!d.is_object() || !d.contains("name") || !d.contains("lambda")) {
      syntax_error("dms", "entries must be {name, lambda} objects");
    }
    DecisionMaker dm;
    dm.name = d["name"].get<std::string>();
    dm.influence = d["lambda"].get<double>();
    if (!(dm.influence >= 0.0 && dm.influence <= 1.0)) {
      throw Error(ErrorKind::BadLambda,
                  "dms." + dm.name + ": lambda must lie in [0, 1]");
    }
    lambda_sum += dm.influence;
    problem.dms.push_back(std::move(dm));
  }
  if (std::abs(lambda_sum - 1.0) > 1e-6) {
    throw Error(ErrorKind::BadLambda, "influence weights sum to " +
                                          std::to_string(lambda_sum) +
                                          ", expected 1 within 1e-6");
  }
  // Normalize exactly so downstream unit-sum invariants hold to 1e-9.
  for (auto& dm : problem.dms) dm.influence /= lambda_sum;

  const LinguisticScale scale =
      doc.contains("scale")
          ? scale_from_json(doc["scale"], effective_strict, problem.warnings)
          : builtin_scale();

  if (!doc.contains("matrices") || !doc["matrices"].is_object()) {
    syntax_error("matrices", "expected an object keyed by decision maker");
  }
  const std::size_t m = problem.alternatives.size();
  const std::size_t n = problem.criteria.size();
  for (const auto& dm : problem.dms) {
    const std::string where = "matrices." + dm.name;
    if (!doc["matrices"].contains(dm.name)) {
      throw Error(ErrorKind::ShapeMismatch, where + ": matrix missing");
    }
    const Json& rows = doc["matrices"][dm.name];
    if (!rows.is_array() || rows.size() != n) {
      throw Error(ErrorKind::ShapeMismatch,
                  where + ": expected " + std::to_string(n) +
                      " criterion rows, got " + std::to_string(rows.size()));
    }
    // File rows are criteria; store alternatives-major.
    std::vector<Ivffn> cells(m * n);
    for (std::size_t j = 0; j < n; ++j) {
      const Json& row = rows[j];
      if (!row.is_array() || row.size() != m) {
        throw Error(ErrorKind::ShapeMismatch,
                    where + " row " + problem.criteria[j].name + ": expected " +
                        std::to_string(m) + " cells, got " +
                        std::to_string(row.size()));
      }
      for (std::size_t i = 0; i < m; ++i) {
        const std::string cell_where = where + " row " + problem.criteria[j].name +
                                       " column " + problem.alternatives[i];
        const Ivffn value = cell_from_json(row[i], scale, effective_strict,
                                           cell_where, problem.warnings);
        if (value.degenerate()) {
          problem.warnings.push_back(cell_where +
                                     ": degenerate value (both upper grades zero)");
        }
        cells[i * n + j] = value;
      }
    }
    problem.matrices.push_back(
        DecisionMatrix::make(dm.name, m, n, std::move(cells)));
  }

  problem.validate();
  return problem;
}

DecisionProblem parse_problem_file(const std::string& path, bool force_strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str(), force_strict);
}

double round6(double v) {
  double r = std::round(v * 1e6) / 1e6;
  if (r == 0.0) r = 0.0;  // never emit -0
  return r;
}

namespace {

Json json_number(double v) { return Json(round6(v)); }

Json json_ivffn(const Ivffn& f) {
  return Json::array({json_number(f.mem_lo()), json_number(f.mem_hi()),
                      json_number(f.non_lo()), json_number(f.non_hi())});
}

Json json_weightvec(const WeightVector& w) {
  Json arr = Json::array();
  for (double v : w) arr.push_back(json_number(v));
  return arr;
}

Json json_options(const RunOptions& options) {
  Json j;
  j["dm_weights"] = to_string(options.dm_weight_mode);
  j["collapse"] = to_string(options.collapse_op);
  j["prefer"] = to_string(options.prefer_op);
  return j;
}

Json json_ranking(const std::vector<RankEntry>& ranking, const char* score_key) {
  Json arr = Json::array();
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    Json e;
    e["position"] = p + 1;
    e["alternative"] = ranking[p].name;
    e[score_key] = json_number(ranking[p].normalized_score);
    arr.push_back(std::move(e));
  }
  return arr;
}

Json json_warnings(const std::vector<std::string>& warnings) {
  Json arr = Json::array();
  for (const auto& w : warnings) arr.push_back(w);
  return arr;
}

Json ranking_report_json(const RankingReport& r, const char* kind) {
  Json j;
  j["kind"] = kind;
  j["problem"] = r.problem_name;
  j["options"] = json_options(r.options);
  Json dms = Json::array();
  for (std::size_t k = 0; k < r.dm_weights.size(); ++k) {
    Json d;
    d["index"] = k + 1;
    d["weights"] = json_weightvec(r.dm_weights[k]);
    dms.push_back(std::move(d));
  }
  j["dm_weights"] = std::move(dms);
  j["group_weights"] = json_weightvec(r.group_weight_vector);
  j["group_objective"] = json_number(r.group_objective);
  if (r.degenerate_weights_fallback) j["degenerate_weights_fallback"] = true;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt(double v, int width = 9) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%*.6f", width, round6(v));
  return buf;
}

std::string fmt_ivffn(const Ivffn& f) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "([%.6f, %.6f], [%.6f, %.6f])",
                round6(f.mem_lo()), round6(f.mem_hi()), round6(f.non_lo()),
                round6(f.non_hi()));
  return buf;
}

void human_header(std::ostringstream& out, const std::string& title,
                  const std::string& problem) {
  out << title << " — " << problem << "\n";
  out << std::string(title.size() + problem.size() + 3, '=') << "\n";
}

void human_warnings(std::ostringstream& out, const std::vector<std::string>& warnings) {
  if (warnings.empty()) return;
  out << "\nwarnings:\n";
  for (const auto& w : warnings) out << "  - " << w << "\n";
}

void human_weights_block(std::ostringstream& out, const RankingReport& r) {
  out << "\nper-DM criterion weights (" << to_string(r.options.dm_weight_mode)
      << "):\n";
  for (std::size_t k = 0; k < r.dm_weights.size(); ++k) {
    out << "  DM" << k + 1 << ":";
    for (double w : r.dm_weights[k]) out << " " << fmt(w, 0);
    out << "\n";
  }
  out << "group weights (LP, objective " << fmt(r.group_objective, 0) << "):\n  ";
  for (double w : r.group_weight_vector) out << " " << fmt(w, 0);
  out << "\n";
  if (r.degenerate_weights_fallback) {
    out << "  (constant-column fallback: uniform weights)\n";
  }
}

}  // namespace

std::string render_weights(const RankingReport& r, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    Json j = ranking_report_json(r, "weights");
    j["warnings"] = json_warnings(r.warnings);
    return dump(j);
  }
  std::ostringstream out;
  human_header(out, "criterion weights", r.problem_name);
  human_weights_block(out, r);
  human_warnings(out, r.warnings);
  return out.str();
}

std::string render_ranking(const RankingReport& r, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    Json j = ranking_report_json(r, "ranking");
    Json prefs = Json::array();
    for (std::size_t i = 0; i < r.preferences.size(); ++i) {
      Json p;
      p["alternative"] = r.alternatives[i];
      p["value"] = json_ivffn(r.preferences[i].value);
      p["score"] = json_number(r.preferences[i].scores.score);
      p["accuracy"] = json_number(r.preferences[i].scores.accuracy);
      p["normalized_score"] = json_number(r.preferences[i].scores.normalized);
      prefs.push_back(std::move(p));
    }
    j["preferences"] = std::move(prefs);
    j["ranking"] = json_ranking(r.ranking, "normalized_score");
    j["warnings"] = json_warnings(r.warnings);
    return dump(j);
  }

  std::ostringstream out;
  human_header(out, "ranking", r.problem_name);
  human_weights_block(out, r);
  out << "\npreference values (" << to_string(r.options.collapse_op)
      << " across DMs, " << to_string(r.options.prefer_op) << " across criteria):\n";
  for (std::size_t i = 0; i < r.preferences.size(); ++i) {
    out << "  " << r.alternatives[i] << "  " << fmt_ivffn(r.preferences[i].value)
        << "  score " << fmt(r.preferences[i].scores.normalized, 0) << "\n";
  }
  out << "\nranking:\n";
  for (std::size_t p = 0; p < r.ranking.size(); ++p) {
    out << "  " << p + 1 << ". " << r.ranking[p].name << "  ("
        << fmt(r.ranking[p].normalized_score, 0) << ")\n";
  }
  human_warnings(out, r.warnings);
  out << "\nelapsed: " << r.elapsed_us << " us\n";
  return out.str();
}

std::string render_copras(const CoprasReport& r, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    Json j;
    j["kind"] = "copras";
    j["problem"] = r.problem_name;
    j["score_mode"] = to_string(r.score_mode);
    Json part;
    part["benefit"] = r.benefit_criteria;
    part["cost"] = r.cost_criteria;
    j["partition"] = std::move(part);
    j["weights"] = json_weightvec(r.weights_used);
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      Json o;
      o["alternative"] = e.name;
      o["benefit_index"] = json_ivffn(e.benefit_index);
      o["cost_index"] = json_ivffn(e.cost_index);
      o["relative_degree"] = json_number(e.relative_degree);
      o["utility"] = json_number(e.utility);
      entries.push_back(std::move(o));
    }
    j["entries"] = std::move(entries);
    j["ranking"] = json_ranking(r.ranking, "utility");
    return dump(j);
  }

  std::ostringstream out;
  human_header(out, "proportional assessment", r.problem_name);
  out << "\nalternative  benefit-index score  cost-index score  relative  utility\n";
  for (const auto& e : r.entries) {
    out << "  " << e.name << "  a=" << fmt_ivffn(e.benefit_index)
        << "  b=" << fmt_ivffn(e.cost_index) << "  xi=" << fmt(e.relative_degree, 0)
        << "  U=" << fmt(e.utility, 0) << "\n";
  }
  out << "\nranking:\n";
  for (std::size_t p = 0; p < r.ranking.size(); ++p) {
    out << "  " << p + 1 << ". " << r.ranking[p].name << "  (U="
        << fmt(r.ranking[p].normalized_score, 0) << ")\n";
  }
  return out.str();
}

std::string render_robustness(const RobustnessReport& r, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    Json j;
    j["kind"] = "robustness";
    j["problem"] = r.problem_name;
    j["ranker"] = to_string(r.ranker);
    Json loo;
    loo["base_ranking"] = json_ranking(r.leave_one_out.base_ranking, "score");
    Json scenarios = Json::array();
    for (const auto& sc : r.leave_one_out.scenarios) {
      Json s;
      s["description"] = sc.description;
      s["removed"] = sc.removed;
      s["ranking"] = json_ranking(sc.ranking, "score");
      scenarios.push_back(std::move(s));
    }
    loo["scenarios"] = std::move(scenarios);
    loo["rank_reversal_found"] = r.leave_one_out.rank_reversal_found;
    j["leave_one_out"] = std::move(loo);
    Json pt;
    pt["pct"] = json_number(r.perturbation.pct);
    pt["trials"] = r.perturbation.trials;
    pt["seed"] = r.perturbation.seed;
    pt["top_choice_preserved"] = json_number(r.perturbation.top_choice_preserved);
    pt["full_order_preserved"] = json_number(r.perturbation.full_order_preserved);
    j["perturbation"] = std::move(pt);
    return dump(j);
  }

  std::ostringstream out;
  human_header(out, "robustness", r.problem_name);
  out << "ranker: " << to_string(r.ranker) << "\n";
  out << "\nbase ranking:";
  for (const auto& e : r.leave_one_out.base_ranking) out << " " << e.name;
  out << "\n\nleave-one-out scenarios:\n";
  for (const auto& sc : r.leave_one_out.scenarios) {
    out << "  " << sc.description << ":";
    for (const auto& e : sc.ranking) out << " " << e.name;
    out << "\n";
  }
  out << "rank reversal found: "
      << (r.leave_one_out.rank_reversal_found ? "yes" : "no") << "\n";
  out << "\nweight perturbation (pct " << r.perturbation.pct << ", "
      << r.perturbation.trials << " trials, seed " << r.perturbation.seed << "):\n";
  out << "  top choice preserved:  " << fmt(r.perturbation.top_choice_preserved, 0)
      << "\n";
  out << "  full order preserved:  " << fmt(r.perturbation.full_order_preserved, 0)
      << "\n";
  return out.str();
}

}  // namespace ivff
