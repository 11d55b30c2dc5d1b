#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pte/analysis.hpp"
#include "pte/game.hpp"
#include "pte/text_format.hpp"

namespace pte {

using json = nlohmann::ordered_json;

inline json profile_to_json(const StrategyProfile& profile) { return json(profile.choices); }

inline json profiles_to_json(const Game& game, const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (const std::size_t p : indices) out.push_back(profile_to_json(game.profile_at(p)));
  return out;
}

inline json payoffs_to_json(const PayoffVector& payoffs) {
  json out = json::array();
  for (const Rational& r : payoffs) out.push_back(r.str());
  return out;
}

inline json trace_to_json(const Game& game, const EliminationTrace& trace) {
  json rounds = json::array();
  for (const EliminationRound& round : trace.rounds) {
    json entry;
    entry["survivors_before"] = profiles_to_json(game, round.before.indices());
    entry["maximin"] = payoffs_to_json(round.maximin);
    entry["eliminated"] = profiles_to_json(game, round.eliminated);
    rounds.push_back(std::move(entry));
  }
  return rounds;
}

inline json pte_result_to_json(const Game& game, const PteResult& result, bool with_trace) {
  json out;
  switch (result.outcome) {
    case PteOutcome::unique: out["outcome"] = "unique"; break;
    case PteOutcome::no_equilibrium: out["outcome"] = "none"; break;
    case PteOutcome::ambiguous: out["outcome"] = "ambiguous"; break;
  }
  if (result.equilibrium) {
    out["profile"] = profile_to_json(*result.equilibrium);
    out["payoffs"] = payoffs_to_json(game.payoff_vector(game.profile_index(*result.equilibrium)));
  }
  if (result.outcome == PteOutcome::ambiguous) out["fixpoint"] = profiles_to_json(game, result.fixpoint);
  out["rounds"] = static_cast<int>(result.trace.rounds.size());
  if (with_trace) out["trace"] = trace_to_json(game, result.trace);
  return out;
}

inline json report_to_json(const Game& game, const GameReport& report, bool with_trace = false) {
  json out;
  out["type"] = "classification";
  out["players"] = game.player_count();
  out["strategies"] = game.strategy_counts();
  out["general_position"] = report.general_position;
  if (report.tie) {
    out["tie"] = {{"player", report.tie->player},
                  {"profiles", json::array({profile_to_json(game.profile_at(report.tie->profile_a)),
                                            profile_to_json(game.profile_at(report.tie->profile_b))})}};
  }
  out["symmetry_checked"] = report.symmetry_checked;
  if (report.symmetry_checked) out["symmetric"] = report.symmetric;
  out["nash"] = profiles_to_json(game, report.nash);
  out["individually_rational"] = profiles_to_json(game, report.individually_rational);
  out["translucent"] = profiles_to_json(game, report.translucent);
  out["pareto_optimal"] = profiles_to_json(game, report.pareto_optimal);
  json active = json::array();
  for (int i = 0; i < game.player_count(); ++i) active.push_back(report.minimax_active.active_strategies(i));
  out["minimax_rationalizable"] = std::move(active);
  out["pte"] = pte_result_to_json(game, report.pte, with_trace);
  if (report.hofstadter) {
    out["hofstadter"] = {{"profile", profile_to_json(*report.hofstadter)},
                         {"payoffs", payoffs_to_json(game.payoff_vector(game.profile_index(*report.hofstadter)))}};
  } else if (report.hofstadter_refusal) {
    out["hofstadter"] = {{"refusal", *report.hofstadter_refusal}};
  }
  out["social_dilemma"] = report.social_dilemma;
  out["violations"] = report.violations;
  return out;
}

inline json scan_config_to_json(const SampleConfig& config) {
  json out;
  out["type"] = "scan_config";
  out["shape"] = config.shape;
  out["count"] = config.count;
  out["seed"] = config.seed;
  out["symmetric"] = config.symmetric;
  return out;
}

inline json scan_stats_to_json(const ScanStats& stats) {
  json out;
  out["type"] = "scan_stats";
  out["games"] = stats.games;
  out["with_pte"] = stats.with_pte;
  out["pte_not_minimax_rationalizable"] = stats.pte_not_minimax_rationalizable;
  out["pte_is_nash"] = stats.pte_is_nash;
  out["pte_strictly_improves_some_nash"] = stats.pte_strictly_improves_some_nash;
  out["social_dilemmas"] = stats.social_dilemmas;
  out["violations"] = stats.violations;
  return out;
}

/// Line-delimited scan report: one config record, then one stats record.
inline std::string scan_report_text(const ScanResult& result) {
  return scan_config_to_json(result.config).dump() + "\n" + scan_stats_to_json(result.stats).dump() + "\n";
}

inline json finding_to_json(const SampleConfig& config, const ScanFinding& finding) {
  json out;
  out["type"] = "finding";
  out["kind"] = finding.kind;
  out["seed"] = finding.seed;
  out["index"] = finding.index;
  out["detail"] = finding.detail;
  out["game"] = serialize_game(sample_from_config(config, finding.index));
  return out;
}

/// One record per finding, ordered by game index; empty string when clean.
inline std::string findings_text(const ScanResult& result) {
  std::string out;
  for (const ScanFinding& finding : result.findings) out += finding_to_json(result.config, finding).dump() + "\n";
  return out;
}

}  // namespace pte
