#include "pdiff/export.hpp"

#include <sstream>

#include "pdiff/orientation.hpp"

namespace pdiff {

using nlohmann::json;

std::string trace_to_jsonl(const SequenceTrace& trace) {
  std::string out;
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    out += json{{"step", t}, {"stacks", to_json(trace.steps[t])}}.dump();
    out += '\n';
  }
  return out;
}

json to_json(const Configuration& config) {
  return json(std::vector<Stack>(config.stacks().begin(), config.stacks().end()));
}

json to_json(const PeriodReport& report) {
  json orbit = json::array();
  for (const auto& c : report.orbit) orbit.push_back(to_json(c));
  return json{{"preperiod", report.preperiod}, {"period", report.period}, {"orbit", orbit}};
}

namespace {

template <typename T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const CountLedger& ledger) {
  json per = json::array();
  for (const auto& tally : ledger.per_orientation) {
    per.push_back({{"orientation", tally.orientation},
                   {"multipliers", tally.multipliers.values},
                   {"configurations", tally.configurations}});
  }
  return json{{"n", ledger.n},
              {"per_orientation", per},
              {"totals",
               {{"R_n", optional_value(ledger.orientations_recurrence)},
                {"R_n_enumerated", optional_value(ledger.orientations_enumerated)},
                {"A_n", optional_value(ledger.alternating)},
                {"T_n_recurrence", optional_value(ledger.t_recurrence)},
                {"T_n_summation", optional_value(ledger.t_summation)},
                {"T_n_direct", optional_value(ledger.t_direct)}}}};
}

json to_json(const OracleResult& result, bool include_configurations) {
  json out{{"n", result.n}, {"diff_bound", result.diff_bound}, {"count", result.count()}};
  if (include_configurations) {
    json list = json::array();
    for (const auto& c : result.configurations) list.push_back(to_json(c));
    out["configurations"] = list;
  }
  return out;
}

json to_json(const AsymptoticModel& model) {
  json roots = json::array();
  for (const auto& r : model.roots) roots.push_back({{"re", r.real()}, {"im", r.imag()}});
  return json{{"roots", roots},
              {"dominant_root", model.dominant_root},
              {"second_real_root", model.second_real_root},
              {"dominant_coefficient", model.dominant_coefficient},
              {"fit_range", {model.fit_from, model.fit_to}},
              {"max_residual", model.max_residual}};
}

std::string sequence_csv(std::size_t n_max) {
  std::ostringstream out;
  out << "n,R_n,A_n,T_n\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    out << n << ',' << count_p2_orientations_recurrence(n) << ',' << alternating_count(n) << ','
        << count_T_recurrence(n) << '\n';
  }
  return out.str();
}

json to_json(const RunManifest& manifest) {
  return json{{"command", manifest.command},
              {"parameters", manifest.parameters},
              {"artifact_version", manifest.artifact_version},
              {"wall_time_seconds", manifest.wall_time.count()},
              {"output_path", manifest.output_path}};
}

}  // namespace pdiff
