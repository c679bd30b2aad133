#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdiff/counting.hpp"
#include "pdiff/diffusion.hpp"
#include "pdiff/oracle.hpp"

namespace pdiff {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// One JSON object per line: {"step": t, "stacks": [...]}.
std::string trace_to_jsonl(const SequenceTrace& trace);

nlohmann::json to_json(const Configuration& config);
nlohmann::json to_json(const PeriodReport& report);
nlohmann::json to_json(const CountLedger& ledger);
nlohmann::json to_json(const OracleResult& result, bool include_configurations);
nlohmann::json to_json(const AsymptoticModel& model);

/// Rows `n,R_n,A_n,T_n` for n = 1..n_max, header included.
std::string sequence_csv(std::size_t n_max);

/// Written next to every CLI output as `<output>.manifest.json`.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string artifact_version = kArtifactVersion;
  std::chrono::duration<double> wall_time{};
  std::string output_path;
};

nlohmann::json to_json(const RunManifest& manifest);

}  // namespace pdiff
