#include <doctest.h>

#include <sstream>

#include "pdiff/export.hpp"

using namespace pdiff;
using nlohmann::json;

TEST_CASE("trace as JSON lines") {
  const auto trace = run_sequence(SimpleGraph::path(2), Configuration{0, 1}, 2);
  std::istringstream lines(trace_to_jsonl(trace));
  std::string line;
  std::size_t step = 0;
  while (std::getline(lines, line)) {
    const auto row = json::parse(line);
    CHECK(row["step"] == step);
    CHECK(row["stacks"] == json(std::vector<Stack>(trace.steps[step].stacks().begin(), trace.steps[step].stacks().end())));
    ++step;
  }
  CHECK(step == 3);
}

TEST_CASE("period report JSON") {
  const auto report = detect_period(SimpleGraph::path(2), Configuration{0, 3}, 10);
  const auto doc = to_json(report);
  CHECK(doc["preperiod"] == 1);
  CHECK(doc["period"] == 2);
  CHECK(doc["orbit"] == json::parse("[[1,2],[2,1]]"));
}

TEST_CASE("ledger JSON") {
  const auto doc = to_json(build_count_ledger(4));
  CHECK(doc["n"] == 4);
  CHECK(doc["totals"]["T_n_direct"] == 26);
  CHECK(doc["totals"]["R_n"] == 4);
  CHECK(doc["per_orientation"].size() == 4);
  CHECK(doc["per_orientation"][0]["orientation"] == "RLR");

  CountLedger sparse;
  sparse.n = 40;
  sparse.t_recurrence = 1;
  CHECK(to_json(sparse)["totals"]["T_n_direct"].is_null());
}

TEST_CASE("sequence CSV") {
  const auto csv = sequence_csv(5);
  CHECK(csv == "n,R_n,A_n,T_n\n1,0,0,0\n2,2,2,2\n3,2,8,8\n4,4,24,26\n5,8,72,96\n");
}

TEST_CASE("oracle JSON") {
  const auto result = enumerate_p2_configurations(2);
  const auto brief = to_json(result, false);
  CHECK(brief["count"] == 2);
  CHECK_FALSE(brief.contains("configurations"));
  CHECK(to_json(result, true)["configurations"].size() == 2);
}

TEST_CASE("manifest JSON") {
  RunManifest m{"count", {{"--n", "4"}}, kArtifactVersion, std::chrono::duration<double>(0.5), "count.json"};
  const auto doc = to_json(m);
  CHECK(doc["command"] == "count");
  CHECK(doc["parameters"]["--n"] == "4");
  CHECK(doc["wall_time_seconds"] == 0.5);
  CHECK(doc["output_path"] == "count.json");
  CHECK(doc["artifact_version"] == kArtifactVersion);
}
