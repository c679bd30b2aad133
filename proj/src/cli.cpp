#include "pdiff/cli.hpp"

#include <omp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pdiff/counting.hpp"
#include "pdiff/diffusion.hpp"
#include "pdiff/error.hpp"
#include "pdiff/export.hpp"
#include "pdiff/oracle.hpp"
#include "pdiff/orientation.hpp"
#include "pdiff/verify.hpp"

namespace pdiff {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileError, "cannot read '" + path + "'");
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::FileError, "cannot write '" + path + "'");
  out << body;
  if (!out.flush()) throw Error(ErrorCode::FileError, "write to '" + path + "' failed");
}

// `path:<n>` inline, anything else names an edge-list file.
SimpleGraph load_graph(const std::string& spec) {
  if (spec.starts_with("path:")) return parse_graph(spec);
  return parse_graph(read_file(spec));
}

std::string limit_summary(const Limits& limits) {
  return "enum_max_n=" + std::to_string(limits.enumeration_max_n) +
         " oracle_max_candidates=" + std::to_string(limits.oracle_max_candidates) +
         " bridge_max_vertices=" + std::to_string(limits.bridge_max_vertices) +
         " bridge_max_window=" + std::to_string(limits.bridge_max_window);
}

json limits_json(const Limits& limits) {
  return json{{"enumeration_max_n", limits.enumeration_max_n},
              {"oracle_max_candidates", limits.oracle_max_candidates},
              {"bridge_max_vertices", limits.bridge_max_vertices},
              {"bridge_max_window", limits.bridge_max_window}};
}

struct Outcome {
  std::string body;
  std::string summary;
  int exit_code = kExitOk;
};

struct Invocation {
  std::string command;
  std::string out_path;
  std::map<std::string, std::string> parameters;
};

// Option values captured by CLI11; one instance per run_cli call.
struct Options {
  int threads = 0;

  std::string graph;
  std::string config;
  std::size_t steps = 10;
  std::size_t max_steps = 0;

  std::size_t n = 0;
  std::string method = "recurrence";
  int diff_bound = 3;
  bool list = false;

  std::size_t n_min = 2;
  std::size_t n_max = 0;
  std::string format = "csv";

  std::vector<std::string> suites;
  std::vector<std::string> max_n;
  std::uint64_t seed = VerifyOptions{}.seed;

  std::string g0;
  std::size_t base_vertex = 1;
  std::size_t k_min = 0;
  std::size_t k_max = 8;

  std::map<std::string, std::string> out;  // per subcommand
};

Outcome cmd_simulate(const Options& o) {
  const auto graph = load_graph(o.graph);
  const auto trace = run_sequence(graph, parse_configuration(o.config), o.steps);
  return {trace_to_jsonl(trace),
          "simulate: " + std::to_string(trace.steps.size()) + " configurations, final (" +
              format_configuration(trace.steps.back()) + ")"};
}

Outcome cmd_period(const Options& o) {
  const auto graph = load_graph(o.graph);
  const auto config = parse_configuration(o.config);
  const std::size_t budget = o.max_steps ? o.max_steps : default_max_steps(config);
  const auto report = detect_period(graph, config, budget);
  return {to_json(report).dump(2) + "\n",
          "period: preperiod " + std::to_string(report.preperiod) + ", period " + std::to_string(report.period)};
}

Outcome cmd_count(const Options& o, const Limits& limits) {
  json doc{{"n", o.n}, {"method", o.method}};
  json provenance{{"method", o.method}, {"limits", limits_json(limits)}};
  std::int64_t count = 0;

  if (o.method == "recurrence") {
    CountLedger ledger;
    ledger.n = o.n;
    ledger.t_recurrence = count = count_T_recurrence(o.n);
    ledger.orientations_recurrence = count_p2_orientations_recurrence(o.n);
    ledger.alternating = alternating_count(o.n);
    doc["ledger"] = to_json(ledger);
  } else if (o.method == "summation") {
    CountLedger ledger;
    ledger.n = o.n;
    ledger.t_summation = count = count_T_summation(o.n, SummationLimit::Corrected, limits);
    ledger.alternating = alternating_count(o.n);
    doc["ledger"] = to_json(ledger);
    provenance["summation_upper_limit"] = "n-2";
    provenance["note"] = "an upper limit of n-3 drops the k = n-2 term and undercounts from n = 5";
  } else if (o.method == "direct") {
    const auto ledger = build_count_ledger(o.n, limits);
    count = *ledger.t_direct;
    auto ledger_json = to_json(ledger);
    if (!o.list) ledger_json.erase("per_orientation");
    doc["ledger"] = ledger_json;
  } else {
    const auto result = enumerate_p2_configurations(o.n, o.diff_bound, limits);
    count = static_cast<std::int64_t>(result.count());
    doc["oracle"] = to_json(result, o.list);
    provenance["diff_bound"] = o.diff_bound;
  }
  doc["count"] = count;
  doc["provenance"] = provenance;
  return {doc.dump(2) + "\n", "count: T_" + std::to_string(o.n) + " = " + std::to_string(count) + " (" + o.method + ")"};
}

Outcome cmd_sequence(const Options& o) {
  return {sequence_csv(o.n_max), "sequence: n = 1.." + std::to_string(o.n_max)};
}

Outcome cmd_oracle(const Options& o, const Limits& limits) {
  if (o.n_min < 2 || o.n_max < o.n_min) throw Error(ErrorCode::InvalidArgument, "need 2 <= n-min <= n-max");
  std::ostringstream csv;
  csv << "n,count,diff_bound,wall_time\n";
  json runs = json::array();
  std::size_t last = 0;
  for (std::size_t n = o.n_min; n <= o.n_max; ++n) {
    const auto start = Clock::now();
    const auto result = enumerate_p2_configurations(n, o.diff_bound, limits);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    csv << n << ',' << result.count() << ',' << o.diff_bound << ',' << seconds << '\n';
    runs.push_back(to_json(result, o.list));
    last = result.count();
  }
  std::string body = o.format == "json" ? json{{"runs", runs}}.dump(2) + "\n" : csv.str();
  return {std::move(body), "oracle: n = " + std::to_string(o.n_max) + " count " + std::to_string(last)};
}

std::set<std::string> split_suites(const std::vector<std::string>& raw) {
  std::set<std::string> out;
  for (const auto& item : raw) {
    std::stringstream in(item);
    std::string name;
    while (std::getline(in, name, ',')) {
      if (!name.empty()) out.insert(name);
    }
  }
  return out;
}

Outcome cmd_verify(const Options& o, const Limits& limits) {
  VerifyOptions options;
  options.suites = split_suites(o.suites);
  options.seed = o.seed;
  options.limits = limits;
  for (const auto& entry : o.max_n) {
    const auto eq = entry.find('=');
    std::size_t value = 0;
    try {
      if (eq == std::string::npos) throw std::invalid_argument("no '='");
      value = std::stoul(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "--max-n expects suite=N, got '" + entry + "'");
    }
    options.max_n[entry.substr(0, eq)] = value;
  }

  const auto results = run_verification(options);
  json report = json::array();
  std::size_t passed = 0;
  std::string first_failure;
  for (const auto& r : results) {
    report.push_back({{"suite", r.suite},
                      {"property", r.property},
                      {"passed", r.passed},
                      {"counterexample", r.passed ? json(nullptr) : json(r.counterexample)}});
    if (r.passed) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = r.suite + "/" + r.property + ": " + r.counterexample;
    }
  }
  Outcome outcome{json{{"seed", o.seed}, {"results", report}}.dump(2) + "\n",
                  "verify: " + std::to_string(passed) + "/" + std::to_string(results.size()) + " properties passed",
                  passed == results.size() ? kExitOk : kExitVerificationFailed};
  if (!first_failure.empty()) outcome.summary += "; first failure " + first_failure;
  return outcome;
}

Outcome cmd_conjecture(const Options& o, const Limits& limits) {
  if (o.k_max < o.k_min) throw Error(ErrorCode::InvalidArgument, "k-max below k-min");
  const auto g0 = parse_graph(read_file(o.g0));
  std::vector<std::int64_t> counts;
  std::ostringstream csv;
  csv << "k,vertices,count,window,residual,status\n";
  std::size_t nonzero = 0;
  for (std::size_t k = o.k_min; k <= o.k_max; ++k) {
    const auto result = enumerate_p2_on_bridge_graph(g0, o.base_vertex, k, o.diff_bound, limits);
    counts.push_back(result.count);
    csv << k << ',' << result.vertex_count << ',' << result.count << ',' << result.window << ',';
    if (counts.size() >= 5) {
      const auto residual = conjecture_recurrence_check(std::span(counts).last(5)).back();
      if (residual != 0) ++nonzero;
      csv << residual;
    }
    csv << ",exploratory\n";
  }
  return {csv.str(), "conjecture: " + std::to_string(counts.size()) + " counts, " + std::to_string(nonzero) +
                         " nonzero residuals (exploratory)"};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel Diffusion on paths: simulation, p2 counting and verification", "pdiff"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kArtifactVersion));

  Options o;
  app.add_option("--threads", o.threads, "Worker threads for enumeration (default: machine parallelism)")
      ->check(CLI::NonNegativeNumber);

  const auto add_out = [&](CLI::App* sub, const std::string& fallback) {
    std::string& target = o.out[sub->get_name()];
    target = fallback;
    sub->add_option("--out", target, "Output file; a manifest is written to <out>.manifest.json")
        ->capture_default_str();
  };

  auto* simulate = app.add_subcommand("simulate", "Write a firing trace as JSON lines");
  simulate->add_option("--graph", o.graph, "path:<n> or an edge-list file")->required();
  simulate->add_option("--config", o.config, "Stacks v_1..v_n, comma separated")->required();
  simulate->add_option("--steps", o.steps, "Firing steps")->capture_default_str()->check(CLI::PositiveNumber);

  auto* period = app.add_subcommand("period", "Report preperiod, period and orbit");
  period->add_option("--graph", o.graph, "path:<n> or an edge-list file")->required();
  period->add_option("--config", o.config, "Stacks v_1..v_n, comma separated")->required();
  period->add_option("--max-steps", o.max_steps, "Step budget (default 10*n*(max-min+1))");

  auto* count = app.add_subcommand("count", "Count p2-configurations on P_n");
  count->add_option("--n", o.n, "Path length")->required()->check(CLI::PositiveNumber);
  count->add_option("--method", o.method)
      ->check(CLI::IsMember({"recurrence", "summation", "direct", "oracle"}))
      ->capture_default_str();
  count->add_option("--diff-bound", o.diff_bound, "Oracle neighbour difference bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  count->add_flag("--list", o.list, "Include per-orientation tallies or the configuration list");

  auto* sequence = app.add_subcommand("sequence", "CSV of n, R_n, A_n, T_n");
  sequence->add_option("--n-max", o.n_max, "Last n")->required()->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force counts over a range of n");
  oracle->add_option("--n-min", o.n_min)->capture_default_str();
  oracle->add_option("--n-max", o.n_max)->required();
  oracle->add_option("--diff-bound", o.diff_bound)->capture_default_str()->check(CLI::PositiveNumber);
  oracle->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  oracle->add_flag("--list", o.list, "Include configurations (json format only)");

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suites", o.suites, "Comma-separated suite names (default: all)");
  verify->add_option("--max-n", o.max_n, "Per-suite size, suite=N (repeatable)");
  verify->add_option("--seed", o.seed)->capture_default_str();

  auto* conjecture = app.add_subcommand("conjecture", "Counts and recurrence residuals on G_0 plus a bridged path");
  conjecture->add_option("--g0", o.g0, "Edge-list file for G_0")->required();
  conjecture->add_option("--base-vertex", o.base_vertex)->capture_default_str()->check(CLI::PositiveNumber);
  conjecture->add_option("--k-min", o.k_min)->capture_default_str();
  conjecture->add_option("--k-max", o.k_max)->capture_default_str();
  conjecture->add_option("--diff-bound", o.diff_bound)->capture_default_str()->check(CLI::PositiveNumber);

  add_out(simulate, "trace.jsonl");
  add_out(period, "period.json");
  add_out(count, "count.json");
  add_out(sequence, "sequence.csv");
  add_out(oracle, "oracle.csv");
  add_out(verify, "verify.json");
  add_out(conjecture, "conjecture.csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kArtifactVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    if (const auto nl = message.find('\n'); nl != std::string::npos) message.resize(nl);
    err << "error: usage: " << message << '\n';
    return kExitDomainError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Invocation inv{chosen->get_name(), o.out.at(chosen->get_name()), {}};
  for (const CLI::Option* opt : chosen->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    std::string joined;
    for (const auto& v : opt->results()) joined += (joined.empty() ? "" : ",") + v;
    inv.parameters[opt->get_name()] = joined.empty() ? "true" : joined;
  }
  if (o.threads > 0) {
    omp_set_num_threads(o.threads);
    inv.parameters["--threads"] = std::to_string(o.threads);
  }

  try {
    const Limits limits = Limits::from_environment();
    inv.parameters["limits"] = limit_summary(limits);
    const auto start = Clock::now();

    Outcome outcome;
    if (inv.command == "simulate") outcome = cmd_simulate(o);
    else if (inv.command == "period") outcome = cmd_period(o);
    else if (inv.command == "count") outcome = cmd_count(o, limits);
    else if (inv.command == "sequence") outcome = cmd_sequence(o);
    else if (inv.command == "oracle") outcome = cmd_oracle(o, limits);
    else if (inv.command == "verify") outcome = cmd_verify(o, limits);
    else outcome = cmd_conjecture(o, limits);

    write_file(inv.out_path, outcome.body);
    RunManifest manifest{inv.command, inv.parameters, kArtifactVersion, Clock::now() - start, inv.out_path};
    write_file(inv.out_path + ".manifest.json", to_json(manifest).dump(2) + "\n");
    out << outcome.summary << '\n';
    return outcome.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_resource_error(e.code()) ? kExitResourceCeiling : kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace pdiff
