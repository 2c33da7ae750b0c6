#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tic/tic.hpp"

// Command-line front end. Exit codes: 0 success, 1 negative answer under
// --strict, 2 usage or input error.
namespace tic::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input_error = 2;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error(errc::parse_error, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n' << std::flush; }

/// Runs `fn(algebra, base)` over either a concrete trace or a synthetic pattern.
template <class Fn>
auto with_input(const std::string& text, bool synthetic, Fn&& fn) {
  if (synthetic) {
    auto alg = parse_pattern(text).algebra();
    const auto base = alg.base();
    return fn(alg, std::span<const Interval>(base));
  }
  const auto trace = parse_trace(text);
  SnapshotAlgebra alg;
  return fn(alg, trace.snapshots());
}

struct Outcome {
  nlohmann::json result;
  OpCounts ops;
};

inline std::optional<std::uint64_t> env_seed() {
  if (const char* s = std::getenv("TIC_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "TIC_SEED is not an unsigned integer");
    }
  }
  return std::nullopt;
}

// Pushes every step of a trace or pattern into a consumer as it is read.
template <class MakeConsumer, class OnPush>
OpCounts stream_input(const std::string& path, bool synthetic, std::size_t limit, Streams io, std::string& digest,
                      MakeConsumer&& make, OnPush&& on_push) {
  std::ifstream file;
  std::istream* in = &io.in;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw error(errc::parse_error, "cannot open '" + path + "'");
    in = &file;
  }
  if (synthetic) {
    std::string text{std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>()};
    digest = digest_of(text);
    auto alg = parse_pattern(text).algebra();
    auto consumer = make(alg);
    for (const auto& cell : alg.base()) {
      if (limit && cell.index > limit) break;
      on_push(consumer.push(cell));
    }
    return alg.counter().read();
  }
  TraceReader reader(*in);
  SnapshotAlgebra alg;
  auto consumer = make(alg);
  while (!limit || reader.steps_read() < limit) {
    auto s = reader.next();
    if (!s) break;
    on_push(consumer.push(std::move(*s)));
  }
  if (!limit) reader.expect_end();
  digest = reader.digest();
  return alg.counter().read();
}

inline nlohmann::json verdict_json(const StabilityVerdict& v) {
  if (const auto* b = std::get_if<bool>(&v.value)) return *b;
  if (const auto* t = std::get_if<std::size_t>(&v.value)) return *t;
  return nullptr;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"T-interval connectivity of evolving-graph traces"};
  app.name("tic");
  app.require_subcommand(1);

  std::string algo = "optimal";
  std::string input = "-";
  std::size_t t = 0;
  std::size_t workers = 1;
  std::size_t limit = 0;
  bool synthetic = false;
  bool strict = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "trace file, or pattern file with --synthetic ('-' reads standard input)");
    sub->add_flag("--synthetic", synthetic, "input is a pattern file: delta, then disconnected cells 'i k'");
  };
  const std::vector<std::string> algos{"naive", "rowbased", "optimal"};

  auto* check = app.add_subcommand("check", "decide T-interval connectivity");
  check->add_option("--t", t, "window length T")->required()->check(CLI::PositiveNumber);
  check->add_option("--algo", algo, "naive | rowbased | optimal")->check(CLI::IsMember(algos));
  check->add_option("--workers", workers, "threads for rowbased row construction")->check(CLI::PositiveNumber);
  check->add_flag("--strict", strict, "exit 1 when the answer is false");
  add_input(check);

  auto* maxt = app.add_subcommand("maxt", "largest T for which the trace is T-interval connected");
  maxt->add_option("--algo", algo, "naive | rowbased | optimal")->check(CLI::IsMember(algos));
  maxt->add_option("--workers", workers, "threads for rowbased row construction")->check(CLI::PositiveNumber);
  maxt->add_flag("--strict", strict, "exit 1 when the answer is 0");
  add_input(maxt);

  auto* stream = app.add_subcommand("stream", "online T-checker: one verdict per window as steps arrive");
  stream->add_option("--t", t, "window length T")->required()->check(CLI::PositiveNumber);
  stream->add_option("--limit", limit, "stop after this many steps");
  add_input(stream);

  auto* stability = app.add_subcommand("stability", "per-step stability values (T-stability with --t)");
  stability->add_option("--t", t, "fixed window length T")->check(CLI::PositiveNumber);
  stability->add_option("--limit", limit, "stop after this many steps");
  add_input(stability);

  Vertex n = 8;
  std::size_t delta = 16;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  std::size_t planted = 0;
  bool directed = false;
  std::string output;
  auto* gen = app.add_subcommand("gen", "write a random or planted trace");
  gen->add_option("--n", n, "vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--delta", delta, "trace length")->check(CLI::PositiveNumber);
  gen->add_option("--p", p, "edge probability (noise probability with --planted)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "generator seed (default: TIC_SEED, else 1)");
  gen->add_option("--planted", planted, "plant spanning trees shared by every window of this length");
  gen->add_flag("--directed", directed, "directed snapshots");
  gen->add_option("-o,--output", output, "trace file (default: standard output, report on standard error)");

  BenchSuite suite;
  std::string format = "json";
  auto* bench_cmd = app.add_subcommand("bench", "operation counts of the algorithm families on random traces");
  bench_cmd->add_option("--deltas", suite.deltas, "trace lengths")->delimiter(',');
  bench_cmd->add_option("--families", suite.families, "naive, rowbased, optimal")->delimiter(',');
  bench_cmd->add_option("--n", suite.n, "vertex count");
  bench_cmd->add_option("--p", suite.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", seed, "generator seed (default: TIC_SEED, else 1)");
  bench_cmd->add_option("--naive-max-delta", suite.naive_max_delta, "skip the naive family above this length");
  bench_cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

  try {
    std::vector<const char*> argv{"tic"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    RunReport report;
    std::optional<std::size_t> window;
    report.algorithm = algo;
    Stopwatch clock;
    int code = exit_ok;

    if (check->parsed() || maxt->parsed()) {
      report.command = check->parsed() ? "check" : "maxt";
      const auto text = detail::slurp(input, io.in);
      report.input_digest = digest_of(text);
      auto outcome = detail::with_input(text, synthetic, [&](auto& alg, auto base) {
        nlohmann::json result;
        if (check->parsed()) {
          if (t > base.size()) throw error(errc::invalid_t, "T=" + std::to_string(t) + " exceeds delta=" + std::to_string(base.size()));
          bool answer;
          if (algo == "naive") {
            answer = oracle_t_interval_connected(base, t, alg);
          } else if (algo == "rowbased") {
            answer = rowbased_t_interval_connected(base, t, alg, workers);
          } else {
            answer = optimal_t_interval_connected(base, t, alg);
          }
          result = answer;
        } else {
          std::size_t answer;
          if (algo == "naive") {
            answer = oracle_max_t(base, alg);
          } else if (algo == "rowbased") {
            answer = rowbased_max_t(base, alg, nullptr, workers);
          } else {
            answer = optimal_max_t(base, alg);
          }
          result = answer;
        }
        return detail::Outcome{result, alg.counter().read()};
      });
      report.result = outcome.result;
      report.ops = outcome.ops;
      if (check->parsed()) window = t;
      if (strict && (report.result == false || report.result == 0)) code = exit_negative;
    } else if (stream->parsed() || stability->parsed()) {
      nlohmann::json verdicts = nlohmann::json::array();
      auto on_push = [&](const StabilityVerdict& v) {
        const auto value = detail::verdict_json(v);
        verdicts.push_back(value);
        detail::emit(io.out, {{"step", v.step}, {"value", value}});
      };
      if (stream->parsed()) {
        report.command = "stream";
        report.algorithm = "online-t";
        report.ops = detail::stream_input(
            input, synthetic, limit, io, report.input_digest, [&](auto& alg) { return TStabilityStream(t, alg); },
            on_push);
      } else if (t > 0) {
        report.command = "stability";
        report.algorithm = "t-stability";
        report.ops = detail::stream_input(
            input, synthetic, limit, io, report.input_digest, [&](auto& alg) { return TStabilityStream(t, alg); },
            on_push);
      } else {
        report.command = "stability";
        report.algorithm = "stability";
        report.ops = detail::stream_input(
            input, synthetic, limit, io, report.input_digest, [&](auto& alg) { return StabilityStream(alg); },
            on_push);
      }
      if (t > 0) window = t;
      report.result = verdicts;
    } else if (gen->parsed()) {
      report.command = "gen";
      const auto s = seed ? *seed : detail::env_seed().value_or(1);
      const auto mode = directed ? Mode::directed : Mode::undirected;
      std::optional<Trace> trace;
      nlohmann::json result;
      if (planted > 0) {
        auto planted_trace = generate_planted_trace(n, delta, planted, s, mode, p);
        result = {{"planted_t", planted}, {"ground_truth_max_t", planted_trace.ground_truth_max_t}};
        trace.emplace(std::move(planted_trace.trace));
        report.algorithm = "planted";
      } else {
        trace.emplace(generate_random_trace(n, delta, p, s, mode));
        report.algorithm = "random";
      }
      result["n"] = n;
      result["delta"] = delta;
      result["seed"] = s;
      const auto text = serialize_trace(*trace);
      report.input_digest = digest_of(text);
      report.result = result;
      report.wall_time_ms = clock.elapsed_ms();
      if (output.empty()) {
        io.out << text << std::flush;
        detail::emit(io.err, report.to_json());
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw error(errc::parse_error, "cannot write '" + output + "'");
        f << text;
        detail::emit(io.out, report.to_json());
      }
      return exit_ok;
    } else if (bench_cmd->parsed()) {
      report.command = "bench";
      report.algorithm = "all";
      suite.seed = seed ? *seed : detail::env_seed().value_or(1);
      const auto rows = bench(suite);
      nlohmann::json table = nlohmann::json::array();
      for (const auto& r : rows) {
        table.push_back(r.to_json());
        report.ops.intersections += r.ops.intersections;
        report.ops.connectivity_tests += r.ops.connectivity_tests;
      }
      if (format == "table") {
        io.out << "family    task         delta       ops   ops/delta  ops/(d*log2 d)   wall_ms\n";
        for (const auto& r : rows) {
          char line[160];
          std::snprintf(line, sizeof line, "%-9s %-11s %7zu %9llu %11.3f %15.3f %9.2f\n", r.family.c_str(),
                        r.task.c_str(), r.delta, static_cast<unsigned long long>(r.ops.total()), r.ops_per_delta,
                        r.ops_per_delta_log, r.wall_ms);
          io.out << line;
        }
      }
      report.result = table;
    }

    report.wall_time_ms = clock.elapsed_ms();
    auto j = report.to_json();
    if (window) j["t"] = *window;
    if (format == "json" || !bench_cmd->parsed()) detail::emit(io.out, j);
    return code;
  } catch (const error& e) {
    io.err << "tic: " << e.what() << '\n';
    return exit_input_error;
  }
}

}  // namespace tic::cli
