#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "tic/hierarchy/rowbased.hpp"
#include "tic/io/generators.hpp"
#include "tic/io/report.hpp"
#include "tic/stability/stability.hpp"
#include "tic/walk/optimal.hpp"

namespace tic {

struct BenchSuite {
  std::vector<std::size_t> deltas{100, 1000, 10000};
  std::vector<std::string> families{"naive", "rowbased", "optimal"};
  Vertex n = 8;
  double p = 0.9;
  std::uint64_t seed = 1;
  /// Quadratic family is skipped above this length.
  std::size_t naive_max_delta = 2000;
};

struct BenchRow {
  std::string family;
  std::string task;
  std::size_t delta = 0;
  std::size_t t = 0;  // the T of fixed-T tasks, 0 otherwise
  OpCounts ops;
  double ops_per_delta = 0.0;
  double ops_per_delta_log = 0.0;
  double wall_ms = 0.0;
  nlohmann::json result;

  nlohmann::json to_json() const {
    return {{"family", family},
            {"task", task},
            {"delta", delta},
            {"t", t},
            {"ops", ops.total()},
            {"intersections", ops.intersections},
            {"connectivity_tests", ops.connectivity_tests},
            {"ops_per_delta", ops_per_delta},
            {"ops_per_delta_log2_delta", ops_per_delta_log},
            {"wall_ms", wall_ms},
            {"result", result}};
  }
};

namespace detail {

template <class Fn>
BenchRow measure(std::string family, std::string task, std::size_t delta, std::size_t t, Fn&& fn) {
  SnapshotAlgebra alg;
  Stopwatch clock;
  nlohmann::json result = fn(alg);
  BenchRow row{std::move(family), std::move(task), delta, t, alg.counter().read(), 0, 0, clock.elapsed_ms(),
               std::move(result)};
  const auto d = static_cast<double>(delta);
  row.ops_per_delta = static_cast<double>(row.ops.total()) / d;
  row.ops_per_delta_log = d > 1 ? static_cast<double>(row.ops.total()) / (d * std::log2(d)) : 0.0;
  return row;
}

}  // namespace detail

/// Runs fixed-T (T = delta/2) and max-T tasks of each family on one random
/// trace per length; the optimal family also runs the streaming consumers.
inline std::vector<BenchRow> bench(const BenchSuite& suite) {
  std::vector<BenchRow> rows;
  for (const auto delta : suite.deltas) {
    const auto trace = generate_random_trace(suite.n, delta, suite.p, suite.seed + delta);
    const auto base = trace.snapshots();
    const auto t = std::max<std::size_t>(1, delta / 2);
    for (const auto& family : suite.families) {
      if (family == "naive") {
        if (delta > suite.naive_max_delta) continue;
        rows.push_back(detail::measure(family, "check", delta, t,
                                       [&](auto& alg) { return oracle_t_interval_connected(base, t, alg); }));
        rows.push_back(detail::measure(family, "maxt", delta, 0, [&](auto& alg) { return oracle_max_t(base, alg); }));
      } else if (family == "rowbased") {
        rows.push_back(detail::measure(family, "check", delta, t,
                                       [&](auto& alg) { return rowbased_t_interval_connected(base, t, alg); }));
        rows.push_back(
            detail::measure(family, "maxt", delta, 0, [&](auto& alg) { return rowbased_max_t(base, alg); }));
      } else if (family == "optimal") {
        rows.push_back(detail::measure(family, "check", delta, t,
                                       [&](auto& alg) { return optimal_t_interval_connected(base, t, alg); }));
        rows.push_back(
            detail::measure(family, "maxt", delta, 0, [&](auto& alg) { return optimal_max_t(base, alg); }));
        rows.push_back(detail::measure(family, "online-maxt", delta, 0, [&](auto& alg) {
          OnlineMaxTChecker checker(alg);
          std::size_t last = 0;
          for (const auto& g : base) last = checker.push(g);
          return last;
        }));
        rows.push_back(detail::measure(family, "stability", delta, 0, [&](auto& alg) {
          StabilityStream stream(alg);
          std::size_t best = 0;
          for (const auto& g : base) best = std::max(best, std::get<std::size_t>(stream.push(g).value));
          return best;
        }));
      } else {
        throw error(errc::invalid_operands, "unknown bench family '" + family + "'");
      }
    }
  }
  return rows;
}

}  // namespace tic
