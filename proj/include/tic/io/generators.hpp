#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tic/core/algebra.hpp"
#include "tic/hierarchy/naive.hpp"

namespace tic {

namespace detail {

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw error(errc::invalid_operands, "edge probability must lie in [0, 1]");
}

// Independent Bernoulli(p) selection over the canonical pair order, sampled by
// geometric skips so sparse graphs cost O(edges) rather than O(n^2).
inline std::vector<Edge> sample_edges(Vertex n, Mode mode, double p, std::mt19937_64& rng) {
  std::vector<Edge> out;
  if (n < 2 || p <= 0.0) return out;
  const std::uint64_t per_row = mode == Mode::directed ? n - 1 : 0;
  const std::uint64_t total =
      mode == Mode::directed ? std::uint64_t{n} * (n - 1) : std::uint64_t{n} * (n - 1) / 2;

  Vertex u = 0;
  std::uint64_t row_begin = 0;
  auto row_length = [&](Vertex r) -> std::uint64_t { return mode == Mode::directed ? per_row : n - 1 - r; };
  auto emit = [&](std::uint64_t idx) {
    while (idx >= row_begin + row_length(u)) {
      row_begin += row_length(u);
      ++u;
    }
    const auto offset = static_cast<Vertex>(idx - row_begin);
    if (mode == Mode::directed) {
      out.push_back({u, offset < u ? offset : offset + 1});
    } else {
      out.push_back({u, u + 1 + offset});
    }
  };

  if (p >= 1.0) {
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) emit(idx);
    return out;
  }
  std::geometric_distribution<std::uint64_t> skip(p);
  for (std::uint64_t idx = skip(rng); idx < total; idx += 1 + skip(rng)) emit(idx);
  return out;
}

}  // namespace detail

/// Each step draws every vertex pair independently with probability p.
/// Deterministic for a fixed seed.
inline Trace generate_random_trace(Vertex n, std::size_t delta, double p, std::uint64_t seed,
                                   Mode mode = Mode::undirected) {
  if (n < 1 || delta < 1) throw error(errc::invalid_operands, "random trace needs n >= 1 and delta >= 1");
  detail::check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<Snapshot> steps;
  steps.reserve(delta);
  for (std::size_t i = 0; i < delta; ++i) {
    steps.push_back(Snapshot::from_canonical(n, mode, detail::sample_edges(n, mode, p, rng)));
  }
  return Trace(n, mode, std::move(steps));
}

struct PlantedTrace {
  Trace trace;
  std::size_t ground_truth_max_t;
};

/// Random spanning trees are planted with lifetimes of 2T-1 steps, a new one
/// starting every T steps, so every window of T consecutive steps shares at
/// least one tree. Each step also receives noise edges with probability
/// `noise`. The ground truth is computed by the brute-force oracle.
inline PlantedTrace generate_planted_trace(Vertex n, std::size_t delta, std::size_t planted_t, std::uint64_t seed,
                                           Mode mode = Mode::undirected, double noise = -1.0) {
  if (n < 3) throw error(errc::invalid_operands, "planted trace needs n >= 3");
  if (planted_t < 1 || planted_t > delta) throw error(errc::invalid_t, "planted T must lie in [1, delta]");
  if (noise < 0.0) noise = 2.0 / n;
  detail::check_probability(noise);

  std::mt19937_64 rng(seed);
  const std::size_t blocks = (delta + planted_t - 1) / planted_t;
  std::vector<std::vector<Edge>> trees(blocks);
  std::vector<Vertex> perm(n);
  for (auto& tree : trees) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex idx = 1; idx < n; ++idx) {
      const Vertex parent = perm[std::uniform_int_distribution<Vertex>(0, idx - 1)(rng)];
      const Vertex child = perm[idx];
      if (mode == Mode::directed) {
        tree.push_back({child, parent});
        tree.push_back({parent, child});
      } else {
        tree.push_back({std::min(child, parent), std::max(child, parent)});
      }
    }
  }

  std::vector<Snapshot> steps;
  steps.reserve(delta);
  for (std::size_t t = 1; t <= delta; ++t) {
    auto edges = detail::sample_edges(n, mode, noise, rng);
    const std::size_t newest = (t - 1) / planted_t;
    for (std::size_t b = newest == 0 ? 0 : newest - 1; b <= newest; ++b) {
      if (t <= b * planted_t + 2 * planted_t - 1) edges.insert(edges.end(), trees[b].begin(), trees[b].end());
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    steps.push_back(Snapshot::from_canonical(n, mode, std::move(edges)));
  }
  Trace trace(n, mode, std::move(steps));
  SnapshotAlgebra alg;
  const auto truth = oracle_max_t(trace.snapshots(), alg);
  return {std::move(trace), truth};
}

}  // namespace tic
