#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

#include "tic/core/snapshot.hpp"

// Uncounted graph primitives. Algorithms go through a GraphAlgebra so that
// every call is tallied; these are the bodies behind SnapshotAlgebra.
namespace tic::primitive {

/// Edge-set intersection by linear merge of the two canonical edge lists.
inline Snapshot intersect(const Snapshot& a, const Snapshot& b) {
  if (a.n() != b.n() || a.mode() != b.mode()) {
    throw error(errc::invalid_operands, "intersect needs snapshots with equal n and mode");
  }
  std::vector<Edge> out;
  out.reserve(std::min(a.edge_count(), b.edge_count()));
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(out));
  return Snapshot::from_canonical(a.n(), a.mode(), std::move(out));
}

namespace detail {

// Compressed adjacency: neighbours of v are targets[offsets[v] .. offsets[v+1]).
struct Adjacency {
  std::vector<std::uint32_t> offsets;
  std::vector<Vertex> targets;
};

inline Adjacency build_adjacency(const Snapshot& g, bool symmetric) {
  Adjacency adj;
  adj.offsets.assign(g.n() + 1, 0);
  for (const auto& e : g.edges()) {
    ++adj.offsets[e.u + 1];
    if (symmetric) ++adj.offsets[e.v + 1];
  }
  for (Vertex v = 0; v < g.n(); ++v) adj.offsets[v + 1] += adj.offsets[v];
  adj.targets.resize(adj.offsets.back());
  std::vector<std::uint32_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& e : g.edges()) {
    adj.targets[fill[e.u]++] = e.v;
    if (symmetric) adj.targets[fill[e.v]++] = e.u;
  }
  return adj;
}

}  // namespace detail

/// Number of strongly connected components (iterative Tarjan).
inline std::size_t strongly_connected_components(const Snapshot& g) {
  const Vertex n = g.n();
  const auto adj = detail::build_adjacency(g, false);
  constexpr std::uint32_t unvisited = UINT32_MAX;
  std::vector<std::uint32_t> order(n, unvisited), low(n, 0), cursor(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack, call;
  std::uint32_t counter = 0;
  std::size_t components = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    call.push_back(root);
    while (!call.empty()) {
      const Vertex v = call.back();
      if (order[v] == unvisited) {
        order[v] = low[v] = counter++;
        cursor[v] = adj.offsets[v];
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (cursor[v] < adj.offsets[v + 1]) {
        const Vertex w = adj.targets[cursor[v]++];
        if (order[w] == unvisited) {
          call.push_back(w);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], order[w]);
      }
      if (descended) continue;
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == order[v]) {
        ++components;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != v);
      }
    }
  }
  return components;
}

/// Undirected: every vertex reachable from 0. Directed: a single SCC.
inline bool is_connected(const Snapshot& g) {
  if (g.n() == 0) throw error(errc::invalid_graph, "connectivity of a graph with no vertices");
  if (g.mode() == Mode::directed) return strongly_connected_components(g) == 1;
  if (g.edge_count() + 1 < g.n()) return false;

  const auto adj = detail::build_adjacency(g, true);
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (auto p = adj.offsets[v]; p < adj.offsets[v + 1]; ++p) {
      const Vertex w = adj.targets[p];
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

}  // namespace tic::primitive
