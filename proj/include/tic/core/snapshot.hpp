#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tic/core/error.hpp"

namespace tic {

enum class Mode : std::uint8_t { undirected, directed };

inline const char* to_string(Mode mode) noexcept {
  return mode == Mode::directed ? "directed" : "undirected";
}

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// One static graph of an evolving trace. Vertices are 0..n-1; the edge list
/// is kept sorted lexicographically, undirected edges stored as (min, max).
/// Immutable once constructed.
class Snapshot {
 public:
  Snapshot() = default;

  /// Validates and canonicalizes `edges`. Throws invalid_graph on a self-loop,
  /// an endpoint >= n, or a duplicate edge.
  Snapshot(Vertex n, Mode mode, std::vector<Edge> edges) : n_(n), mode_(mode), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u >= n_ || e.v >= n_) {
        throw error(errc::invalid_graph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                             ") has an endpoint >= n=" + std::to_string(n_));
      }
      if (e.u == e.v) {
        throw error(errc::invalid_graph, "self-loop on vertex " + std::to_string(e.u));
      }
      if (mode_ == Mode::undirected && e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw error(errc::invalid_graph,
                  "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
  }

  /// Wraps an edge list that is already canonical. No validation.
  static Snapshot from_canonical(Vertex n, Mode mode, std::vector<Edge> edges) noexcept {
    Snapshot s;
    s.n_ = n;
    s.mode_ = mode;
    s.edges_ = std::move(edges);
    return s;
  }

  Vertex n() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    if (mode_ == Mode::undirected && u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  friend bool operator==(const Snapshot&, const Snapshot&) = default;

 private:
  Vertex n_ = 0;
  Mode mode_ = Mode::undirected;
  std::vector<Edge> edges_;
};

inline bool snapshot_equals(const Snapshot& a, const Snapshot& b) noexcept { return a == b; }

/// An ordered sequence of delta >= 1 snapshots over one vertex set.
class Trace {
 public:
  Trace(Vertex n, Mode mode, std::vector<Snapshot> snapshots)
      : n_(n), mode_(mode), snapshots_(std::move(snapshots)) {
    if (n_ == 0) throw error(errc::invalid_graph, "trace needs at least one vertex");
    if (snapshots_.empty()) throw error(errc::invalid_graph, "trace needs at least one snapshot");
    for (std::size_t i = 0; i < snapshots_.size(); ++i) {
      if (snapshots_[i].n() != n_ || snapshots_[i].mode() != mode_) {
        throw error(errc::invalid_snapshot, "snapshot " + std::to_string(i + 1) + " does not match the trace shape");
      }
    }
  }

  Vertex n() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t delta() const noexcept { return snapshots_.size(); }
  std::span<const Snapshot> snapshots() const noexcept { return snapshots_; }

  /// 1-based, matching G_1..G_delta.
  const Snapshot& step(std::size_t i) const { return snapshots_.at(i - 1); }

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  Vertex n_;
  Mode mode_;
  std::vector<Snapshot> snapshots_;
};

}  // namespace tic
