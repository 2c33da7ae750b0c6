#pragma once

#include <span>
#include <vector>

#include "tic/hierarchy/naive.hpp"
#include "tic/ladder/ladder.hpp"

namespace tic {

struct WalkStep {
  Interval cell;
  bool connected;

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// Optional trace of a walk: cells the walk stood on, in order, plus how many
/// ladders it started.
struct WalkLog {
  std::vector<WalkStep> steps;
  std::size_t left_ladders = 0;
  std::size_t right_ladders = 0;

  void visit(Interval cell, bool connected) { steps.push_back({cell, connected}); }
};

namespace detail {

template <GraphAlgebra A>
void grow_right_to(RightLadder<element_t<A>>& right, std::size_t length, std::span<const element_t<A>> base, A& alg,
                   WalkLog* log) {
  while (right.length() < length) {
    if (right.empty() && log) ++log->right_ladders;
    increment_right_ladder(right, base, alg);
  }
}

}  // namespace detail

/// Walks row T left to right. At each trigger index a full left ladder is built
/// (its rungs tested on the way up); every other row element costs one
/// right-ladder increment, one combine and one test. Stops at the first
/// disconnected graph.
template <GraphAlgebra A>
bool optimal_t_interval_connected(std::span<const element_t<A>> base, std::size_t t, A& alg,
                                  WalkLog* log = nullptr) {
  using E = element_t<A>;
  const auto delta = base.size();
  check_t(t, delta);

  LeftLadder<E> left;
  RightLadder<E> right;
  std::size_t next = 1;
  for (std::size_t i = 1; i + t - 1 <= delta; ++i) {
    if (i == next) {
      next = i + t;
      auto build = build_left_ladder(base, next - 1, t, alg, true);
      if (log) ++log->left_ladders;
      left = std::move(build.ladder);
      right = RightLadder<E>(next);
      if (build.disconnected) {
        if (log) log->visit(*build.disconnected, false);
        return false;
      }
      if (log) log->visit({i, t}, true);
    } else {
      detail::grow_right_to(right, t - (next - i), base, alg, log);
      const bool connected = alg.is_connected(combine(left, right, {i, t}, alg));
      if (log) log->visit({i, t}, connected);
      if (!connected) return false;
    }
  }
  return true;
}

/// Climbs a right ladder from (1,1) until a disconnected graph, then walks
/// rightward dropping one row per disconnected element. Returns the row the
/// walk leaves the hierarchy on, 0 if it falls below row 1.
template <GraphAlgebra A>
std::size_t optimal_max_t(std::span<const element_t<A>> base, A& alg, WalkLog* log = nullptr) {
  using E = element_t<A>;
  const auto delta = base.size();
  if (delta == 0) throw error(errc::invalid_graph, "empty trace");

  RightLadder<E> right(1);
  if (log) ++log->right_ladders;
  std::size_t k = 0;
  for (;;) {
    increment_right_ladder(right, base, alg);
    k = right.length();
    const bool connected = alg.is_connected(right.top());
    if (log) log->visit({1, k}, connected);
    if (!connected) break;
    if (k == delta) return delta;
  }
  if (k == 1) return 0;

  k -= 1;
  std::size_t i = 2;
  std::size_t next = 2;
  LeftLadder<E> left;
  while (i + k - 1 <= delta) {
    if (i == next) {
      next = i + k;
      auto build = build_left_ladder(base, next - 1, k, alg, true);
      if (log) ++log->left_ladders;
      left = std::move(build.ladder);
      right = RightLadder<E>(next);
      if (build.disconnected) {
        // Resume on the rung just below-right of the failure; it passed its test.
        const auto [fi, fk] = *build.disconnected;
        if (log) log->visit(*build.disconnected, false);
        k = fk - 1;
        i = fi + 1;
        if (log && k > 0) log->visit({i, k}, true);
      } else if (log) {
        log->visit({i, k}, true);
      }
    } else {
      const auto rung = k - (next - i);
      bool connected = true;
      if (rung == 0) {
        // On the left ladder, already tested while it was built.
      } else {
        detail::grow_right_to(right, rung, base, alg, log);
        connected = alg.is_connected(combine(left, right, {i, k}, alg));
      }
      if (log) log->visit({i, k}, connected);
      if (!connected) --k;
    }
    if (k == 0) return 0;
    ++i;
  }
  return k;
}

}  // namespace tic
