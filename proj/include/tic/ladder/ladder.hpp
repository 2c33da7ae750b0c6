#pragma once

#include <optional>
#include <vector>

#include "tic/core/algebra.hpp"
#include "tic/hierarchy/interval.hpp"

namespace tic {

/// Column of cells (anchor, 1), (anchor, 2), .. climbing from one index.
template <class E>
class RightLadder {
 public:
  RightLadder() = default;
  explicit RightLadder(std::size_t anchor) : anchor_(anchor) {}

  std::size_t anchor() const noexcept { return anchor_; }
  std::size_t length() const noexcept { return rungs_.size(); }
  bool empty() const noexcept { return rungs_.empty(); }

  /// Rung k is the cell (anchor, k).
  const E& rung(std::size_t k) const { return rungs_.at(k - 1); }
  const E& top() const { return rungs_.back(); }
  Interval cell(std::size_t k) const { return {anchor_, k}; }

  void push(E rung) { rungs_.push_back(std::move(rung)); }

 private:
  std::size_t anchor_ = 1;
  std::vector<E> rungs_;
};

/// Column of cells (foot, 1), (foot-1, 2), .. all ending at index `foot`.
template <class E>
class LeftLadder {
 public:
  LeftLadder() = default;
  explicit LeftLadder(std::size_t foot) : foot_(foot) {}

  std::size_t foot() const noexcept { return foot_; }
  std::size_t length() const noexcept { return rungs_.size(); }
  bool empty() const noexcept { return rungs_.empty(); }

  /// Rung k is the cell (foot-k+1, k).
  const E& rung(std::size_t k) const { return rungs_.at(k - 1); }
  const E& top() const { return rungs_.back(); }
  Interval cell(std::size_t k) const { return {foot_ - k + 1, k}; }

  void push(E rung) { rungs_.push_back(std::move(rung)); }

 private:
  std::size_t foot_ = 0;
  std::vector<E> rungs_;
};

template <class E>
struct LeftLadderBuild {
  LeftLadder<E> ladder;
  /// First rung that failed its connectivity test (only with stop_on_disconnected).
  /// That rung is kept as the ladder's top.
  std::optional<Interval> disconnected;
};

/// Builds the left ladder of `length` rungs ending at `foot` with length-1
/// intersections. With `stop_on_disconnected` every rung is tested as it is
/// produced, including the top, and the build halts at the first failure.
template <GraphAlgebra A>
LeftLadderBuild<element_t<A>> build_left_ladder(BaseView<element_t<A>> base, std::size_t foot, std::size_t length,
                                                A& alg, bool stop_on_disconnected) {
  if (length < 1 || foot < length || !base.covers(foot) || !base.covers(foot - length + 1)) {
    throw error(errc::invalid_ladder, "left ladder of length " + std::to_string(length) + " at foot " +
                                          std::to_string(foot) + " does not fit the available snapshots");
  }
  LeftLadderBuild<element_t<A>> out{LeftLadder<element_t<A>>(foot), std::nullopt};
  auto& ladder = out.ladder;
  for (std::size_t k = 1; k <= length; ++k) {
    if (k == 1) {
      ladder.push(base[foot]);
    } else {
      ladder.push(alg.intersect(base[foot - k + 1], ladder.top()));
    }
    if (stop_on_disconnected && !alg.is_connected(ladder.top())) {
      out.disconnected = ladder.cell(k);
      break;
    }
  }
  return out;
}

/// Span overload for offline walks over a whole trace.
template <GraphAlgebra A>
LeftLadderBuild<element_t<A>> build_left_ladder(std::span<const element_t<A>> base, std::size_t foot,
                                                std::size_t length, A& alg, bool stop_on_disconnected) {
  return build_left_ladder(BaseView<element_t<A>>{base, 1}, foot, length, alg, stop_on_disconnected);
}

/// Adds the next rung; rung 1 is the anchor snapshot itself and costs nothing.
template <GraphAlgebra A>
void increment_right_ladder(RightLadder<element_t<A>>& ladder, BaseView<element_t<A>> base, A& alg) {
  const auto next = ladder.anchor() + ladder.length();
  if (!base.covers(next)) {
    throw error(errc::out_of_trace, "right ladder at " + std::to_string(ladder.anchor()) + " cannot reach snapshot " +
                                        std::to_string(next));
  }
  if (ladder.empty()) {
    ladder.push(base[next]);
  } else {
    ladder.push(alg.intersect(ladder.top(), base[next]));
  }
}

template <GraphAlgebra A>
void increment_right_ladder(RightLadder<element_t<A>>& ladder, std::span<const element_t<A>> base, A& alg) {
  increment_right_ladder(ladder, BaseView<element_t<A>>{base, 1}, alg);
}

/// Cell (i, k) from a left ladder ending at j-1 and a right ladder at j, using
/// one intersection of left rung j-i with right rung k-(j-i). Cells lying on
/// either ladder are returned as-is with no operation.
template <GraphAlgebra A>
element_t<A> combine(const LeftLadder<element_t<A>>& left, const RightLadder<element_t<A>>& right, Interval cell,
                     A& alg) {
  const auto j = right.anchor();
  if (left.foot() + 1 != j) {
    throw error(errc::missing_rung, "ladders are not adjacent");
  }
  const auto [i, k] = cell;
  if (i == j && k >= 1 && k <= right.length()) return right.rung(k);
  if (i < j && cell.end() == j - 1 && k <= left.length()) return left.rung(k);
  if (i < j && j - i <= left.length() && k > j - i && k - (j - i) <= right.length()) {
    return alg.intersect(left.rung(j - i), right.rung(k - (j - i)));
  }
  throw error(errc::missing_rung, "cell (" + std::to_string(i) + "," + std::to_string(k) +
                                      ") is not spanned by the ladders at " + std::to_string(j));
}

}  // namespace tic
