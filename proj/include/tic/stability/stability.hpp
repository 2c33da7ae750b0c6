#pragma once

#include <optional>
#include <ostream>
#include <variant>

#include "tic/walk/online.hpp"

namespace tic {

struct StabilityVerdict {
  std::size_t step = 0;
  /// monostate: undefined (fewer than T snapshots), bool: T-stability,
  /// size_t: stability value T_i.
  std::variant<std::monostate, bool, std::size_t> value;

  bool undefined() const noexcept { return std::holds_alternative<std::monostate>(value); }
  friend bool operator==(const StabilityVerdict&, const StabilityVerdict&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const StabilityVerdict& v) {
  os << v.step << ':';
  if (const auto* b = std::get_if<bool>(&v.value)) return os << (*b ? "true" : "false");
  if (const auto* t = std::get_if<std::size_t>(&v.value)) return os << *t;
  return os << "undefined";
}

/// T-Stability: G_i is T-stable iff the T most recent snapshots share a
/// connected spanning subgraph. Keeps going after a false verdict.
template <GraphAlgebra A>
class TStabilityStream {
 public:
  using element_type = element_t<A>;

  TStabilityStream(std::size_t t, A& alg) : checker_(t, alg) {}

  StabilityVerdict push(element_type g) {
    const auto verdict = checker_.push(std::move(g));
    StabilityVerdict out{checker_.received(), std::monostate{}};
    if (verdict) out.value = *verdict;
    return out;
  }

  std::size_t t() const noexcept { return checker_.t(); }

 private:
  OnlineTChecker<A> checker_;
};

/// Stability: after push i, T_i = max{T : G_(i-T+1, i) is connected}.
///
/// The walk stands on the connected cell (j, T_{i-1}) ending at i-1. A new
/// snapshot moves it up to (j, T_{i-1}+1); while the cell is disconnected it
/// steps down-right to (j+1, k-1), which ends at the same snapshot. Cells are
/// produced from a left ladder ending at next-1 and a right ladder at next with
/// one intersection each. Every right-ladder rung is tested as it is added; a
/// disconnected rung (next, h) rules out every cell at or left of next, and the
/// walk jumps to (next+1, h-1), on a fresh left ladder built down from the
/// newest snapshot.
template <GraphAlgebra A>
class StabilityStream {
 public:
  using element_type = element_t<A>;

  explicit StabilityStream(A& alg) : alg_(&alg) {}

  StabilityVerdict push(element_type g) {
    check_stream_element(shape_, g, buffer_.received() + 1);
    if (!shape_) shape_ = g;
    buffer_.push(std::move(g));
    const auto i = buffer_.received();

    if (k_ == 0) {
      restart(i);
    } else if (j_ == next_) {
      climb_on_right();
    } else {
      climb_between_ladders();
    }
    return {i, k_};
  }

  std::size_t value() const noexcept { return k_; }
  std::size_t received() const noexcept { return buffer_.received(); }
  /// The connected cell the walk last reported (height 0: none).
  Interval cell() const noexcept { return {j_, k_}; }

 private:
  void restart(std::size_t i) {
    next_ = i;
    left_ = LeftLadder<element_type>(i - 1);
    right_ = RightLadder<element_type>(i);
    buffer_.drop_before(i);
    increment_right_ladder(right_, buffer_.view(), *alg_);
    j_ = i;
    k_ = alg_->is_connected(right_.top()) ? 1 : 0;
  }

  // Walk on the right ladder itself: every cell is a rung.
  void climb_on_right() {
    increment_right_ladder(right_, buffer_.view(), *alg_);
    if (alg_->is_connected(right_.top())) {
      ++k_;
    } else {
      jump_past_right(right_.length());
    }
  }

  void climb_between_ladders() {
    increment_right_ladder(right_, buffer_.view(), *alg_);
    if (!alg_->is_connected(right_.top())) {
      jump_past_right(right_.length());
      return;
    }
    const Interval up{j_, k_ + 1};
    if (alg_->is_connected(combine(left_, right_, up, *alg_))) {
      k_ = up.height;
      return;
    }
    descend(up);
  }

  // `cell` ends at the newest snapshot and is disconnected.
  void descend(Interval cell) {
    for (;;) {
      if (cell.height == 1) {
        k_ = 0;
        return;
      }
      cell = {cell.index + 1, cell.height - 1};
      if (cell.index == next_) {
        // Top rung of the right ladder, tested when it was added.
        j_ = cell.index;
        k_ = cell.height;
        return;
      }
      if (alg_->is_connected(combine(left_, right_, cell, *alg_))) {
        j_ = cell.index;
        k_ = cell.height;
        return;
      }
    }
  }

  // The right-ladder rung (next, h) ending at the newest snapshot is
  // disconnected.
  void jump_past_right(std::size_t h) {
    if (h == 1) {
      k_ = 0;
      return;
    }
    const auto i = buffer_.received();
    auto build = build_left_ladder(buffer_.view(), i, h - 1, *alg_, true);
    left_ = std::move(build.ladder);
    next_ = i + 1;
    right_ = RightLadder<element_type>(next_);
    buffer_.drop_before(next_);
    if (build.disconnected) {
      j_ = build.disconnected->index + 1;
      k_ = build.disconnected->height - 1;
    } else {
      j_ = left_.cell(left_.length()).index;
      k_ = left_.length();
    }
  }

  A* alg_;
  std::size_t j_ = 0;
  std::size_t k_ = 0;
  std::size_t next_ = 1;
  std::optional<element_type> shape_;
  StreamBuffer<element_type> buffer_;
  LeftLadder<element_type> left_;
  RightLadder<element_type> right_;
};

}  // namespace tic
