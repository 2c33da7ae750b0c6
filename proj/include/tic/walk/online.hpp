#pragma once

#include <optional>

#include "tic/ladder/ladder.hpp"
#include "tic/walk/stream_buffer.hpp"

namespace tic {

/// Online fixed-T checker. After the T-th push, each push i reports whether the
/// window i-T+1 .. i has a connected intersection graph (row-T element
/// i-T+1). Ladders are laid out as in the offline fixed-T walk; memory is at
/// most T buffered snapshots plus two ladders.
template <GraphAlgebra A>
class OnlineTChecker {
 public:
  using element_type = element_t<A>;

  OnlineTChecker(std::size_t t, A& alg) : alg_(&alg), t_(t) {
    if (t_ < 1) throw error(errc::invalid_t, "T must be >= 1");
  }

  /// nullopt while fewer than T snapshots have arrived.
  std::optional<bool> push(element_type g) {
    check_stream_element(shape_, g, buffer_.received() + 1);
    if (!shape_) shape_ = g;
    buffer_.push(std::move(g));
    const auto i = buffer_.received();
    if (i < t_) return std::nullopt;

    const auto x = i - t_ + 1;
    bool connected;
    if (x == next_) {
      next_ = x + t_;
      auto build = build_left_ladder(buffer_.view(), i, t_, *alg_, false);
      left_ = std::move(build.ladder);
      right_ = RightLadder<element_type>(next_);
      buffer_.drop_before(next_);
      connected = alg_->is_connected(left_.top());
    } else {
      increment_right_ladder(right_, buffer_.view(), *alg_);
      connected = alg_->is_connected(combine(left_, right_, {x, t_}, *alg_));
    }
    all_connected_ = all_connected_ && connected;
    return connected;
  }

  std::size_t t() const noexcept { return t_; }
  std::size_t received() const noexcept { return buffer_.received(); }
  /// Whether the stream so far is T-interval connected (true while pending).
  bool all_connected() const noexcept { return all_connected_; }
  /// Snapshots plus ladder rungs currently held.
  std::size_t retained() const noexcept { return buffer_.size() + left_.length() + right_.length(); }

 private:
  A* alg_;
  std::size_t t_;
  std::size_t next_ = 1;
  bool all_connected_ = true;
  std::optional<element_type> shape_;
  StreamBuffer<element_type> buffer_;
  LeftLadder<element_type> left_;
  RightLadder<element_type> right_;
};

/// Online maximum-T checker: after push i, reports the largest T for which
/// G_1 .. G_i is T-interval connected. Same walk as optimal_max_t, advanced
/// only as far as the received snapshots allow.
template <GraphAlgebra A>
class OnlineMaxTChecker {
 public:
  using element_type = element_t<A>;

  explicit OnlineMaxTChecker(A& alg) : alg_(&alg) {}

  std::size_t push(element_type g) {
    check_stream_element(shape_, g, buffer_.received() + 1);
    if (!shape_) shape_ = g;
    buffer_.push(std::move(g));
    const auto i = buffer_.received();

    if (phase_ == Phase::climb) {
      increment_right_ladder(right_, buffer_.view(), *alg_);
      if (alg_->is_connected(right_.top())) {
        k_ = i;
        return k_;
      }
      if (i == 1) {
        phase_ = Phase::dead;
        k_ = 0;
        return 0;
      }
      k_ = i - 1;
      walk_ = 2;
      next_ = 2;
      right_ = RightLadder<element_type>();
      buffer_.drop_before(2);
      phase_ = Phase::walk;
    }
    while (phase_ == Phase::walk && walk_ + k_ - 1 <= i) step();
    return k_;
  }

  std::size_t value() const noexcept { return k_; }
  std::size_t received() const noexcept { return buffer_.received(); }

 private:
  enum class Phase { climb, walk, dead };

  void step() {
    if (walk_ == next_) {
      next_ = walk_ + k_;
      auto build = build_left_ladder(buffer_.view(), next_ - 1, k_, *alg_, true);
      left_ = std::move(build.ladder);
      right_ = RightLadder<element_type>(next_);
      buffer_.drop_before(next_);
      if (build.disconnected) {
        k_ = build.disconnected->height - 1;
        walk_ = build.disconnected->index + 1;
      }
    } else {
      const auto rung = k_ - (next_ - walk_);
      if (rung > 0) {
        while (right_.length() < rung) increment_right_ladder(right_, buffer_.view(), *alg_);
        if (!alg_->is_connected(combine(left_, right_, {walk_, k_}, *alg_))) --k_;
      }
    }
    if (k_ == 0) {
      phase_ = Phase::dead;
      return;
    }
    ++walk_;
  }

  A* alg_;
  Phase phase_ = Phase::climb;
  std::size_t k_ = 0;
  std::size_t walk_ = 1;
  std::size_t next_ = 2;
  std::optional<element_type> shape_;
  StreamBuffer<element_type> buffer_;
  LeftLadder<element_type> left_;
  RightLadder<element_type> right_{1};
};

}  // namespace tic
