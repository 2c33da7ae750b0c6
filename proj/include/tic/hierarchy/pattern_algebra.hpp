#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "tic/core/algebra.hpp"
#include "tic/hierarchy/interval.hpp"

namespace tic {

/// Synthetic algebra whose elements are hierarchy cells. A cell is reported
/// disconnected iff it contains one of the listed disconnected cells, so the
/// reported pattern is upward-closed by construction. Intersection of two
/// overlapping or abutting cells is their union window.
class PatternAlgebra {
 public:
  using element_type = Interval;

  PatternAlgebra(std::size_t delta, std::vector<Interval> disconnected)
      : delta_(delta), listed_(std::move(disconnected)) {
    if (delta_ == 0) throw error(errc::invalid_pattern, "pattern needs delta >= 1");
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    // min_end_[i]: smallest end among listed cells starting at index >= i.
    min_end_.assign(delta_ + 2, none);
    for (const auto& c : listed_) {
      if (c.index < 1 || c.height < 1 || c.end() > delta_) {
        throw error(errc::invalid_pattern, "cell (" + std::to_string(c.index) + "," +
                                               std::to_string(c.height) + ") lies outside a hierarchy of delta=" +
                                               std::to_string(delta_));
      }
      min_end_[c.index] = std::min(min_end_[c.index], c.end());
    }
    for (std::size_t i = delta_; i >= 1; --i) min_end_[i] = std::min(min_end_[i], min_end_[i + 1]);
  }

  Interval intersect(const Interval& a, const Interval& b) {
    check(a);
    check(b);
    const auto lo = std::min(a.index, b.index);
    const auto hi = std::max(a.end(), b.end());
    if (std::max(a.index, b.index) > std::min(a.end(), b.end()) + 1) {
      throw error(errc::invalid_operands, "pattern cells do not overlap or abut");
    }
    counter_.count_intersection();
    return {lo, hi - lo + 1};
  }

  bool is_connected(const Interval& x) {
    check(x);
    counter_.count_connectivity_test();
    return !reports_disconnected(x);
  }

  /// Uncounted lookup.
  bool reports_disconnected(const Interval& x) const noexcept { return min_end_[x.index] <= x.end(); }

  std::size_t delta() const noexcept { return delta_; }
  const std::vector<Interval>& listed() const noexcept { return listed_; }

  /// Row-1 elements (i, 1) for i = 1..delta.
  std::vector<Interval> base() const {
    std::vector<Interval> out;
    out.reserve(delta_);
    for (std::size_t i = 1; i <= delta_; ++i) out.push_back({i, 1});
    return out;
  }

  OpCounter& counter() noexcept { return counter_; }
  const OpCounter& counter() const noexcept { return counter_; }

 private:
  void check(const Interval& x) const {
    if (x.index < 1 || x.height < 1 || x.end() > delta_) {
      throw error(errc::invalid_operands, "cell outside the hierarchy");
    }
  }

  std::size_t delta_;
  std::vector<Interval> listed_;
  std::vector<std::size_t> min_end_;
  OpCounter counter_;
};

static_assert(GraphAlgebra<PatternAlgebra>);

}  // namespace tic
