#pragma once

#include <optional>
#include <vector>

#include "tic/core/snapshot.hpp"
#include "tic/hierarchy/interval.hpp"

namespace tic {

inline void check_stream_element(const std::optional<Snapshot>& first, const Snapshot& g, std::size_t) {
  if (first && (first->n() != g.n() || first->mode() != g.mode())) {
    throw error(errc::invalid_snapshot, "pushed snapshot has n=" + std::to_string(g.n()) + " mode=" +
                                            to_string(g.mode()) + ", stream has n=" + std::to_string(first->n()) +
                                            " mode=" + to_string(first->mode()));
  }
  if (g.n() == 0) throw error(errc::invalid_snapshot, "pushed snapshot has no vertices");
}

/// Pattern streams receive the base cells (i, 1) in order.
inline void check_stream_element(const std::optional<Interval>&, const Interval& g, std::size_t step) {
  if (g != Interval{step, 1}) {
    throw error(errc::invalid_snapshot, "expected cell (" + std::to_string(step) + ",1)");
  }
}

/// Suffix of a stream kept for future left-ladder builds.
template <class E>
class StreamBuffer {
 public:
  void push(E g) {
    if (items_.empty()) first_ = received_ + 1;
    items_.push_back(std::move(g));
    ++received_;
  }

  /// Forgets every snapshot with index < `index`.
  void drop_before(std::size_t index) {
    if (items_.empty() || index <= first_) return;
    const auto n = std::min(index - first_, items_.size());
    items_.erase(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(n));
    first_ += n;
  }

  BaseView<E> view() const noexcept { return {items_, first_}; }
  std::size_t received() const noexcept { return received_; }
  std::size_t size() const noexcept { return items_.size(); }
  const E& latest() const { return items_.back(); }

 private:
  std::vector<E> items_;
  std::size_t first_ = 1;
  std::size_t received_ = 0;
};

}  // namespace tic
