#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tic/core/error.hpp"

namespace tic {

/// Cell (index, height) of the intersection hierarchy: the window of snapshots
/// index .. index+height-1 (1-based).
struct Interval {
  std::size_t index = 1;
  std::size_t height = 1;

  constexpr std::size_t end() const noexcept { return index + height - 1; }
  constexpr bool contains(const Interval& other) const noexcept {
    return index <= other.index && other.end() <= end();
  }
  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& c) {
  return os << '(' << c.index << ',' << c.height << ')';
}

/// An algebra element tagged with the cell it represents.
template <class E>
struct IntervalGraph {
  Interval cell;
  E payload;
};

/// Row `height` of the hierarchy: elements for indices 1 .. delta-height+1.
template <class E>
struct Row {
  std::size_t height = 1;
  std::vector<E> elements;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t delta() const noexcept { return elements.size() + height - 1; }

  /// 1-based.
  const E& at(std::size_t index) const { return elements.at(index - 1); }
  Interval cell(std::size_t index) const { return {index, height}; }

  friend bool operator==(const Row&, const Row&) = default;
};

/// Row 1 is the trace itself.
template <class E>
Row<E> base_row(std::span<const E> base) {
  if (base.empty()) throw error(errc::invalid_graph, "empty trace");
  return Row<E>{1, std::vector<E>(base.begin(), base.end())};
}

/// Read-only window over base elements addressed by their 1-based trace index.
/// Streaming consumers keep only a suffix of the trace; `first` is the index of
/// items[0].
template <class E>
struct BaseView {
  std::span<const E> items;
  std::size_t first = 1;

  std::size_t last() const noexcept { return first + items.size() - 1; }
  bool covers(std::size_t index) const noexcept { return index >= first && index < first + items.size(); }
  const E& operator[](std::size_t index) const {
    if (!covers(index)) {
      throw error(errc::out_of_trace, "snapshot " + std::to_string(index) + " is not available");
    }
    return items[index - first];
  }
};

}  // namespace tic
