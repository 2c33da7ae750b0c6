#pragma once

#include <atomic>
#include <cstdint>

namespace tic {

/// Plain tally of elementary operations.
struct OpCounts {
  std::uint64_t intersections = 0;
  std::uint64_t connectivity_tests = 0;

  constexpr std::uint64_t total() const noexcept { return intersections + connectivity_tests; }

  friend constexpr OpCounts operator-(const OpCounts& a, const OpCounts& b) noexcept {
    return {a.intersections - b.intersections, a.connectivity_tests - b.connectivity_tests};
  }
  friend constexpr bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Counts binary intersections and connectivity tests. Updates are relaxed
/// atomics so one counter can be shared by the workers of a parallel row build.
class OpCounter {
 public:
  OpCounter() = default;
  /// Copies take a snapshot of the counts.
  OpCounter(const OpCounter& other) noexcept { assign(other.read()); }
  OpCounter& operator=(const OpCounter& other) noexcept {
    assign(other.read());
    return *this;
  }

  void count_intersection() noexcept { intersections_.fetch_add(1, std::memory_order_relaxed); }
  void count_connectivity_test() noexcept { tests_.fetch_add(1, std::memory_order_relaxed); }

  OpCounts read() const noexcept {
    return {intersections_.load(std::memory_order_relaxed), tests_.load(std::memory_order_relaxed)};
  }
  std::uint64_t intersections() const noexcept { return read().intersections; }
  std::uint64_t connectivity_tests() const noexcept { return read().connectivity_tests; }
  std::uint64_t total() const noexcept { return read().total(); }

  void reset() noexcept { assign({}); }

 private:
  void assign(OpCounts c) noexcept {
    intersections_.store(c.intersections, std::memory_order_relaxed);
    tests_.store(c.connectivity_tests, std::memory_order_relaxed);
  }

  std::atomic<std::uint64_t> intersections_{0};
  std::atomic<std::uint64_t> tests_{0};
};

}  // namespace tic
