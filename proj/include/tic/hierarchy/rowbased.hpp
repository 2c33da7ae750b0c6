#pragma once

#include <algorithm>
#include <barrier>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "tic/hierarchy/naive.hpp"

namespace tic {

inline void check_jump(std::size_t base_height, std::size_t ell, std::size_t delta) {
  if (ell < base_height + 1 || ell > 2 * base_height || ell > delta) {
    throw error(errc::invalid_jump, "cannot derive row " + std::to_string(ell) + " from row " +
                                        std::to_string(base_height) + " (delta=" + std::to_string(delta) + ")");
  }
}

/// Row `ell` from row k, k < ell <= 2k: element i is row_k[i] ∩ row_k[i+ell-k].
template <GraphAlgebra A>
Row<element_t<A>> row_from_row(const Row<element_t<A>>& base, std::size_t ell, A& alg) {
  const auto delta = base.delta();
  check_jump(base.height, ell, delta);
  const auto shift = ell - base.height;
  Row<element_t<A>> out{ell, {}};
  out.elements.reserve(delta - ell + 1);
  for (std::size_t i = 0; i < delta - ell + 1; ++i) {
    out.elements.push_back(alg.intersect(base.elements[i], base.elements[i + shift]));
  }
  return out;
}

/// One read of a base-row element by a worker during a parallel row build.
struct RowRead {
  std::size_t phase;   // 1 or 2
  std::size_t worker;
  std::size_t index;   // 1-based index into the base row
};

/// Row `ell` from row k on `workers` threads. Output slot i is owned by one
/// worker, which reads base[i] in phase 1 and base[i+ell-k] in phase 2; a
/// barrier separates the phases, so within a phase no base element is read by
/// two workers. The result is identical to row_from_row. The algebra must
/// tolerate concurrent calls (both shipped algebras do).
template <GraphAlgebra A>
Row<element_t<A>> parallel_row_from_row(const Row<element_t<A>>& base, std::size_t ell, A& alg,
                                        std::size_t workers, std::vector<RowRead>* reads = nullptr) {
  using E = element_t<A>;
  const auto delta = base.delta();
  check_jump(base.height, ell, delta);
  const auto shift = ell - base.height;
  const auto slots = delta - ell + 1;
  workers = std::clamp<std::size_t>(workers, 1, slots);

  std::vector<std::optional<E>> first(slots);
  std::vector<std::optional<E>> result(slots);
  std::mutex log_mutex;
  auto record = [&](std::size_t phase, std::size_t worker, std::size_t index) {
    if (!reads) return;
    std::lock_guard lock(log_mutex);
    reads->push_back({phase, worker, index});
  };

  std::barrier sync(static_cast<std::ptrdiff_t>(workers));
  auto run = [&](std::size_t w) {
    const auto begin = slots * w / workers;
    const auto end = slots * (w + 1) / workers;
    for (auto i = begin; i < end; ++i) {
      record(1, w, i + 1);
      first[i].emplace(base.elements[i]);
    }
    sync.arrive_and_wait();
    for (auto i = begin; i < end; ++i) {
      record(2, w, i + shift + 1);
      result[i].emplace(alg.intersect(*first[i], base.elements[i + shift]));
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  Row<E> out{ell, {}};
  out.elements.reserve(slots);
  for (auto& r : result) out.elements.push_back(std::move(*r));
  return out;
}

namespace detail {

template <GraphAlgebra A>
Row<element_t<A>> jump(const Row<element_t<A>>& base, std::size_t ell, A& alg, std::size_t workers) {
  return workers > 1 ? parallel_row_from_row(base, ell, alg, workers) : row_from_row(base, ell, alg);
}

}  // namespace detail

/// Builds power rows 2, 4, .. below T, derives row T from the last of them
/// and tests it.
template <GraphAlgebra A>
bool rowbased_t_interval_connected(std::span<const element_t<A>> base, std::size_t t, A& alg,
                                   std::size_t workers = 1) {
  check_t(t, base.size());
  auto row = base_row(base);
  while (2 * row.height < t) row = detail::jump(row, 2 * row.height, alg, workers);
  if (row.height < t) row = detail::jump(row, t, alg, workers);
  return row_connected(row, alg);
}

/// Doubles through power rows until one holds a disconnected graph (the top
/// row delta is used when the next power would overshoot), then binary-searches
/// between the last connected power row and that row. Every probed row is
/// derived from the pinned power row. `visited`, when given, receives the
/// height of every row tested, in order.
template <GraphAlgebra A>
std::size_t rowbased_max_t(std::span<const element_t<A>> base, A& alg, std::vector<std::size_t>* visited = nullptr,
                           std::size_t workers = 1) {
  const auto delta = base.size();
  auto tested = [&](const Row<element_t<A>>& row) {
    if (visited) visited->push_back(row.height);
    return row_connected(row, alg);
  };

  auto power = base_row(base);
  if (!tested(power)) return 0;
  std::size_t failed = 0;
  while (power.height < delta) {
    auto up = detail::jump(power, std::min(2 * power.height, delta), alg, workers);
    if (!tested(up)) {
      failed = up.height;
      break;
    }
    power = std::move(up);
  }
  if (failed == 0) return delta;

  std::size_t lo = power.height;
  std::size_t hi = failed;
  while (hi - lo > 1) {
    const auto mid = (lo + hi) / 2;
    if (tested(detail::jump(power, mid, alg, workers))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace tic
