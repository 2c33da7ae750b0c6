#pragma once

#include <span>

#include "tic/core/algebra.hpp"
#include "tic/hierarchy/interval.hpp"

namespace tic {

/// Row k+1 from row k: element i is row_k[i] ∩ row_k[i+1].
template <GraphAlgebra A>
Row<element_t<A>> naive_row_above(const Row<element_t<A>>& row, A& alg) {
  if (row.size() <= 1) throw error(errc::no_row_above, "row " + std::to_string(row.height) + " is the top row");
  Row<element_t<A>> above{row.height + 1, {}};
  above.elements.reserve(row.size() - 1);
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    above.elements.push_back(alg.intersect(row.elements[i], row.elements[i + 1]));
  }
  return above;
}

/// True iff every element of the row is connected; stops at the first failure.
template <GraphAlgebra A>
bool row_connected(const Row<element_t<A>>& row, A& alg) {
  for (const auto& g : row.elements) {
    if (!alg.is_connected(g)) return false;
  }
  return true;
}

inline void check_t(std::size_t t, std::size_t delta) {
  if (t < 1 || t > delta) {
    throw error(errc::invalid_t, "T=" + std::to_string(t) + " outside [1, " + std::to_string(delta) + "]");
  }
}

/// Brute force: builds rows 1..T one by one, then tests row T.
template <GraphAlgebra A>
bool oracle_t_interval_connected(std::span<const element_t<A>> base, std::size_t t, A& alg) {
  check_t(t, base.size());
  auto row = base_row(base);
  while (row.height < t) row = naive_row_above(row, alg);
  return row_connected(row, alg);
}

/// Brute force: tests every row bottom-up and returns the height below the
/// first row holding a disconnected graph (delta when none does).
template <GraphAlgebra A>
std::size_t oracle_max_t(std::span<const element_t<A>> base, A& alg) {
  auto row = base_row(base);
  for (;;) {
    if (!row_connected(row, alg)) return row.height - 1;
    if (row.height == base.size()) return row.height;
    row = naive_row_above(row, alg);
  }
}

}  // namespace tic
