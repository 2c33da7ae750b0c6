#pragma once

#include <string>
#include <vector>

#include "tic/tic.hpp"

namespace fixtures {

// Running example of four vertices a, b, c, d numbered 0..3. Max T is 3; the
// window 2..5 shares no connected spanning subgraph.
inline tic::Trace running_example() {
  using E = std::vector<tic::Edge>;
  const std::vector<E> steps{
      {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 2}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {1, 2}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 2}, {2, 3}},
  };
  std::vector<tic::Snapshot> snaps;
  for (const auto& es : steps) snaps.emplace_back(4, tic::Mode::undirected, es);
  return tic::Trace(4, tic::Mode::undirected, std::move(snaps));
}

// Binary search example: only row 11 and below are fully connected.
inline tic::PatternAlgebra search_pattern() { return tic::PatternAlgebra(16, {{1, 12}}); }

// Offline max-T walk example.
inline tic::PatternAlgebra walk_pattern() { return tic::PatternAlgebra(16, {{1, 8}, {5, 7}, {7, 6}, {10, 5}, {11, 4}}); }

// Stability example.
inline tic::PatternAlgebra stability_pattern() {
  return tic::PatternAlgebra(16, {{2, 8}, {1, 6}, {3, 7}, {4, 6}, {7, 5}, {8, 4}});
}

inline const std::vector<std::size_t> stability_values{1, 2, 3, 4, 5, 5, 6, 7, 5, 6, 3, 4, 5, 6};

inline std::string data_path(const std::string& name) { return std::string(TIC_DATA_DIR) + "/" + name; }

}  // namespace fixtures

// Asserts that `stmt` throws tic::error carrying `code`.
#define EXPECT_TIC_ERROR(stmt, expected)                                     \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << "expected " << tic::to_string(expected) << " error"; \
    } catch (const tic::error& e) {                                          \
      EXPECT_EQ(e.code(), expected) << e.what();                             \
    }                                                                        \
  } while (0)
