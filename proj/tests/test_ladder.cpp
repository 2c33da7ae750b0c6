#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace tic;

namespace {

oracle::EdgeSet fold(const Trace& t, std::size_t index, std::size_t height) {
  auto acc = oracle::edge_set(t.step(index));
  for (std::size_t s = index + 1; s < index + height; ++s) {
    const auto next = oracle::edge_set(t.step(s));
    oracle::EdgeSet kept;
    std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(), std::inserter(kept, kept.end()));
    acc = kept;
  }
  return acc;
}

}  // namespace

TEST(LeftLadder, RungsAreWindowFolds) {
  const auto trace = generate_random_trace(6, 40, 0.9, 2);
  SnapshotAlgebra alg;
  const auto build = build_left_ladder(trace.snapshots(), 30, 20, alg, false);
  const auto& ladder = build.ladder;
  EXPECT_FALSE(build.disconnected);
  ASSERT_EQ(ladder.length(), 20u);
  EXPECT_EQ(ladder.rung(1), trace.step(30));
  for (std::size_t k = 1; k <= 20; ++k) {
    EXPECT_EQ(ladder.cell(k), (Interval{31 - k, k}));
    EXPECT_EQ(oracle::edge_set(ladder.rung(k)), fold(trace, 31 - k, k)) << k;
  }
}

TEST(LeftLadder, BuildCostsLengthMinusOne) {
  const auto trace = generate_random_trace(4, 1000, 0.5, 3);
  for (std::size_t length : {1, 2, 5, 17, 1000}) {
    SnapshotAlgebra alg;
    build_left_ladder(trace.snapshots(), 1000, length, alg, false);
    EXPECT_EQ(alg.counter().read(), (OpCounts{length - 1, 0})) << length;
  }
}

TEST(LeftLadder, StopsAtTheFirstDisconnectedRung) {
  auto alg = fixtures::walk_pattern();
  const auto base = alg.base();
  const auto build = build_left_ladder(std::span<const Interval>(base), 14, 5, alg, true);
  ASSERT_TRUE(build.disconnected);
  EXPECT_EQ(*build.disconnected, (Interval{11, 4}));
  EXPECT_EQ(build.ladder.length(), 4u);
  EXPECT_EQ(alg.counter().read(), (OpCounts{3, 4}));

  auto clean = fixtures::walk_pattern();
  const auto ok = build_left_ladder(std::span<const Interval>(base), 7, 7, clean, true);
  EXPECT_FALSE(ok.disconnected);
  EXPECT_EQ(clean.counter().read(), (OpCounts{6, 7}));
}

TEST(LeftLadder, RejectsLaddersThatLeaveTheTrace) {
  PatternAlgebra alg(8, {});
  const auto base = alg.base();
  const std::span<const Interval> s(base);
  EXPECT_TIC_ERROR(build_left_ladder(s, 3, 4, alg, false), errc::invalid_ladder);
  EXPECT_TIC_ERROR(build_left_ladder(s, 9, 1, alg, false), errc::invalid_ladder);
  EXPECT_TIC_ERROR(build_left_ladder(s, 5, 0, alg, false), errc::invalid_ladder);
  EXPECT_NO_THROW(build_left_ladder(s, 8, 8, alg, false));
}

TEST(RightLadder, IncrementsCostOneIntersection) {
  const auto trace = generate_random_trace(6, 50, 0.9, 4);
  SnapshotAlgebra alg;
  RightLadder<Snapshot> ladder(7);
  increment_right_ladder(ladder, trace.snapshots(), alg);
  EXPECT_EQ(ladder.rung(1), trace.step(7));
  EXPECT_EQ(alg.counter().read().total(), 0u);
  for (std::size_t k = 2; k <= 44; ++k) {
    increment_right_ladder(ladder, trace.snapshots(), alg);
    EXPECT_EQ(alg.counter().read(), (OpCounts{k - 1, 0}));
    EXPECT_EQ(oracle::edge_set(ladder.top()), fold(trace, 7, k));
  }
  EXPECT_TIC_ERROR(increment_right_ladder(ladder, trace.snapshots(), alg), errc::out_of_trace);
}

TEST(RightLadder, SecondRungIsTheFirstPairIntersection) {
  const auto trace = fixtures::running_example();
  SnapshotAlgebra alg;
  RightLadder<Snapshot> ladder(2);
  increment_right_ladder(ladder, trace.snapshots(), alg);
  increment_right_ladder(ladder, trace.snapshots(), alg);
  EXPECT_EQ(ladder.top(), primitive::intersect(trace.step(2), trace.step(3)));
}

TEST(Combine, EveryRectangleCellCostsOneIntersection) {
  const auto trace = generate_random_trace(6, 30, 0.9, 8);
  const auto pred = oracle::trace_predicate(trace);
  SnapshotAlgebra alg;
  const std::size_t j = 12;
  const auto left = build_left_ladder(trace.snapshots(), j - 1, 9, alg, false).ladder;
  RightLadder<Snapshot> right(j);
  while (right.length() < 10) increment_right_ladder(right, trace.snapshots(), alg);
  for (std::size_t i = j - 9; i < j; ++i) {
    for (std::size_t k = j - i + 1; k <= j - i + 10; ++k) {
      const auto before = alg.counter().read();
      const auto g = combine(left, right, {i, k}, alg);
      EXPECT_EQ(alg.counter().read() - before, (OpCounts{1, 0}));
      ASSERT_EQ(oracle::edge_set(g), fold(trace, i, k)) << Interval{i, k};
    }
  }
}

TEST(Combine, CellsOnALadderAreFree) {
  const auto trace = generate_random_trace(5, 20, 0.9, 9);
  SnapshotAlgebra alg;
  const auto left = build_left_ladder(trace.snapshots(), 9, 4, alg, false).ladder;
  RightLadder<Snapshot> right(10);
  for (int s = 0; s < 3; ++s) increment_right_ladder(right, trace.snapshots(), alg);
  const auto before = alg.counter().read();
  EXPECT_EQ(combine(left, right, {10, 3}, alg), right.rung(3));
  EXPECT_EQ(combine(left, right, {7, 3}, alg), left.rung(3));
  EXPECT_EQ(alg.counter().read(), before);
}

TEST(Combine, MissingRungsAreReported) {
  const auto trace = generate_random_trace(5, 20, 0.9, 9);
  SnapshotAlgebra alg;
  const auto left = build_left_ladder(trace.snapshots(), 9, 4, alg, false).ladder;
  RightLadder<Snapshot> right(10);
  for (int s = 0; s < 3; ++s) increment_right_ladder(right, trace.snapshots(), alg);
  EXPECT_TIC_ERROR(combine(left, right, {5, 6}, alg), errc::missing_rung);   // left rung 5 missing
  EXPECT_TIC_ERROR(combine(left, right, {8, 6}, alg), errc::missing_rung);   // right rung 4 missing
  EXPECT_TIC_ERROR(combine(left, right, {11, 1}, alg), errc::missing_rung);  // right of both ladders
  RightLadder<Snapshot> detached(11);
  increment_right_ladder(detached, trace.snapshots(), alg);
  EXPECT_TIC_ERROR(combine(left, detached, {9, 3}, alg), errc::missing_rung);
}

TEST(Ladders, TotalRungsMinusLaddersIntersections) {
  const auto trace = generate_random_trace(4, 200, 0.7, 10);
  SnapshotAlgebra alg;
  std::size_t rungs = 0;
  std::size_t ladders = 0;
  for (std::size_t foot = 20; foot <= 200; foot += 20) {
    const auto len = foot / 10;
    build_left_ladder(trace.snapshots(), foot, len, alg, false);
    rungs += len;
    ++ladders;
    RightLadder<Snapshot> right(foot - len + 1);
    for (std::size_t s = 0; s < len; ++s) increment_right_ladder(right, trace.snapshots(), alg);
    rungs += len;
    ++ladders;
  }
  EXPECT_EQ(alg.counter().read().intersections, rungs - ladders);
}
