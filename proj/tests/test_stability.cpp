#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace tic;

namespace {

template <class Stream, class Range>
std::vector<StabilityVerdict> run(Stream& s, const Range& items, std::size_t limit = 0) {
  std::vector<StabilityVerdict> out;
  for (const auto& g : items) {
    if (limit && out.size() == limit) break;
    out.push_back(s.push(g));
  }
  return out;
}

std::vector<std::size_t> values(const std::vector<StabilityVerdict>& vs) {
  std::vector<std::size_t> out;
  for (const auto& v : vs) out.push_back(std::get<std::size_t>(v.value));
  return out;
}

}  // namespace

TEST(TStability, RunningExampleWithTFour) {
  const auto trace = fixtures::running_example();
  SnapshotAlgebra alg;
  TStabilityStream stream(4, alg);
  const auto got = run(stream, trace.snapshots());
  ASSERT_EQ(got.size(), 8u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(got[i].undefined());
  const std::vector<bool> want{true, false, true, true, true};
  for (std::size_t i = 3; i < 8; ++i) {
    EXPECT_EQ(got[i].step, i + 1);
    EXPECT_EQ(std::get<bool>(got[i].value), want[i - 3]) << i + 1;
  }
}

TEST(TStability, TOneIsPlainConnectivity) {
  const auto trace = generate_random_trace(5, 200, 0.35, 3);
  SnapshotAlgebra alg;
  TStabilityStream stream(1, alg);
  for (const auto& g : trace.snapshots()) {
    EXPECT_EQ(std::get<bool>(stream.push(g).value), primitive::is_connected(g));
  }
}

TEST(TStability, MatchesWindowOracleOnRandomTraces) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto mode = seed % 2 ? Mode::directed : Mode::undirected;
    const auto trace = generate_random_trace(3 + seed % 5, 1 + seed % 40, mode == Mode::directed ? 0.8 : 0.65,
                                             seed, mode);
    const std::size_t t = 1 + seed % 6;
    SnapshotAlgebra alg;
    TStabilityStream stream(t, alg);
    const auto want = oracle::windows(trace.delta(), t, oracle::trace_predicate(trace));
    for (const auto& g : trace.snapshots()) {
      const auto v = stream.push(g);
      const auto& w = want[v.step - 1];
      if (!w) {
        ASSERT_TRUE(v.undefined());
      } else {
        ASSERT_EQ(std::get<bool>(v.value), *w) << seed << " step " << v.step;
      }
    }
  }
}

TEST(Stability, StabilityPatternSequence) {
  auto alg = fixtures::stability_pattern();
  StabilityStream stream(alg);
  const auto got = run(stream, alg.base(), 14);
  EXPECT_EQ(values(got), fixtures::stability_values);
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].step, i + 1);
}

TEST(Stability, StabilityPatternFullStream) {
  auto alg = fixtures::stability_pattern();
  StabilityStream stream(alg);
  auto want = fixtures::stability_values;
  want.push_back(7);
  want.push_back(8);
  EXPECT_EQ(values(run(stream, alg.base())), want);
  auto probe = fixtures::stability_pattern();
  EXPECT_EQ(want, oracle::stability(16, [&](std::size_t i, std::size_t k) {
              return !probe.reports_disconnected({i, k});
            }));
}

TEST(Stability, StabilityPatternSkipsCellsItDoesNotNeed) {
  // Count the tests the walk makes on each cell through a wrapping algebra.
  struct Recording {
    using element_type = Interval;
    PatternAlgebra inner = fixtures::stability_pattern();
    std::vector<Interval> tested;
    Interval intersect(const Interval& a, const Interval& b) { return inner.intersect(a, b); }
    bool is_connected(const Interval& x) {
      tested.push_back(x);
      return inner.is_connected(x);
    }
    OpCounter& counter() { return inner.counter(); }
    const OpCounter& counter() const { return inner.counter(); }
  };
  Recording alg;
  StabilityStream stream(alg);
  run(stream, alg.inner.base(), 14);
  EXPECT_EQ(std::count(alg.tested.begin(), alg.tested.end(), Interval{5, 7}), 0);
  EXPECT_EQ(std::count(alg.tested.begin(), alg.tested.end(), Interval{6, 6}), 0);
  EXPECT_EQ(std::count(alg.tested.begin(), alg.tested.end(), Interval{8, 4}), 1);
}

TEST(Stability, IdenticalConnectedSnapshotsAscendEveryStep) {
  const auto trace = generate_random_trace(5, 50, 1.0, 1);
  SnapshotAlgebra alg;
  StabilityStream stream(alg);
  const auto got = values(run(stream, trace.snapshots()));
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], i + 1);
}

TEST(Stability, DisconnectedSnapshotsReportZero) {
  PatternAlgebra alg(10, {{3, 1}, {4, 1}, {8, 1}});
  StabilityStream stream(alg);
  EXPECT_EQ(values(run(stream, alg.base())), (std::vector<std::size_t>{1, 2, 0, 0, 1, 2, 3, 0, 1, 2}));
}

TEST(Stability, ExhaustivePatterns) {
  for (std::size_t delta = 1; delta <= 9; ++delta) {
    oracle::for_each_frontier(delta, [&](const oracle::Frontier& f) {
      auto alg = f.algebra();
      StabilityStream stream(alg);
      const auto got = values(run(stream, alg.base()));
      ASSERT_EQ(got, oracle::stability(delta, f.predicate()));
      for (std::size_t i = 1; i < got.size(); ++i) ASSERT_LE(got[i], got[i - 1] + 1);
    });
  }
}

TEST(Stability, MatchesOracleOnRandomTraces) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto mode = seed % 3 == 0 ? Mode::directed : Mode::undirected;
    const auto trace = generate_random_trace(3 + seed % 6, 1 + seed % 40, mode == Mode::directed ? 0.8 : 0.6,
                                             seed, mode);
    SnapshotAlgebra alg;
    StabilityStream stream(alg);
    ASSERT_EQ(values(run(stream, trace.snapshots())), oracle::stability(trace.delta(), oracle::trace_predicate(trace)))
        << seed;
  }
}

TEST(Stability, AmortizedOpsPerPushAreBounded) {
  for (double p : {0.5, 0.7, 0.9}) {
    const auto trace = generate_random_trace(6, 5000, p, 17);
    SnapshotAlgebra alg;
    StabilityStream stream(alg);
    double worst = 0;
    std::size_t pushed = 0;
    for (const auto& g : trace.snapshots()) {
      stream.push(g);
      ++pushed;
      worst = std::max(worst, double(alg.counter().read().total()) / double(pushed));
    }
    EXPECT_LE(worst, 8.0) << p;
  }
}

TEST(Stability, RejectsMismatchedSnapshots) {
  SnapshotAlgebra alg;
  StabilityStream stream(alg);
  stream.push(Snapshot(3, Mode::undirected, {{0, 1}, {1, 2}}));
  EXPECT_TIC_ERROR(stream.push(Snapshot(2, Mode::undirected, {})), errc::invalid_snapshot);
  TStabilityStream tstream(2, alg);
  tstream.push(Snapshot(3, Mode::undirected, {}));
  EXPECT_TIC_ERROR(tstream.push(Snapshot(3, Mode::directed, {})), errc::invalid_snapshot);
}

TEST(Stability, VerdictsPrint) {
  std::ostringstream os;
  os << StabilityVerdict{3, std::monostate{}} << ' ' << StabilityVerdict{4, true} << ' '
     << StabilityVerdict{5, std::size_t{7}};
  EXPECT_EQ(os.str(), "3:undefined 4:true 5:7");
}
