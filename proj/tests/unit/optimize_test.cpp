#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dodo/errors.hpp"
#include "dodo/optimize.hpp"
#include "dodo/udodosp.hpp"
#include "naive.hpp"

namespace dodo::optimize {
namespace {

constexpr BoundKind kAllKinds[] = {BoundKind::MinWorkRun, BoundKind::MaxWorkRun,   BoundKind::MinOffRun,
                                   BoundKind::MaxOffRun,  BoundKind::MaxWorkTotal, BoundKind::MaxOffTotal};

bool naive_at(const ParametricInstance& p, WorkerCount n) {
  for (const auto& r : p.requests) {
    if (r.lower > n) return false;
  }
  return testing::naive_decide(at_workers(p, n));
}

ParametricInstance parametric(int days, Bounds b, std::vector<RequestSpec> r) { return {days, b, std::move(r)}; }

TEST(BoundKind, NamesRoundTrip) {
  for (auto kind : kAllKinds) EXPECT_EQ(parse_bound_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_bound_kind("UW"));
  EXPECT_FALSE(minimizes(BoundKind::MinOffRun));
  EXPECT_TRUE(minimizes(BoundKind::MaxOffTotal));
  Bounds b = default_bounds(5);
  set_bound(b, BoundKind::MaxOffRun, 2);
  EXPECT_EQ(get_bound(b, BoundKind::MaxOffRun), 2);
}

TEST(OptimizeBound, MinimalUwForDenseWindow) {
  const auto in = make_exact_instance(5, 2, default_bounds(5), {1, 2, 1, 2, 1});
  EXPECT_EQ(optimize_bound(in, BoundKind::MaxWorkRun, udodosp::check_exact), 3);
}

TEST(OptimizeBound, EdgesOfTheRange) {
  const auto easy = make_exact_instance(4, 2, default_bounds(4), {1, 1, 1, 1});
  EXPECT_EQ(optimize_bound(easy, BoundKind::MaxWorkRun, udodosp::check_exact), 1);
  // No OFF period at all: any lo up to D holds.
  const auto always_on = make_exact_instance(3, 1, default_bounds(3), {1, 1, 1});
  EXPECT_EQ(optimize_bound(always_on, BoundKind::MinOffRun, testing::naive_decide), 3);
  const auto dead = make_exact_instance(3, 1, {2, 3, 1, 3, 3, 3}, {1, 0, 1});
  EXPECT_EQ(optimize_bound(dead, BoundKind::MaxWorkRun, testing::naive_decide), std::nullopt);
}

TEST(OptimizeBound, MatchesLinearScanAndIsMonotone) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int days = 1 + static_cast<int>(rng() % 5);
    const WorkerCount n = 1 + static_cast<WorkerCount>(rng() % 2);
    std::vector<WorkerCount> r;
    for (int d = 0; d < days; ++d) r.push_back(static_cast<WorkerCount>(rng() % static_cast<unsigned>(n + 1)));
    const auto in = make_exact_instance(days, n, default_bounds(days), r);
    for (auto kind : kAllKinds) {
      std::vector<bool> ok;
      for (int v = 1; v <= days; ++v) {
        Instance probe = in;
        set_bound(probe.bounds, kind, v);
        ok.push_back(testing::naive_decide(probe));
      }
      // Monotone in the direction the search assumes.
      for (int v = 1; v < days; ++v) {
        if (minimizes(kind)) {
          ASSERT_LE(ok[static_cast<std::size_t>(v - 1)], ok[static_cast<std::size_t>(v)]);
        } else {
          ASSERT_GE(ok[static_cast<std::size_t>(v - 1)], ok[static_cast<std::size_t>(v)]);
        }
      }
      std::optional<int> want;
      for (int v = 1; v <= days; ++v) {
        if (ok[static_cast<std::size_t>(v - 1)] && (!want || !minimizes(kind))) want = v;
      }
      ASSERT_EQ(optimize_bound(in, kind, testing::naive_decide), want) << to_string(kind);
    }
  }
}

TEST(ClassifyWorkers, TooSmallWhenDemandUnmet) {
  const auto p = parametric(3, default_bounds(3), std::vector<RequestSpec>(3, {1, std::nullopt}));
  const auto g = potential_graph(p);
  EXPECT_EQ(classify_workers(g, 0), NClassification::TooSmall);
  EXPECT_EQ(classify_workers(g, 1), NClassification::Feasible);
}

TEST(ClassifyWorkers, TooLargeWhenIdleWorkersBreakUo) {
  // uo = 1, at most one worker per day: two workers alternate, a third cannot rest.
  const auto p = parametric(4, {1, 4, 1, 1, 4, 4}, std::vector<RequestSpec>(4, {0, 1}));
  const auto g = potential_graph(p);
  for (WorkerCount n = 0; n <= 4; ++n) EXPECT_EQ(classify_workers(g, n) == NClassification::Feasible, naive_at(p, n));
  EXPECT_EQ(classify_workers(g, 1), NClassification::Feasible);
  EXPECT_EQ(classify_workers(g, 2), NClassification::Feasible);
  EXPECT_EQ(classify_workers(g, 3), NClassification::TooLarge);
}

TEST(ClassifyWorkers, WorkerFreeConflictIsInfeasibleForAll) {
  // lw = 2 but a 0-request day follows a 1-request first day.
  const auto p = parametric(3, {2, 3, 1, 3, 3, 3}, {{1, 1}, {0, 0}, {1, 1}});
  const auto g = potential_graph(p);
  for (WorkerCount n = 1; n <= 3; ++n) {
    EXPECT_FALSE(naive_at(p, n));
    EXPECT_EQ(classify_workers(g, n), NClassification::InfeasibleForAll) << n;
  }
  EXPECT_EQ(minimize_workers(p).status, NClassification::InfeasibleForAll);
}

TEST(PotentialGraph, NeedsATractableClass) {
  EXPECT_THROW(potential_graph(parametric(3, {2, 3, 1, 3, 2, 3}, std::vector<RequestSpec>(3, {0, 0}))),
               ValidationError);
}

TEST(MinimizeWorkers, SmallFixtures) {
  EXPECT_EQ(minimize_workers(parametric(3, default_bounds(3), std::vector<RequestSpec>(3, {0, std::nullopt}))).workers,
            0);
  EXPECT_EQ(minimize_workers(parametric(3, default_bounds(3), std::vector<RequestSpec>(3, {2, 2}))).workers, 2);
}

TEST(MinimizeWorkers, NineDayInstanceWithFreeWorkforce) {
  ParametricInstance p{9, {1, 4, 1, 2, 6, 4}, {}};
  for (auto [lo, hi] : std::vector<std::pair<int, int>>{{1, 3}, {1, 1}, {1, 4}, {2, 3}, {4, 4}, {1, 3}, {2, 4}, {2, 2}, {1, 2}}) {
    p.requests.push_back({lo, hi});
  }
  const auto best = minimize_workers(p);
  ASSERT_EQ(best.status, NClassification::Feasible);
  ASSERT_TRUE(best.workers);
  EXPECT_LE(*best.workers, 4);
  WorkerCount total = 0;
  WorkerCount peak = 0;
  for (const auto& r : p.requests) {
    total += r.lower;
    peak = std::max(peak, r.lower);
  }
  std::optional<WorkerCount> scan;
  for (WorkerCount n = peak; n <= total && !scan; ++n) {
    if (udodosp::solve(at_workers(p, n)).feasible()) scan = n;
  }
  EXPECT_EQ(best.workers, scan);
}

TEST(MinimizeWorkers, MatchesLinearScanAndFeasibleSetIsContiguous) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    const int days = 1 + static_cast<int>(rng() % 4);
    auto pick = [&](int lo) { return lo + static_cast<int>(rng() % static_cast<unsigned>(days - lo + 1)); };
    Bounds b = default_bounds(days);
    if (rng() % 2) {
      b.max_work_run = pick(1);
      b.max_off_run = pick(1);
      b.max_work_total = pick(1);
      b.max_off_total = pick(1);
    } else {
      b.min_work_run = pick(1);
      b.max_work_run = pick(b.min_work_run);
      b.min_off_run = pick(1);
      b.max_off_run = pick(b.min_off_run);
    }
    std::vector<RequestSpec> r;
    WorkerCount total = 0;
    for (int d = 0; d < days; ++d) {
      const auto lo = static_cast<WorkerCount>(rng() % 3);
      std::optional<WorkerCount> hi;
      if (rng() % 2) hi = lo + static_cast<WorkerCount>(rng() % 2);
      r.push_back({lo, hi});
      total += lo;
    }
    if ((total + 1) * days > 16) continue;
    ++checked;
    const auto p = parametric(days, b, r);
    std::vector<WorkerCount> feasible;
    for (WorkerCount n = 0; n <= total + 1; ++n) {
      if (naive_at(p, n)) feasible.push_back(n);
    }
    for (std::size_t i = 1; i < feasible.size(); ++i) ASSERT_EQ(feasible[i], feasible[i - 1] + 1) << describe(b);
    const auto best = minimize_workers(p);
    if (feasible.empty() || feasible.front() > total) {
      ASSERT_EQ(best.status, NClassification::InfeasibleForAll) << describe(b);
    } else {
      ASSERT_EQ(best.workers, feasible.front()) << describe(b);
    }
  }
  EXPECT_GE(checked, 300);
}

}  // namespace
}  // namespace dodo::optimize
