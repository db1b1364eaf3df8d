#include <gtest/gtest.h>

#include <random>

#include "dodo/diffcon.hpp"
#include "dodo/errors.hpp"
#include "dodo/feasibility.hpp"
#include "dodo/udodosp.hpp"
#include "naive.hpp"
#include "sweep.hpp"

namespace dodo {
namespace {

Bounds upper(int uw, int uo, int Uw, int Uo) {
  return {1, uw, 1, uo, Uw, Uo};
}

TEST(AffineWeight, EvaluatesAndPrints) {
  const AffineWeight w{2, -3};
  EXPECT_EQ(w.at(5), 7);
  EXPECT_EQ(to_string(w), "2N - 3");
  EXPECT_EQ(to_string({-1, 0}), "-N");
  EXPECT_EQ(to_string({0, 4}), "4");
  EXPECT_EQ((w + AffineWeight{-2, 1}), (AffineWeight{0, -2}));
  EXPECT_THROW((AffineWeight{INT64_MAX, 0}.at(2)), std::overflow_error);
}

TEST(DiffCon, FeasiblePotentialSatisfiesAllEdges) {
  DiffConGraph g(3);
  g.add_constraint(1, 0, {0, 4}, "a");
  g.add_constraint(2, 1, {0, -1}, "b");
  g.add_constraint(0, 2, {0, -2}, "c");
  const auto r = solve_potential(g, 0, 0);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.potential()[0], 0);
  EXPECT_TRUE(is_feasible_potential(g, r.potential(), 0));
}

TEST(DiffCon, NegativeCycleIsReturnedInOrder) {
  DiffConGraph g(3);
  g.add_constraint(1, 0, {0, 1}, "a");
  g.add_constraint(2, 1, {1, 0}, "b");
  g.add_constraint(0, 2, {0, -3}, "c");
  EXPECT_TRUE(solve_potential(g, 2).feasible());
  const auto r = solve_potential(g, 1);
  ASSERT_FALSE(r.feasible());
  const auto& c = r.cycle();
  EXPECT_EQ(c.edges.size(), 3u);
  EXPECT_EQ(c.total, (AffineWeight{1, -2}));
  EXPECT_EQ(c.weight_at_n, -1);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = g.edges()[c.edges[i]];
    const auto& next = g.edges()[c.edges[(i + 1) % c.edges.size()]];
    EXPECT_EQ(e.head, next.tail);
  }
  const auto lines = describe_cycle(g, c, 1);
  EXPECT_EQ(lines.size(), 4u);
  EXPECT_NE(lines.back().find("N - 2"), std::string::npos);
}

TEST(DiffCon, RejectsBadVertices) {
  DiffConGraph g(2);
  EXPECT_THROW(g.add_constraint(2, 0, {}, "x"), std::out_of_range);
  EXPECT_THROW(DiffConGraph(0), std::invalid_argument);
}

TEST(CheckExact, WindowTooDenseForUw) {
  // Days 2..4 request 5 ON-slots, but two workers with uw = 2 cover at most 4.
  const auto in = make_exact_instance(5, 2, upper(2, 5, 5, 5), {1, 2, 1, 2, 1});
  EXPECT_FALSE(udodosp::check_exact(in));
  EXPECT_FALSE(testing::naive_decide(in));
  auto relaxed = in;
  relaxed.bounds.max_work_run = 3;
  EXPECT_TRUE(udodosp::check_exact(relaxed));
}

TEST(CheckExact, AlternatingPairUnderUwTotal) {
  const auto in = make_exact_instance(4, 2, upper(4, 2, 2, 4), {1, 1, 1, 1});
  ASSERT_TRUE(udodosp::check_exact(in));
  const auto s = udodosp::schedule_exact(in);
  EXPECT_EQ(s.rows(), (std::vector<std::string>{"1010", "0101"}));
  EXPECT_TRUE(check_schedule(in, s).feasible());
}

TEST(CheckExact, RequiresUpperOnlyExactInstances) {
  EXPECT_THROW(udodosp::check_exact(make_exact_instance(3, 1, {2, 3, 1, 3, 3, 3}, {1, 1, 0})), ValidationError);
  Instance interval{2, 1, default_bounds(2), {{0, 1}, {1, 1}}};
  EXPECT_THROW(udodosp::check_exact(interval), ValidationError);
  EXPECT_THROW(udodosp::schedule_exact(make_exact_instance(2, 1, upper(1, 2, 2, 2), {1, 1})), InfeasibleError);
}

TEST(CheckExact, ZeroWorkers) {
  const auto in = make_exact_instance(3, 0, default_bounds(3), {0, 0, 0});
  EXPECT_TRUE(udodosp::check_exact(in));
  EXPECT_EQ(udodosp::schedule_exact(in).workers(), 0);
}

TEST(CheckExact, MatchesNaiveEnumeration) {
  for (int days = 1; days <= 4; ++days) {
    for (WorkerCount n = 1; n <= 2; ++n) {
      for (const auto& b : testing::upper_bound_combos(days)) {
        testing::for_each_exact_request(days, n, [&](const std::vector<WorkerCount>& r) {
          const auto in = make_exact_instance(days, n, b, r);
          const bool fast = udodosp::check_exact(in);
          ASSERT_EQ(fast, testing::naive_decide(in)) << describe(b);
          if (fast) ASSERT_TRUE(check_schedule(in, udodosp::schedule_exact(in)).feasible());
        });
      }
    }
  }
}

TEST(Intervals, UwOneForcesNegativeCycle) {
  const auto in = make_exact_instance(2, 1, upper(1, 2, 2, 2), {1, 1});
  const auto sol = udodosp::solve(in);
  ASSERT_FALSE(sol.feasible());
  ASSERT_TRUE(sol.witness);
  bool names_window = false;
  for (const auto& line : sol.witness->chain) names_window |= line.find("work window (uw)") != std::string::npos;
  EXPECT_TRUE(names_window);
  EXPECT_LT(sol.witness->cycle.weight_at_n, 0);
}

TEST(Intervals, NineDayInstanceIsFeasible) {
  Instance in{9, 4, upper(4, 2, 6, 4), {}};
  for (auto [lo, hi] : std::vector<std::pair<int, int>>{{1, 3}, {1, 1}, {1, 4}, {2, 3}, {4, 4}, {1, 3}, {2, 4}, {2, 2}, {1, 2}}) {
    in.requests.push_back({lo, hi});
  }
  const auto sol = udodosp::solve(in);
  ASSERT_TRUE(sol.feasible());
  EXPECT_TRUE(check_schedule(in, *sol.schedule).feasible());
  EXPECT_TRUE(sol.schedule->is_compact());
}

TEST(Intervals, MatchNaiveEnumerationOnIntervalRequests) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int days = 1 + static_cast<int>(rng() % 4);
    const WorkerCount n = 1 + static_cast<WorkerCount>(rng() % 3);
    if (n * days > 12) continue;
    auto pick = [&](int hi) { return 1 + static_cast<int>(rng() % static_cast<unsigned>(hi)); };
    Instance in{days, n, upper(pick(days), pick(days), pick(days), pick(days)), {}};
    for (int d = 0; d < days; ++d) {
      const auto a = static_cast<WorkerCount>(rng() % static_cast<unsigned>(n + 1));
      const auto b = static_cast<WorkerCount>(rng() % static_cast<unsigned>(n + 1));
      in.requests.push_back({std::min(a, b), std::max(a, b)});
    }
    const auto sol = udodosp::solve(in);
    ASSERT_EQ(sol.feasible(), testing::naive_decide(in));
    if (sol.feasible()) ASSERT_TRUE(check_schedule(in, *sol.schedule).feasible());
  }
}

}  // namespace
}  // namespace dodo
