#include <gtest/gtest.h>

#include "dodo/classify.hpp"
#include "dodo/errors.hpp"
#include "dodo/feasibility.hpp"
#include "dodo/instance.hpp"
#include "dodo/schedule.hpp"

namespace dodo {
namespace {

Instance exact(int days, WorkerCount n, Bounds b, std::vector<WorkerCount> r) {
  return make_exact_instance(days, n, b, r);
}

TEST(Bounds, DefaultsNeverBind) {
  const Bounds b = default_bounds(7);
  EXPECT_EQ(b, (Bounds{1, 7, 1, 7, 7, 7}));
}

TEST(Bounds, ApplyDefaultsFillsOnlyMissing) {
  PartialBounds p;
  p.max_work_run = 3;
  p.min_off_run = 2;
  const Bounds b = apply_defaults(p, 5);
  EXPECT_EQ(b, (Bounds{1, 3, 2, 5, 5, 5}));
}

TEST(Bounds, RejectsOutOfRangeAndCrossedPairs) {
  EXPECT_THROW(validate_bounds({1, 6, 1, 5, 5, 5}, 5), ValidationError);
  EXPECT_THROW(validate_bounds({0, 5, 1, 5, 5, 5}, 5), ValidationError);
  EXPECT_THROW(validate_bounds({3, 2, 1, 5, 5, 5}, 5), ValidationError);
  EXPECT_THROW(validate_bounds({1, 5, 4, 3, 5, 5}, 5), ValidationError);
  EXPECT_THROW(default_bounds(0), ValidationError);
}

TEST(Instance, ValidateChecksRequestOrdering) {
  Instance in{2, 2, default_bounds(2), {{0, 2}, {1, 1}}};
  EXPECT_NO_THROW(validate(in));
  in.requests[0] = {2, 1};
  EXPECT_THROW(validate(in), ValidationError);
  in.requests[0] = {0, 3};
  EXPECT_THROW(validate(in), ValidationError);
  in.requests.pop_back();
  EXPECT_THROW(validate(in), ValidationError);
}

TEST(Instance, ParametricRoundTrip) {
  InstanceSpec spec{3, std::nullopt, {}, {{1, std::nullopt}, {0, 2}, {2, 2}}};
  const auto p = make_parametric(spec);
  const Instance at4 = at_workers(p, 4);
  EXPECT_EQ(at4.request(1), (RequestBound{1, 4}));
  EXPECT_EQ(at4.request(2), (RequestBound{0, 2}));
  const Instance at1 = at_workers(ParametricInstance{2, default_bounds(2), {{0, 3}, {1, std::nullopt}}}, 1);
  EXPECT_EQ(at1.request(1), (RequestBound{0, 1}));  // clamped
  EXPECT_THROW(at_workers(p, 1), ValidationError);   // rl = 2 > 1
  EXPECT_THROW(make_instance(spec), ValidationError);
  EXPECT_EQ(make_parametric(at4).requests[0], (RequestSpec{1, std::nullopt}));
}

TEST(CyclicInterval, MembershipWrapsAround) {
  // Offset 3, count 2 over N = 4: workers 4 and 1.
  const CyclicInterval iv{3, 2};
  EXPECT_TRUE(cyclic_member(iv, 4, 4));
  EXPECT_TRUE(cyclic_member(iv, 1, 4));
  EXPECT_FALSE(cyclic_member(iv, 2, 4));
  EXPECT_FALSE(cyclic_member(iv, 3, 4));
}

TEST(CyclicInterval, FullCountCoversEveryWorker) {
  // Residue N must count as a member: N = 2, offset 0, count 2.
  for (WorkerCount w = 1; w <= 2; ++w) EXPECT_TRUE(cyclic_member({0, 2}, w, 2));
  for (WorkerCount w = 1; w <= 5; ++w) EXPECT_TRUE(cyclic_member({7, 5}, w, 5));
  EXPECT_FALSE(cyclic_member({1, 0}, 1, 3));
}

TEST(CyclicInterval, CanonicalForm) {
  EXPECT_EQ(canonical({7, 2}, 5), (CyclicInterval{2, 2}));
  EXPECT_EQ(canonical({-1, 2}, 5), (CyclicInterval{4, 2}));
  EXPECT_EQ(canonical({3, 5}, 5), (CyclicInterval{0, 5}));
  EXPECT_EQ(canonical({3, 0}, 5), (CyclicInterval{0, 0}));
}

TEST(Schedule, CompactAndDenseAgree) {
  const auto c = Schedule::from_compact(3, 4, {{3, 2}, {0, 4}, {1, 1}});
  const auto d = c.to_dense();
  EXPECT_FALSE(d.is_compact());
  EXPECT_EQ(d.rows(), (std::vector<std::string>{"110", "011", "010", "110"}));
  EXPECT_EQ(c, d);
  EXPECT_EQ(c.on_count(1), 2);
  const auto back = d.compact_form();
  ASSERT_TRUE(back);
  EXPECT_EQ((*back)[0], (CyclicInterval{3, 2}));
  EXPECT_EQ((*back)[2], (CyclicInterval{1, 1}));
}

TEST(Schedule, CompactFormRejectsSplitDays) {
  const auto s = Schedule::from_rows(1, {"1", "0", "1", "0"});
  EXPECT_FALSE(s.compact_form());
}

TEST(Schedule, RowValidation) {
  EXPECT_THROW(Schedule::from_rows(3, {"10"}), DimensionError);
  EXPECT_THROW(Schedule::from_rows(2, {"1x"}), ParseError);
  EXPECT_THROW(Schedule::from_compact(2, 2, {{0, 3}, {0, 0}}), ValidationError);
}

TEST(Schedule, SetExpandsCompactStorage) {
  auto s = Schedule::from_compact(2, 2, {{0, 1}, {0, 1}});
  s.set(2, 2, true);
  EXPECT_FALSE(s.is_compact());
  EXPECT_EQ(s.rows(), (std::vector<std::string>{"11", "01"}));
}

TEST(Periods, SplitIntoMaximalRuns) {
  const auto s = Schedule::from_rows(6, {"110001"});
  const auto p = worker_periods(s, 1);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], (Period{1, Shift::On, 1, 2}));
  EXPECT_EQ(p[1], (Period{1, Shift::Off, 3, 5}));
  EXPECT_EQ(p[2], (Period{1, Shift::On, 6, 6}));
}

TEST(Feasibility, NeverWorkingIsOneOffPeriodOfLengthD) {
  const auto s = Schedule::from_rows(4, {"0000"});
  EXPECT_TRUE(check_schedule(exact(4, 1, default_bounds(4), {0, 0, 0, 0}), s).feasible());
  const auto r = check_schedule(exact(4, 1, {1, 4, 1, 3, 4, 4}, {0, 0, 0, 0}), s);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].constraint, Constraint::OffRunMax);
  EXPECT_EQ(r.violations[0].value, 4);
}

TEST(Feasibility, BoundaryPeriodsObeyLowerBounds) {
  // Non-cyclic: the last single ON day violates lw = 2.
  const auto s = Schedule::from_rows(5, {"11001"});
  const auto r = check_schedule(exact(5, 1, {2, 5, 1, 5, 5, 5}, {1, 1, 0, 0, 1}), s);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].constraint, Constraint::WorkRunMin);
  EXPECT_EQ(r.violations[0].first_day, 5);
}

TEST(Feasibility, ReportsEveryViolationKind) {
  const auto s = Schedule::from_rows(4, {"1110", "0000"});
  const Instance in{4, 2, {2, 2, 2, 3, 2, 3}, {{2, 2}, {0, 0}, {1, 2}, {0, 2}}};
  const auto r = check_schedule(in, s);
  std::vector<Constraint> kinds;
  for (const auto& v : r.violations) kinds.push_back(v.constraint);
  const std::vector<Constraint> want{Constraint::RequestLower, Constraint::RequestUpper, Constraint::WorkRunMax,
                                     Constraint::OffRunMin,    Constraint::WorkTotal,    Constraint::OffRunMax,
                                     Constraint::OffTotal};
  EXPECT_EQ(kinds, want);
  for (const auto& v : r.violations) EXPECT_FALSE(describe(v).empty());
}

TEST(Feasibility, DimensionMismatchThrows) {
  EXPECT_THROW(check_schedule(exact(3, 2, default_bounds(3), {0, 0, 0}), Schedule(3, 1)), DimensionError);
}

TEST(Fifo, DetectsOvertaking) {
  // Worker 1 starts work on day 1 and ends day 4; worker 2 starts day 2, ends day 2.
  EXPECT_FALSE(check_fifo(Schedule::from_rows(5, {"11110", "01000"})));
  EXPECT_TRUE(check_fifo(Schedule::from_rows(5, {"11000", "01110"})));
  // Equal starts may end in any order.
  EXPECT_TRUE(check_fifo(Schedule::from_rows(4, {"1100", "1110"})));
}

TEST(Classify, RoutesInOrder) {
  EXPECT_EQ(classify_instance(exact(3, 1, {1, 2, 1, 3, 2, 3}, {1, 0, 1})), ComplexityClass::UdodospPoly);
  EXPECT_EQ(classify_instance(exact(3, 1, {2, 3, 1, 3, 3, 3}, {1, 1, 0})), ComplexityClass::LdodospPoly);
  Instance trivial{3, 1, {2, 3, 1, 3, 2, 3}, {{0, 1}, {0, 1}, {0, 0}}};
  EXPECT_EQ(classify_instance(trivial), ComplexityClass::TrivialAllOff);
  trivial.bounds.max_off_run = 2;
  EXPECT_EQ(classify_instance(trivial), ComplexityClass::GeneralHard);
  EXPECT_STREQ(to_string(ComplexityClass::GeneralHard), "GENERAL_HARD");
}

}  // namespace
}  // namespace dodo
