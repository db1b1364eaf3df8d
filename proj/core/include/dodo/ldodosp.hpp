#pragma once

#include <optional>
#include <vector>

#include "dodo/diffcon.hpp"
#include "dodo/instance.hpp"
#include "dodo/schedule.hpp"

/// Instances with Uw = Uo = D, where only local (period-length) bounds bind.
namespace dodo::ldodosp {

/// S^d: work periods starting on days <= d.  T^d: work periods ending on days <= d-1.
/// Index d-1 holds day d.
struct PeriodCounters {
  std::vector<WorkerCount> started;
  std::vector<WorkerCount> terminated;

  int days() const { return static_cast<int>(started.size()); }
  friend bool operator==(const PeriodCounters&, const PeriodCounters&) = default;
};

/// The same counters for off periods.
struct OffCounters {
  std::vector<WorkerCount> started;
  std::vector<WorkerCount> terminated;

  friend bool operator==(const OffCounters&, const OffCounters&) = default;
};

PeriodCounters counters_from_schedule(const Schedule& schedule);

/// Off counters counted directly from the schedule's off periods.
OffCounters off_counters_from_schedule(const Schedule& schedule);

/// Off counters derived from work counters:
/// So^d = T^d + N - S^1 and To^d = S^d - S^1.
OffCounters off_counters(const PeriodCounters& counters, WorkerCount workers);

/// Replacement functions for the counting families: each maps day d (1..D) to
/// a day in [1, D+1] and must be non-decreasing. The table holds f(1)..f(D).
/// A value of D+1 drops the constraint for that d. Boundary equalities keep
/// the plain lw / lo form.
struct MonotoneBoundFns {
  std::optional<std::vector<int>> min_work;  // replaces d + lw
  std::optional<std::vector<int>> max_work;  // replaces d + uw
  std::optional<std::vector<int>> min_off;   // replaces d + lo
  std::optional<std::vector<int>> max_off;   // replaces d + uo
};

enum class Counter { Started, Terminated };

/// Extra user constraint lhs^{lhs_day} - rhs^{rhs_day} <= bound.
struct CounterConstraint {
  Counter lhs = Counter::Started;
  int lhs_day = 1;
  Counter rhs = Counter::Started;
  int rhs_day = 1;
  AffineWeight bound;
};

struct CounterOptions {
  MonotoneBoundFns bound_fns;
  std::vector<CounterConstraint> extra;
};

/// Vertex of S^d is d-1, vertex of T^d is D+d-1.
int started_vertex(int days, int day);
int terminated_vertex(int days, int day);

/// Potential graph of the counter system (structural, boundary, counting and
/// request families). T^1 = 0 is not an edge: solutions are anchored there.
/// Throws ValidationError for non-monotone or out-of-range bound functions.
DiffConGraph build_graph(const ParametricInstance& instance, const CounterOptions& options = {},
                         bool workforce_caps = false);

struct CounterSolution {
  std::optional<PeriodCounters> counters;
  std::optional<InfeasibilityWitness> witness;

  bool feasible() const { return counters.has_value(); }
};

/// Global bounds Uw, Uo are ignored. O(D^2).
CounterSolution solve_counters(const Instance& instance, const CounterOptions& options = {});

/// Every inequality of the counter system violated by `counters`, rendered;
/// empty iff the counters are feasible for the instance.
std::vector<std::string> counter_violations(const Instance& instance, const PeriodCounters& counters,
                                            const CounterOptions& options = {});

/// On day d the representatives T^d+1 .. S^d work; compact offset T^d mod N,
/// count S^d - T^d. Throws ValidationError if the counters violate the system.
Schedule counters_to_schedule(const Instance& instance, const PeriodCounters& counters,
                              const CounterOptions& options = {});

struct Solution {
  std::optional<Schedule> schedule;
  std::optional<PeriodCounters> counters;
  std::optional<InfeasibilityWitness> witness;

  bool feasible() const { return schedule.has_value(); }
};

/// solve_counters followed by counters_to_schedule. Throws ValidationError
/// unless Uw = Uo = D.
Solution solve(const Instance& instance, const CounterOptions& options = {});

}  // namespace dodo::ldodosp
