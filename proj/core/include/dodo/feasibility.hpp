#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dodo/instance.hpp"
#include "dodo/schedule.hpp"

namespace dodo {

enum class Constraint {
  RequestLower,  // fewer than rl^d workers on duty
  RequestUpper,  // more than ru^d workers on duty
  WorkRunMin,    // work period shorter than lw
  WorkRunMax,    // work period longer than uw
  OffRunMin,     // off period shorter than lo
  OffRunMax,     // off period longer than uo
  WorkTotal,     // more than Uw days on duty
  OffTotal,      // more than Uo days off
};

const char* to_string(Constraint constraint);

/// One violated constraint. Request violations carry worker 0 and a single
/// day; period violations carry the period's days; total violations span the
/// whole horizon.
struct Violation {
  Constraint constraint;
  WorkerCount worker = 0;
  int first_day = 0;
  int last_day = 0;
  std::int64_t value = 0;  // observed headcount, length or total
  std::int64_t limit = 0;  // the bound it breaks

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& violation);

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
};

/// Lists every violated constraint of `schedule` on `instance`. Periods touching
/// day 1 or day D obey the same run bounds as inner periods.
/// Throws DimensionError if D or N differ.
FeasibilityReport check_schedule(const Instance& instance, const Schedule& schedule);

/// Like check_schedule but ignores the per-day requests.
FeasibilityReport check_worker_bounds(const Instance& instance, const Schedule& schedule);

/// First-in-first-out property: for same-kind periods P, Q of any workers,
/// first_day(P) < first_day(Q) implies last_day(P) <= last_day(Q).
bool check_fifo(const Schedule& schedule);

}  // namespace dodo
