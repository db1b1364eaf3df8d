#include "dodo/feasibility.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dodo/errors.hpp"

namespace dodo {

const char* to_string(Constraint constraint) {
  switch (constraint) {
    case Constraint::RequestLower: return "request lower bound";
    case Constraint::RequestUpper: return "request upper bound";
    case Constraint::WorkRunMin: return "lw";
    case Constraint::WorkRunMax: return "uw";
    case Constraint::OffRunMin: return "lo";
    case Constraint::OffRunMax: return "uo";
    case Constraint::WorkTotal: return "Uw";
    case Constraint::OffTotal: return "Uo";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::ostringstream out;
  switch (v.constraint) {
    case Constraint::RequestLower:
      out << "day " << v.first_day << ": " << v.value << " on duty, at least " << v.limit << " requested";
      break;
    case Constraint::RequestUpper:
      out << "day " << v.first_day << ": " << v.value << " on duty, at most " << v.limit << " requested";
      break;
    case Constraint::WorkRunMin:
    case Constraint::WorkRunMax:
    case Constraint::OffRunMin:
    case Constraint::OffRunMax: {
      const bool work = v.constraint == Constraint::WorkRunMin || v.constraint == Constraint::WorkRunMax;
      const bool min = v.constraint == Constraint::WorkRunMin || v.constraint == Constraint::OffRunMin;
      out << "worker " << v.worker << ": " << (work ? "work" : "off") << " period days " << v.first_day << "-"
          << v.last_day << " has length " << v.value << ", " << to_string(v.constraint) << " = " << v.limit
          << (min ? " (too short)" : " (too long)");
      break;
    }
    case Constraint::WorkTotal:
      out << "worker " << v.worker << ": " << v.value << " days on duty, Uw = " << v.limit;
      break;
    case Constraint::OffTotal:
      out << "worker " << v.worker << ": " << v.value << " days off, Uo = " << v.limit;
      break;
  }
  return out.str();
}

namespace {

void check_dimensions(const Instance& instance, const Schedule& schedule) {
  if (schedule.days() != instance.days || schedule.workers() != instance.workers) {
    std::ostringstream msg;
    msg << "schedule is " << schedule.workers() << " workers x " << schedule.days() << " days, instance is "
        << instance.workers << " x " << instance.days;
    throw DimensionError(msg.str());
  }
}

void collect_worker_violations(const Instance& instance, const Schedule& schedule, FeasibilityReport& report) {
  const Bounds& b = instance.bounds;
  for (WorkerCount w = 1; w <= schedule.workers(); ++w) {
    int work_total = 0;
    for (const Period& p : worker_periods(schedule, w)) {
      const int len = p.length();
      if (p.kind == Shift::On) {
        work_total += len;
        if (len < b.min_work_run) report.violations.push_back({Constraint::WorkRunMin, w, p.first_day, p.last_day, len, b.min_work_run});
        if (len > b.max_work_run) report.violations.push_back({Constraint::WorkRunMax, w, p.first_day, p.last_day, len, b.max_work_run});
      } else {
        if (len < b.min_off_run) report.violations.push_back({Constraint::OffRunMin, w, p.first_day, p.last_day, len, b.min_off_run});
        if (len > b.max_off_run) report.violations.push_back({Constraint::OffRunMax, w, p.first_day, p.last_day, len, b.max_off_run});
      }
    }
    const int off_total = instance.days - work_total;
    if (work_total > b.max_work_total) {
      report.violations.push_back({Constraint::WorkTotal, w, 1, instance.days, work_total, b.max_work_total});
    }
    if (off_total > b.max_off_total) {
      report.violations.push_back({Constraint::OffTotal, w, 1, instance.days, off_total, b.max_off_total});
    }
  }
}

}  // namespace

FeasibilityReport check_schedule(const Instance& instance, const Schedule& schedule) {
  check_dimensions(instance, schedule);
  FeasibilityReport report;
  for (int d = 1; d <= instance.days; ++d) {
    const WorkerCount count = schedule.on_count(d);
    const auto& r = instance.request(d);
    if (count < r.lower) report.violations.push_back({Constraint::RequestLower, 0, d, d, count, r.lower});
    if (count > r.upper) report.violations.push_back({Constraint::RequestUpper, 0, d, d, count, r.upper});
  }
  collect_worker_violations(instance, schedule, report);
  return report;
}

FeasibilityReport check_worker_bounds(const Instance& instance, const Schedule& schedule) {
  check_dimensions(instance, schedule);
  FeasibilityReport report;
  collect_worker_violations(instance, schedule, report);
  return report;
}

namespace {

// Groups periods by first day; every period of a later group must end no
// earlier than the latest end among all earlier groups.
bool fifo_for(const std::vector<Period>& periods) {
  std::map<int, std::pair<int, int>> by_first;  // first day -> (min last, max last)
  for (const auto& p : periods) {
    auto [it, inserted] = by_first.try_emplace(p.first_day, p.last_day, p.last_day);
    if (!inserted) {
      it->second.first = std::min(it->second.first, p.last_day);
      it->second.second = std::max(it->second.second, p.last_day);
    }
  }
  int latest_end = 0;
  for (const auto& [first, range] : by_first) {
    if (range.first < latest_end) return false;
    latest_end = std::max(latest_end, range.second);
  }
  return true;
}

}  // namespace

bool check_fifo(const Schedule& schedule) {
  std::vector<Period> work, off;
  for (const auto& p : all_periods(schedule)) (p.kind == Shift::On ? work : off).push_back(p);
  return fifo_for(work) && fifo_for(off);
}

}  // namespace dodo
