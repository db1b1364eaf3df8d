#include "dodo/schedule.hpp"

#include <sstream>
#include <stdexcept>

#include "dodo/checked.hpp"
#include "dodo/errors.hpp"

namespace dodo {

const char* to_string(Shift shift) { return shift == Shift::On ? "ON" : "OFF"; }

CyclicInterval canonical(CyclicInterval interval, WorkerCount workers) {
  if (workers <= 0 || interval.count <= 0 || interval.count >= workers) {
    return {0, interval.count};
  }
  return {floor_mod(interval.offset, workers), interval.count};
}

bool cyclic_member(const CyclicInterval& interval, WorkerCount worker, WorkerCount workers) {
  if (interval.count <= 0) return false;
  const WorkerCount residue = floor_mod(worker - interval.offset - 1, workers) + 1;
  return residue <= interval.count;
}

Schedule::Schedule(int days, WorkerCount workers) : days_(days), workers_(workers) {
  if (days < 1) throw ValidationError("schedule needs at least one day");
  if (workers < 0) throw ValidationError("worker count must be non-negative");
  dense_.assign(static_cast<std::size_t>(checked_mul(workers, days)), 0);
}

Schedule Schedule::from_rows(int days, const std::vector<std::string>& rows) {
  Schedule s(days, static_cast<WorkerCount>(rows.size()));
  for (std::size_t w = 0; w < rows.size(); ++w) {
    if (static_cast<int>(rows[w].size()) != days) {
      throw DimensionError("row " + std::to_string(w + 1) + " has " + std::to_string(rows[w].size()) +
                           " entries, expected " + std::to_string(days));
    }
    for (int d = 1; d <= days; ++d) {
      const char c = rows[w][static_cast<std::size_t>(d - 1)];
      if (c != '0' && c != '1') throw ParseError(std::string("schedule rows may only contain '0' and '1', got '") + c + "'");
      s.dense_[s.cell(static_cast<WorkerCount>(w + 1), d)] = c == '1';
    }
  }
  return s;
}

Schedule Schedule::from_compact(int days, WorkerCount workers, std::vector<CyclicInterval> per_day) {
  if (days < 1) throw ValidationError("schedule needs at least one day");
  if (workers < 0) throw ValidationError("worker count must be non-negative");
  if (static_cast<int>(per_day.size()) != days) {
    throw DimensionError("compact schedule has " + std::to_string(per_day.size()) + " days, expected " +
                         std::to_string(days));
  }
  for (std::size_t d = 0; d < per_day.size(); ++d) {
    if (per_day[d].count < 0 || per_day[d].count > workers) {
      throw ValidationError("compact count of day " + std::to_string(d + 1) + " outside [0, N]");
    }
  }
  Schedule s;
  s.days_ = days;
  s.workers_ = workers;
  s.compact_ = std::move(per_day);
  return s;
}

std::size_t Schedule::cell(WorkerCount worker, int day) const {
  return static_cast<std::size_t>((worker - 1) * days_ + (day - 1));
}

bool Schedule::on(WorkerCount worker, int day) const {
  if (compact_) return cyclic_member((*compact_)[static_cast<std::size_t>(day - 1)], worker, workers_);
  return dense_[cell(worker, day)] != 0;
}

void Schedule::set(WorkerCount worker, int day, bool on_duty) {
  if (compact_) *this = to_dense();
  dense_[cell(worker, day)] = on_duty ? 1 : 0;
}

WorkerCount Schedule::on_count(int day) const {
  if (compact_) return (*compact_)[static_cast<std::size_t>(day - 1)].count;
  WorkerCount count = 0;
  for (WorkerCount w = 1; w <= workers_; ++w) count += on(w, day);
  return count;
}

int Schedule::work_total(WorkerCount worker) const {
  int total = 0;
  for (int d = 1; d <= days_; ++d) total += on(worker, d);
  return total;
}

Schedule Schedule::to_dense(std::int64_t max_cells) const {
  if (!compact_) return *this;
  if (workers_ > 0 && checked_mul(workers_, days_) > max_cells) {
    throw std::length_error("schedule with " + std::to_string(workers_) + " workers is too large to expand");
  }
  Schedule s(days_, workers_);
  for (int d = 1; d <= days_; ++d) {
    const auto& iv = (*compact_)[static_cast<std::size_t>(d - 1)];
    for (WorkerCount i = 1; i <= iv.count; ++i) {
      const WorkerCount w = floor_mod(iv.offset + i - 1, workers_) + 1;
      s.dense_[s.cell(w, d)] = 1;
    }
  }
  return s;
}

std::optional<std::vector<CyclicInterval>> Schedule::compact_form() const {
  if (compact_) {
    std::vector<CyclicInterval> out;
    out.reserve(compact_->size());
    for (const auto& iv : *compact_) out.push_back(canonical(iv, workers_));
    return out;
  }
  std::vector<CyclicInterval> out;
  out.reserve(static_cast<std::size_t>(days_));
  for (int d = 1; d <= days_; ++d) {
    const WorkerCount count = on_count(d);
    if (count == 0 || count == workers_) {
      out.push_back({0, count});
      continue;
    }
    // A proper cyclic interval starts exactly once: at an ON worker whose
    // cyclic predecessor is OFF.
    std::optional<WorkerCount> start;
    for (WorkerCount w = 1; w <= workers_; ++w) {
      const WorkerCount prev = w == 1 ? workers_ : w - 1;
      if (on(w, d) && !on(prev, d)) {
        if (start) return std::nullopt;
        start = w;
      }
    }
    out.push_back({*start - 1, count});
  }
  return out;
}

std::vector<std::string> Schedule::rows() const {
  const Schedule dense = to_dense();
  std::vector<std::string> out(static_cast<std::size_t>(workers_), std::string(static_cast<std::size_t>(days_), '0'));
  for (WorkerCount w = 1; w <= workers_; ++w) {
    for (int d = 1; d <= days_; ++d) {
      if (dense.on(w, d)) out[static_cast<std::size_t>(w - 1)][static_cast<std::size_t>(d - 1)] = '1';
    }
  }
  return out;
}

bool operator==(const Schedule& a, const Schedule& b) {
  if (a.days_ != b.days_ || a.workers_ != b.workers_) return false;
  if (a.compact_ && b.compact_) return a.compact_form() == b.compact_form();
  if (!a.compact_ && !b.compact_) return a.dense_ == b.dense_;
  return a.to_dense().dense_ == b.to_dense().dense_;
}

std::vector<Period> worker_periods(const Schedule& schedule, WorkerCount worker) {
  std::vector<Period> out;
  const int days = schedule.days();
  int first = 1;
  Shift kind = schedule.on(worker, 1) ? Shift::On : Shift::Off;
  for (int d = 2; d <= days + 1; ++d) {
    const Shift next = d <= days ? (schedule.on(worker, d) ? Shift::On : Shift::Off) : kind;
    if (d > days || next != kind) {
      out.push_back({worker, kind, first, d - 1});
      first = d;
      kind = next;
    }
  }
  return out;
}

std::vector<Period> all_periods(const Schedule& schedule) {
  std::vector<Period> out;
  for (WorkerCount w = 1; w <= schedule.workers(); ++w) {
    auto periods = worker_periods(schedule, w);
    out.insert(out.end(), periods.begin(), periods.end());
  }
  return out;
}

}  // namespace dodo
