#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dodo/instance.hpp"

namespace dodo {

enum class Shift : std::uint8_t { On = 0, Off = 1 };

const char* to_string(Shift shift);

/// The workers on duty on one day, as a cyclic range of worker indices:
/// workers ((offset + i - 1) mod N) + 1 for i = 1..count.
struct CyclicInterval {
  WorkerCount offset = 0;
  WorkerCount count = 0;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

/// Canonical form of a cyclic interval: offset reduced mod N, and offset 0 when
/// the interval is empty or covers everybody (the offset is meaningless there).
CyclicInterval canonical(CyclicInterval interval, WorkerCount workers);

/// An ON/OFF assignment for N workers over D days. Workers and days are 1-based.
///
/// Storage is either dense (one bit per worker and day) or compact (one cyclic
/// interval per day). Compact schedules are what the constructive solvers
/// emit; N may be far larger than anything a dense matrix could hold.
class Schedule {
 public:
  /// Dense all-OFF schedule.
  Schedule(int days, WorkerCount workers);

  /// Dense schedule from rows of '0'/'1' characters, one row per worker.
  static Schedule from_rows(int days, const std::vector<std::string>& rows);

  /// Compact schedule; `per_day` holds one interval per day.
  static Schedule from_compact(int days, WorkerCount workers, std::vector<CyclicInterval> per_day);

  int days() const { return days_; }
  WorkerCount workers() const { return workers_; }
  bool is_compact() const { return compact_.has_value(); }

  bool on(WorkerCount worker, int day) const;
  /// Dense schedules only; a compact schedule is expanded first.
  void set(WorkerCount worker, int day, bool on_duty);

  WorkerCount on_count(int day) const;
  /// Number of ON days of one worker over the whole horizon.
  int work_total(WorkerCount worker) const;

  /// Expands to dense storage. Throws std::length_error above `max_cells` cells.
  Schedule to_dense(std::int64_t max_cells = 100'000'000) const;

  /// Canonical compact form, or nullopt when some day's ON set is not a cyclic
  /// interval of worker indices.
  std::optional<std::vector<CyclicInterval>> compact_form() const;

  /// Rows of '0'/'1' characters (expands compact storage).
  std::vector<std::string> rows() const;

  /// Same dimensions and the same assignment, regardless of storage.
  friend bool operator==(const Schedule& a, const Schedule& b);

 private:
  Schedule() = default;
  std::size_t cell(WorkerCount worker, int day) const;

  int days_ = 0;
  WorkerCount workers_ = 0;
  std::vector<std::uint8_t> dense_;  // worker-major, days_ entries per worker
  std::optional<std::vector<CyclicInterval>> compact_;
};

/// Membership test of the compact encoding: worker n is on duty iff
/// 1 <= ((n - offset - 1) mod N) + 1 <= count.
bool cyclic_member(const CyclicInterval& interval, WorkerCount worker, WorkerCount workers);

/// Inclusion-maximal run of equal shifts of one worker.
struct Period {
  WorkerCount worker = 0;
  Shift kind = Shift::Off;
  int first_day = 0;
  int last_day = 0;

  int length() const { return last_day - first_day + 1; }
  friend bool operator==(const Period&, const Period&) = default;
};

/// The periods of one worker in day order. A worker who never works has a
/// single OFF period covering all days.
std::vector<Period> worker_periods(const Schedule& schedule, WorkerCount worker);

/// All periods of all workers, worker by worker.
std::vector<Period> all_periods(const Schedule& schedule);

}  // namespace dodo
