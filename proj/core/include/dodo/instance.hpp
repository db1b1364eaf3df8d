#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dodo {

using WorkerCount = std::int64_t;

/// Period-length and total bounds of one instance. All values are day counts.
///
/// A bound at its default (1 for the run minima, D for everything else) never
/// binds; see `apply_defaults`.
struct Bounds {
  int min_work_run = 1;    // lw
  int max_work_run = 1;    // uw
  int min_off_run = 1;     // lo
  int max_off_run = 1;     // uo
  int max_work_total = 1;  // Uw
  int max_off_total = 1;   // Uo

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Bounds as read from an input file; absent entries take their default.
struct PartialBounds {
  std::optional<int> min_work_run;
  std::optional<int> max_work_run;
  std::optional<int> min_off_run;
  std::optional<int> max_off_run;
  std::optional<int> max_work_total;
  std::optional<int> max_off_total;
};

/// Trivial bounds for a horizon of `days` days.
Bounds default_bounds(int days);

/// Fills absent bounds with their defaults and validates the result:
/// every bound in [1, days], min_work_run <= max_work_run, min_off_run <= max_off_run.
/// Throws ValidationError.
Bounds apply_defaults(const PartialBounds& partial, int days);

/// Validates already complete bounds with the same rules as `apply_defaults`.
void validate_bounds(const Bounds& bounds, int days);

/// Closed interval [lower, upper] on the number of workers on duty for one day.
struct RequestBound {
  WorkerCount lower = 0;
  WorkerCount upper = 0;

  bool exact() const { return lower == upper; }
  friend bool operator==(const RequestBound&, const RequestBound&) = default;
};

/// A request whose upper side may be left open. An open upper side means
/// "at most the whole workforce", which stays meaningful when N varies.
struct RequestSpec {
  WorkerCount lower = 0;
  std::optional<WorkerCount> upper;

  friend bool operator==(const RequestSpec&, const RequestSpec&) = default;
};

/// A fully specified problem instance: D days, N workers, bounds and one
/// request interval per day (index d-1 holds day d).
struct Instance {
  int days = 1;
  WorkerCount workers = 0;
  Bounds bounds;
  std::vector<RequestBound> requests;

  bool has_exact_requests() const;
  const RequestBound& request(int day) const { return requests[static_cast<std::size_t>(day - 1)]; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ValidationError unless days >= 1, workers >= 0, bounds are valid and
/// 0 <= rl <= ru <= N holds for all D requests.
void validate(const Instance& instance);

/// Builds a validated instance with exact requests r^d.
Instance make_exact_instance(int days, WorkerCount workers, const Bounds& bounds,
                             const std::vector<WorkerCount>& exact_requests);

/// An instance as it appears in an input file. `workers` may be absent (for the
/// worker-count minimization), bounds may be partial and `requests` may be
/// empty, meaning no request on any day.
struct InstanceSpec {
  int days = 1;
  std::optional<WorkerCount> workers;
  PartialBounds bounds;
  std::vector<RequestSpec> requests;
};

/// An instance whose worker count is a free parameter. Bounds are complete.
struct ParametricInstance {
  int days = 1;
  Bounds bounds;
  std::vector<RequestSpec> requests;  // always D entries
};

/// Defaults and validates `spec` at worker count `workers` (falls back to
/// spec.workers). Throws ValidationError when no worker count is known.
Instance make_instance(const InstanceSpec& spec, std::optional<WorkerCount> workers = std::nullopt);

/// Defaults bounds and pads requests, leaving N free. Validates
/// 0 <= rl <= ru for each day (ru <= N cannot be checked without N).
ParametricInstance make_parametric(const InstanceSpec& spec);

/// Fixed-N instances viewed parametrically: a request upper bound equal to N
/// becomes open, anything smaller stays explicit.
ParametricInstance make_parametric(const Instance& instance);

/// Materializes a parametric instance at worker count n. Open upper sides
/// become n and explicit ones are clamped to n. Throws ValidationError if some
/// rl exceeds n.
Instance at_workers(const ParametricInstance& instance, WorkerCount n);

std::string describe(const Bounds& bounds);

}  // namespace dodo
