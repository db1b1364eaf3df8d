#include "dodo/instance.hpp"

#include <algorithm>
#include <sstream>

#include "dodo/errors.hpp"

namespace dodo {

namespace {

void check_range(const char* name, int value, int days) {
  if (value < 1 || value > days) {
    std::ostringstream msg;
    msg << "bound " << name << " = " << value << " outside [1, " << days << "]";
    throw ValidationError(msg.str());
  }
}

void check_days(int days) {
  if (days < 1) throw ValidationError("days must be at least 1, got " + std::to_string(days));
}

}  // namespace

Bounds default_bounds(int days) {
  check_days(days);
  return Bounds{1, days, 1, days, days, days};
}

void validate_bounds(const Bounds& b, int days) {
  check_days(days);
  check_range("lw", b.min_work_run, days);
  check_range("uw", b.max_work_run, days);
  check_range("lo", b.min_off_run, days);
  check_range("uo", b.max_off_run, days);
  check_range("Uw", b.max_work_total, days);
  check_range("Uo", b.max_off_total, days);
  if (b.min_work_run > b.max_work_run) {
    throw ValidationError("lw = " + std::to_string(b.min_work_run) + " exceeds uw = " +
                          std::to_string(b.max_work_run));
  }
  if (b.min_off_run > b.max_off_run) {
    throw ValidationError("lo = " + std::to_string(b.min_off_run) + " exceeds uo = " +
                          std::to_string(b.max_off_run));
  }
}

Bounds apply_defaults(const PartialBounds& p, int days) {
  Bounds b = default_bounds(days);
  b.min_work_run = p.min_work_run.value_or(b.min_work_run);
  b.max_work_run = p.max_work_run.value_or(b.max_work_run);
  b.min_off_run = p.min_off_run.value_or(b.min_off_run);
  b.max_off_run = p.max_off_run.value_or(b.max_off_run);
  b.max_work_total = p.max_work_total.value_or(b.max_work_total);
  b.max_off_total = p.max_off_total.value_or(b.max_off_total);
  validate_bounds(b, days);
  return b;
}

bool Instance::has_exact_requests() const {
  return std::all_of(requests.begin(), requests.end(), [](const RequestBound& r) { return r.exact(); });
}

void validate(const Instance& instance) {
  validate_bounds(instance.bounds, instance.days);
  if (instance.workers < 0) throw ValidationError("worker count must be non-negative");
  if (static_cast<int>(instance.requests.size()) != instance.days) {
    throw ValidationError("expected " + std::to_string(instance.days) + " requests, got " +
                          std::to_string(instance.requests.size()));
  }
  for (int d = 1; d <= instance.days; ++d) {
    const auto& r = instance.request(d);
    if (r.lower < 0 || r.lower > r.upper || r.upper > instance.workers) {
      std::ostringstream msg;
      msg << "request of day " << d << " = [" << r.lower << ", " << r.upper << "] violates 0 <= rl <= ru <= N = "
          << instance.workers;
      throw ValidationError(msg.str());
    }
  }
}

Instance make_exact_instance(int days, WorkerCount workers, const Bounds& bounds,
                             const std::vector<WorkerCount>& exact_requests) {
  Instance instance{days, workers, bounds, {}};
  instance.requests.reserve(exact_requests.size());
  for (auto r : exact_requests) instance.requests.push_back({r, r});
  validate(instance);
  return instance;
}

namespace {

std::vector<RequestSpec> padded_requests(const InstanceSpec& spec) {
  if (spec.requests.empty()) return std::vector<RequestSpec>(static_cast<std::size_t>(spec.days));
  if (static_cast<int>(spec.requests.size()) != spec.days) {
    throw ValidationError("expected " + std::to_string(spec.days) + " requests, got " +
                          std::to_string(spec.requests.size()));
  }
  return spec.requests;
}

}  // namespace

Instance make_instance(const InstanceSpec& spec, std::optional<WorkerCount> workers) {
  auto n = workers ? workers : spec.workers;
  if (!n) throw ValidationError("instance has no worker count");
  return at_workers(make_parametric(spec), *n);
}

ParametricInstance make_parametric(const InstanceSpec& spec) {
  check_days(spec.days);
  ParametricInstance p{spec.days, apply_defaults(spec.bounds, spec.days), padded_requests(spec)};
  for (int d = 1; d <= p.days; ++d) {
    const auto& r = p.requests[static_cast<std::size_t>(d - 1)];
    if (r.lower < 0 || (r.upper && *r.upper < r.lower)) {
      throw ValidationError("request of day " + std::to_string(d) + " violates 0 <= rl <= ru");
    }
    if (spec.workers && (r.lower > *spec.workers || (r.upper && *r.upper > *spec.workers))) {
      throw ValidationError("request of day " + std::to_string(d) + " exceeds N = " +
                            std::to_string(*spec.workers));
    }
  }
  return p;
}

ParametricInstance make_parametric(const Instance& instance) {
  ParametricInstance p{instance.days, instance.bounds, {}};
  p.requests.reserve(instance.requests.size());
  for (const auto& r : instance.requests) {
    RequestSpec spec{r.lower, std::nullopt};
    if (r.upper != instance.workers) spec.upper = r.upper;
    p.requests.push_back(spec);
  }
  return p;
}

Instance at_workers(const ParametricInstance& p, WorkerCount n) {
  if (n < 0) throw ValidationError("worker count must be non-negative");
  Instance instance{p.days, n, p.bounds, {}};
  instance.requests.reserve(p.requests.size());
  for (const auto& r : p.requests) {
    instance.requests.push_back({r.lower, std::min(r.upper.value_or(n), n)});
  }
  validate(instance);
  return instance;
}

std::string describe(const Bounds& b) {
  std::ostringstream out;
  out << "lw=" << b.min_work_run << " uw=" << b.max_work_run << " lo=" << b.min_off_run << " uo=" << b.max_off_run
      << " Uw=" << b.max_work_total << " Uo=" << b.max_off_total;
  return out.str();
}

}  // namespace dodo
