#include "dodo/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dodo/checked.hpp"
#include "dodo/errors.hpp"

namespace dodo::reduction {

std::int64_t ThreePartition::target() const {
  if (groups <= 0) throw ValidationError("3-partition needs m >= 1");
  return std::accumulate(values.begin(), values.end(), std::int64_t{0}) / groups;
}

void ThreePartition::validate() const {
  if (groups <= 0) throw ValidationError("3-partition needs m >= 1");
  if (values.size() != static_cast<std::size_t>(3 * groups)) {
    throw ValidationError("3-partition with m = " + std::to_string(groups) + " needs " + std::to_string(3 * groups) +
                          " values, got " + std::to_string(values.size()));
  }
  std::int64_t sum = 0;
  for (auto a : values) sum = checked_add(sum, a);
  if (sum % groups != 0) throw ValidationError("sum of values is not divisible by m");
  const std::int64_t t = sum / groups;
  for (auto a : values) {
    // T/4 < a < T/2 in integers.
    if (!(4 * a > t && 2 * a < t)) {
      throw ValidationError("value " + std::to_string(a) + " violates T/4 < a < T/2 for T = " + std::to_string(t));
    }
  }
}

ThreePartition ThreePartition::scaled(std::int64_t factor) const {
  if (factor < 1) throw ValidationError("scale factor must be positive");
  ThreePartition out{groups, values};
  for (auto& a : out.values) a = checked_mul(a, factor);
  return out;
}

const char* to_string(ExactVariant variant) {
  switch (variant) {
    case ExactVariant::UwLw: return "UW_LW";
    case ExactVariant::UwLo: return "UW_LO";
    case ExactVariant::UoLo: return "UO_LO";
    case ExactVariant::UoLw: return "UO_LW";
  }
  return "?";
}

const char* to_string(OneSidedVariant variant) {
  switch (variant) {
    case OneSidedVariant::UwUoLw: return "ONESIDED_UW_UO_LW";
    case OneSidedVariant::UwUoLo: return "ONESIDED_UW_UO_LO";
  }
  return "?";
}

namespace {

int as_day(std::int64_t value, const char* what) {
  if (value > 100'000'000) throw ValidationError(std::string(what) + " is too large to encode");
  return static_cast<int>(value);
}

bool encodes_work(ExactVariant variant) { return variant == ExactVariant::UwLw || variant == ExactVariant::UoLw; }

}  // namespace

std::vector<int> separator_days(const ThreePartition& tp) {
  std::vector<int> out;
  out.reserve(tp.values.size());
  std::int64_t day = 0;
  for (auto a : tp.values) {
    day = checked_add(day, a + 1);
    out.push_back(as_day(day, "day count"));
  }
  return out;
}

Instance encode_exact(const ThreePartition& tp, ExactVariant variant) {
  tp.validate();
  const std::int64_t t = tp.target();
  const WorkerCount n = tp.groups;
  const int days = as_day(checked_add(checked_mul(tp.groups, t), 3 * tp.groups), "day count");
  const int quarter = as_day((t + 3) / 4, "T/4");

  const bool work = encodes_work(variant);
  std::vector<WorkerCount> r(static_cast<std::size_t>(days), work ? 1 : n - 1);
  for (int sep : separator_days(tp)) r[static_cast<std::size_t>(sep - 1)] = work ? 0 : n;

  Bounds b = default_bounds(days);
  const int t_days = as_day(t, "T");
  switch (variant) {
    case ExactVariant::UwLw:
      b.max_work_total = t_days;
      b.min_work_run = quarter;
      break;
    case ExactVariant::UwLo:
      b.max_work_total = days - t_days;
      b.min_off_run = quarter;
      break;
    case ExactVariant::UoLo:
      b.max_off_total = t_days;
      b.min_off_run = quarter;
      break;
    case ExactVariant::UoLw:
      b.max_off_total = days - t_days;
      b.min_work_run = quarter;
      break;
  }
  return make_exact_instance(days, n, b, r);
}

namespace {

struct OneSidedShape {
  int min_run;   // lw (first variant) or lo (second)
  int max_off;   // uo
};

OneSidedShape shape(OneSidedVariant variant, std::int64_t target) {
  if (variant == OneSidedVariant::UwUoLw) {
    if (target % 4 != 0) throw ValidationError("T must be divisible by 4, got " + std::to_string(target));
    return {as_day(target / 4, "T/4"), as_day(target / 2, "T/2")};
  }
  if (target % 2 != 0) throw ValidationError("T must be even, got " + std::to_string(target));
  return {as_day(target, "T"), as_day(checked_add(target / 2 * 3, 1), "3T/2 + 1")};
}

void append(std::vector<WorkerCount>& seq, std::int64_t times, WorkerCount value) {
  seq.insert(seq.end(), static_cast<std::size_t>(times), value);
}

// Everything after the leading zero run up to and including the value's ones.
std::vector<WorkerCount> left_half(OneSidedVariant variant, std::int64_t value, std::int64_t target,
                                   WorkerCount n) {
  const OneSidedShape s = shape(variant, target);
  std::vector<WorkerCount> seq;
  if (variant == OneSidedVariant::UwUoLw) {
    append(seq, s.min_run, n);
    append(seq, s.min_run, 1);
    append(seq, s.min_run, 0);
    append(seq, s.min_run, n - 1);
  } else {
    // One N day, then the special worker's day, then uo days summing to N-1.
    append(seq, 1, n);
    append(seq, 1, 1);
    append(seq, target, 0);
    append(seq, 1, n - 1);
    append(seq, target / 2, 0);
  }
  append(seq, value, 1);
  return seq;
}

}  // namespace

std::vector<WorkerCount> onesided_block(OneSidedVariant variant, std::int64_t value, std::int64_t target,
                                        WorkerCount workers) {
  const OneSidedShape s = shape(variant, target);
  const auto left = left_half(variant, value, target, workers);
  std::vector<WorkerCount> seq;
  append(seq, s.max_off, 0);
  seq.insert(seq.end(), left.begin(), left.end());
  // Mirror without repeating the value's ones.
  seq.insert(seq.end(), left.rbegin() + value, left.rend());
  append(seq, s.max_off, 0);
  return seq;
}

OneSidedEncoding encode_onesided(const ThreePartition& tp, OneSidedVariant variant) {
  tp.validate();
  const std::int64_t t0 = tp.target();
  std::int64_t scale = 1;
  if (variant == OneSidedVariant::UwUoLw) {
    scale = 4 / std::gcd(t0, std::int64_t{4});
  } else if (t0 % 2 != 0) {
    scale = 2;
  }
  OneSidedEncoding out;
  out.scale = scale;
  out.encoded = tp.scaled(scale);
  const std::int64_t t = out.encoded.target();
  const WorkerCount n = tp.groups;
  const OneSidedShape s = shape(variant, t);

  std::vector<WorkerCount> ru;
  append(ru, s.max_off, 0);
  for (auto a : out.encoded.values) {
    const auto left = left_half(variant, a, t, n);
    out.value_first_day.push_back(as_day(static_cast<std::int64_t>(ru.size() + left.size()) - a + 1, "day count"));
    ru.insert(ru.end(), left.begin(), left.end());
    ru.insert(ru.end(), left.rbegin() + a, left.rend());
    append(ru, s.max_off, 0);  // shared with the next block
  }
  const int days = as_day(static_cast<std::int64_t>(ru.size()), "day count");

  Bounds b = default_bounds(days);
  b.max_off_run = s.max_off;
  if (variant == OneSidedVariant::UwUoLw) {
    b.min_work_run = s.min_run;
    b.max_work_total = as_day(checked_add(checked_mul(12 * tp.groups, s.min_run), t), "Uw");
  } else {
    b.min_off_run = s.min_run;
    b.max_work_total = as_day(checked_add(12 * tp.groups, t), "Uw");
  }
  Instance instance{days, n, b, {}};
  instance.requests.reserve(ru.size());
  for (auto u : ru) instance.requests.push_back({0, u});
  validate(instance);
  out.instance = std::move(instance);
  return out;
}

std::vector<std::vector<std::int64_t>> extract_partition(const Instance& instance, const Schedule& schedule,
                                                         const ThreePartition& tp) {
  if (schedule.days() != instance.days || schedule.workers() != instance.workers) {
    throw DimensionError("schedule does not match instance dimensions");
  }
  tp.validate();
  const auto seps = separator_days(tp);
  if (seps.empty() || seps.back() != instance.days) throw ValidationError("instance was not encoded from this 3-partition");
  // Day D is a separator: request 0 in the work encodings, N in the off encodings.
  const bool covered = instance.request(instance.days).lower == 0;

  std::vector<std::vector<std::int64_t>> groups(static_cast<std::size_t>(instance.workers));
  int first = 1;
  for (std::size_t k = 0; k < seps.size(); ++k) {
    std::optional<WorkerCount> owner;
    for (int d = first; d < seps[k]; ++d) {
      std::optional<WorkerCount> here;
      for (WorkerCount w = 1; w <= schedule.workers(); ++w) {
        if (schedule.on(w, d) == covered) {
          if (here) throw std::logic_error("day " + std::to_string(d) + " is covered by two workers");
          here = w;
        }
      }
      if (!here) throw InfeasibleError("day " + std::to_string(d) + " is not covered");
      if (owner && *owner != *here) {
        throw std::logic_error("run of value " + std::to_string(k + 1) + " is split between workers");
      }
      owner = here;
    }
    groups[static_cast<std::size_t>(*owner - 1)].push_back(tp.values[k]);
    first = seps[k] + 1;
  }

  const std::int64_t t = tp.target();
  for (std::size_t w = 0; w < groups.size(); ++w) {
    const auto& g = groups[w];
    const auto sum = std::accumulate(g.begin(), g.end(), std::int64_t{0});
    if (g.size() != 3 || sum != t) {
      throw InfeasibleError("worker " + std::to_string(w + 1) + " covers " + std::to_string(g.size()) +
                            " values summing to " + std::to_string(sum) + ", expected 3 summing to " +
                            std::to_string(t));
    }
  }
  return groups;
}

}  // namespace dodo::reduction
