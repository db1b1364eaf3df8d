#pragma once

#include <cstdint>
#include <vector>

#include "dodo/instance.hpp"
#include "dodo/schedule.hpp"

/// Hard instances built from Restricted 3-Partition.
namespace dodo::reduction {

/// 3m positive values with T = sum / m and T/4 < a < T/2 for every value.
struct ThreePartition {
  int groups = 0;  // m
  std::vector<std::int64_t> values;

  std::int64_t target() const;  // T
  /// Throws ValidationError unless |values| = 3m, m divides the sum and the
  /// strict quarter/half bounds hold.
  void validate() const;
  /// Every value multiplied by `factor`; the result is again restricted.
  ThreePartition scaled(std::int64_t factor) const;
};

/// Exact-request encodings. Each names its nontrivial global and local bound.
enum class ExactVariant {
  UwLw,  // 0/1 requests, Uw = T,     lw = ceil(T/4)
  UwLo,  // N/N-1 requests, Uw = D-T, lo = ceil(T/4)
  UoLo,  // N/N-1 requests, Uo = T,   lo = ceil(T/4)
  UoLw,  // 0/1 requests, Uo = D-T,   lw = ceil(T/4)
};

/// Upper-request-only encodings (rl = 0 everywhere).
enum class OneSidedVariant {
  UwUoLw,  // Uw, uo, lw nontrivial
  UwUoLo,  // Uw, uo, lo nontrivial
};

const char* to_string(ExactVariant variant);
const char* to_string(OneSidedVariant variant);

/// Day index of the separator after each value: sum_{i<=k} (a_i + 1).
std::vector<int> separator_days(const ThreePartition& tp);

/// D = mT + 3m, N = m; values are unary runs split by separator days.
/// The instance is feasible iff tp has a valid partition.
Instance encode_exact(const ThreePartition& tp, ExactVariant variant);

struct OneSidedEncoding {
  Instance instance;
  std::int64_t scale = 1;   // factor applied to tp before encoding
  ThreePartition encoded;   // the scaled instance actually encoded
  std::vector<int> value_first_day;  // first day of each value's run of ones
};

/// Request-upper sequence for one value, including both outer zero runs.
std::vector<WorkerCount> onesided_block(OneSidedVariant variant, std::int64_t value, std::int64_t target,
                                        WorkerCount workers);

/// Concatenates the per-value blocks, merging the zero runs at each seam
/// into a single run of uo zeros. Values are scaled by the smallest factor
/// making T divisible by 4 (UwUoLw) or even (UwUoLo).
OneSidedEncoding encode_onesided(const ThreePartition& tp, OneSidedVariant variant);

/// Recovers the partition from a feasible schedule of an encode_exact
/// instance: each value's run is covered by exactly one worker (ON for the
/// 0/1 encodings, OFF for the N/N-1 encodings). Groups are returned in worker
/// order, values in encoding order. Throws std::logic_error if a run is split
/// between workers and InfeasibleError if a group is not a triple of sum T.
std::vector<std::vector<std::int64_t>> extract_partition(const Instance& instance, const Schedule& schedule,
                                                         const ThreePartition& tp);

}  // namespace dodo::reduction
