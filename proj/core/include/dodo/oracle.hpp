#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "dodo/instance.hpp"
#include "dodo/schedule.hpp"

/// Exhaustive day-by-day search. Ground truth for small instances.
namespace dodo::oracle {

enum class SearchMode { Decide, FindOne, EnumerateAll };

struct SearchOptions {
  std::int64_t size_limit = 24;  // maximum N * D
  /// Enumerate one schedule per worker permutation class only.
  bool break_symmetry = false;
  std::size_t max_solutions = std::numeric_limits<std::size_t>::max();
};

struct SearchResult {
  bool feasible = false;
  std::vector<Schedule> schedules;  // FindOne: at most one; EnumerateAll: all found
};

/// Chooses each day's ON set among the subsets with size in [rl^d, ru^d],
/// pruning on run lengths, period-switch lower bounds and the two totals.
/// Throws SizeGateError if N * D exceeds options.size_limit.
SearchResult brute_force(const Instance& instance, SearchMode mode, const SearchOptions& options = {});

inline bool decide(const Instance& instance, std::int64_t size_limit = 24) {
  return brute_force(instance, SearchMode::Decide, {.size_limit = size_limit}).feasible;
}

}  // namespace dodo::oracle
