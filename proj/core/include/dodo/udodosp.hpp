#pragma once

#include <optional>
#include <vector>

#include "dodo/diffcon.hpp"
#include "dodo/instance.hpp"
#include "dodo/schedule.hpp"

/// Instances with lw = lo = 1, where only upper bounds bind.
namespace dodo::udodosp {

/// R^0..R^D with R^0 = 0 and R^d - R^{d-1} = r^d. Requires exact requests.
std::vector<WorkerCount> prefix_requests(const Instance& instance);

/// The four necessary and sufficient conditions for exact requests:
///   R^D <= N*Uw,  N*D - R^D <= N*Uo,
///   R^{d+uw} - R^{d-1} <= N*uw  for 1 <= d <= D-uw,
///   R^{d+uo} - R^{d-1} >= N     for 1 <= d <= D-uo.
/// O(D). Throws ValidationError for non-exact requests.
bool check_exact(const Instance& instance);

/// Cyclic assignment: on day d the representatives R^{d-1}+1 .. R^d work, the
/// representative j standing for worker ((j-1) mod N) + 1. Emits the compact
/// form with offset R^{d-1} mod N and count r^d.
/// Throws InfeasibleError when check_exact fails.
Schedule schedule_exact(const Instance& instance);

/// Potential graph over W^0..W^D (vertex d is W^d). With `workforce_caps`,
/// every explicit request upper bound is paired with W^d - W^{d-1} <= N, which
/// keeps the graph valid when N is varied below that bound.
DiffConGraph build_graph(const ParametricInstance& instance, bool workforce_caps = false);

struct IntervalSolution {
  std::optional<std::vector<WorkerCount>> work_prefix;  // W^0..W^D, W^0 = 0
  std::optional<InfeasibilityWitness> witness;

  bool feasible() const { return work_prefix.has_value(); }
};

/// Chooses daily headcounts w^d in [rl^d, ru^d] that satisfy the exact-request
/// conditions, or returns the negative cycle that rules them out. O(D^2).
IntervalSolution solve_intervals(const Instance& instance);

struct Solution {
  std::optional<Schedule> schedule;
  std::optional<InfeasibilityWitness> witness;

  bool feasible() const { return schedule.has_value(); }
};

/// solve_intervals followed by schedule_exact. Throws ValidationError unless lw = lo = 1.
Solution solve(const Instance& instance);

}  // namespace dodo::udodosp
