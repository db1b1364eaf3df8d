#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "dodo/diffcon.hpp"
#include "dodo/instance.hpp"

/// Parameter optimization on top of the feasibility procedures.
namespace dodo::optimize {

enum class BoundKind { MinWorkRun, MaxWorkRun, MinOffRun, MaxOffRun, MaxWorkTotal, MaxOffTotal };

const char* to_string(BoundKind kind);  // lw, uw, lo, uo, Uw, Uo
std::optional<BoundKind> parse_bound_kind(std::string_view name);

/// Upper-type bounds are minimized, lower-type (lw, lo) maximized.
bool minimizes(BoundKind kind);

int get_bound(const Bounds& bounds, BoundKind kind);
void set_bound(Bounds& bounds, BoundKind kind, int value);

using FeasibilityOracle = std::function<bool(const Instance&)>;

/// Binary search over [1, D] for the extreme feasible value of one bound,
/// relying on monotonicity. Values that make the bounds inconsistent
/// (lw > uw, lo > uo) count as infeasible. nullopt if no value works.
std::optional<int> optimize_bound(const Instance& instance, BoundKind kind, const FeasibilityOracle& feasible);

enum class NClassification { Feasible, TooSmall, TooLarge, InfeasibleForAll };

const char* to_string(NClassification cls);

/// Feasible if a potential exists at n; otherwise the sign of the returned
/// cycle's N-coefficient: positive -> TooSmall, negative -> TooLarge, zero ->
/// InfeasibleForAll.
NClassification classify_workers(const DiffConGraph& graph, WorkerCount n);

/// The potential graph for a free worker count: the upper-bound graph when
/// lw = lo = 1, else the counter graph when Uw = Uo = D. Request upper bounds
/// given explicitly are paired with workforce caps. Throws ValidationError for
/// instances of neither kind.
DiffConGraph potential_graph(const ParametricInstance& instance);

struct WorkforceMinimum {
  NClassification status = NClassification::InfeasibleForAll;  // Feasible or InfeasibleForAll
  std::optional<WorkerCount> workers;
};

/// Smallest N in [0, sum rl^d] with a feasible potential, by binary search
/// steered by classify_workers.
WorkforceMinimum minimize_workers(const ParametricInstance& instance);

}  // namespace dodo::optimize
