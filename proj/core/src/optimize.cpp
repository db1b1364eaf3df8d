#include "dodo/optimize.hpp"

#include <numeric>

#include "dodo/checked.hpp"
#include "dodo/errors.hpp"
#include "dodo/ldodosp.hpp"
#include "dodo/udodosp.hpp"

namespace dodo::optimize {

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::MinWorkRun: return "lw";
    case BoundKind::MaxWorkRun: return "uw";
    case BoundKind::MinOffRun: return "lo";
    case BoundKind::MaxOffRun: return "uo";
    case BoundKind::MaxWorkTotal: return "Uw";
    case BoundKind::MaxOffTotal: return "Uo";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (auto kind : {BoundKind::MinWorkRun, BoundKind::MaxWorkRun, BoundKind::MinOffRun, BoundKind::MaxOffRun,
                    BoundKind::MaxWorkTotal, BoundKind::MaxOffTotal}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

bool minimizes(BoundKind kind) { return kind != BoundKind::MinWorkRun && kind != BoundKind::MinOffRun; }

namespace {

int& slot(Bounds& b, BoundKind kind) {
  switch (kind) {
    case BoundKind::MinWorkRun: return b.min_work_run;
    case BoundKind::MaxWorkRun: return b.max_work_run;
    case BoundKind::MinOffRun: return b.min_off_run;
    case BoundKind::MaxOffRun: return b.max_off_run;
    case BoundKind::MaxWorkTotal: return b.max_work_total;
    case BoundKind::MaxOffTotal: return b.max_off_total;
  }
  throw std::logic_error("unknown bound kind");
}

}  // namespace

int get_bound(const Bounds& bounds, BoundKind kind) {
  Bounds copy = bounds;
  return slot(copy, kind);
}

void set_bound(Bounds& bounds, BoundKind kind, int value) { slot(bounds, kind) = value; }

std::optional<int> optimize_bound(const Instance& instance, BoundKind kind, const FeasibilityOracle& feasible) {
  const auto feasible_at = [&](int value) {
    Instance probe = instance;
    set_bound(probe.bounds, kind, value);
    const Bounds& b = probe.bounds;
    if (b.min_work_run > b.max_work_run || b.min_off_run > b.max_off_run) return false;
    return feasible(probe);
  };
  // Orient the search so that feasibility is monotone increasing in x.
  const int days = instance.days;
  const auto value_of = [&](int x) { return minimizes(kind) ? x : days + 1 - x; };
  if (!feasible_at(value_of(days))) return std::nullopt;
  int lo = 1, hi = days;  // feasible at hi
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (feasible_at(value_of(mid))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return value_of(hi);
}

const char* to_string(NClassification cls) {
  switch (cls) {
    case NClassification::Feasible: return "FEASIBLE";
    case NClassification::TooSmall: return "TOO_SMALL";
    case NClassification::TooLarge: return "TOO_LARGE";
    case NClassification::InfeasibleForAll: return "INFEASIBLE_FOR_ALL";
  }
  return "?";
}

NClassification classify_workers(const DiffConGraph& graph, WorkerCount n) {
  const auto result = solve_potential(graph, n);
  if (result.feasible()) return NClassification::Feasible;
  const auto a = result.cycle().total.per_worker;
  if (a > 0) return NClassification::TooSmall;
  if (a < 0) return NClassification::TooLarge;
  return NClassification::InfeasibleForAll;
}

DiffConGraph potential_graph(const ParametricInstance& instance) {
  const Bounds& b = instance.bounds;
  if (b.min_work_run == 1 && b.min_off_run == 1) return udodosp::build_graph(instance, true);
  if (b.max_work_total == instance.days && b.max_off_total == instance.days) {
    return ldodosp::build_graph(instance, {}, true);
  }
  throw ValidationError("no potential graph: need lw = lo = 1 or Uw = Uo = D, got " + describe(b));
}

WorkforceMinimum minimize_workers(const ParametricInstance& instance) {
  const DiffConGraph graph = potential_graph(instance);
  WorkerCount lo = 0, hi = 0;
  for (const auto& r : instance.requests) hi = checked_add(hi, r.lower);
  std::optional<WorkerCount> best;
  while (lo <= hi) {
    const WorkerCount mid = lo + (hi - lo) / 2;
    switch (classify_workers(graph, mid)) {
      case NClassification::Feasible:
        best = mid;
        hi = mid - 1;
        break;
      case NClassification::TooSmall:
        lo = mid + 1;
        break;
      case NClassification::TooLarge:
        hi = mid - 1;
        break;
      case NClassification::InfeasibleForAll:
        return {NClassification::InfeasibleForAll, std::nullopt};
    }
  }
  if (!best) return {NClassification::InfeasibleForAll, std::nullopt};
  return {NClassification::Feasible, best};
}

}  // namespace dodo::optimize
