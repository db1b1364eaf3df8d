#include "dodo/udodosp.hpp"

#include "dodo/checked.hpp"
#include "dodo/errors.hpp"

namespace dodo::udodosp {

namespace {

void require_upper_only(const Instance& instance) {
  if (instance.bounds.min_work_run != 1 || instance.bounds.min_off_run != 1) {
    throw ValidationError("upper-bound solver requires lw = lo = 1, got " + describe(instance.bounds));
  }
}

void require_exact(const Instance& instance) {
  if (!instance.has_exact_requests()) throw ValidationError("exact requests (rl = ru) required");
}

}  // namespace

std::vector<WorkerCount> prefix_requests(const Instance& instance) {
  require_exact(instance);
  std::vector<WorkerCount> prefix(static_cast<std::size_t>(instance.days) + 1, 0);
  for (int d = 1; d <= instance.days; ++d) {
    prefix[static_cast<std::size_t>(d)] = checked_add(prefix[static_cast<std::size_t>(d - 1)], instance.request(d).lower);
  }
  return prefix;
}

bool check_exact(const Instance& instance) {
  require_upper_only(instance);
  const auto prefix = prefix_requests(instance);
  const Bounds& b = instance.bounds;
  const int days = instance.days;
  const WorkerCount n = instance.workers;
  const auto R = [&](int d) { return prefix[static_cast<std::size_t>(d)]; };

  if (R(days) > checked_mul(n, b.max_work_total)) return false;
  if (checked_sub(checked_mul(n, days), R(days)) > checked_mul(n, b.max_off_total)) return false;
  const WorkerCount window_cap = checked_mul(n, b.max_work_run);
  for (int d = 1; d <= days - b.max_work_run; ++d) {
    if (R(d + b.max_work_run) - R(d - 1) > window_cap) return false;
  }
  for (int d = 1; d <= days - b.max_off_run; ++d) {
    if (R(d + b.max_off_run) - R(d - 1) < n) return false;
  }
  return true;
}

Schedule schedule_exact(const Instance& instance) {
  if (!check_exact(instance)) throw InfeasibleError("exact requests violate the upper-bound conditions");
  const auto prefix = prefix_requests(instance);
  const WorkerCount n = instance.workers;
  std::vector<CyclicInterval> per_day;
  per_day.reserve(static_cast<std::size_t>(instance.days));
  for (int d = 1; d <= instance.days; ++d) {
    const WorkerCount before = prefix[static_cast<std::size_t>(d - 1)];
    per_day.push_back({n > 0 ? floor_mod(before, n) : 0, instance.request(d).lower});
  }
  return Schedule::from_compact(instance.days, n, std::move(per_day));
}

DiffConGraph build_graph(const ParametricInstance& instance, bool workforce_caps) {
  const int days = instance.days;
  const Bounds& b = instance.bounds;
  DiffConGraph graph(days + 1);
  graph.set_vertex_names([](int v) { return "W^" + std::to_string(v); });

  graph.add_constraint(days, 0, {b.max_work_total, 0}, "total work (Uw)");
  graph.add_constraint(0, days, {b.max_off_total - days, 0}, "total off (Uo)");
  for (int d = 1; d <= days - b.max_work_run; ++d) {
    graph.add_constraint(d + b.max_work_run, d - 1, {b.max_work_run, 0}, "work window (uw)", d);
  }
  for (int d = 1; d <= days - b.max_off_run; ++d) {
    graph.add_constraint(d - 1, d + b.max_off_run, {-1, 0}, "off window (uo)", d);
  }
  for (int d = 1; d <= days; ++d) {
    const auto& r = instance.requests[static_cast<std::size_t>(d - 1)];
    graph.add_constraint(d - 1, d, {0, -r.lower}, "request lower", d);
    if (r.upper) {
      graph.add_constraint(d, d - 1, {0, *r.upper}, "request upper", d);
      if (workforce_caps) graph.add_constraint(d, d - 1, {1, 0}, "workforce cap", d);
    } else {
      graph.add_constraint(d, d - 1, {1, 0}, "request upper", d);
    }
  }
  return graph;
}

IntervalSolution solve_intervals(const Instance& instance) {
  const DiffConGraph graph = build_graph(make_parametric(instance));
  auto result = solve_potential(graph, instance.workers, 0);
  if (!result.feasible()) return {std::nullopt, make_witness(graph, result.cycle(), instance.workers)};
  return {result.potential(), std::nullopt};
}

Solution solve(const Instance& instance) {
  require_upper_only(instance);
  auto intervals = solve_intervals(instance);
  if (!intervals.feasible()) return {std::nullopt, std::move(intervals.witness)};

  const auto& w = *intervals.work_prefix;
  Instance exact = instance;
  for (int d = 1; d <= instance.days; ++d) {
    const WorkerCount count = w[static_cast<std::size_t>(d)] - w[static_cast<std::size_t>(d - 1)];
    exact.requests[static_cast<std::size_t>(d - 1)] = {count, count};
  }
  return {schedule_exact(exact), std::nullopt};
}

}  // namespace dodo::udodosp
