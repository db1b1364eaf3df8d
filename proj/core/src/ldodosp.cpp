#include "dodo/ldodosp.hpp"

#include <sstream>

#include "dodo/checked.hpp"
#include "dodo/errors.hpp"

namespace dodo::ldodosp {

int started_vertex(int /*days*/, int day) { return day - 1; }
int terminated_vertex(int days, int day) { return days + day - 1; }

namespace {

struct PrefixCounts {
  std::vector<WorkerCount> started;
  std::vector<WorkerCount> terminated;
};

PrefixCounts count_periods(const Schedule& schedule, Shift kind) {
  const int days = schedule.days();
  std::vector<WorkerCount> starts(static_cast<std::size_t>(days) + 2, 0);
  std::vector<WorkerCount> ends(static_cast<std::size_t>(days) + 2, 0);
  for (const Period& p : all_periods(schedule)) {
    if (p.kind != kind) continue;
    ++starts[static_cast<std::size_t>(p.first_day)];
    ++ends[static_cast<std::size_t>(p.last_day)];
  }
  PrefixCounts out{std::vector<WorkerCount>(static_cast<std::size_t>(days)),
                   std::vector<WorkerCount>(static_cast<std::size_t>(days))};
  WorkerCount started = 0, terminated = 0;
  for (int d = 1; d <= days; ++d) {
    started += starts[static_cast<std::size_t>(d)];
    out.started[static_cast<std::size_t>(d - 1)] = started;
    out.terminated[static_cast<std::size_t>(d - 1)] = terminated;  // periods ending on days <= d-1
    terminated += ends[static_cast<std::size_t>(d)];
  }
  return out;
}

void check_fn(const std::optional<std::vector<int>>& fn, int days, const char* name) {
  if (!fn) return;
  if (static_cast<int>(fn->size()) != days) {
    throw ValidationError(std::string("bound function ") + name + " must have one entry per day");
  }
  for (int d = 1; d <= days; ++d) {
    const int v = (*fn)[static_cast<std::size_t>(d - 1)];
    if (v < 1 || v > days + 1) throw ValidationError(std::string("bound function ") + name + " leaves [1, D+1]");
    if (d > 1 && v < (*fn)[static_cast<std::size_t>(d - 2)]) {
      throw ValidationError(std::string("bound function ") + name + " is not non-decreasing");
    }
  }
}

// Day f(d) of a counting family: the table entry, or d + offset.
int target_day(const std::optional<std::vector<int>>& fn, int d, int offset) {
  return fn ? (*fn)[static_cast<std::size_t>(d - 1)] : d + offset;
}

std::vector<std::int64_t> as_potential(const PeriodCounters& c) {
  std::vector<std::int64_t> pi(c.started.begin(), c.started.end());
  pi.insert(pi.end(), c.terminated.begin(), c.terminated.end());
  return pi;
}

}  // namespace

PeriodCounters counters_from_schedule(const Schedule& schedule) {
  auto counts = count_periods(schedule, Shift::On);
  return {std::move(counts.started), std::move(counts.terminated)};
}

OffCounters off_counters_from_schedule(const Schedule& schedule) {
  auto counts = count_periods(schedule, Shift::Off);
  return {std::move(counts.started), std::move(counts.terminated)};
}

OffCounters off_counters(const PeriodCounters& c, WorkerCount workers) {
  OffCounters off;
  const WorkerCount first_starts = c.started.empty() ? 0 : c.started.front();
  for (std::size_t i = 0; i < c.started.size(); ++i) {
    off.started.push_back(c.terminated[i] + workers - first_starts);
    off.terminated.push_back(c.started[i] - first_starts);
  }
  return off;
}

DiffConGraph build_graph(const ParametricInstance& instance, const CounterOptions& options, bool workforce_caps) {
  const int days = instance.days;
  const Bounds& b = instance.bounds;
  const auto& fns = options.bound_fns;
  check_fn(fns.min_work, days, "lw");
  check_fn(fns.max_work, days, "uw");
  check_fn(fns.min_off, days, "lo");
  check_fn(fns.max_off, days, "uo");

  DiffConGraph graph(2 * days);
  graph.set_vertex_names([days](int v) {
    return v < days ? "S^" + std::to_string(v + 1) : "T^" + std::to_string(v - days + 1);
  });
  const auto S = [days](int d) { return started_vertex(days, d); };
  const auto T = [days](int d) { return terminated_vertex(days, d); };
  const AffineWeight zero{0, 0};
  const AffineWeight plus_n{1, 0};
  const AffineWeight minus_n{-1, 0};

  for (int d = 1; d < days; ++d) {
    graph.add_constraint(S(d), S(d + 1), zero, "non-decreasing S", d);
    graph.add_constraint(T(d), T(d + 1), zero, "non-decreasing T", d);
    graph.add_constraint(T(d + 1), S(d), zero, "positive work length", d);
    graph.add_constraint(S(d + 1), T(d), plus_n, "positive off length", d);
  }

  const auto equal = [&](int x, int y, std::string_view family) {
    if (x == y) return;
    graph.add_constraint(x, y, zero, family);
    graph.add_constraint(y, x, zero, family);
  };
  equal(T(b.min_work_run), T(1), "boundary lw (T^lw = 0)");
  equal(S(days - b.min_work_run + 1), S(days), "boundary lw (S^{D-lw+1} = S^D)");
  equal(S(1), S(b.min_off_run), "boundary lo (S^1 = S^lo)");
  equal(T(days - b.min_off_run + 1), T(days), "boundary lo (T^{D-lo+1} = T^D)");

  for (int d = 1; d <= days; ++d) {
    if (const int f = target_day(fns.min_work, d, b.min_work_run); f <= days) {
      graph.add_constraint(T(f), S(d), zero, "count lw", d);
    }
    if (const int f = target_day(fns.max_work, d, b.max_work_run); f <= days) {
      graph.add_constraint(S(d), T(f), zero, "count uw", d);
    }
    if (const int f = target_day(fns.min_off, d, b.min_off_run); f <= days) {
      graph.add_constraint(S(f), T(d), plus_n, "count lo", d);
    }
    if (const int f = target_day(fns.max_off, d, b.max_off_run); f <= days) {
      graph.add_constraint(T(d), S(f), minus_n, "count uo", d);
    }
  }

  for (int d = 1; d <= days; ++d) {
    const auto& r = instance.requests[static_cast<std::size_t>(d - 1)];
    graph.add_constraint(T(d), S(d), {0, -r.lower}, "request lower", d);
    if (r.upper) {
      graph.add_constraint(S(d), T(d), {0, *r.upper}, "request upper", d);
      if (workforce_caps) graph.add_constraint(S(d), T(d), plus_n, "workforce cap", d);
    } else {
      graph.add_constraint(S(d), T(d), plus_n, "request upper", d);
    }
  }

  for (const auto& c : options.extra) {
    if (c.lhs_day < 1 || c.lhs_day > days || c.rhs_day < 1 || c.rhs_day > days) {
      throw ValidationError("extra counter constraint references a day outside [1, D]");
    }
    const int x = c.lhs == Counter::Started ? S(c.lhs_day) : T(c.lhs_day);
    const int y = c.rhs == Counter::Started ? S(c.rhs_day) : T(c.rhs_day);
    graph.add_constraint(x, y, c.bound, "extra");
  }
  return graph;
}

CounterSolution solve_counters(const Instance& instance, const CounterOptions& options) {
  const int days = instance.days;
  const DiffConGraph graph = build_graph(make_parametric(instance), options);
  auto result = solve_potential(graph, instance.workers, terminated_vertex(days, 1));
  if (!result.feasible()) return {std::nullopt, make_witness(graph, result.cycle(), instance.workers)};
  const auto& pi = result.potential();
  PeriodCounters counters{std::vector<WorkerCount>(pi.begin(), pi.begin() + days),
                          std::vector<WorkerCount>(pi.begin() + days, pi.end())};
  return {std::move(counters), std::nullopt};
}

std::vector<std::string> counter_violations(const Instance& instance, const PeriodCounters& counters,
                                            const CounterOptions& options) {
  const int days = instance.days;
  if (counters.days() != days || static_cast<int>(counters.terminated.size()) != days) {
    throw DimensionError("counters must have one entry per day");
  }
  std::vector<std::string> out;
  if (counters.terminated.front() != 0) out.push_back("T^1 = " + std::to_string(counters.terminated.front()) + " != 0");

  const DiffConGraph graph = build_graph(make_parametric(instance), options);
  const auto pi = as_potential(counters);
  const WorkerCount n = instance.workers;
  for (const auto& edge : graph.edges()) {
    const auto lhs = checked_sub(pi[static_cast<std::size_t>(edge.head)], pi[static_cast<std::size_t>(edge.tail)]);
    const auto rhs = edge.weight.at(n);
    if (lhs > rhs) {
      std::ostringstream msg;
      msg << edge.family;
      if (edge.index > 0) msg << " [d=" << edge.index << "]";
      msg << ": " << graph.vertex_name(edge.head) << " - " << graph.vertex_name(edge.tail) << " = " << lhs
          << " > " << rhs;
      out.push_back(msg.str());
    }
  }
  return out;
}

Schedule counters_to_schedule(const Instance& instance, const PeriodCounters& counters, const CounterOptions& options) {
  const auto violations = counter_violations(instance, counters, options);
  if (!violations.empty()) throw ValidationError("invalid period counters: " + violations.front());
  const WorkerCount n = instance.workers;
  std::vector<CyclicInterval> per_day;
  per_day.reserve(static_cast<std::size_t>(instance.days));
  for (int d = 1; d <= instance.days; ++d) {
    const auto i = static_cast<std::size_t>(d - 1);
    per_day.push_back({n > 0 ? floor_mod(counters.terminated[i], n) : 0, counters.started[i] - counters.terminated[i]});
  }
  return Schedule::from_compact(instance.days, n, std::move(per_day));
}

Solution solve(const Instance& instance, const CounterOptions& options) {
  if (instance.bounds.max_work_total != instance.days || instance.bounds.max_off_total != instance.days) {
    throw ValidationError("local-bounds solver requires Uw = Uo = D, got " + describe(instance.bounds));
  }
  auto solved = solve_counters(instance, options);
  if (!solved.feasible()) return {std::nullopt, std::nullopt, std::move(solved.witness)};
  auto schedule = counters_to_schedule(instance, *solved.counters, options);
  return {std::move(schedule), std::move(solved.counters), std::nullopt};
}

}  // namespace dodo::ldodosp
