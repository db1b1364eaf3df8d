#include "dodo/diffcon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dodo/checked.hpp"

namespace dodo {

std::int64_t AffineWeight::at(WorkerCount n) const { return checked_add(checked_mul(per_worker, n), constant); }

AffineWeight AffineWeight::operator+(const AffineWeight& other) const {
  return {checked_add(per_worker, other.per_worker), checked_add(constant, other.constant)};
}

std::string to_string(const AffineWeight& w) {
  std::ostringstream out;
  if (w.per_worker == 0) {
    out << w.constant;
  } else {
    if (w.per_worker == 1) {
      out << "N";
    } else if (w.per_worker == -1) {
      out << "-N";
    } else {
      out << w.per_worker << "N";
    }
    if (w.constant > 0) out << " + " << w.constant;
    if (w.constant < 0) out << " - " << -w.constant;
  }
  return out.str();
}

DiffConGraph::DiffConGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
}

std::size_t DiffConGraph::add_constraint(int upper, int lower, AffineWeight weight, std::string_view family,
                                         int index) {
  if (upper < 0 || upper >= vertex_count_ || lower < 0 || lower >= vertex_count_) {
    throw std::out_of_range("constraint references a vertex outside the graph");
  }
  edges_.push_back({lower, upper, weight, family, index});
  return edges_.size() - 1;
}

std::string DiffConGraph::vertex_name(int vertex) const {
  return namer_ ? namer_(vertex) : "v" + std::to_string(vertex);
}

PotentialResult solve_potential(const DiffConGraph& graph, WorkerCount n, int anchor) {
  const int vertices = graph.vertex_count();
  const auto& edges = graph.edges();
  const std::size_t edge_count = edges.size();

  std::vector<std::int64_t> weight(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e) weight[e] = edges[e].weight.at(n);

  // Distances from the virtual source start at zero everywhere.
  std::vector<std::int64_t> dist(static_cast<std::size_t>(vertices), 0);
  std::vector<std::ptrdiff_t> pred(static_cast<std::size_t>(vertices), -1);

  auto relax = [&](std::size_t e, int& last) {
    const auto& edge = edges[e];
    const std::int64_t candidate = checked_add(dist[static_cast<std::size_t>(edge.tail)], weight[e]);
    if (candidate < dist[static_cast<std::size_t>(edge.head)]) {
      dist[static_cast<std::size_t>(edge.head)] = candidate;
      pred[static_cast<std::size_t>(edge.head)] = static_cast<std::ptrdiff_t>(e);
      last = edge.head;
      return true;
    }
    return false;
  };

  int last_updated = -1;
  for (int round = 1; round <= vertices; ++round) {
    bool changed = false;
    last_updated = -1;
    // Alternating the sweep direction lets chains in both directions settle
    // in few rounds; any order per round keeps the V-round bound.
    if (round % 2 == 1) {
      for (std::size_t e = 0; e < edge_count; ++e) changed |= relax(e, last_updated);
    } else {
      for (std::size_t e = edge_count; e-- > 0;) changed |= relax(e, last_updated);
    }
    if (!changed) {
      const std::int64_t shift = dist[static_cast<std::size_t>(anchor)];
      for (auto& value : dist) value = checked_sub(value, shift);
      return PotentialResult(std::move(dist));
    }
  }

  // Still relaxing after V rounds: walking predecessors V times from the last
  // updated vertex lands on a cycle of the predecessor graph.
  int v = last_updated;
  for (int i = 0; i < vertices; ++i) {
    const auto e = pred[static_cast<std::size_t>(v)];
    if (e < 0) throw std::logic_error("predecessor walk left the graph");
    v = edges[static_cast<std::size_t>(e)].tail;
  }
  NegativeCycle cycle;
  int u = v;
  do {
    const auto e = static_cast<std::size_t>(pred[static_cast<std::size_t>(u)]);
    cycle.edges.push_back(e);
    cycle.total = cycle.total + edges[e].weight;
    u = edges[e].tail;
  } while (u != v);
  std::reverse(cycle.edges.begin(), cycle.edges.end());
  cycle.weight_at_n = cycle.total.at(n);
  if (cycle.weight_at_n >= 0) throw std::logic_error("extracted cycle is not negative");
  return PotentialResult(std::move(cycle));
}

bool is_feasible_potential(const DiffConGraph& graph, const std::vector<std::int64_t>& potential, WorkerCount n) {
  if (static_cast<int>(potential.size()) != graph.vertex_count()) return false;
  for (const auto& edge : graph.edges()) {
    const auto slack = checked_sub(checked_add(potential[static_cast<std::size_t>(edge.tail)], edge.weight.at(n)),
                                   potential[static_cast<std::size_t>(edge.head)]);
    if (slack < 0) return false;
  }
  return true;
}

std::vector<std::string> describe_cycle(const DiffConGraph& graph, const NegativeCycle& cycle, WorkerCount n) {
  std::vector<std::string> lines;
  lines.reserve(cycle.edges.size());
  for (auto e : cycle.edges) {
    const auto& edge = graph.edges()[e];
    std::ostringstream out;
    out << edge.family;
    if (edge.index > 0) out << " [d=" << edge.index << "]";
    out << ": " << graph.vertex_name(edge.head) << " - " << graph.vertex_name(edge.tail) << " <= "
        << to_string(edge.weight);
    if (edge.weight.per_worker != 0) out << " = " << edge.weight.at(n);
    lines.push_back(out.str());
  }
  std::ostringstream sum;
  sum << "sum over the cycle: 0 <= " << to_string(cycle.total) << " = " << cycle.weight_at_n << " at N = " << n
      << ", a contradiction";
  lines.push_back(sum.str());
  return lines;
}

InfeasibilityWitness make_witness(const DiffConGraph& graph, const NegativeCycle& cycle, WorkerCount n) {
  return {cycle, describe_cycle(graph, cycle, n)};
}

}  // namespace dodo
