#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dodo/instance.hpp"

namespace dodo {

/// Edge weight a*N + b, affine in the worker count N.
struct AffineWeight {
  std::int64_t per_worker = 0;  // a
  std::int64_t constant = 0;    // b

  /// Overflow-checked evaluation at N = n.
  std::int64_t at(WorkerCount n) const;
  AffineWeight operator+(const AffineWeight& other) const;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

std::string to_string(const AffineWeight& weight);

/// Edge tail -> head with weight w, encoding pi(head) - pi(tail) <= w.
struct ConstraintEdge {
  int tail = 0;
  int head = 0;
  AffineWeight weight;
  std::string_view family;  // name of the inequality family, static storage
  int index = 0;            // day index within the family
};

/// Weighted digraph of difference constraints. Its feasible potentials are the
/// solutions of the system.
class DiffConGraph {
 public:
  explicit DiffConGraph(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  const std::vector<ConstraintEdge>& edges() const { return edges_; }

  /// Adds the constraint pi(upper) - pi(lower) <= weight.
  std::size_t add_constraint(int upper, int lower, AffineWeight weight, std::string_view family,
                             int index = 0);

  void set_vertex_names(std::function<std::string(int)> namer) { namer_ = std::move(namer); }
  std::string vertex_name(int vertex) const;

 private:
  int vertex_count_;
  std::vector<ConstraintEdge> edges_;
  std::function<std::string(int)> namer_;
};

/// A simple cycle, as edge indices in traversal order, with negative weight at
/// the evaluated N.
struct NegativeCycle {
  std::vector<std::size_t> edges;
  AffineWeight total;
  std::int64_t weight_at_n = 0;
};

/// Either an integral feasible potential (one value per vertex) or a witness cycle.
class PotentialResult {
 public:
  explicit PotentialResult(std::vector<std::int64_t> potential) : value_(std::move(potential)) {}
  explicit PotentialResult(NegativeCycle cycle) : value_(std::move(cycle)) {}

  bool feasible() const { return std::holds_alternative<std::vector<std::int64_t>>(value_); }
  const std::vector<std::int64_t>& potential() const { return std::get<std::vector<std::int64_t>>(value_); }
  const NegativeCycle& cycle() const { return std::get<NegativeCycle>(value_); }

 private:
  std::variant<std::vector<std::int64_t>, NegativeCycle> value_;
};

/// Bellman-Ford from a virtual source joined to every vertex by zero-weight
/// edges. The potential is translated so that pi(anchor) = 0. O(V * E).
PotentialResult solve_potential(const DiffConGraph& graph, WorkerCount n, int anchor = 0);

/// True iff pi(head) - pi(tail) <= w(n) on every edge.
bool is_feasible_potential(const DiffConGraph& graph, const std::vector<std::int64_t>& potential,
                           WorkerCount n);

/// A negative cycle rendered as one inequality per edge.
struct InfeasibilityWitness {
  NegativeCycle cycle;
  std::vector<std::string> chain;
};

/// Renders each edge of the cycle as "family[d]: head - tail <= weight".
std::vector<std::string> describe_cycle(const DiffConGraph& graph, const NegativeCycle& cycle,
                                        WorkerCount n);

InfeasibilityWitness make_witness(const DiffConGraph& graph, const NegativeCycle& cycle, WorkerCount n);

}  // namespace dodo
