#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dodo/instance.hpp"
#include "dodo/schedule.hpp"

/// Layered certificate graph: one worker's plan is an s-t path, N workers are
/// an integral s-t flow of value N.
namespace dodo::certify {

/// State of one worker on one day: the day is the run-th day of the current
/// `shift` period and the worker was on duty on_total times in days 1..day.
struct CertNode {
  int day = 0;
  Shift shift = Shift::Off;
  int run = 0;
  int on_total = 0;

  auto operator<=>(const CertNode&) const = default;
};

std::string to_string(const CertNode& node);

/// Flow file references vertices by value; s and t are sentinels.
struct Endpoint {
  enum class Kind { Source, Sink, Node } kind = Kind::Node;
  CertNode node;

  static Endpoint source() { return {Kind::Source, {}}; }
  static Endpoint sink() { return {Kind::Sink, {}}; }
  static Endpoint at(CertNode n) { return {Kind::Node, n}; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

std::string to_string(const Endpoint& endpoint);

/// Flow references an edge that does not exist in the graph.
class CertificateStructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertices reachable from s under the compatibility rules:
///   ON->ON   run+1, on_total+1      OFF->OFF run+1, on_total
///   ON->OFF  needs run >= lw        OFF->ON  needs run >= lo
/// with run <= uw (ON) / uo (OFF) and max(0, d-Uo) <= on_total <= min(Uw, d).
/// Edges into t leave only day-D vertices whose final run meets its lower bound.
/// Depends on D and the bounds only, never on requests or N.
class CertificateGraph {
 public:
  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;

  CertificateGraph(int days, const Bounds& bounds);
  explicit CertificateGraph(const Instance& instance) : CertificateGraph(instance.days, instance.bounds) {}

  int days() const { return days_; }
  const Bounds& bounds() const { return bounds_; }

  /// Vertex count including s and t.
  std::size_t vertex_count() const { return nodes_.size() + 2; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Node of a non-sentinel vertex id.
  const CertNode& node(std::size_t vertex) const { return nodes_[vertex - 2]; }
  Endpoint endpoint(std::size_t vertex) const;
  std::optional<std::size_t> find_vertex(const Endpoint& endpoint) const;

  /// Edges sorted lexicographically by (tail, head) endpoint.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::optional<std::size_t> find_edge(std::size_t tail, std::size_t head) const;
  /// Edge ids leaving `vertex`, in lexicographic order of the head.
  const std::vector<std::size_t>& out_edges(std::size_t vertex) const { return out_[vertex]; }

  /// True iff t is reachable from s.
  bool connects() const;

 private:
  int days_;
  Bounds bounds_;
  std::vector<CertNode> nodes_;  // sorted
  std::map<CertNode, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Sparse integral flow: (edge id, amount) sorted by edge id.
struct FlowCertificate {
  std::vector<std::pair<std::size_t, WorkerCount>> flow;

  WorkerCount amount(std::size_t edge) const;
  friend bool operator==(const FlowCertificate&, const FlowCertificate&) = default;
};

/// One line of a certificate file.
struct FlowTriple {
  Endpoint tail;
  Endpoint head;
  WorkerCount amount = 0;
  friend bool operator==(const FlowTriple&, const FlowTriple&) = default;
};

/// Resolves triples against the graph. Throws CertificateStructureError for
/// unknown vertices, non-edges and duplicate edges.
FlowCertificate bind_flow(const CertificateGraph& graph, const std::vector<FlowTriple>& triples);
std::vector<FlowTriple> unbind_flow(const CertificateGraph& graph, const FlowCertificate& flow);

struct CertificateVerdict {
  bool valid = false;
  std::vector<std::string> reasons;  // why it was rejected

  explicit operator bool() const { return valid; }
};

/// Accepts iff all amounts are non-negative, flow is conserved at every
/// non-sentinel vertex, the value out of s is N, and for every day the
/// throughput of that day's ON vertices lies in [rl^d, ru^d].
/// Throws CertificateStructureError if an edge id is out of range.
CertificateVerdict verify_certificate(const Instance& instance, const CertificateGraph& graph,
                                      const FlowCertificate& flow);

/// Sums the path of every worker's row. Throws InfeasibleError naming the
/// worker and day at which a row leaves the graph.
FlowCertificate schedule_to_flow(const Instance& instance, const CertificateGraph& graph,
                                 const Schedule& schedule);

/// Peels s-t paths from the flow, always following the lexicographically
/// smallest edge with remaining flow; one dense row per unit of flow.
/// Throws InfeasibleError if the flow is not a valid certificate.
Schedule flow_to_schedule(const Instance& instance, const CertificateGraph& graph,
                          const FlowCertificate& flow);

/// Feasibility with no requests (rl = 0, ru = N): t reachable from s.
/// Throws ValidationError if the instance has nontrivial requests.
bool decide_unrequested(const Instance& instance);

}  // namespace dodo::certify
