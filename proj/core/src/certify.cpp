#include "dodo/certify.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "dodo/checked.hpp"
#include "dodo/errors.hpp"

namespace dodo::certify {

std::string to_string(const CertNode& node) {
  std::ostringstream out;
  out << '(' << node.day << ',' << dodo::to_string(node.shift) << ',' << node.run << ',' << node.on_total << ')';
  return out.str();
}

std::string to_string(const Endpoint& endpoint) {
  switch (endpoint.kind) {
    case Endpoint::Kind::Source: return "s";
    case Endpoint::Kind::Sink: return "t";
    case Endpoint::Kind::Node: return to_string(endpoint.node);
  }
  return "?";
}

namespace {

// Sort key realising s < every node < t; node ids already follow node order.
std::size_t rank(std::size_t vertex) {
  if (vertex == CertificateGraph::kSource) return 0;
  if (vertex == CertificateGraph::kSink) return std::numeric_limits<std::size_t>::max();
  return vertex;
}

bool within_totals(const Bounds& b, int day, int on_total) {
  return on_total >= std::max(0, day - b.max_off_total) && on_total <= std::min(b.max_work_total, day);
}

// Successors of `n` on day n.day + 1 that respect every bound.
template <typename Emit>
void for_each_successor(const CertNode& n, const Bounds& b, Emit emit) {
  const int next = n.day + 1;
  const bool on = n.shift == Shift::On;
  // Continue the current period.
  const int run_cap = on ? b.max_work_run : b.max_off_run;
  const int cont_total = n.on_total + (on ? 1 : 0);
  if (n.run + 1 <= run_cap && within_totals(b, next, cont_total)) emit(CertNode{next, n.shift, n.run + 1, cont_total});
  // Switch to the other shift.
  const int run_min = on ? b.min_work_run : b.min_off_run;
  const int switch_total = n.on_total + (on ? 0 : 1);
  if (n.run >= run_min && within_totals(b, next, switch_total)) {
    emit(CertNode{next, on ? Shift::Off : Shift::On, 1, switch_total});
  }
}

bool may_end(const CertNode& n, const Bounds& b) {
  return n.run >= (n.shift == Shift::On ? b.min_work_run : b.min_off_run);
}

}  // namespace

CertificateGraph::CertificateGraph(int days, const Bounds& bounds) : days_(days), bounds_(bounds) {
  validate_bounds(bounds, days);

  std::set<CertNode> layer;
  for (CertNode first : {CertNode{1, Shift::On, 1, 1}, CertNode{1, Shift::Off, 1, 0}}) {
    if (within_totals(bounds, 1, first.on_total)) layer.insert(first);
  }
  for (int d = 1; d <= days && !layer.empty(); ++d) {
    nodes_.insert(nodes_.end(), layer.begin(), layer.end());
    std::set<CertNode> next;
    if (d < days) {
      for (const auto& n : layer) for_each_successor(n, bounds, [&](const CertNode& s) { next.insert(s); });
    }
    layer = std::move(next);
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i + 2);

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const CertNode& n = nodes_[i];
    const std::size_t v = i + 2;
    if (n.day == 1) edges_.emplace_back(kSource, v);
    if (n.day == days) {
      if (may_end(n, bounds)) edges_.emplace_back(v, kSink);
    } else {
      for_each_successor(n, bounds, [&](const CertNode& s) { edges_.emplace_back(v, index_.at(s)); });
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return std::pair(rank(a.first), rank(a.second)) < std::pair(rank(b.first), rank(b.second));
  });
  out_.resize(vertex_count());
  for (std::size_t e = 0; e < edges_.size(); ++e) out_[edges_[e].first].push_back(e);
}

Endpoint CertificateGraph::endpoint(std::size_t vertex) const {
  if (vertex == kSource) return Endpoint::source();
  if (vertex == kSink) return Endpoint::sink();
  return Endpoint::at(node(vertex));
}

std::optional<std::size_t> CertificateGraph::find_vertex(const Endpoint& endpoint) const {
  switch (endpoint.kind) {
    case Endpoint::Kind::Source: return kSource;
    case Endpoint::Kind::Sink: return kSink;
    case Endpoint::Kind::Node: {
      const auto it = index_.find(endpoint.node);
      if (it == index_.end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> CertificateGraph::find_edge(std::size_t tail, std::size_t head) const {
  if (tail >= out_.size()) return std::nullopt;
  const auto& out = out_[tail];
  const auto it = std::lower_bound(out.begin(), out.end(), rank(head),
                                   [this](std::size_t e, std::size_t r) { return rank(edges_[e].second) < r; });
  if (it == out.end() || edges_[*it].second != head) return std::nullopt;
  return *it;
}

bool CertificateGraph::connects() const {
  return !edges_.empty() && edges_.back().second == kSink;
}

WorkerCount FlowCertificate::amount(std::size_t edge) const {
  const auto it = std::lower_bound(flow.begin(), flow.end(), edge,
                                   [](const auto& entry, std::size_t e) { return entry.first < e; });
  return it != flow.end() && it->first == edge ? it->second : 0;
}

FlowCertificate bind_flow(const CertificateGraph& graph, const std::vector<FlowTriple>& triples) {
  FlowCertificate out;
  out.flow.reserve(triples.size());
  for (const auto& t : triples) {
    const auto tail = graph.find_vertex(t.tail);
    if (!tail) throw CertificateStructureError("unknown vertex " + to_string(t.tail));
    const auto head = graph.find_vertex(t.head);
    if (!head) throw CertificateStructureError("unknown vertex " + to_string(t.head));
    const auto edge = graph.find_edge(*tail, *head);
    if (!edge) throw CertificateStructureError("no edge " + to_string(t.tail) + " -> " + to_string(t.head));
    out.flow.emplace_back(*edge, t.amount);
  }
  std::sort(out.flow.begin(), out.flow.end());
  for (std::size_t i = 1; i < out.flow.size(); ++i) {
    if (out.flow[i].first == out.flow[i - 1].first) {
      const auto& [tail, head] = graph.edges()[out.flow[i].first];
      throw CertificateStructureError("edge " + to_string(graph.endpoint(tail)) + " -> " +
                                      to_string(graph.endpoint(head)) + " listed twice");
    }
  }
  return out;
}

std::vector<FlowTriple> unbind_flow(const CertificateGraph& graph, const FlowCertificate& flow) {
  std::vector<FlowTriple> out;
  out.reserve(flow.flow.size());
  for (const auto& [edge, amount] : flow.flow) {
    if (edge >= graph.edge_count()) throw CertificateStructureError("edge id " + std::to_string(edge) + " out of range");
    const auto& [tail, head] = graph.edges()[edge];
    out.push_back({graph.endpoint(tail), graph.endpoint(head), amount});
  }
  return out;
}

CertificateVerdict verify_certificate(const Instance& instance, const CertificateGraph& graph,
                                      const FlowCertificate& flow) {
  if (instance.days != graph.days() || instance.bounds != graph.bounds()) {
    throw DimensionError("certificate graph was built for different days or bounds");
  }
  CertificateVerdict verdict;
  const auto reject = [&](std::string reason) { verdict.reasons.push_back(std::move(reason)); };

  std::vector<WorkerCount> balance(graph.vertex_count(), 0);  // inflow - outflow
  std::vector<WorkerCount> on_duty(static_cast<std::size_t>(instance.days) + 1, 0);
  std::optional<std::size_t> previous;
  for (const auto& [edge, amount] : flow.flow) {
    if (edge >= graph.edge_count()) throw CertificateStructureError("edge id " + std::to_string(edge) + " out of range");
    if (previous && edge <= *previous) reject("edge list is not strictly increasing at edge " + std::to_string(edge));
    previous = edge;
    const auto& [tail, head] = graph.edges()[edge];
    if (amount < 0) {
      reject("negative flow " + std::to_string(amount) + " on " + to_string(graph.endpoint(tail)) + " -> " +
             to_string(graph.endpoint(head)));
      continue;
    }
    balance[tail] = checked_sub(balance[tail], amount);
    balance[head] = checked_add(balance[head], amount);
    if (head != CertificateGraph::kSink && graph.node(head).shift == Shift::On) {
      auto& slot = on_duty[static_cast<std::size_t>(graph.node(head).day)];
      slot = checked_add(slot, amount);
    }
  }
  if (!verdict.reasons.empty()) return verdict;

  for (std::size_t v = 2; v < graph.vertex_count(); ++v) {
    if (balance[v] != 0) {
      reject("flow not conserved at " + to_string(graph.node(v)) + " (excess " + std::to_string(balance[v]) + ")");
    }
  }
  const WorkerCount value = -balance[CertificateGraph::kSource];
  if (value != instance.workers) {
    reject("flow value " + std::to_string(value) + " != N = " + std::to_string(instance.workers));
  }
  for (int d = 1; d <= instance.days; ++d) {
    const auto& r = instance.request(d);
    const WorkerCount on = on_duty[static_cast<std::size_t>(d)];
    if (on < r.lower || on > r.upper) {
      reject("day " + std::to_string(d) + ": " + std::to_string(on) + " on duty, request [" +
             std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]");
    }
  }
  verdict.valid = verdict.reasons.empty();
  return verdict;
}

FlowCertificate schedule_to_flow(const Instance& instance, const CertificateGraph& graph, const Schedule& schedule) {
  if (schedule.days() != instance.days || schedule.workers() != instance.workers) {
    throw DimensionError("schedule does not match instance dimensions");
  }
  std::map<std::size_t, WorkerCount> totals;
  for (WorkerCount w = 1; w <= schedule.workers(); ++w) {
    const auto leave = [&](int day) {
      throw InfeasibleError("worker " + std::to_string(w) + " leaves the certificate graph on day " +
                            std::to_string(day));
    };
    std::size_t at = CertificateGraph::kSource;
    CertNode state;
    for (int d = 1; d <= schedule.days(); ++d) {
      const Shift shift = schedule.on(w, d) ? Shift::On : Shift::Off;
      if (d == 1) {
        state = {1, shift, 1, shift == Shift::On ? 1 : 0};
      } else {
        state = {d, shift, shift == state.shift ? state.run + 1 : 1, state.on_total + (shift == Shift::On ? 1 : 0)};
      }
      const auto next = graph.find_vertex(Endpoint::at(state));
      if (!next) leave(d);
      const auto edge = graph.find_edge(at, *next);
      if (!edge) leave(d);
      ++totals[*edge];
      at = *next;
    }
    const auto last = graph.find_edge(at, CertificateGraph::kSink);
    if (!last) leave(schedule.days());
    ++totals[*last];
  }
  return {{totals.begin(), totals.end()}};
}

Schedule flow_to_schedule(const Instance& instance, const CertificateGraph& graph, const FlowCertificate& flow) {
  const auto verdict = verify_certificate(instance, graph, flow);
  if (!verdict) throw InfeasibleError("invalid certificate: " + verdict.reasons.front());

  std::vector<WorkerCount> remaining(graph.edge_count(), 0);
  for (const auto& [edge, amount] : flow.flow) remaining[edge] = amount;

  Schedule schedule(instance.days, instance.workers);
  WorkerCount worker = 0;
  std::vector<std::size_t> path;
  while (worker < instance.workers) {
    path.clear();
    WorkerCount bottleneck = std::numeric_limits<WorkerCount>::max();
    std::size_t at = CertificateGraph::kSource;
    while (at != CertificateGraph::kSink) {
      const auto& out = graph.out_edges(at);
      const auto it = std::find_if(out.begin(), out.end(), [&](std::size_t e) { return remaining[e] > 0; });
      if (it == out.end()) throw std::logic_error("conserved flow ran dry before reaching t");
      path.push_back(*it);
      bottleneck = std::min(bottleneck, remaining[*it]);
      at = graph.edges()[*it].second;
    }
    for (std::size_t e : path) remaining[e] -= bottleneck;
    for (WorkerCount k = 0; k < bottleneck; ++k) {
      ++worker;
      for (std::size_t e : path) {
        const std::size_t head = graph.edges()[e].second;
        if (head != CertificateGraph::kSink && graph.node(head).shift == Shift::On) {
          schedule.set(worker, graph.node(head).day, true);
        }
      }
    }
  }
  return schedule;
}

bool decide_unrequested(const Instance& instance) {
  for (int d = 1; d <= instance.days; ++d) {
    const auto& r = instance.request(d);
    if (r.lower != 0 || r.upper != instance.workers) {
      throw ValidationError("day " + std::to_string(d) + " has a nontrivial request");
    }
  }
  if (instance.workers == 0) return true;
  return CertificateGraph(instance.days, instance.bounds).connects();
}

}  // namespace dodo::certify
