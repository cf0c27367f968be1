#include "wmst/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "wmst/errors.hpp"

namespace wmst {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

Graph::Graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& endpoints)
    : n_(vertex_count) {
  if (n_ < 2) throw WmstError(ErrorCode::kBadParameter, "a graph needs at least 2 vertices");

  std::set<std::pair<VertexId, VertexId>> seen;
  edges_.reserve(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    auto [u, v] = endpoints[i];
    const std::string where = "edge " + std::to_string(i);
    if (u >= n_ || v >= n_) throw WmstError(ErrorCode::kVertexOutOfRange, where + " has an endpoint outside [0, n)");
    if (u == v) throw WmstError(ErrorCode::kSelfLoop, where + " is a self-loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw WmstError(ErrorCode::kDuplicateEdge, where + " repeats an endpoint pair");
    }
    edges_.push_back(Edge{static_cast<EdgeId>(i), u, v});
  }

  // CSR adjacency.
  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidences_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    incidences_[cursor[e.u]++] = Incidence{e.v, e.id};
    incidences_[cursor[e.v]++] = Incidence{e.u, e.id};
  }

  DisjointSets components(n_);
  std::size_t merged = 0;
  for (const Edge& e : edges_) merged += components.unite(e.u, e.v) ? 1 : 0;
  if (merged != n_ - 1) throw WmstError(ErrorCode::kDisconnectedGraph, "graph is not connected");
}

std::span<const Graph::Incidence> Graph::incident(VertexId v) const {
  return std::span<const Incidence>(incidences_).subspan(offsets_.at(v), offsets_[v + 1] - offsets_[v]);
}

namespace {

void check_weights(const Graph& graph, const WeightMap& weights, const char* which) {
  if (weights.size() != graph.edge_count()) {
    throw WmstError(ErrorCode::kMissingWeight, std::string(which) + " weight map does not cover every edge");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!weights[i].is_positive()) {
      throw WmstError(ErrorCode::kNonpositiveWeight,
                      std::string(which) + " weight of edge " + std::to_string(i) + " is not positive");
    }
  }
}

}  // namespace

WmstInstance::WmstInstance(Graph graph, WeightMap predicted, WeightMap actual)
    : graph_(std::move(graph)), predicted_(std::move(predicted)), actual_(std::move(actual)) {
  check_weights(graph_, predicted_, "predicted");
  check_weights(graph_, actual_, "actual");
}

WmstInstance WmstInstance::with_predicted(WeightMap predicted) const {
  return WmstInstance(graph_, std::move(predicted), actual_);
}

WmstInstance validate_instance(const RawInstance& raw) {
  if (raw.n < 2) throw WmstError(ErrorCode::kBadParameter, "n must be at least 2");
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  endpoints.reserve(raw.edges.size());
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const RawEdge& e = raw.edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= raw.n || e.v >= raw.n) {
      throw WmstError(ErrorCode::kVertexOutOfRange, "edge " + std::to_string(i) + " has an endpoint outside [0, n)");
    }
    endpoints.emplace_back(static_cast<VertexId>(e.u), static_cast<VertexId>(e.v));
  }

  Graph graph(static_cast<std::size_t>(raw.n), endpoints);

  WeightMap predicted;
  WeightMap actual;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const RawEdge& e = raw.edges[i];
    if (!e.predicted || !e.actual) {
      throw WmstError(ErrorCode::kMissingWeight, "edge " + std::to_string(i) + " lacks a weight");
    }
    predicted.push_back(*e.predicted);
    actual.push_back(*e.actual);
  }
  return WmstInstance(std::move(graph), std::move(predicted), std::move(actual));
}

SpanningTree::SpanningTree(const Graph& graph, std::span<const EdgeId> edges)
    : graph_(&graph), member_(graph.edge_count(), 0) {
  if (edges.size() != graph.vertex_count() - 1) {
    throw WmstError(ErrorCode::kNotSpanning, "a spanning tree needs exactly n-1 edges");
  }
  DisjointSets components(graph.vertex_count());
  for (EdgeId e : edges) {
    if (e >= graph.edge_count()) throw WmstError(ErrorCode::kNotSpanning, "unknown edge id");
    const Edge& edge = graph.edge(e);
    if (member_[e] || !components.unite(edge.u, edge.v)) {
      throw WmstError(ErrorCode::kNotSpanning, "edge set contains a cycle or a repeated edge");
    }
    member_[e] = 1;
  }
}

std::vector<EdgeId> SpanningTree::edges() const {
  std::vector<EdgeId> out;
  out.reserve(size());
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

std::vector<EdgeId> SpanningTree::path(VertexId a, VertexId b) const {
  const std::size_t n = graph_->vertex_count();
  if (a >= n || b >= n) throw WmstError(ErrorCode::kVertexOutOfRange, "path endpoint outside [0, n)");
  if (a == b) return {};

  // BFS from b so that walking parents from a yields the path in a->b order.
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(n, kNone);
  std::vector<char> visited(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);
  queue.push_back(b);
  visited[b] = 1;
  for (std::size_t head = 0; head < queue.size() && !visited[a]; ++head) {
    VertexId x = queue[head];
    for (const auto& inc : graph_->incident(x)) {
      if (!member_[inc.edge] || visited[inc.neighbor]) continue;
      visited[inc.neighbor] = 1;
      via[inc.neighbor] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }

  std::vector<EdgeId> out;
  for (VertexId x = a; x != b;) {
    EdgeId e = via[x];
    out.push_back(e);
    const Edge& edge = graph_->edge(e);
    x = edge.u == x ? edge.v : edge.u;
  }
  return out;
}

void SpanningTree::exchange(EdgeId out, EdgeId in) {
  if (contains(in)) throw WmstError(ErrorCode::kBadParameter, "exchange: incoming edge already in tree");
  auto cycle = tree_cycle(*this, in);
  if (std::find(cycle.begin(), cycle.end(), out) == cycle.end()) {
    throw WmstError(ErrorCode::kBadParameter, "exchange: outgoing edge is not on the incoming edge's cycle");
  }
  member_[out] = 0;
  member_[in] = 1;
}

SpanningTree mst(const Graph& graph, const WeightMap& weights) {
  std::vector<EdgeId> order(graph.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return weights[a] < weights[b]; });

  DisjointSets components(graph.vertex_count());
  std::vector<EdgeId> chosen;
  chosen.reserve(graph.vertex_count() - 1);
  for (EdgeId e : order) {
    const Edge& edge = graph.edge(e);
    if (components.unite(edge.u, edge.v)) {
      chosen.push_back(e);
      if (chosen.size() + 1 == graph.vertex_count()) break;
    }
  }
  return SpanningTree(graph, chosen);
}

Rational tree_cost(const SpanningTree& tree, const WeightMap& weights) {
  Rational total;
  for (EdgeId e : tree.edges()) total += weights.at(e);
  return total;
}

std::vector<EdgeId> tree_cycle(const SpanningTree& tree, EdgeId e) {
  if (tree.contains(e)) throw WmstError(ErrorCode::kEdgeInTree, "edge " + std::to_string(e) + " is a tree edge");
  const Edge& edge = tree.graph().edge(e);
  return tree.path(edge.u, edge.v);
}

EdgeId exchange_witness(const SpanningTree& t1, const SpanningTree& t2, EdgeId e1) {
  if (!t1.contains(e1) || t2.contains(e1)) {
    throw WmstError(ErrorCode::kBadParameter, "exchange_witness requires e1 in t1 and not in t2");
  }
  const Graph& graph = t1.graph();
  const Edge& cut = graph.edge(e1);

  // Side of cut.u after removing e1 from t1.
  std::vector<char> side(graph.vertex_count(), 0);
  std::vector<VertexId> stack{cut.u};
  side[cut.u] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : graph.incident(x)) {
      if (inc.edge == e1 || !t1.contains(inc.edge) || side[inc.neighbor]) continue;
      side[inc.neighbor] = 1;
      stack.push_back(inc.neighbor);
    }
  }

  for (EdgeId e : t2.path(cut.u, cut.v)) {
    const Edge& edge = graph.edge(e);
    if (side[edge.u] != side[edge.v]) return e;
  }
  throw WmstError(ErrorCode::kNotSpanning, "no crossing edge found; inputs are not spanning trees of one graph");
}

BruteForceResult brute_force_mst(const Graph& graph, const WeightMap& weights) {
  const std::size_t m = graph.edge_count();
  const std::size_t k = graph.vertex_count() - 1;
  if (m > kBruteForceMaxEdges) {
    throw WmstError(ErrorCode::kTooLarge, "brute_force_mst supports at most 24 edges, got " + std::to_string(m));
  }

  std::vector<EdgeId> pick(k);
  std::iota(pick.begin(), pick.end(), EdgeId{0});
  std::optional<Rational> best_cost;
  std::vector<EdgeId> best;

  while (true) {
    DisjointSets components(graph.vertex_count());
    bool acyclic = true;
    for (EdgeId e : pick) {
      if (!components.unite(graph.edge(e).u, graph.edge(e).v)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) {
      Rational cost;
      for (EdgeId e : pick) cost += weights.at(e);
      if (!best_cost || cost < *best_cost) {
        best_cost = cost;
        best = pick;
      }
    }

    // Next k-combination of [0, m) in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  return BruteForceResult{*best_cost, SpanningTree(graph, best)};
}

}  // namespace wmst
