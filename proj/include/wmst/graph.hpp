#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wmst/rational.hpp"

namespace wmst {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple, connected, undirected graph. Edge ids are dense and follow the
/// order of the endpoint list given at construction.
class Graph {
 public:
  struct Incidence {
    VertexId neighbor;
    EdgeId edge;
  };

  /// Throws WmstError (BadParameter, VertexOutOfRange, SelfLoop,
  /// DuplicateEdge, DisconnectedGraph) when the input is not a simple
  /// connected graph on n >= 2 vertices.
  Graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& endpoints);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidences_;
};

/// Edge weights indexed by EdgeId.
using WeightMap = std::vector<Rational>;

/// The triple (graph, predicted weights, true weights). All weights are
/// strictly positive and both maps cover every edge.
class WmstInstance {
 public:
  WmstInstance(Graph graph, WeightMap predicted, WeightMap actual);

  const Graph& graph() const noexcept { return graph_; }
  const WeightMap& predicted() const noexcept { return predicted_; }
  const WeightMap& actual() const noexcept { return actual_; }

  WmstInstance with_predicted(WeightMap predicted) const;

 private:
  Graph graph_;
  WeightMap predicted_;
  WeightMap actual_;
};

/// Unvalidated instance description, as read from a file.
struct RawEdge {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::optional<Rational> predicted;
  std::optional<Rational> actual;
};

struct RawInstance {
  std::int64_t n = 0;
  std::vector<RawEdge> edges;
};

WmstInstance validate_instance(const RawInstance& raw);

/// Spanning tree of a graph, stored as an edge membership vector.
///
/// The tree refers to its graph; the graph must outlive it.
class SpanningTree {
 public:
  /// Throws NotSpanning unless `edges` are n-1 distinct edges forming an
  /// acyclic subgraph.
  SpanningTree(const Graph& graph, std::span<const EdgeId> edges);

  const Graph& graph() const noexcept { return *graph_; }
  bool contains(EdgeId e) const { return member_.at(e) != 0; }
  std::size_t size() const noexcept { return graph_->vertex_count() - 1; }
  std::vector<EdgeId> edges() const;

  /// Edges of the unique a-b path, ordered from a to b.
  std::vector<EdgeId> path(VertexId a, VertexId b) const;

  /// Replaces `out` by `in`. Requires in not in the tree and out on the
  /// cycle that `in` closes; throws BadParameter otherwise.
  void exchange(EdgeId out, EdgeId in);

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.member_ == b.member_; }

 private:
  const Graph* graph_;
  std::vector<char> member_;
};

/// Kruskal over (weight, id) ascending; ties go to the smaller EdgeId.
SpanningTree mst(const Graph& graph, const WeightMap& weights);

Rational tree_cost(const SpanningTree& tree, const WeightMap& weights);

/// The cycle `e` closes in `tree`, minus `e` itself: the tree path between
/// e's endpoints, ordered from e.u to e.v. Throws EdgeInTree if e is a tree edge.
std::vector<EdgeId> tree_cycle(const SpanningTree& tree, EdgeId e);

/// Exchange partner for e1 in t1 \ t2: an edge e2 in t2 \ t1 whose cycle in t1
/// contains e1 and such that e1's cycle in t2 contains e2.
EdgeId exchange_witness(const SpanningTree& t1, const SpanningTree& t2, EdgeId e1);

struct BruteForceResult {
  Rational cost;
  SpanningTree tree;
};

inline constexpr std::size_t kBruteForceMaxEdges = 24;

/// Enumerates every (n-1)-subset of edges. Returns the minimum cost and the
/// lexicographically smallest minimizer. Throws TooLarge when m > 24.
BruteForceResult brute_force_mst(const Graph& graph, const WeightMap& weights);

/// Union-find over vertex ids with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns false when x and y were already joined.
  bool unite(std::size_t x, std::size_t y);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace wmst
