#pragma once

// Test-side oracles. These deliberately avoid the library's DisjointSets,
// SpanningTree and cycle helpers so that agreement means something.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "wmst/algorithms.hpp"
#include "wmst/graph.hpp"
#include "wmst/online.hpp"

namespace wmst::testing {

// Kruskal with a plain component-label array (O(m n) relabelling), ties on
// weight broken by smaller edge id.
inline std::set<EdgeId> ref_mst(const Graph& g, const WeightMap& w) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return w[a] != w[b] ? w[a] < w[b] : a < b; });
  std::vector<std::size_t> label(g.vertex_count());
  std::iota(label.begin(), label.end(), std::size_t{0});
  std::set<EdgeId> tree;
  for (EdgeId e : order) {
    const std::size_t a = label[g.edge(e).u];
    const std::size_t b = label[g.edge(e).v];
    if (a == b) continue;
    for (auto& x : label) {
      if (x == b) x = a;
    }
    tree.insert(e);
  }
  return tree;
}

inline Rational ref_cost(const std::set<EdgeId>& edges, const WeightMap& w) {
  Rational total;
  for (EdgeId e : edges) total += w[e];
  return total;
}

// Edges on the path from a to b using only `tree` edges (recursive DFS).
inline bool ref_path(const Graph& g, const std::set<EdgeId>& tree, VertexId a, VertexId b, VertexId from,
                     std::vector<EdgeId>& out) {
  if (a == b) return true;
  for (EdgeId e : tree) {
    const Edge& edge = g.edge(e);
    VertexId next;
    if (edge.u == a) {
      next = edge.v;
    } else if (edge.v == a) {
      next = edge.u;
    } else {
      continue;
    }
    if (next == from) continue;
    out.push_back(e);
    if (ref_path(g, tree, next, b, a, out)) return true;
    out.pop_back();
  }
  return false;
}

inline std::vector<EdgeId> ref_cycle(const Graph& g, const std::set<EdgeId>& tree, EdgeId e) {
  std::vector<EdgeId> path;
  const VertexId none = static_cast<VertexId>(g.vertex_count());
  ref_path(g, tree, g.edge(e).u, g.edge(e).v, none, path);
  return path;
}

struct RefRun {
  Rational cost;
  std::vector<bool> accepted;  // per step, in arrival order
  std::vector<std::optional<EdgeId>> swapped;
};

inline RefRun ref_ftp(const WmstInstance& inst, const ArrivalOrder& order) {
  const std::set<EdgeId> tree = ref_mst(inst.graph(), inst.predicted());
  RefRun r;
  for (EdgeId e : order.edges()) {
    const bool take = tree.count(e) > 0;
    r.accepted.push_back(take);
    r.swapped.push_back(std::nullopt);
    if (take) r.cost += inst.actual()[e];
  }
  return r;
}

inline RefRun ref_gftp(const WmstInstance& inst, const ArrivalOrder& order) {
  const WeightMap& p = inst.predicted();
  std::set<EdgeId> tree = ref_mst(inst.graph(), p);
  std::set<EdgeId> unseen;
  for (EdgeId e = 0; e < inst.graph().edge_count(); ++e) unseen.insert(e);
  RefRun r;
  for (EdgeId e : order.edges()) {
    unseen.erase(e);
    const Rational& w = inst.actual()[e];
    if (tree.count(e)) {
      r.accepted.push_back(true);
      r.swapped.push_back(std::nullopt);
      r.cost += w;
      continue;
    }
    std::optional<EdgeId> heaviest;
    for (EdgeId c : ref_cycle(inst.graph(), tree, e)) {
      if (!unseen.count(c)) continue;
      if (!heaviest || p[c] > p[*heaviest] || (p[c] == p[*heaviest] && c < *heaviest)) heaviest = c;
    }
    if (heaviest && w <= p[*heaviest]) {
      tree.erase(*heaviest);
      tree.insert(e);
      r.accepted.push_back(true);
      r.swapped.push_back(heaviest);
      r.cost += w;
    } else {
      r.accepted.push_back(false);
      r.swapped.push_back(std::nullopt);
    }
  }
  return r;
}

// Sum of the n-1 largest discrepancies by full sort.
inline Rational ref_eta(const WmstInstance& inst) {
  std::vector<Rational> d;
  for (EdgeId e = 0; e < inst.graph().edge_count(); ++e) {
    Rational diff = inst.predicted()[e] - inst.actual()[e];
    d.push_back(diff < Rational(0) ? -diff : diff);
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  Rational total;
  for (std::size_t i = 0; i + 1 < inst.graph().vertex_count(); ++i) total += d[i];
  return total;
}

// Average cost over every permutation, by std::next_permutation.
inline Rational ref_expectation(const AlgorithmFactory& factory, const WmstInstance& inst) {
  std::vector<EdgeId> perm(inst.graph().edge_count());
  std::iota(perm.begin(), perm.end(), EdgeId{0});
  Rational total;
  std::int64_t count = 0;
  do {
    auto alg = factory();
    total += run(*alg, inst, ArrivalOrder(perm)).cost;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / Rational(count);
}

// Accepts an edge only when rejecting it would leave the graph of accepted
// plus still-unseen edges disconnected. Drives the reject branch of the
// triangle game.
class LazyAcceptor final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "lazy"; }
  void initialize(const Graph& graph, const WeightMap&) override {
    graph_ = &graph;
    available_.assign(graph.edge_count(), 1);
  }
  Decision reveal(EdgeId edge, const Rational&) override {
    available_[edge] = 0;
    if (connected()) return Decision::reject();
    available_[edge] = 1;
    return Decision::accept();
  }
  std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<LazyAcceptor>(*this); }

 private:
  bool connected() const {
    std::vector<char> seen(graph_->vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : graph_->incident(x)) {
        if (!available_[inc.edge] || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
    return reached == graph_->vertex_count();
  }

  const Graph* graph_ = nullptr;
  std::vector<char> available_;  // accepted or not yet revealed
};

// GFtP with the wrong exchange choice: drops the lowest-id unseen cycle edge
// instead of the heaviest-predicted one. Claims both guarantees so checked
// mode can catch it.
class MisSwappingGftp final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "mis-swapping-gftp"; }
  void initialize(const Graph& graph, const WeightMap& predicted) override {
    predicted_ = &predicted;
    tree_.emplace(mst(graph, predicted));
    unseen_.assign(graph.edge_count(), 1);
  }
  Decision reveal(EdgeId edge, const Rational& weight) override {
    unseen_[edge] = 0;
    if (tree_->contains(edge)) return Decision::accept();
    std::optional<EdgeId> first, heaviest;
    for (EdgeId e : tree_cycle(*tree_, edge)) {
      if (!unseen_[e]) continue;
      if (!first || e < *first) first = e;
      if (!heaviest || (*predicted_)[e] > (*predicted_)[*heaviest]) heaviest = e;
    }
    if (heaviest && weight <= (*predicted_)[*heaviest]) {
      tree_->exchange(*first, edge);
      return Decision::swap(*first);
    }
    return Decision::reject();
  }
  std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<MisSwappingGftp>(*this); }
  const SpanningTree* working_tree() const override { return tree_ ? &*tree_ : nullptr; }
  bool provides(Guarantee) const override { return true; }

 private:
  const WeightMap* predicted_ = nullptr;
  std::optional<SpanningTree> tree_;
  std::vector<char> unseen_;
};

}  // namespace wmst::testing
