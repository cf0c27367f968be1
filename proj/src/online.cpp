#include "wmst/online.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "wmst/errors.hpp"

namespace wmst {

ArrivalOrder::ArrivalOrder(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  std::vector<char> hit(edges_.size(), 0);
  for (EdgeId e : edges_) {
    if (e >= edges_.size() || hit[e]) {
      throw WmstError(ErrorCode::kBadParameter, "arrival order is not a permutation of the edge ids");
    }
    hit[e] = 1;
  }
}

ArrivalOrder ArrivalOrder::identity(std::size_t m) {
  std::vector<EdgeId> edges(m);
  std::iota(edges.begin(), edges.end(), EdgeId{0});
  return ArrivalOrder(std::move(edges));
}

std::string ArrivalOrder::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(edges_[i]);
  }
  out += '\n';
  return out;
}

ArrivalOrder ArrivalOrder::parse(std::string_view text) {
  std::vector<EdgeId> edges;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' || text[i] == '\r' || text[i] == ',') {
      ++i;
      continue;
    }
    EdgeId value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) throw WmstError(ErrorCode::kParseError, "arrival order must list edge ids");
    edges.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return ArrivalOrder(std::move(edges));
}

std::size_t RunTrace::swap_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) {
    return s.decision.swapped_out.has_value();
  }));
}

std::string RunTrace::to_text() const {
  std::ostringstream out;
  for (const TraceStep& s : steps) {
    out << s.edge << ' ' << s.weight << ' ' << (s.decision.accepted() ? "ACCEPT" : "REJECT");
    if (s.decision.swapped_out) out << " SWAP=" << *s.decision.swapped_out;
    out << '\n';
  }
  return out.str();
}

// Runtime verification of the working-tree guarantees an algorithm declares.
class Session::LemmaChecker {
 public:
  LemmaChecker(const OnlineAlgorithm& algorithm, const Graph& graph, const WeightMap& predicted)
      : algorithm_(algorithm), predicted_(predicted), initial_tree_(mst(graph, predicted)) {}

  void check(const std::vector<char>& seen) const {
    const SpanningTree* tree = algorithm_.working_tree();
    if (tree == nullptr) return;
    if (algorithm_.provides(Guarantee::kUnseenTreeEdgeDominance)) check_unseen_dominance(*tree, seen);
    if (algorithm_.provides(Guarantee::kPostRejectionDominance)) check_post_rejection(*tree, seen);
  }

  void record(EdgeId edge, const Rational& weight, const Decision& decision) {
    if (!decision.accepted()) rejected_.emplace_back(edge, weight);
  }

 private:
  void check_unseen_dominance(const SpanningTree& tree, const std::vector<char>& seen) const {
    const Graph& graph = tree.graph();
    for (EdgeId closing = 0; closing < graph.edge_count(); ++closing) {
      if (tree.contains(closing)) continue;
      for (EdgeId e : tree_cycle(tree, closing)) {
        if (seen[e] || !initial_tree_.contains(e)) continue;
        if (predicted_[e] > predicted_[closing]) {
          throw WmstError(ErrorCode::kLemmaViolation,
                          "unseen initial-tree edge " + std::to_string(e) + " on the cycle of edge " +
                              std::to_string(closing) + " has larger predicted weight");
        }
      }
    }
  }

  void check_post_rejection(const SpanningTree& tree, const std::vector<char>& seen) const {
    for (const auto& [rejected, weight] : rejected_) {
      if (tree.contains(rejected)) {
        throw WmstError(ErrorCode::kLemmaViolation,
                        "rejected edge " + std::to_string(rejected) + " is in the working tree");
      }
      for (EdgeId e : tree_cycle(tree, rejected)) {
        if (!seen[e] && !(predicted_[e] < weight)) {
          throw WmstError(ErrorCode::kLemmaViolation,
                          "unseen edge " + std::to_string(e) + " on the cycle of rejected edge " +
                              std::to_string(rejected) + " is not lighter than its revealed weight");
        }
      }
    }
  }

  const OnlineAlgorithm& algorithm_;
  const WeightMap& predicted_;
  SpanningTree initial_tree_;
  std::vector<std::pair<EdgeId, Rational>> rejected_;
};

Session::Session(OnlineAlgorithm& algorithm, const Graph& graph, const WeightMap& predicted, RunOptions options)
    : algorithm_(algorithm),
      graph_(graph),
      accepted_components_(graph.vertex_count()),
      seen_(graph.edge_count(), 0) {
  if (predicted.size() != graph.edge_count()) {
    throw WmstError(ErrorCode::kMissingWeight, "predicted weight map does not cover every edge");
  }
  algorithm_.initialize(graph, predicted);
  trace_.steps.reserve(graph.edge_count());
  if (options.checked) {
    checker_ = std::make_unique<LemmaChecker>(algorithm_, graph, predicted);
    checker_->check(seen_);
  }
}

Session::~Session() = default;

bool Session::revealed(EdgeId edge) const { return seen_.at(edge) != 0; }

std::size_t Session::remaining() const noexcept { return seen_.size() - seen_count_; }

Decision Session::reveal(EdgeId edge, const Rational& weight) {
  if (edge >= graph_.edge_count()) throw WmstError(ErrorCode::kBadParameter, "unknown edge id");
  if (seen_[edge]) throw WmstError(ErrorCode::kBadParameter, "edge " + std::to_string(edge) + " revealed twice");
  if (!weight.is_positive()) throw WmstError(ErrorCode::kNonpositiveWeight, "revealed weight must be positive");
  seen_[edge] = 1;
  ++seen_count_;

  Decision decision = algorithm_.reveal(edge, weight);
  if (decision.swapped_out) {
    EdgeId out = *decision.swapped_out;
    if (!decision.accepted() || out >= graph_.edge_count() || seen_[out]) {
      throw WmstError(ErrorCode::kNotSpanning,
                      std::string(algorithm_.name()) + " swapped out an edge that is not unseen");
    }
  }
  if (decision.accepted()) {
    const Edge& e = graph_.edge(edge);
    if (!accepted_components_.unite(e.u, e.v)) {
      throw WmstError(ErrorCode::kNotSpanning,
                      std::string(algorithm_.name()) + " accepted edge " + std::to_string(edge) + " closing a cycle");
    }
    trace_.accepted.push_back(edge);
    trace_.cost += weight;
  }
  trace_.steps.push_back(TraceStep{edge, weight, decision});

  if (checker_) {
    checker_->record(edge, weight, decision);
    checker_->check(seen_);
  }
  return decision;
}

RunTrace Session::finish() {
  if (seen_count_ != seen_.size()) {
    throw WmstError(ErrorCode::kBadParameter, "finish() called before every edge was revealed");
  }
  if (trace_.accepted.size() + 1 != graph_.vertex_count()) {
    throw WmstError(ErrorCode::kNotSpanning, std::string(algorithm_.name()) + " accepted " +
                                                 std::to_string(trace_.accepted.size()) +
                                                 " edges; a spanning tree needs " +
                                                 std::to_string(graph_.vertex_count() - 1));
  }
  std::sort(trace_.accepted.begin(), trace_.accepted.end());
  return std::move(trace_);
}

RunTrace run(OnlineAlgorithm& algorithm, const WmstInstance& instance, const ArrivalOrder& order,
             RunOptions options) {
  if (order.size() != instance.graph().edge_count()) {
    throw WmstError(ErrorCode::kBadParameter, "arrival order length differs from the edge count");
  }
  Session session(algorithm, instance.graph(), instance.predicted(), options);
  for (EdgeId e : order.edges()) session.reveal(e, instance.actual()[e]);
  return session.finish();
}

}  // namespace wmst
