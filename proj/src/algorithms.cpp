#include "wmst/algorithms.hpp"

#include <optional>
#include <string>

#include "wmst/errors.hpp"

namespace wmst {
namespace {

class FollowThePredictions final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "ftp"; }

  void initialize(const Graph& graph, const WeightMap& predicted) override {
    tree_.emplace(mst(graph, predicted));
    unseen_.assign(graph.edge_count(), 1);
  }

  Decision reveal(EdgeId edge, const Rational&) override {
    unseen_.at(edge) = 0;
    return tree_->contains(edge) ? Decision::accept() : Decision::reject();
  }

  std::unique_ptr<OnlineAlgorithm> clone() const override {
    return std::make_unique<FollowThePredictions>(*this);
  }

  const SpanningTree* working_tree() const override { return tree_ ? &*tree_ : nullptr; }

  bool provides(Guarantee g) const override { return g == Guarantee::kUnseenTreeEdgeDominance; }

  // Decisions depend only on the fixed tree, so the revealed set alone is a
  // sufficient state; the engine tracks that separately.
  std::string state_key() const override { return "ftp"; }

 private:
  std::optional<SpanningTree> tree_;
  std::vector<char> unseen_;
};

class GreedyFollowThePredictions final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "gftp"; }

  void initialize(const Graph& graph, const WeightMap& predicted) override {
    predicted_ = &predicted;
    tree_.emplace(mst(graph, predicted));
    unseen_.assign(graph.edge_count(), 1);
  }

  Decision reveal(EdgeId edge, const Rational& weight) override {
    unseen_.at(edge) = 0;
    if (tree_->contains(edge)) return Decision::accept();

    std::optional<EdgeId> heaviest;
    for (EdgeId e : tree_cycle(*tree_, edge)) {
      if (!unseen_[e]) continue;
      const Rational& p = (*predicted_)[e];
      if (!heaviest || p > (*predicted_)[*heaviest] || (p == (*predicted_)[*heaviest] && e < *heaviest)) {
        heaviest = e;
      }
    }
    if (heaviest && weight <= (*predicted_)[*heaviest]) {
      tree_->exchange(*heaviest, edge);
      return Decision::swap(*heaviest);
    }
    return Decision::reject();
  }

  std::unique_ptr<OnlineAlgorithm> clone() const override {
    return std::make_unique<GreedyFollowThePredictions>(*this);
  }

  const SpanningTree* working_tree() const override { return tree_ ? &*tree_ : nullptr; }

  bool provides(Guarantee) const override { return true; }

  std::string state_key() const override {
    std::string key;
    if (!tree_) return key;
    key.reserve(unseen_.size());
    for (EdgeId e = 0; e < unseen_.size(); ++e) key.push_back(tree_->contains(e) ? 'T' : '.');
    return key;
  }

 private:
  const WeightMap* predicted_ = nullptr;
  std::optional<SpanningTree> tree_;
  std::vector<char> unseen_;
};

}  // namespace

std::unique_ptr<OnlineAlgorithm> ftp() { return std::make_unique<FollowThePredictions>(); }

std::unique_ptr<OnlineAlgorithm> gftp() { return std::make_unique<GreedyFollowThePredictions>(); }

AlgorithmFactory algorithm_factory(std::string_view name) {
  if (name == "ftp") return [] { return ftp(); };
  if (name == "gftp") return [] { return gftp(); };
  throw WmstError(ErrorCode::kBadParameter, "unknown algorithm '" + std::string(name) + "' (expected ftp or gftp)");
}

}  // namespace wmst
