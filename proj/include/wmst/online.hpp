#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wmst/graph.hpp"

namespace wmst {

/// Irrevocable answer to one revealed edge. A swap-accept additionally names
/// the unseen working-tree edge the algorithm dropped to make room.
struct Decision {
  enum class Kind { kAccept, kReject };

  Kind kind = Kind::kReject;
  std::optional<EdgeId> swapped_out;

  static Decision accept() { return Decision{Kind::kAccept, std::nullopt}; }
  static Decision reject() { return Decision{Kind::kReject, std::nullopt}; }
  static Decision swap(EdgeId out) { return Decision{Kind::kAccept, out}; }

  bool accepted() const noexcept { return kind == Kind::kAccept; }

  friend bool operator==(const Decision&, const Decision&) = default;
};

/// A permutation of {0, ..., m-1}: the order in which true weights arrive.
class ArrivalOrder {
 public:
  /// Throws BadParameter unless `edges` is a bijection on [0, m).
  explicit ArrivalOrder(std::vector<EdgeId> edges);

  static ArrivalOrder identity(std::size_t m);

  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  EdgeId operator[](std::size_t i) const { return edges_.at(i); }

  /// Space-separated edge ids, newline terminated.
  std::string to_text() const;
  static ArrivalOrder parse(std::string_view text);

  friend bool operator==(const ArrivalOrder&, const ArrivalOrder&) = default;

 private:
  std::vector<EdgeId> edges_;
};

/// Structural properties an algorithm promises about its working tree; the
/// engine verifies them in checked mode.
enum class Guarantee {
  /// An unseen edge of the initial predicted MST that still sits on the cycle
  /// some edge e' closes in the working tree has predicted weight <= that of e'.
  kUnseenTreeEdgeDominance,
  /// After rejecting e', every unseen edge on e''s cycle in the working tree
  /// has predicted weight strictly below w(e').
  kPostRejectionDominance,
};

/// An online algorithm for the weight-arrival model. The graph and predicted
/// weights are given up front; true weights are then revealed one edge at a
/// time and each reveal must be answered immediately.
///
/// Implementations keep pointers to the graph and predictions passed to
/// initialize(); both must outlive the run.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  virtual std::string_view name() const = 0;
  virtual void initialize(const Graph& graph, const WeightMap& predicted) = 0;
  virtual Decision reveal(EdgeId edge, const Rational& weight) = 0;
  virtual std::unique_ptr<OnlineAlgorithm> clone() const = 0;

  /// Working tree for algorithms that maintain one, else nullptr.
  virtual const SpanningTree* working_tree() const { return nullptr; }
  virtual bool provides(Guarantee) const { return false; }

  /// Opaque key such that two states with equal keys (and equal revealed
  /// sets) make identical future decisions. Empty means "no such key".
  virtual std::string state_key() const { return {}; }
};

using AlgorithmFactory = std::function<std::unique_ptr<OnlineAlgorithm>()>;

struct TraceStep {
  EdgeId edge = 0;
  Rational weight;
  Decision decision;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct RunTrace {
  std::vector<TraceStep> steps;
  std::vector<EdgeId> accepted;  // ascending
  Rational cost;

  std::size_t swap_count() const;

  /// One line per step: "<edge> <weight> ACCEPT|REJECT[ SWAP=<id>]".
  std::string to_text() const;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

struct RunOptions {
  /// Verify the algorithm's declared Guarantees after every step.
  bool checked = false;
};

/// Drives one online execution reveal by reveal. Used directly by adaptive
/// adversaries, which choose later weights from earlier decisions; run() is
/// the non-adaptive wrapper.
///
/// The session validates every answer: accepted edges must stay acyclic,
/// a swap must name an unseen edge, and the final accepted set must span.
class Session {
 public:
  Session(OnlineAlgorithm& algorithm, const Graph& graph, const WeightMap& predicted, RunOptions options = {});
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Decision reveal(EdgeId edge, const Rational& weight);
  bool revealed(EdgeId edge) const;
  std::size_t remaining() const noexcept;

  /// Requires every edge to have been revealed. Throws NotSpanning when the
  /// accepted edges do not form a spanning tree.
  RunTrace finish();

 private:
  class LemmaChecker;

  OnlineAlgorithm& algorithm_;
  const Graph& graph_;
  DisjointSets accepted_components_;
  std::vector<char> seen_;
  std::size_t seen_count_ = 0;
  RunTrace trace_;
  std::unique_ptr<LemmaChecker> checker_;
};

/// Reveals (w(e), e) for e in `order` and returns the validated trace.
RunTrace run(OnlineAlgorithm& algorithm, const WmstInstance& instance, const ArrivalOrder& order,
             RunOptions options = {});

}  // namespace wmst
