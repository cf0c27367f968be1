#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/reference.hpp"
#include "wmst/adversaries.hpp"
#include "wmst/errors.hpp"
#include "wmst/graph.hpp"
#include "wmst/random.hpp"

using namespace wmst;
using wmst::testing::ref_cycle;
using wmst::testing::ref_mst;
using wmst::testing::small_triangle;

namespace {

ErrorCode graph_error(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  try {
    Graph g(n, edges);
  } catch (const WmstError& e) {
    return e.code();
  }
  FAIL("graph accepted");
  return ErrorCode::kParseError;
}

ErrorCode instance_error(const RawInstance& raw) {
  try {
    validate_instance(raw);
  } catch (const WmstError& e) {
    return e.code();
  }
  FAIL("instance accepted");
  return ErrorCode::kParseError;
}

std::vector<EdgeId> as_vector(const std::set<EdgeId>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("construction validates the edge list") {
    CHECK(graph_error(3, {{0, 1}, {1, 1}}) == ErrorCode::kSelfLoop);
    CHECK(graph_error(3, {{0, 1}, {1, 2}, {1, 0}}) == ErrorCode::kDuplicateEdge);
    CHECK(graph_error(3, {{0, 1}, {1, 3}}) == ErrorCode::kVertexOutOfRange);
    CHECK(graph_error(4, {{0, 1}, {2, 3}}) == ErrorCode::kDisconnectedGraph);
    CHECK(graph_error(1, {}) == ErrorCode::kBadParameter);

    Graph g(2, {{0, 1}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.incident(0).size() == 1);
    CHECK(g.incident(0)[0].neighbor == 1);
  }

  TEST_CASE("instance validation") {
    RawInstance raw{3, {{0, 1, Rational(2), Rational(1)}, {1, 2, Rational(3), Rational(1)}, {0, 2, Rational(2), Rational(2)}}};
    CHECK_NOTHROW(validate_instance(raw));

    RawInstance missing = raw;
    missing.edges[1].actual.reset();
    CHECK(instance_error(missing) == ErrorCode::kMissingWeight);

    RawInstance zero = raw;
    zero.edges[2].predicted = Rational(0);
    CHECK(instance_error(zero) == ErrorCode::kNonpositiveWeight);

    RawInstance negative_vertex = raw;
    negative_vertex.edges[0].u = -1;
    CHECK(instance_error(negative_vertex) == ErrorCode::kVertexOutOfRange);

    RawInstance disconnected{4, {{0, 1, Rational(1), Rational(1)}, {2, 3, Rational(1), Rational(1)}}};
    CHECK(instance_error(disconnected) == ErrorCode::kDisconnectedGraph);

    RawInstance single{2, {{0, 1, Rational(1), Rational(1)}}};
    WmstInstance inst = validate_instance(single);
    CHECK(inst.graph().edge_count() == 1);
  }

  TEST_CASE("mst on the small triangle") {
    WmstInstance t = small_triangle();
    SpanningTree by_prediction = mst(t.graph(), t.predicted());
    CHECK(by_prediction.edges() == std::vector<EdgeId>{0, 2});
    CHECK(tree_cost(by_prediction, t.predicted()) == Rational(4));
    CHECK(tree_cost(by_prediction, t.actual()) == Rational(3));

    SpanningTree by_truth = mst(t.graph(), t.actual());
    CHECK(by_truth.edges() == std::vector<EdgeId>{0, 1});
    CHECK(tree_cost(by_truth, t.actual()) == Rational(2));
  }

  TEST_CASE("mst of a tree graph is every edge") {
    Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    WeightMap w{Rational(9), Rational(1), Rational(5), Rational(2)};
    CHECK(mst(path, w).edges() == std::vector<EdgeId>{0, 1, 2, 3});
  }

  TEST_CASE("mst matches a label-array Kruskal including tie-breaks") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      RandomInstanceParams params;
      params.n = 2 + uniform_below(rng, 7);
      params.edge_prob = Rational(1, 2);
      params.weight_denominator = 3;  // many ties
      params.seed = rng();
      WmstInstance inst = random_instance(params);
      CAPTURE(i);
      CHECK(mst(inst.graph(), inst.actual()).edges() == as_vector(ref_mst(inst.graph(), inst.actual())));
    }
  }

  TEST_CASE("tree_cycle examples") {
    WmstInstance t = small_triangle();
    SpanningTree tree(t.graph(), std::vector<EdgeId>{0, 2});
    CHECK(tree_cycle(tree, 1) == std::vector<EdgeId>{0, 2});
    CHECK_THROWS_AS(tree_cycle(tree, 0), WmstError);

    // Star centred at 0 with leaves 1..3, plus the chord (1,2).
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    SpanningTree s(star, std::vector<EdgeId>{0, 1, 2});
    CHECK(tree_cycle(s, 3) == std::vector<EdgeId>{0, 1});

    // Path 0-1-2-3-4 and the chord (1,4) spans three path edges.
    Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
    SpanningTree p(path, std::vector<EdgeId>{0, 1, 2, 3});
    CHECK(tree_cycle(p, 4) == std::vector<EdgeId>{1, 2, 3});
    CHECK(p.path(4, 0) == std::vector<EdgeId>{3, 2, 1, 0});
  }

  TEST_CASE("tree_cycle agrees with a recursive path search") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      WmstInstance inst = random_instance(3 + uniform_below(rng, 6), Rational(2, 3), Rational(0), rng());
      SpanningTree tree = mst(inst.graph(), inst.actual());
      const auto edges = tree.edges();
      const std::set<EdgeId> ref_tree(edges.begin(), edges.end());
      for (EdgeId e = 0; e < inst.graph().edge_count(); ++e) {
        if (tree.contains(e)) continue;
        CHECK(tree_cycle(tree, e) == ref_cycle(inst.graph(), ref_tree, e));
      }
    }
  }

  TEST_CASE("spanning tree validation and exchange") {
    WmstInstance t = small_triangle();
    const Graph& g = t.graph();
    CHECK_THROWS_AS(SpanningTree(g, std::vector<EdgeId>{0}), WmstError);
    CHECK_THROWS_AS(SpanningTree(g, std::vector<EdgeId>{0, 0}), WmstError);
    CHECK_THROWS_AS(SpanningTree(g, std::vector<EdgeId>{0, 7}), WmstError);

    Graph square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK_THROWS_AS(SpanningTree(square, std::vector<EdgeId>{0, 1, 4}), WmstError);  // cycle 0-1-2

    SpanningTree tree(g, std::vector<EdgeId>{0, 2});
    tree.exchange(0, 1);
    CHECK(tree.edges() == std::vector<EdgeId>{1, 2});
    try {
      tree.exchange(1, 2);  // 2 is already a tree edge
      FAIL("exchange accepted");
    } catch (const WmstError& e) {
      CHECK(e.code() == ErrorCode::kBadParameter);
    }

    SpanningTree sq(square, std::vector<EdgeId>{0, 1, 2});
    CHECK_THROWS_AS(sq.exchange(2, 4), WmstError);  // 2 is not on the cycle of (0,2)
  }

  TEST_CASE("exchange witness on the triangle") {
    WmstInstance t = small_triangle();
    SpanningTree t1(t.graph(), std::vector<EdgeId>{0, 1});
    SpanningTree t2(t.graph(), std::vector<EdgeId>{1, 2});
    const EdgeId e2 = exchange_witness(t1, t2, 0);
    CHECK(e2 == 2);
    const auto c1 = tree_cycle(t1, e2);
    const auto c2 = tree_cycle(t2, 0);
    CHECK(std::find(c1.begin(), c1.end(), 0) != c1.end());
    CHECK(std::find(c2.begin(), c2.end(), e2) != c2.end());
    CHECK_THROWS_AS(exchange_witness(t1, t2, 1), WmstError);
  }

  TEST_CASE("brute force") {
    WmstInstance t = small_triangle();
    BruteForceResult r = brute_force_mst(t.graph(), t.actual());
    CHECK(r.cost == Rational(2));
    CHECK(r.tree.edges() == std::vector<EdgeId>{0, 1});

    Graph single(2, {{0, 1}});
    CHECK(brute_force_mst(single, {Rational(7, 2)}).cost == Rational(7, 2));

    // K_8 has 28 edges.
    std::vector<std::pair<VertexId, VertexId>> k8;
    for (VertexId a = 0; a < 8; ++a) {
      for (VertexId b = a + 1; b < 8; ++b) k8.emplace_back(a, b);
    }
    Graph big(8, k8);
    try {
      brute_force_mst(big, WeightMap(big.edge_count(), Rational(1)));
      FAIL("brute force accepted 28 edges");
    } catch (const WmstError& e) {
      CHECK(e.code() == ErrorCode::kTooLarge);
    }
  }
}
