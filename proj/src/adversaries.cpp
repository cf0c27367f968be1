#include "wmst/adversaries.hpp"

#include <string>
#include <utility>
#include <vector>

#include "wmst/errors.hpp"
#include "wmst/random.hpp"

namespace wmst {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw WmstError(ErrorCode::kBadParameter, message);
}

struct StarFamily {
  WmstInstance instance;
  std::vector<EdgeId> tree_edges;
};

// Predictions first, then true weights labelled from the tree mst() actually
// returns, so the construction never depends on a tie-breaking assumption.
StarFamily build_star_family(const Rational& k, const Rational& center_weight, std::int64_t l) {
  const auto stars = static_cast<std::size_t>(l);
  std::vector<std::pair<VertexId, VertexId>> endpoints{{0, 1}};
  WeightMap predicted{center_weight};
  for (std::size_t i = 1; i <= stars; ++i) {
    const auto z = static_cast<VertexId>(i + 1);
    endpoints.emplace_back(0, z);
    endpoints.emplace_back(1, z);
    predicted.push_back(k + 1);
    predicted.push_back(k + 1);
  }
  Graph graph(stars + 2, endpoints);
  SpanningTree tree = mst(graph, predicted);

  WeightMap actual(graph.edge_count());
  actual[0] = center_weight;
  for (EdgeId e = 1; e < graph.edge_count(); ++e) {
    actual[e] = tree.contains(e) ? Rational(2) * k + 1 : Rational(1);
  }
  auto tree_edges = tree.edges();
  return StarFamily{WmstInstance(std::move(graph), std::move(predicted), std::move(actual)), std::move(tree_edges)};
}

}  // namespace

StarLowerBound gen_ftp_lb(const Rational& k, std::int64_t l) {
  require(k > Rational(1), "ftp-lb requires k > 1");
  require(l >= 1, "ftp-lb requires l >= 1");
  StarFamily family = build_star_family(k, Rational(1), l);

  const std::size_t m = family.instance.graph().edge_count();
  std::vector<char> in_tree(m, 0);
  for (EdgeId e : family.tree_edges) in_tree[e] = 1;
  std::vector<EdgeId> defeating = family.tree_edges;
  for (EdgeId e = 0; e < m; ++e) {
    if (!in_tree[e]) defeating.push_back(e);
  }
  return StarLowerBound{std::move(family.instance), ArrivalOrder::identity(m), ArrivalOrder(std::move(defeating))};
}

WmstInstance gen_ro_lb(const Rational& k, const Rational& delta, std::int64_t l) {
  require(k > Rational(1), "ro-lb requires k > 1");
  require(delta > Rational(0) && delta < Rational(1), "ro-lb requires 0 < delta < 1");
  require(l >= 1, "ro-lb requires l >= 1");
  return build_star_family(k, delta, l).instance;
}

AdversarialGame gen_eta2_game(std::int64_t k, std::int64_t big_k, OnlineAlgorithm& opponent, RunOptions options) {
  require(k > 1, "eta2 game requires k > 1");
  require(big_k > k, "eta2 game requires K > k");

  Graph graph(3, {{0, 1}, {0, 2}, {1, 2}});
  WeightMap predicted(3, Rational(1));
  WeightMap actual(3);

  Session session(opponent, graph, predicted, options);
  actual[0] = Rational(k);
  const bool accepted = session.reveal(0, actual[0]).accepted();
  actual[1] = Rational(1);
  session.reveal(1, actual[1]);
  actual[2] = accepted ? Rational(1) : Rational(big_k);
  session.reveal(2, actual[2]);
  RunTrace trace = session.finish();

  return AdversarialGame{WmstInstance(std::move(graph), std::move(predicted), std::move(actual)),
                         ArrivalOrder::identity(3), std::move(trace)};
}

AdversarialGame gen_general_lb_game(std::int64_t k, std::int64_t l, OnlineAlgorithm& opponent,
                                    RunOptions options) {
  require(k > 1, "general-lb requires k > 1");
  require(l >= 1, "general-lb requires l >= 1");

  const auto path_len = static_cast<std::size_t>(2 * k);  // vertices v_1..v_2k
  const auto stars = static_cast<std::size_t>(l);
  auto v = [](std::size_t i) { return static_cast<VertexId>(i - 1); };
  auto z = [&](std::size_t j) { return static_cast<VertexId>(path_len + j - 1); };
  auto star_edge = [&](std::size_t j, std::size_t i) {
    return static_cast<EdgeId>((path_len - 1) + (j - 1) * path_len + (i - 1));
  };

  std::vector<std::pair<VertexId, VertexId>> endpoints;
  WeightMap predicted;
  for (std::size_t i = 1; i < path_len; ++i) {
    endpoints.emplace_back(v(i), v(i + 1));
    predicted.emplace_back(1);
  }
  for (std::size_t j = 1; j <= stars; ++j) {
    for (std::size_t i = 1; i <= path_len; ++i) {
      endpoints.emplace_back(z(j), v(i));
      predicted.emplace_back(k + static_cast<std::int64_t>(i) - 1);
    }
  }
  Graph graph(path_len + stars, endpoints);
  WeightMap actual(graph.edge_count());
  std::vector<EdgeId> order;
  order.reserve(graph.edge_count());

  Session session(opponent, graph, predicted, options);
  auto reveal = [&](EdgeId e) {
    order.push_back(e);
    return session.reveal(e, actual[e]).accepted();
  };

  for (std::size_t i = 1; i < path_len; ++i) {
    actual[i - 1] = Rational(1);
    reveal(static_cast<EdgeId>(i - 1));
  }
  for (std::size_t j = 1; j <= stars; ++j) {
    actual[star_edge(j, 1)] = Rational(2 * k);
    for (std::size_t i = 1; i < path_len; ++i) {
      const bool accepted = reveal(star_edge(j, i));
      const auto step = static_cast<std::int64_t>(i);
      actual[star_edge(j, i + 1)] = accepted ? Rational(step) : Rational(2 * k + step);
    }
    reveal(star_edge(j, path_len));
  }
  RunTrace trace = session.finish();

  return AdversarialGame{WmstInstance(std::move(graph), std::move(predicted), std::move(actual)),
                         ArrivalOrder(std::move(order)), std::move(trace)};
}

WmstInstance random_instance(const RandomInstanceParams& params) {
  require(params.n >= 2, "random instance requires n >= 2");
  require(params.edge_prob > Rational(0) && params.edge_prob <= Rational(1), "edge probability must be in (0, 1]");
  require(params.noise_scale >= Rational(0), "noise scale must be non-negative");
  require(params.weight_denominator >= 1 && params.weight_denominator <= 65536,
          "weight denominator must be in [1, 65536]");

  Rng rng(params.seed);
  const std::size_t n = params.n;
  const auto p_num = static_cast<std::uint64_t>(params.edge_prob.num());
  const auto p_den = static_cast<std::uint64_t>(params.edge_prob.den());

  std::vector<std::pair<VertexId, VertexId>> endpoints;
  while (true) {
    endpoints.clear();
    DisjointSets components(n);
    std::size_t merged = 0;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (uniform_below(rng, p_den) < p_num) {
          endpoints.emplace_back(a, b);
          merged += components.unite(a, b) ? 1 : 0;
        }
      }
    }
    if (merged + 1 == n) break;
  }

  const std::int64_t grid = params.weight_denominator;
  const auto ugrid = static_cast<std::uint64_t>(grid);
  const Rational floor(1, grid);
  WeightMap actual, predicted;
  for (std::size_t e = 0; e < endpoints.size(); ++e) {
    Rational w(static_cast<std::int64_t>(uniform_below(rng, ugrid)) + 1, grid);
    auto offset = static_cast<std::int64_t>(uniform_below(rng, 2 * ugrid + 1)) - grid;
    Rational p = w + params.noise_scale * Rational(offset, grid);
    actual.push_back(w);
    predicted.push_back(p > Rational(0) ? p : floor);
  }
  return WmstInstance(Graph(n, endpoints), std::move(predicted), std::move(actual));
}

WmstInstance random_instance(std::size_t n, const Rational& edge_prob, const Rational& noise_scale,
                             std::uint64_t seed) {
  RandomInstanceParams params;
  params.n = n;
  params.edge_prob = edge_prob;
  params.noise_scale = noise_scale;
  params.seed = seed;
  return random_instance(params);
}

}  // namespace wmst
