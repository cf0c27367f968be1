#pragma once

#include <cstdint>

#include "wmst/graph.hpp"
#include "wmst/online.hpp"

namespace wmst {

/// Star family on {u, v, z_1..z_l}: edge (u,v) plus (u,z_i), (v,z_i) for each
/// i. Vertex ids: u = 0, v = 1, z_i = i + 1. Edge ids: (u,v) = 0, then
/// (u,z_i) = 2i - 1 and (v,z_i) = 2i.
struct StarLowerBound {
  WmstInstance instance;
  ArrivalOrder arbitrary_order;  // EdgeId order
  ArrivalOrder defeating_order;  // initial predicted-MST edges first
};

/// Every star edge is predicted at k+1 and (u,v) at 1. After querying
/// mst(G, w-hat), the star edges it picked get true weight 2k+1 and their
/// siblings get 1. Throws BadParameter unless k > 1 and l >= 1.
StarLowerBound gen_ftp_lb(const Rational& k, std::int64_t l);

/// Same construction with w-hat(u,v) = w(u,v) = delta, 0 < delta < 1.
WmstInstance gen_ro_lb(const Rational& k, const Rational& delta, std::int64_t l);

/// Outcome of an adaptive adversary: the weights it committed to, the order it
/// revealed them in, and the opponent's recorded answers.
struct AdversarialGame {
  WmstInstance instance;
  ArrivalOrder order;
  RunTrace trace;
};

/// Triangle v1 v2 v3 with all predictions 1. Reveals w(v1,v2) = k first;
/// if the opponent accepts it the remaining weights are w(v1,v3) = 1 and
/// w(v2,v3) = 1, otherwise w(v2,v3) = big_k. Edge ids: (v1,v2) = 0,
/// (v1,v3) = 1, (v2,v3) = 2. Requires k > 1 and big_k > k.
AdversarialGame gen_eta2_game(std::int64_t k, std::int64_t big_k, OnlineAlgorithm& opponent,
                              RunOptions options = {});

/// Path v_1..v_2k (weights 1, exact predictions) and l stars z_j joined to
/// every v_i with prediction k+i-1. For each star the adversary fixes
/// w(z_j,v_1) = 2k and then, walking i upward, makes the next edge cheap
/// (weight i) if the opponent just accepted and expensive (2k+i) otherwise.
/// Vertex ids: v_i = i-1, z_j = 2k+j-1. Edge ids: path edges 0..2k-2, then
/// (z_j, v_i) = 2k-1 + (j-1)*2k + (i-1).
AdversarialGame gen_general_lb_game(std::int64_t k, std::int64_t l, OnlineAlgorithm& opponent,
                                    RunOptions options = {});

struct RandomInstanceParams {
  std::size_t n = 6;
  Rational edge_prob{1, 2};
  Rational noise_scale{0};
  std::uint64_t seed = 0;
  /// True weights are drawn from {1/D, 2/D, ..., 1}; noise uses the same grid.
  std::int64_t weight_denominator = 65536;
};

/// Erdos-Renyi G(n, p) resampled until connected. True weights uniform on the
/// grid in (0, 1]; predictions are true weights plus uniform noise in
/// [-noise_scale, noise_scale], clamped to at least 1/D.
WmstInstance random_instance(const RandomInstanceParams& params);

WmstInstance random_instance(std::size_t n, const Rational& edge_prob, const Rational& noise_scale,
                             std::uint64_t seed);

}  // namespace wmst
