#pragma once

#include <memory>
#include <string_view>

#include "wmst/online.hpp"

namespace wmst {

/// Follow-the-Predictions: accept exactly the edges of mst(G, w-hat).
std::unique_ptr<OnlineAlgorithm> ftp();

/// Greedy Follow-the-Predictions. Starts from mst(G, w-hat) and, when a
/// non-tree edge arrives, swaps it in for the heaviest-predicted unseen edge
/// on its cycle if its true weight does not exceed that prediction. Ties on
/// the heaviest prediction go to the smaller EdgeId.
std::unique_ptr<OnlineAlgorithm> gftp();

/// "ftp" or "gftp"; throws BadParameter otherwise.
AlgorithmFactory algorithm_factory(std::string_view name);

}  // namespace wmst
