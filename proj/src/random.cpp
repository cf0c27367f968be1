#include "wmst/random.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace wmst {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void shuffle(std::span<EdgeId> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

ArrivalOrder random_order(std::size_t m, Rng& rng) {
  std::vector<EdgeId> edges(m);
  std::iota(edges.begin(), edges.end(), EdgeId{0});
  shuffle(edges, rng);
  return ArrivalOrder(std::move(edges));
}

}  // namespace wmst
