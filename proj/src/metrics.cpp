#include "wmst/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace wmst {

std::vector<Rational> discrepancies(const WmstInstance& instance) {
  std::vector<Rational> out;
  out.reserve(instance.graph().edge_count());
  for (std::size_t e = 0; e < instance.graph().edge_count(); ++e) {
    out.push_back(abs(instance.predicted()[e] - instance.actual()[e]));
  }
  return out;
}

Rational eta1(const WmstInstance& instance) {
  auto d = discrepancies(instance);
  return std::accumulate(d.begin(), d.end(), Rational());
}

Rational eta2(const WmstInstance& instance) {
  const std::size_t m = instance.graph().edge_count();
  WeightMap upper(m), lower(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Rational& p = instance.predicted()[e];
    const Rational& w = instance.actual()[e];
    // E_o = {p > w}: the first map takes p there, the second takes w.
    upper[e] = p > w ? p : w;
    lower[e] = p > w ? w : p;
  }
  const Graph& g = instance.graph();
  return tree_cost(mst(g, upper), upper) - tree_cost(mst(g, lower), lower);
}

Rational eta(const WmstInstance& instance) {
  auto d = discrepancies(instance);
  const std::size_t take = instance.graph().vertex_count() - 1;
  std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(take), d.end(), std::greater<>());
  return std::accumulate(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(take), Rational());
}

ErrorReport error_report(const WmstInstance& instance) {
  const Graph& g = instance.graph();
  ErrorReport r;
  r.eta1 = eta1(instance);
  r.eta2 = eta2(instance);
  r.eta = eta(instance);
  r.opt_actual = tree_cost(mst(g, instance.actual()), instance.actual());
  r.opt_predicted = tree_cost(mst(g, instance.predicted()), instance.predicted());
  r.epsilon = r.eta / r.opt_actual;
  return r;
}

}  // namespace wmst
