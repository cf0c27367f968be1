#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/reference.hpp"
#include "wmst/adversaries.hpp"
#include "wmst/algorithms.hpp"
#include "wmst/errors.hpp"
#include "wmst/metrics.hpp"
#include "wmst/random.hpp"

using namespace wmst;
using wmst::testing::RefRun;

namespace {

void check_same(const RunTrace& trace, const RefRun& ref) {
  REQUIRE(trace.steps.size() == ref.accepted.size());
  for (std::size_t i = 0; i < ref.accepted.size(); ++i) {
    CAPTURE(i);
    CHECK(trace.steps[i].decision.accepted() == ref.accepted[i]);
    CHECK(trace.steps[i].decision.swapped_out == ref.swapped[i]);
  }
  CHECK(trace.cost == ref.cost);
}

}  // namespace

TEST_SUITE("algorithms") {
  TEST_CASE("factory") {
    CHECK(algorithm_factory("ftp")()->name() == "ftp");
    CHECK(algorithm_factory("gftp")()->name() == "gftp");
    CHECK_THROWS_AS(algorithm_factory("opt"), WmstError);
  }

  TEST_CASE("ftp and gftp match the reference simulations, including tie-heavy weights") {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
      RandomInstanceParams params;
      params.n = 2 + uniform_below(rng, 7);
      params.edge_prob = Rational(1, 2);
      params.noise_scale = Rational(1, 2);
      params.weight_denominator = i % 2 ? 4 : 65536;
      params.seed = rng();
      const WmstInstance inst = random_instance(params);
      const ArrivalOrder order = random_order(inst.graph().edge_count(), rng);
      CAPTURE(i);
      auto f = ftp();
      check_same(run(*f, inst, order), wmst::testing::ref_ftp(inst, order));
      auto g = gftp();
      check_same(run(*g, inst, order), wmst::testing::ref_gftp(inst, order));
    }
  }

  TEST_CASE("tree graphs leave no choice") {
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    WmstInstance inst(path, {Rational(5), Rational(1), Rational(2)}, {Rational(1), Rational(9), Rational(3)});
    for (const char* name : {"ftp", "gftp"}) {
      auto alg = algorithm_factory(name)();
      CHECK(run(*alg, inst, ArrivalOrder({2, 0, 1})).cost == Rational(13));
    }
  }

  TEST_CASE("perfect predictions give OPT") {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
      const WmstInstance inst = random_instance(2 + uniform_below(rng, 7), Rational(2, 3), Rational(0), rng());
      const Rational opt = error_report(inst).opt_actual;
      const ArrivalOrder order = random_order(inst.graph().edge_count(), rng);
      auto f = ftp();
      auto g = gftp();
      CHECK(run(*f, inst, order).cost == opt);
      CHECK(run(*g, inst, order).cost == opt);
    }
  }

  TEST_CASE("gftp swaps every star when cheap edges come first") {
    const Rational k(3), delta(1, 3);
    const std::int64_t l = 4;
    const WmstInstance inst = gen_ro_lb(k, delta, l);
    // Cheap edges (true weight 1) first, then the rest in id order.
    std::vector<EdgeId> cheap_first, rest;
    for (EdgeId e = 1; e < inst.graph().edge_count(); ++e) {
      (inst.actual()[e] == Rational(1) ? cheap_first : rest).push_back(e);
    }
    rest.push_back(0);
    cheap_first.insert(cheap_first.end(), rest.begin(), rest.end());
    auto g = gftp();
    const RunTrace trace = run(*g, inst, ArrivalOrder(cheap_first), RunOptions{true});
    CHECK(trace.swap_count() == static_cast<std::size_t>(l));
    CHECK(trace.cost == delta + Rational(l));
  }
}
