#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/reference.hpp"
#include "wmst/adversaries.hpp"
#include "wmst/algorithms.hpp"
#include "wmst/metrics.hpp"
#include "wmst/random.hpp"

using namespace wmst;
using wmst::testing::small_triangle;

TEST_SUITE("metrics") {
  TEST_CASE("small triangle") {
    const WmstInstance t = small_triangle();
    CHECK(discrepancies(t) == std::vector<Rational>{Rational(1), Rational(2), Rational(0)});
    CHECK(eta1(t) == Rational(3));
    CHECK(eta2(t) == Rational(2));  // max-map MST 2+2, min-map MST 1+1
    CHECK(eta(t) == Rational(3));   // top two of {1, 2, 0}

    const ErrorReport r = error_report(t);
    CHECK(r.opt_actual == Rational(2));
    CHECK(r.opt_predicted == Rational(4));
    CHECK(r.epsilon == Rational(3, 2));
  }

  TEST_CASE("perfect predictions have zero error") {
    const ErrorReport r = error_report(wmst::testing::perfect(small_triangle()));
    CHECK(r.eta1 == Rational(0));
    CHECK(r.eta2 == Rational(0));
    CHECK(r.eta == Rational(0));
    CHECK(r.epsilon == Rational(0));
  }

  TEST_CASE("star lower-bound instance with k = 3, l = 3") {
    const WmstInstance inst = gen_ftp_lb(Rational(3), 3).instance;
    CHECK(eta1(inst) == Rational(18));  // six star edges off by 3
    const ErrorReport r = error_report(inst);
    CHECK(r.eta == Rational(12));
    CHECK(r.opt_actual == Rational(4));
    CHECK(r.epsilon == Rational(3));
  }

  TEST_CASE("triangle game weights") {
    Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
    const WeightMap ones(3, Rational(1));
    // Accept branch, k = 7: true weights (7, 1, 1).
    CHECK(eta2(WmstInstance(g, ones, {Rational(7), Rational(1), Rational(1)})) == Rational(0));
    // Reject branch, k = 5, K = 100: true weights (5, 1, 100).
    CHECK(eta2(WmstInstance(g, ones, {Rational(5), Rational(1), Rational(100)})) == Rational(4));
  }

  TEST_CASE("eta agrees with a full-sort oracle and the Lipschitz property holds") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
      WmstInstance inst = random_instance(2 + uniform_below(rng, 7), Rational(1, 2), Rational(1), rng());
      const ErrorReport r = error_report(inst);
      CHECK(r.eta == wmst::testing::ref_eta(inst));
      CHECK(abs(r.opt_predicted - r.opt_actual) <= r.eta);
      CHECK(r.eta <= r.eta1);
    }
  }
}
