#include <memory>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/reference.hpp"
#include "wmst/adversaries.hpp"
#include "wmst/algorithms.hpp"
#include "wmst/errors.hpp"
#include "wmst/online.hpp"
#include "wmst/random.hpp"

using namespace wmst;
using wmst::testing::small_triangle;

namespace {

// Accepts everything; closes a cycle on any graph with m > n-1.
class AcceptAll final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "accept-all"; }
  void initialize(const Graph&, const WeightMap&) override {}
  Decision reveal(EdgeId, const Rational&) override { return Decision::accept(); }
  std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<AcceptAll>(*this); }
};

class RejectAll final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "reject-all"; }
  void initialize(const Graph&, const WeightMap&) override {}
  Decision reveal(EdgeId, const Rational&) override { return Decision::reject(); }
  std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<RejectAll>(*this); }
};

ErrorCode code_of(auto&& body) {
  try {
    body();
  } catch (const WmstError& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::kParseError;
}

}  // namespace

TEST_SUITE("online") {
  TEST_CASE("arrival orders") {
    CHECK(ArrivalOrder::identity(3).to_text() == "0 1 2\n");
    CHECK(ArrivalOrder::parse("2 0\n1\n") == ArrivalOrder({2, 0, 1}));
    CHECK(code_of([] { ArrivalOrder({0, 0, 1}); }) == ErrorCode::kBadParameter);
    CHECK(code_of([] { ArrivalOrder({0, 3, 1}); }) == ErrorCode::kBadParameter);
    CHECK(code_of([] { ArrivalOrder::parse("0 x"); }) == ErrorCode::kParseError);
  }

  TEST_CASE("golden trace: gftp on the small triangle") {
    const WmstInstance t = small_triangle();
    auto alg = gftp();
    const RunTrace trace = run(*alg, t, ArrivalOrder({1, 2, 0}), RunOptions{true});
    CHECK(trace.to_text() ==
          "1 1 ACCEPT SWAP=0\n"
          "2 2 ACCEPT\n"
          "0 1 REJECT\n");
    CHECK(trace.cost == Rational(3));
    CHECK(trace.accepted == std::vector<EdgeId>{1, 2});
    CHECK(trace.swap_count() == 1);
  }

  TEST_CASE("golden trace: ftp on the small triangle") {
    auto alg = ftp();
    const RunTrace trace = run(*alg, small_triangle(), ArrivalOrder::identity(3));
    CHECK(trace.to_text() ==
          "0 1 ACCEPT\n"
          "1 1 REJECT\n"
          "2 2 ACCEPT\n");
    CHECK(trace.cost == Rational(3));
  }

  TEST_CASE("session rejects protocol misuse") {
    const WmstInstance t = small_triangle();
    auto alg = ftp();
    Session s(*alg, t.graph(), t.predicted());
    s.reveal(0, Rational(1));
    CHECK(s.revealed(0));
    CHECK(s.remaining() == 2);
    CHECK(code_of([&] { s.reveal(0, Rational(1)); }) == ErrorCode::kBadParameter);
    CHECK(code_of([&] { s.reveal(9, Rational(1)); }) == ErrorCode::kBadParameter);
    CHECK(code_of([&] { s.reveal(1, Rational(0)); }) == ErrorCode::kNonpositiveWeight);
    CHECK(code_of([&] { s.finish(); }) == ErrorCode::kBadParameter);
  }

  TEST_CASE("session rejects invalid algorithm output") {
    const WmstInstance t = small_triangle();
    AcceptAll greedy;
    CHECK(code_of([&] { run(greedy, t, ArrivalOrder::identity(3)); }) == ErrorCode::kNotSpanning);
    RejectAll lazy;
    CHECK(code_of([&] { run(lazy, t, ArrivalOrder::identity(3)); }) == ErrorCode::kNotSpanning);
    auto alg = ftp();
    CHECK(code_of([&] { run(*alg, t, ArrivalOrder::identity(2)); }) == ErrorCode::kBadParameter);
  }

  TEST_CASE("checked mode catches a wrong exchange rule") {
    wmst::testing::MisSwappingGftp broken;
    Rng rng(17);
    int caught = 0;
    for (int i = 0; i < 400 && caught == 0; ++i) {
      WmstInstance inst = random_instance(6, Rational(2, 3), Rational(1), rng());
      try {
        run(broken, inst, random_order(inst.graph().edge_count(), rng), RunOptions{true});
      } catch (const WmstError& e) {
        if (e.code() == ErrorCode::kLemmaViolation) ++caught;
      }
    }
    CHECK(caught > 0);
  }

  TEST_CASE("unchecked and checked runs agree") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
      WmstInstance inst = random_instance(2 + uniform_below(rng, 6), Rational(1, 2), Rational(1, 2), rng());
      const ArrivalOrder order = random_order(inst.graph().edge_count(), rng);
      for (const char* name : {"ftp", "gftp"}) {
        auto a = algorithm_factory(name)();
        auto b = algorithm_factory(name)();
        CHECK(run(*a, inst, order) == run(*b, inst, order, RunOptions{true}));
      }
    }
  }
}
