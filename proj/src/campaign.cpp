#include "wmst/campaign.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "wmst/adversaries.hpp"
#include "wmst/algorithms.hpp"
#include "wmst/errors.hpp"
#include "wmst/metrics.hpp"
#include "wmst/random_order.hpp"

namespace wmst {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void next_case() { ++result_.cases; }

  void violation(const std::string& what) {
    if (result_.violations == 0) {
      result_.first_violation = "case " + std::to_string(result_.cases - 1) + ": " + what;
    }
    ++result_.violations;
  }

  // Runs one case body; any library error counts against the case.
  template <class Body>
  void run_case(Body&& body) {
    next_case();
    const std::size_t before = result_.violations;
    try {
      body(*this);
    } catch (const WmstError& e) {
      if (e.code() == ErrorCode::kLemmaViolation) ++result_.lemma_violations;
      if (result_.violations == before) violation(e.what());
    } catch (const std::exception& e) {
      if (result_.violations == before) violation(e.what());
    }
  }

  CampaignResult take() { return std::move(result_); }

 private:
  CampaignResult result_;
};

template <class T>
const T& pick(Rng& rng, const std::vector<T>& options) {
  return options[uniform_below(rng, options.size())];
}

std::string describe(const char* label, const Rational& lhs, const char* op, const Rational& rhs) {
  std::ostringstream out;
  out << label << ": " << lhs << ' ' << op << ' ' << rhs;
  return out.str();
}

bool contains(const std::vector<EdgeId>& edges, EdgeId e) {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

}  // namespace

WmstInstance fuzz_instance(Rng& rng, std::size_t max_n) {
  static const std::vector<Rational> densities{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
  static const std::vector<Rational> noises{Rational(0), Rational(1, 8), Rational(1, 2), Rational(2)};
  static const std::vector<std::int64_t> grids{4, 16, 65536};

  RandomInstanceParams params;
  params.n = 2 + static_cast<std::size_t>(uniform_below(rng, max_n - 1));
  params.edge_prob = pick(rng, densities);
  params.noise_scale = pick(rng, noises);
  params.weight_denominator = pick(rng, grids);
  params.seed = rng();
  return random_instance(params);
}

CampaignResult oracle_equivalence_campaign(std::size_t graphs, std::uint64_t seed) {
  Recorder rec("oracle-equivalence");
  Rng rng(seed);
  for (std::size_t i = 0; i < graphs; ++i) {
    rec.run_case([&](Recorder& r) {
      WmstInstance inst = fuzz_instance(rng, 7);
      const Rational fast = tree_cost(mst(inst.graph(), inst.actual()), inst.actual());
      const Rational slow = brute_force_mst(inst.graph(), inst.actual()).cost;
      if (fast != slow) r.violation(describe("mst vs brute force", fast, "!=", slow));
    });
  }
  return rec.take();
}

CampaignResult exchange_witness_campaign(std::size_t graphs, std::uint64_t seed) {
  constexpr std::size_t kTreesPerGraph = 4;
  Recorder rec("exchange-witness");
  Rng rng(seed);
  for (std::size_t i = 0; i < graphs; ++i) {
    rec.run_case([&](Recorder& r) {
      RandomInstanceParams params;
      params.n = 3 + static_cast<std::size_t>(uniform_below(rng, 5));
      params.edge_prob = Rational(2, 3);
      params.seed = rng();
      const Graph graph = random_instance(params).graph();

      std::vector<SpanningTree> trees;
      for (std::size_t t = 0; t < kTreesPerGraph; ++t) {
        WeightMap weights(graph.edge_count());
        for (auto& w : weights) w = Rational(static_cast<std::int64_t>(uniform_below(rng, 1000)) + 1);
        trees.push_back(mst(graph, weights));
      }

      for (const SpanningTree& t1 : trees) {
        for (const SpanningTree& t2 : trees) {
          for (EdgeId e1 : t1.edges()) {
            if (t2.contains(e1)) continue;
            const EdgeId e2 = exchange_witness(t1, t2, e1);
            const std::string triple = "e1=" + std::to_string(e1) + " e2=" + std::to_string(e2);
            if (!t2.contains(e2) || t1.contains(e2)) {
              r.violation(triple + ": witness not in t2 \\ t1");
            } else if (!contains(tree_cycle(t1, e2), e1)) {
              r.violation(triple + ": e1 missing from e2's cycle in t1");
            } else if (!contains(tree_cycle(t2, e1), e2)) {
              r.violation(triple + ": e2 missing from e1's cycle in t2");
            }
          }
        }
      }
    });
  }
  return rec.take();
}

CampaignResult competitive_bound_campaign(std::size_t pairs, std::uint64_t seed, bool checked) {
  Recorder rec(checked ? "competitive-bounds (checked)" : "competitive-bounds");
  Rng rng(seed);
  const RunOptions options{checked};
  for (std::size_t i = 0; i < pairs; ++i) {
    rec.run_case([&](Recorder& r) {
      WmstInstance inst = fuzz_instance(rng, 8);
      const ArrivalOrder order = random_order(inst.graph().edge_count(), rng);
      const ErrorReport report = error_report(inst);
      const Rational limit = report.opt_actual + Rational(2) * report.eta;

      auto ftp_alg = ftp();
      const Rational ftp_cost = run(*ftp_alg, inst, order, options).cost;
      if (ftp_cost > limit) r.violation(describe("ftp cost vs OPT + 2 eta", ftp_cost, ">", limit));

      auto gftp_alg = gftp();
      const Rational gftp_cost = run(*gftp_alg, inst, order, options).cost;
      if (gftp_cost > limit) r.violation(describe("gftp cost vs OPT + 2 eta", gftp_cost, ">", limit));
      const Rational tree_limit = report.opt_predicted + report.eta;
      if (gftp_cost > tree_limit) r.violation(describe("gftp cost vs OPT(w-hat) + eta", gftp_cost, ">", tree_limit));
    });
  }
  return rec.take();
}

CampaignResult error_measure_campaign(std::size_t instances, std::uint64_t seed) {
  constexpr std::size_t kCorrections = 3;
  Recorder rec("error-measure");
  Rng rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    rec.run_case([&](Recorder& r) {
      WmstInstance inst = fuzz_instance(rng, 8);
      const ErrorReport report = error_report(inst);
      const Rational gap = abs(report.opt_predicted - report.opt_actual);
      if (gap > report.eta) r.violation(describe("|OPT(w-hat) - OPT(w)| vs eta", gap, ">", report.eta));

      Rational previous = report.eta;
      WeightMap predicted = inst.predicted();
      for (std::size_t step = 0; step < kCorrections; ++step) {
        for (EdgeId e = 0; e < predicted.size(); ++e) {
          if (uniform_below(rng, 2) == 0) predicted[e] = inst.actual()[e];
        }
        const Rational current = eta(inst.with_predicted(predicted));
        if (current > previous) r.violation(describe("eta after correction", current, ">", previous));
        previous = current;
      }
    });
  }
  return rec.take();
}

CampaignResult random_order_campaign(std::size_t instances, std::uint64_t seed) {
  const Rational one_plus_ln2_up(16932, 10000);
  Recorder rec("random-order-bound");
  Rng rng(seed);
  const AlgorithmFactory make_ftp = algorithm_factory("ftp");
  const AlgorithmFactory make_gftp = algorithm_factory("gftp");
  for (std::size_t i = 0; i < instances; ++i) {
    rec.run_case([&](Recorder& r) {
      std::optional<WmstInstance> inst;
      while (!inst || inst->graph().edge_count() > kExactMaxEdges) inst = fuzz_instance(rng, 5);
      const ErrorReport report = error_report(*inst);

      const Rational expected = exact_expectation(make_gftp, *inst);
      const Rational limit = report.opt_actual + one_plus_ln2_up * report.eta;
      if (expected > limit) r.violation(describe("E[gftp] vs OPT + 1.6932 eta", expected, ">", limit));

      auto alg = ftp();
      const Rational fixed = run(*alg, *inst, ArrivalOrder::identity(inst->graph().edge_count())).cost;
      const Rational ftp_expected = exact_expectation(make_ftp, *inst);
      if (ftp_expected != fixed) r.violation(describe("E[ftp] vs ftp cost", ftp_expected, "!=", fixed));
    });
  }
  return rec.take();
}

std::vector<CampaignResult> run_selftest(std::uint64_t seed, const SelftestSizes& sizes) {
  std::vector<CampaignResult> results;
  results.push_back(oracle_equivalence_campaign(sizes.oracle_graphs, derive_seed(seed, 0)));
  results.push_back(exchange_witness_campaign(sizes.witness_graphs, derive_seed(seed, 1)));
  results.push_back(competitive_bound_campaign(sizes.run_pairs, derive_seed(seed, 2), true));
  results.push_back(error_measure_campaign(sizes.measure_instances, derive_seed(seed, 3)));
  results.push_back(random_order_campaign(sizes.random_order_instances, derive_seed(seed, 4)));
  return results;
}

}  // namespace wmst
