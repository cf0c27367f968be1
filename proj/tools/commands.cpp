#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "wmst/adversaries.hpp"
#include "wmst/algorithms.hpp"
#include "wmst/campaign.hpp"
#include "wmst/errors.hpp"
#include "wmst/instance_io.hpp"
#include "wmst/metrics.hpp"
#include "wmst/random.hpp"
#include "wmst/random_order.hpp"

namespace wmst::cli {
namespace {

using Json = nlohmann::ordered_json;

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const WmstError&) {
    throw UsageError(std::string("--") + what + " expects a rational such as 3, 1/2 or 0.25, got '" + text + "'");
  }
}

std::int64_t parse_integer(const std::string& text, const char* what) {
  Rational value = parse_rational(text, what);
  if (!value.is_integer()) throw UsageError(std::string("--") + what + " must be an integer here, got '" + text + "'");
  return value.num();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw WmstError(ErrorCode::kParseError, "cannot write " + path.string());
  file << content;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw WmstError(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::filesystem::path sibling(const std::string& out, const char* extension) {
  std::filesystem::path path(out);
  path.replace_extension(extension);
  return path;
}

void print_report(std::ostream& out, const WmstInstance& instance) {
  const ErrorReport r = error_report(instance);
  out << "n = " << instance.graph().vertex_count() << ", m = " << instance.graph().edge_count() << '\n'
      << "OPT(w) = " << r.opt_actual << '\n'
      << "OPT(w-hat) = " << r.opt_predicted << '\n'
      << "eta1 = " << r.eta1 << '\n'
      << "eta2 = " << r.eta2 << '\n'
      << "eta = " << r.eta << '\n'
      << "epsilon = " << r.epsilon << '\n';
}

std::string fraction_and_decimal(const Rational& value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  if (!value.is_integer()) out << " (" << value.to_double() << ')';
  return out.str();
}

}  // namespace

int cmd_gen(const GenArgs& args, std::ostream& out) {
  if (args.out.empty()) throw UsageError("gen requires --out <file>");
  Json config;
  config["family"] = args.family;

  auto emit = [&](const WmstInstance& instance) {
    write_file(args.out, write_instance(instance, config));
    out << "wrote " << args.out << '\n';
  };

  if (args.family == "ftp-lb") {
    const Rational k = parse_rational(args.k, "k");
    config["k"] = k.to_string();
    config["l"] = args.l;
    StarLowerBound lb = gen_ftp_lb(k, args.l);
    emit(lb.instance);
    write_file(sibling(args.out, ".order"), lb.defeating_order.to_text());
    out << "wrote " << sibling(args.out, ".order").string() << " (predicted-tree edges first)\n";
    print_report(out, lb.instance);
  } else if (args.family == "ro-lb") {
    const Rational k = parse_rational(args.k, "k");
    const Rational delta = parse_rational(args.delta, "delta");
    config["k"] = k.to_string();
    config["delta"] = delta.to_string();
    config["l"] = args.l;
    WmstInstance instance = gen_ro_lb(k, delta, args.l);
    emit(instance);
    print_report(out, instance);
  } else if (args.family == "eta2" || args.family == "general-lb") {
    const std::int64_t k = parse_integer(args.k, "k");
    auto opponent = algorithm_factory(args.alg)();
    config["k"] = k;
    std::optional<AdversarialGame> game;
    if (args.family == "eta2") {
      const std::int64_t big_k = args.big_k.value_or(10 * k);
      config["bigk"] = big_k;
      config["opponent"] = args.alg;
      config["checked"] = args.checked;
      game.emplace(gen_eta2_game(k, big_k, *opponent, wmst::RunOptions{args.checked}));
    } else {
      config["l"] = args.l;
      config["opponent"] = args.alg;
      config["checked"] = args.checked;
      game.emplace(gen_general_lb_game(k, args.l, *opponent, wmst::RunOptions{args.checked}));
    }
    emit(game->instance);
    write_file(sibling(args.out, ".order"), game->order.to_text());
    write_file(sibling(args.out, ".trace"), game->trace.to_text());
    out << "wrote " << sibling(args.out, ".order").string() << '\n'
        << "wrote " << sibling(args.out, ".trace").string() << '\n';
    print_report(out, game->instance);
    out << args.alg << " cost = " << game->trace.cost << '\n';
  } else if (args.family == "random") {
    RandomInstanceParams params;
    params.n = args.n;
    params.edge_prob = parse_rational(args.edge_prob, "edge-prob");
    params.noise_scale = parse_rational(args.noise, "noise");
    params.seed = args.seed;
    config["n"] = args.n;
    config["edge_prob"] = params.edge_prob.to_string();
    config["noise"] = params.noise_scale.to_string();
    config["seed"] = args.seed;
    WmstInstance instance = random_instance(params);
    emit(instance);
    print_report(out, instance);
  } else {
    throw UsageError("unknown family '" + args.family + "' (expected ftp-lb, general-lb, ro-lb, eta2 or random)");
  }
  return 0;
}

int cmd_run(const RunArgs& args, std::ostream& out) {
  InstanceFile file = load_instance_file(args.instance);
  const WmstInstance& instance = file.instance;
  const std::size_t m = instance.graph().edge_count();

  std::optional<ArrivalOrder> order;
  if (args.order == "id") {
    order = ArrivalOrder::identity(m);
  } else if (args.order.starts_with("seed:")) {
    Rng rng(static_cast<std::uint64_t>(parse_integer(args.order.substr(5), "order seed")));
    order = random_order(m, rng);
  } else if (args.order.starts_with("given:")) {
    order = ArrivalOrder::parse(read_file(args.order.substr(6)));
  } else {
    throw UsageError("--order expects id, seed:<n> or given:<file>, got '" + args.order + "'");
  }

  Json config;
  config["command"] = "run";
  config["alg"] = args.alg;
  config["instance"] = args.instance;
  config["order"] = args.order;
  config["checked"] = args.checked;
  out << "# config " << config.dump() << '\n';

  auto alg = algorithm_factory(args.alg)();
  RunTrace trace;
  try {
    trace = run(*alg, instance, *order, wmst::RunOptions{args.checked});
  } catch (const WmstError& e) {
    if (e.code() != ErrorCode::kLemmaViolation) throw;
    out << "checked run failed: " << e.what() << '\n';
    return 1;
  }
  if (!args.trace_out.empty()) write_file(args.trace_out, trace.to_text());

  const ErrorReport r = error_report(instance);
  const Rational limit = r.opt_actual + Rational(2) * r.eta;
  const bool holds = trace.cost <= limit;
  out << "algorithm = " << args.alg << '\n'
      << "cost = " << trace.cost << '\n'
      << "OPT = " << r.opt_actual << '\n'
      << "eta = " << r.eta << '\n'
      << "epsilon = " << r.epsilon << '\n'
      << "ratio = " << fraction_and_decimal(trace.cost / r.opt_actual) << '\n'
      << "swaps = " << trace.swap_count() << '\n'
      << "cost <= OPT + 2*eta (" << limit << "): " << (holds ? "holds" : "VIOLATED") << '\n';
  return holds ? 0 : 1;
}

int cmd_ro(const RoArgs& args, std::ostream& out) {
  InstanceFile file = load_instance_file(args.instance);
  const AlgorithmFactory factory = algorithm_factory(args.alg);

  Json config;
  config["command"] = "ro";
  config["alg"] = args.alg;
  config["instance"] = args.instance;
  if (args.exact) {
    config["exact"] = true;
  } else {
    config["trials"] = args.trials;
    config["seed"] = args.seed;
    config["checked"] = args.checked;
  }
  const RoEstimate est = args.exact ? exact_estimate(factory, file.instance)
                                    : mc_estimate(factory, file.instance, args.trials, args.seed,
                                                  wmst::RunOptions{args.checked});
  const RatioReport report = ratio_report(est);
  out << "# config " << config.dump() << '\n'
      << csv_header() << '\n'
      << csv_row(std::filesystem::path(args.instance).stem().string(), est) << '\n';
  if (report.flagged) out << "# flagged: ratio exceeds a proven upper bound by more than 3 standard errors\n";
  return report.flagged ? 1 : 0;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  struct Row {
    std::string id;
    std::function<WmstInstance()> make;                               // random-order rows
    std::function<AdversarialGame(OnlineAlgorithm&)> play;            // adversarial rows
  };
  std::vector<Row> rows;
  auto require = [](bool non_empty, const char* what) {
    if (!non_empty) throw UsageError(std::string("sweep grid is empty: give at least one --") + what);
  };

  if (args.family == "ftp-lb") {
    require(!args.k.empty(), "k");
    require(!args.l.empty(), "l");
    for (const auto& ks : args.k) {
      const Rational k = parse_rational(ks, "k");
      for (std::int64_t l : args.l) {
        rows.push_back({"ftp-lb k=" + k.to_string() + " l=" + std::to_string(l),
                        [k, l] { return gen_ftp_lb(k, l).instance; }, {}});
      }
    }
  } else if (args.family == "ro-lb") {
    require(!args.k.empty(), "k");
    require(!args.delta.empty(), "delta");
    require(!args.l.empty(), "l");
    for (const auto& ks : args.k) {
      const Rational k = parse_rational(ks, "k");
      for (const auto& ds : args.delta) {
        const Rational delta = parse_rational(ds, "delta");
        for (std::int64_t l : args.l) {
          rows.push_back({"ro-lb k=" + k.to_string() + " delta=" + delta.to_string() + " l=" + std::to_string(l),
                          [k, delta, l] { return gen_ro_lb(k, delta, l); }, {}});
        }
      }
    }
  } else if (args.family == "random") {
    require(!args.n.empty(), "n");
    require(!args.instance_seeds.empty(), "instance-seed");
    const Rational p = parse_rational(args.edge_prob, "edge-prob");
    const Rational noise = parse_rational(args.noise, "noise");
    for (std::size_t n : args.n) {
      for (std::uint64_t s : args.instance_seeds) {
        rows.push_back({"random n=" + std::to_string(n) + " seed=" + std::to_string(s),
                        [n, p, noise, s] { return random_instance(n, p, noise, s); }, {}});
      }
    }
  } else if (args.family == "general-lb") {
    require(!args.k.empty(), "k");
    require(!args.l.empty(), "l");
    for (const auto& ks : args.k) {
      const std::int64_t k = parse_integer(ks, "k");
      for (std::int64_t l : args.l) {
        rows.push_back({"general-lb k=" + std::to_string(k) + " l=" + std::to_string(l), {},
                        [k, l](OnlineAlgorithm& alg) { return gen_general_lb_game(k, l, alg); }});
      }
    }
  } else if (args.family == "eta2") {
    require(!args.k.empty(), "k");
    for (const auto& ks : args.k) {
      const std::int64_t k = parse_integer(ks, "k");
      rows.push_back({"eta2 k=" + std::to_string(k) + " K=" + std::to_string(10 * k), {},
                      [k](OnlineAlgorithm& alg) { return gen_eta2_game(k, 10 * k, alg); }});
    }
  } else {
    throw UsageError("unknown family '" + args.family + "' (expected ftp-lb, general-lb, ro-lb, eta2 or random)");
  }
  require(!args.algs.empty(), "algs");

  Json config;
  config["command"] = "sweep";
  config["family"] = args.family;
  config["k"] = args.k;
  config["l"] = args.l;
  config["delta"] = args.delta;
  config["n"] = args.n;
  config["instance_seeds"] = args.instance_seeds;
  config["edge_prob"] = args.edge_prob;
  config["noise"] = args.noise;
  config["algs"] = args.algs;
  if (args.exact) {
    config["exact"] = true;
  } else {
    config["trials"] = args.trials;
    config["seed"] = args.seed;
  }
  out << "# config " << config.dump() << '\n' << csv_header() << '\n';

  bool flagged = false;
  for (const Row& row : rows) {
    for (const std::string& name : args.algs) {
      const AlgorithmFactory factory = algorithm_factory(name);
      RoEstimate est;
      if (row.play) {
        // Adaptive families: the row reports the opponent's cost on the
        // order the adversary chose, not a random-order average.
        auto alg = factory();
        AdversarialGame game = row.play(*alg);
        est = single_run_estimate(name, game.instance, game.trace.cost);
        flagged = flagged || est.ratio > est.bounds.two_eps;
      } else {
        WmstInstance instance = row.make();
        est = args.exact ? exact_estimate(factory, instance) : mc_estimate(factory, instance, args.trials, args.seed);
        flagged = flagged || ratio_report(est).flagged;
      }
      out << csv_row(row.id, est) << '\n';
    }
  }
  if (flagged) out << "# flagged: a ratio exceeds a proven upper bound\n";
  return flagged ? 1 : 0;
}

int cmd_selftest(const SelftestArgs& args, std::ostream& out) {
  SelftestSizes sizes;
  if (args.quick) {
    sizes.oracle_graphs = 100;
    sizes.witness_graphs = 20;
    sizes.run_pairs = 500;
    sizes.measure_instances = 500;
    sizes.random_order_instances = 50;
  }
  bool all = true;
  for (const CampaignResult& r : run_selftest(args.seed, sizes)) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " violations=" << r.violations
        << " lemma-violations=" << r.lemma_violations;
    if (!r.passed()) out << " first: " << r.first_violation;
    out << '\n';
    all = all && r.passed();
  }
  return all ? 0 : 1;
}

}  // namespace wmst::cli
