// wmst: generate weight-arrival MST instances, run FtP/GFtP on them and
// measure random-order ratios.
//
//   wmst gen ftp-lb --k 3 --l 3 --out lb.json
//   wmst run gftp lb.json --order given:lb.order --checked
//   wmst ro gftp ro.json --trials 100000 --seed 1
//   wmst sweep ftp-lb --k 2,3,4 --l 1,2,4,8 --algs ftp
//   wmst selftest

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wmst/errors.hpp"

int main(int argc, char** argv) {
  using namespace wmst::cli;

  CLI::App app{"Online MST with weight predictions"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file (plus .order/.trace for games)");
  gen_cmd->add_option("family", gen.family, "ftp-lb | general-lb | ro-lb | eta2 | random")->required();
  gen_cmd->add_option("--k", gen.k, "Prediction error scale k (rational; integer for games)");
  gen_cmd->add_option("--l", gen.l, "Number of stars");
  gen_cmd->add_option("--delta", gen.delta, "Weight of (u,v) for ro-lb, in (0,1)");
  gen_cmd->add_option("--n", gen.n, "Vertices for random instances");
  gen_cmd->add_option("--edge-prob", gen.edge_prob, "Edge probability for random instances");
  gen_cmd->add_option("--noise", gen.noise, "Prediction noise scale for random instances");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random instances");
  gen_cmd->add_option("--bigk", gen.big_k, "eta2 reject-branch weight K (default 10k)");
  gen_cmd->add_option("--alg", gen.alg, "Opponent for eta2 and general-lb")->check(CLI::IsMember({"ftp", "gftp"}));
  gen_cmd->add_flag("--checked", gen.checked, "Verify working-tree guarantees while the game is played");
  gen_cmd->add_option("--out", gen.out, "Instance output path")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on one arrival order");
  run_cmd->add_option("alg", run.alg, "ftp | gftp")->required()->check(CLI::IsMember({"ftp", "gftp"}));
  run_cmd->add_option("instance", run.instance, "Instance JSON")->required();
  run_cmd->add_option("--order", run.order, "id | seed:<n> | given:<file>");
  run_cmd->add_flag("--checked", run.checked, "Verify working-tree guarantees after every step");
  run_cmd->add_option("--trace-out", run.trace_out, "Write the decision trace here");

  RoArgs ro;
  auto* ro_cmd = app.add_subcommand("ro", "Random-order expected cost as a CSV row");
  ro_cmd->add_option("alg", ro.alg, "ftp | gftp")->required()->check(CLI::IsMember({"ftp", "gftp"}));
  ro_cmd->add_option("instance", ro.instance, "Instance JSON")->required();
  ro_cmd->add_option("--trials", ro.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  ro_cmd->add_option("--seed", ro.seed, "Monte Carlo seed");
  ro_cmd->add_flag("--exact", ro.exact, "Enumerate all m! orders (m <= 9)");
  ro_cmd->add_flag("--checked", ro.checked, "Verify working-tree guarantees in every trial");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV table over a parameter grid");
  sweep_cmd->add_option("family", sweep.family, "ftp-lb | general-lb | ro-lb | eta2 | random")->required();
  sweep_cmd->add_option("--k", sweep.k, "k values")->delimiter(',');
  sweep_cmd->add_option("--l", sweep.l, "l values")->delimiter(',');
  sweep_cmd->add_option("--delta", sweep.delta, "delta values (ro-lb)")->delimiter(',');
  sweep_cmd->add_option("--n", sweep.n, "vertex counts (random)")->delimiter(',');
  sweep_cmd->add_option("--instance-seed", sweep.instance_seeds, "instance seeds (random)")->delimiter(',');
  sweep_cmd->add_option("--edge-prob", sweep.edge_prob, "edge probability (random)");
  sweep_cmd->add_option("--noise", sweep.noise, "noise scale (random)");
  sweep_cmd->add_option("--algs", sweep.algs, "algorithms")->delimiter(',')->check(CLI::IsMember({"ftp", "gftp"}));
  sweep_cmd->add_option("--trials", sweep.trials, "Monte Carlo trials per row")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep.seed, "Monte Carlo seed");
  sweep_cmd->add_flag("--exact", sweep.exact, "Exact expectation instead of Monte Carlo");

  SelftestArgs selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites with checked runs");
  selftest_cmd->add_option("--seed", selftest.seed, "Campaign seed");
  selftest_cmd->add_flag("--quick", selftest.quick, "Smaller campaigns");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return cmd_gen(gen, std::cout);
    if (*run_cmd) return cmd_run(run, std::cout);
    if (*ro_cmd) return cmd_ro(ro, std::cout);
    if (*sweep_cmd) return cmd_sweep(sweep, std::cout);
    if (*selftest_cmd) return cmd_selftest(selftest, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return 2;
  } catch (const wmst::WmstError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
