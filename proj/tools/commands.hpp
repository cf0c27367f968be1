#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmst::cli {

/// Bad or missing command-line parameters; main() prints usage and exits 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::string family;
  std::string k = "2";
  std::int64_t l = 1;
  std::string delta = "1/2";
  std::size_t n = 6;
  std::string edge_prob = "1/2";
  std::string noise = "0";
  std::uint64_t seed = 0;
  std::optional<std::int64_t> big_k;  // eta2 only; defaults to 10k
  std::string alg = "gftp";           // opponent for the adaptive families
  bool checked = false;
  std::string out;
};

struct RunArgs {
  std::string alg;
  std::string instance;
  std::string order = "id";  // id | seed:<u64> | given:<file>
  bool checked = false;
  std::string trace_out;
};

struct RoArgs {
  std::string alg;
  std::string instance;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  bool exact = false;
  bool checked = false;
};

struct SweepArgs {
  std::string family;
  std::vector<std::string> k;
  std::vector<std::int64_t> l;
  std::vector<std::string> delta;
  std::vector<std::size_t> n;
  std::vector<std::uint64_t> instance_seeds;
  std::string edge_prob = "1/2";
  std::string noise = "0";
  std::vector<std::string> algs{"ftp", "gftp"};
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  bool exact = false;
};

struct SelftestArgs {
  std::uint64_t seed = 1;
  bool quick = false;
};

// Each command writes its report to `out` and returns the process exit code:
// 0 when every requested validation holds, 1 otherwise.
int cmd_gen(const GenArgs& args, std::ostream& out);
int cmd_run(const RunArgs& args, std::ostream& out);
int cmd_ro(const RoArgs& args, std::ostream& out);
int cmd_sweep(const SweepArgs& args, std::ostream& out);
int cmd_selftest(const SelftestArgs& args, std::ostream& out);

}  // namespace wmst::cli
