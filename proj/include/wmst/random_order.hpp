#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "wmst/graph.hpp"
#include "wmst/online.hpp"

namespace wmst {

/// Reference curves for a random-order experiment, as decimals.
struct RatioBounds {
  double one_eps = 0;  // 1 + eps
  double ln2 = 0;      // 1 + (1 + ln 2) eps
  double two_eps = 0;  // 1 + 2 eps
};

/// Expected cost of an algorithm under a uniformly random arrival order,
/// either sampled or computed exactly.
struct RoEstimate {
  std::string algorithm;
  double mean_cost = 0;
  double std_error = 0;     // sample standard deviation / sqrt(trials)
  std::uint64_t trials = 0; // permutations averaged over (m! when exact)
  std::uint64_t seed = 0;
  bool exact = false;       // computed by full enumeration
  /// Set when the mean is known exactly: full enumeration, or every sampled
  /// run cost the same.
  std::optional<Rational> exact_mean;
  Rational opt;
  Rational eta;
  Rational epsilon;
  double ratio = 0;  // mean_cost / opt
  RatioBounds bounds;
};

/// Samples `trials` uniform permutations and runs a fresh algorithm on each.
/// Trials are split into fixed-size chunks with their own derived seeds and
/// combined in chunk order, so the result depends only on (seed, trials) and
/// not on how many worker threads ran. Throws BadParameter if trials < 1.
RoEstimate mc_estimate(const AlgorithmFactory& factory, const WmstInstance& instance, std::uint64_t trials,
                       std::uint64_t seed, RunOptions options = {});

inline constexpr std::size_t kExactMaxEdges = 9;

/// Average cost over all m! arrival orders, as an exact rational.
/// Throws TooLarge when m > 9.
Rational exact_expectation(const AlgorithmFactory& factory, const WmstInstance& instance);

/// exact_expectation packaged as an RoEstimate (std_error 0).
RoEstimate exact_estimate(const AlgorithmFactory& factory, const WmstInstance& instance);

/// One deterministic run reported in the same shape: trials 1, exact mean.
/// Used for adversarial orders, where averaging over orders does not apply.
RoEstimate single_run_estimate(std::string_view algorithm, const WmstInstance& instance, const Rational& cost);

using BigRational = boost::multiprecision::cpp_rational;

/// f(n) = 1 + sum_{j=n}^{2n-2} 1/j, exactly. Throws BadParameter if n < 2.
BigRational harmonic_bound(std::int64_t n);

/// Same sum in long double, for sweeps where the exact denominators get huge.
long double harmonic_bound_approx(std::int64_t n);

/// An estimate placed against its reference curves.
struct RatioReport {
  double ratio = 0;
  double ratio_std_error = 0;
  RatioBounds bounds;
  /// The measured ratio exceeds a proven upper bound by more than three
  /// standard errors: 1 + 2 eps for any algorithm, 1 + (1 + ln 2) eps for gftp.
  bool flagged = false;
};

RatioReport ratio_report(const RoEstimate& estimate);

/// Expected GFtP cost on gen_ro_lb(k, delta, l): each star swaps to its cheap
/// edge in exactly half of the orders, so E = OPT + l*k with OPT = l + delta.
Rational star_family_expected_cost(const Rational& k, const Rational& delta, std::int64_t l);

/// The lower-bound curve for the same family, 1 + l*k / (l + delta). It
/// equals 1 + (1 - delta/(l+delta)) * k, i.e. the closed form with eps taken as k.
Rational star_family_reference_ratio(const Rational& k, const Rational& delta, std::int64_t l);

/// Fixed CSV schema for random-order reports.
std::string csv_header();
std::string csv_row(const std::string& instance_id, const RoEstimate& estimate);

/// Worker threads for Monte Carlo: hardware concurrency unless the
/// WMST_THREADS environment variable holds a positive integer, which then
/// sets the count. Results never depend on it.
unsigned worker_count();

}  // namespace wmst
