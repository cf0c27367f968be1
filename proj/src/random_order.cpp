#include "wmst/random_order.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <vector>

#include "wmst/errors.hpp"
#include "wmst/metrics.hpp"
#include "wmst/random.hpp"

namespace wmst {
namespace {

constexpr std::uint64_t kChunkTrials = 4096;

// Welford accumulator; partial results merge with Chan's update.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(other.count) / total;
    count += other.count;
  }
};

struct ChunkResult {
  Moments moments;
  std::optional<Rational> first_cost;
  bool all_equal = true;
};

void fill_metrics(RoEstimate& est, const WmstInstance& instance) {
  const ErrorReport report = error_report(instance);
  est.opt = report.opt_actual;
  est.eta = report.eta;
  est.epsilon = report.epsilon;
  const double eps = est.epsilon.to_double();
  est.bounds = RatioBounds{1 + eps, 1 + (1 + std::numbers::ln2) * eps, 1 + 2 * eps};
}

class ExactSearch {
 public:
  explicit ExactSearch(const WmstInstance& instance) : actual_(instance.actual()), factorial_(instance.graph().edge_count() + 1) {
    factorial_[0] = Rational(1);
    for (std::size_t i = 1; i < factorial_.size(); ++i) factorial_[i] = factorial_[i - 1] * static_cast<std::int64_t>(i);
  }

  const Rational& factorial(std::size_t i) const { return factorial_[i]; }

  // Total cost still to be paid, summed over every ordering of the edges not
  // in `mask`. Identical (state, mask) pairs recur across prefixes that reveal
  // the same set, so they are cached.
  Rational future_cost(const OnlineAlgorithm& alg, std::uint32_t mask, std::size_t remaining) {
    if (remaining == 0) return Rational(0);
    std::string key = alg.state_key();
    const bool memoize = !key.empty();
    if (memoize) {
      key.push_back('#');
      key.append(std::to_string(mask));
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    Rational total;
    for (EdgeId e = 0; e < actual_.size(); ++e) {
      if (mask & (1u << e)) continue;
      auto next = alg.clone();
      if (next->reveal(e, actual_[e]).accepted()) total += actual_[e] * factorial_[remaining - 1];
      total += future_cost(*next, mask | (1u << e), remaining - 1);
    }
    if (memoize) memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const WeightMap& actual_;
  std::vector<Rational> factorial_;
  std::unordered_map<std::string, Rational> memo_;
};

std::string decimal(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

// sum_{j=lo}^{hi-1} 1/j as an unreduced fraction, split in halves so the
// operands stay balanced; reducing once at the end is far cheaper than
// normalizing after every term.
std::pair<boost::multiprecision::cpp_int, boost::multiprecision::cpp_int> reciprocal_sum(std::int64_t lo,
                                                                                         std::int64_t hi) {
  if (hi - lo == 1) return {1, lo};
  const std::int64_t mid = lo + (hi - lo) / 2;
  auto [a, b] = reciprocal_sum(lo, mid);
  auto [c, d] = reciprocal_sum(mid, hi);
  return {a * d + c * b, b * d};
}

}  // namespace

RoEstimate mc_estimate(const AlgorithmFactory& factory, const WmstInstance& instance, std::uint64_t trials,
                       std::uint64_t seed, RunOptions options) {
  if (trials < 1) throw WmstError(ErrorCode::kBadParameter, "trials must be at least 1");

  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::size_t m = instance.graph().edge_count();

  auto worker = [&] {
    try {
      for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
        Rng rng(derive_seed(seed, c));
        const std::uint64_t begin = c * kChunkTrials;
        const std::uint64_t end = std::min(trials, begin + kChunkTrials);
        ChunkResult& out = results[c];
        for (std::uint64_t t = begin; t < end; ++t) {
          auto alg = factory();
          RunTrace trace = run(*alg, instance, random_order(m, rng), options);
          out.moments.add(trace.cost.to_double());
          if (!out.first_cost) {
            out.first_cost = trace.cost;
          } else if (out.all_equal && trace.cost != *out.first_cost) {
            out.all_equal = false;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_chunk = chunks;
    }
  };

  const auto threads = static_cast<std::uint64_t>(std::min<std::uint64_t>(worker_count(), chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Moments total;
  bool all_equal = true;
  for (const ChunkResult& r : results) {
    total.merge(r.moments);
    all_equal = all_equal && r.all_equal && *r.first_cost == *results.front().first_cost;
  }

  RoEstimate est;
  est.algorithm = std::string(factory()->name());
  est.trials = trials;
  est.seed = seed;
  est.mean_cost = total.mean;
  est.std_error = trials > 1 ? std::sqrt(total.m2 / static_cast<double>(trials - 1) / static_cast<double>(trials)) : 0.0;
  fill_metrics(est, instance);
  if (all_equal) {
    est.exact_mean = *results.front().first_cost;
    est.mean_cost = est.exact_mean->to_double();
    est.std_error = 0;
    est.ratio = (*est.exact_mean / est.opt).to_double();
  } else {
    est.ratio = est.mean_cost / est.opt.to_double();
  }
  return est;
}

Rational exact_expectation(const AlgorithmFactory& factory, const WmstInstance& instance) {
  const std::size_t m = instance.graph().edge_count();
  if (m > kExactMaxEdges) {
    throw WmstError(ErrorCode::kTooLarge,
                    "exact expectation supports at most 9 edges, got " + std::to_string(m));
  }
  auto alg = factory();
  alg->initialize(instance.graph(), instance.predicted());
  ExactSearch search(instance);
  return search.future_cost(*alg, 0, m) / search.factorial(m);
}

RoEstimate exact_estimate(const AlgorithmFactory& factory, const WmstInstance& instance) {
  RoEstimate est;
  est.algorithm = std::string(factory()->name());
  est.exact = true;
  est.exact_mean = exact_expectation(factory, instance);
  std::uint64_t perms = 1;
  for (std::uint64_t i = 2; i <= instance.graph().edge_count(); ++i) perms *= i;
  est.trials = perms;
  est.mean_cost = est.exact_mean->to_double();
  fill_metrics(est, instance);
  est.ratio = (*est.exact_mean / est.opt).to_double();
  return est;
}

RoEstimate single_run_estimate(std::string_view algorithm, const WmstInstance& instance, const Rational& cost) {
  RoEstimate est;
  est.algorithm = std::string(algorithm);
  est.exact = true;
  est.trials = 1;
  est.exact_mean = cost;
  est.mean_cost = cost.to_double();
  fill_metrics(est, instance);
  est.ratio = (cost / est.opt).to_double();
  return est;
}

BigRational harmonic_bound(std::int64_t n) {
  if (n < 2) throw WmstError(ErrorCode::kBadParameter, "harmonic bound requires n >= 2");
  const auto [num, den] = reciprocal_sum(n, 2 * n - 1);
  return 1 + BigRational(num, den);
}

long double harmonic_bound_approx(std::int64_t n) {
  if (n < 2) throw WmstError(ErrorCode::kBadParameter, "harmonic bound requires n >= 2");
  // Smallest terms first to limit rounding.
  long double sum = 0;
  for (std::int64_t j = 2 * n - 2; j >= n; --j) sum += 1.0L / static_cast<long double>(j);
  return 1 + sum;
}

RatioReport ratio_report(const RoEstimate& estimate) {
  RatioReport report;
  report.ratio = estimate.ratio;
  report.ratio_std_error = estimate.std_error / estimate.opt.to_double();
  report.bounds = estimate.bounds;
  const double low = report.ratio - 3 * report.ratio_std_error;
  report.flagged = low > report.bounds.two_eps || (estimate.algorithm == "gftp" && low > report.bounds.ln2);
  return report;
}

Rational star_family_expected_cost(const Rational& k, const Rational& delta, std::int64_t l) {
  return Rational(l) + delta + Rational(l) * k;
}

Rational star_family_reference_ratio(const Rational& k, const Rational& delta, std::int64_t l) {
  return Rational(1) + Rational(l) * k / (Rational(l) + delta);
}

std::string csv_header() {
  return "instance-id,algorithm,trials,seed,mean,stderr,opt,eta,epsilon,ratio,bound_1e,bound_ln2,bound_2e";
}

std::string csv_row(const std::string& instance_id, const RoEstimate& e) {
  std::ostringstream out;
  out << csv_field(instance_id) << ',' << e.algorithm << ',' << e.trials << ',';
  if (e.exact) {
    out << '-';
  } else {
    out << e.seed;
  }
  out << ',' << (e.exact_mean ? e.exact_mean->to_string() : decimal(e.mean_cost)) << ',' << decimal(e.std_error)
      << ',' << e.opt << ',' << e.eta << ',' << e.epsilon << ','
      << (e.exact_mean ? (*e.exact_mean / e.opt).to_string() : decimal(e.ratio)) << ','
      << decimal(e.bounds.one_eps) << ',' << decimal(e.bounds.ln2) << ',' << decimal(e.bounds.two_eps);
  return out.str();
}

unsigned worker_count() {
  unsigned count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WMST_THREADS")) {
    unsigned cap = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
    if (ec == std::errc{} && *ptr == '\0' && cap > 0) count = cap;
  }
  return count;
}

}  // namespace wmst
