#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "copsrob/generators.hpp"
#include "copsrob/policy.hpp"
#include "copsrob/solver.hpp"

namespace copsrob {

// ---- regimes for k cops on Q_n ----

/// g(x) = 2x log2(2x) + (1-2x) log2(1-2x) - x log2 x - (1-x) log2(1-x),
/// with 0 log2 0 = 0. Throws DomainError outside (0, 1/2].
double g_eval(double x);

struct RegimeConstants {
  double c = 0;  // 1/2 - sqrt(2)/4
  double b = 0;  // -g(c)
};
RegimeConstants regime_constants();

inline constexpr double kDefaultRegimeEpsilon = 0.05;

struct Regime {
  std::string part;   // "i" .. "v"
  std::string order;  // predicted order of capt_k(Q_n)
  double beta = 0;    // log2(k) / n
  double alpha = 0;   // log(log2 k) / log n, for part (i)
  double f = 0;       // n - log2(k)
  double omega = 0;   // n / f; 0 when f <= 0
};

/// Classifies k = 2^log2_k cops on Q_n. With beta = log2(k)/n:
///   beta > 1 - eps and f <= log2(n)/eps        -> (v)   O(1)
///   beta > 1 - eps otherwise                   -> (iv)  Theta(n/(omega log omega))
///   1 - b + eps < beta <= 1 - eps              -> (iii) Theta(n)
///   beta <= 1 - b + eps and alpha <= 1 - eps   -> (i)   Theta(n log n)
///   beta <= 1 - b + eps otherwise              -> (ii)  Omega(n), O(n log n)
/// Throws AmbiguousRegime when a deciding quantity is within 1e-9 of its
/// threshold, DomainError for n < 2, k < ceil((n+1)/2), or eps outside
/// (0, b/2), where the (iii) range would be empty.
Regime qn_regime(std::size_t n, double log2_k, double eps = kDefaultRegimeEpsilon);

// ---- bound reports ----

enum class Relation { eq, le, ge, lt };
bool holds(Relation r, double measured, double bound);
std::string_view symbol(Relation r);

struct BoundReport {
  std::string suite;
  std::string instance;
  /// "<measured> <op> <bound>", the op being the relation below.
  std::string quantity;
  Relation relation = Relation::eq;
  double measured = 0;
  double bound = 0;
  /// Values are reals rather than counts.
  bool real = false;
  bool pass = false;
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  double runtime_ms = 0;
};

struct SuiteParams {
  /// Suite defaults apply when unset.
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> seeds;
  std::uint64_t base_seed = 1;
  std::size_t threads = 1;
  /// Record wall-clock runtime_ms; off keeps output byte-identical.
  bool timing = false;
  SolveLimits limits;
};

/// trees, lower-bounds, monotonicity, grid-scaling, hypercube, strategies,
/// sphere-trap, planar.
const std::vector<std::string>& suite_names();

/// Rows in instance order, independent of the thread count. Throws
/// UnknownSuite.
std::vector<BoundReport> verify_suite(const std::string& name, const SuiteParams& params = {});

/// suite,instance,quantity,measured,bound,pass,seed,rounds,runtime_ms
std::string reports_csv(const std::vector<BoundReport>& rows);
nlohmann::json reports_json(const std::vector<BoundReport>& rows);

/// Lower and upper ends of the window for capt_k * k^(1/d) / q on grids.
inline constexpr double kGridRatioLow = 0.25;
inline constexpr double kGridRatioHigh = 4.0;

// ---- policies by name ----

struct PolicySpec {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

const std::vector<std::string>& cop_policy_names();
const std::vector<std::string>& robber_policy_names();

/// Throws UnknownPolicy, InvalidArgument for bad parameters, and whatever
/// the policy's constructor throws.
std::unique_ptr<CopPolicy> make_cop_policy(const PolicySpec& spec, const GraphInstance& instance, std::size_t k,
                                           std::uint64_t seed);
std::unique_ptr<RobberPolicy> make_robber_policy(const PolicySpec& spec, const GraphInstance& instance,
                                                 std::size_t k, std::uint64_t seed);

// ---- Monte Carlo ----

struct McConfig {
  /// Generator spec; random generators without a seed draw a fresh graph
  /// per trial from the trial seed.
  std::string graph;
  std::size_t k = 0;
  PolicySpec cops;
  PolicySpec robber;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  /// Explicit trial seeds; when empty, trial t uses derive_seed(seed, t).
  std::vector<std::uint64_t> seeds;
  std::size_t max_rounds = 1000;
  /// A trial succeeds when captured within this many rounds (any, if unset).
  std::optional<std::size_t> bound;
  bool fast_robber = false;
};

/// Throws ParseError naming the offending key and InvalidArgument for
/// k == 0, trials == 0, or a seed list of the wrong length.
McConfig mc_config_from_json(const nlohmann::json& j);
void validate(const McConfig& config);

struct McTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> capture_round;
  bool success = false;
  /// Set when the cop policy reports certified_bound: the bound was non-null
  /// and the capture came within it.
  std::optional<bool> certified;
  std::string error;
};

struct McSummary {
  std::size_t trials = 0;
  std::size_t captured = 0;
  std::size_t successes = 0;
  std::size_t certified = 0;
  std::size_t errors = 0;
  double success_rate = 0;
  double certified_rate = 0;
  /// Nearest-rank quantiles of capture rounds over captured trials.
  std::optional<std::size_t> min_rounds, p50_rounds, p90_rounds, max_rounds;
  std::vector<McTrial> rows;
};

/// Pure in (config, seeds); policy errors are recorded per trial.
McSummary mc_run(const McConfig& config, std::size_t threads = 1);
nlohmann::json to_json(const McSummary& s);
/// trial,seed,captured,capture_round,success,certified,error
std::string trials_csv(const McSummary& s);

// ---- plumbing ----

/// Runs body(i) for i in [0, count) on up to `threads` workers; callers
/// write results into slot i, so output order never depends on scheduling.
/// The first exception (by index) is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

/// Threads from `flag`, else the COPSROB_THREADS environment variable, else
/// the hardware concurrency (at least 1).
std::size_t resolve_threads(std::optional<std::size_t> flag);

/// Sorted keys, two-space indent, floats with six fixed decimals.
std::string dump_json(const nlohmann::json& j);

}  // namespace copsrob
