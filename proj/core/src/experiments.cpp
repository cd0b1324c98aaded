#include "copsrob/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

#include "copsrob/error.hpp"
#include "copsrob/metrics.hpp"
#include "copsrob/planar.hpp"
#include "copsrob/rng.hpp"
#include "copsrob/solver_policy.hpp"
#include "copsrob/sphere_trap.hpp"
#include "copsrob/strategies.hpp"
#include "copsrob/thresholds.hpp"

namespace copsrob {

namespace {

double xlog2x(double x) { return x <= 0 ? 0.0 : x * std::log2(x); }

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string count_str(double v) { return std::to_string(static_cast<long long>(std::llround(v))); }

}  // namespace

// ---- regimes ----

double g_eval(double x) {
  if (!(x > 0.0 && x <= 0.5)) throw Error(ErrorCode::DomainError, "g is defined on (0, 1/2], got " + fixed6(x));
  return xlog2x(2 * x) + xlog2x(1 - 2 * x) - xlog2x(x) - xlog2x(1 - x);
}

RegimeConstants regime_constants() {
  RegimeConstants out;
  out.c = trap_dimension_constant();
  out.b = -g_eval(out.c);
  return out;
}

Regime qn_regime(std::size_t n, double log2_k, double eps) {
  constexpr double kTol = 1e-9;
  const double b = regime_constants().b;
  if (n < 2) throw Error(ErrorCode::DomainError, "need n >= 2");
  if (!(eps > 0 && eps < b / 2)) throw Error(ErrorCode::DomainError, "eps must lie in (0, b/2), got " + fixed6(eps));
  // Below the cop number of Q_n the capture time is infinite.
  const double min_log2_k = std::log2(static_cast<double>((n + 2) / 2));
  if (!(log2_k >= min_log2_k - kTol)) {
    throw Error(ErrorCode::DomainError, "k below the cop number ceil((n+1)/2)");
  }
  const double nd = static_cast<double>(n);
  auto near = [&](double x, double t, const char* what) {
    if (std::abs(x - t) <= kTol) {
      throw Error(ErrorCode::AmbiguousRegime, std::string(what) + " is on its threshold " + fixed6(t));
    }
  };

  Regime r;
  r.beta = log2_k / nd;
  r.f = nd - log2_k;
  r.omega = r.f > 0 ? nd / r.f : 0.0;
  // Regime exponents are base 2, matching the 2^n scale of Q_n.
  r.alpha = log2_k > 1 ? std::log(log2_k) / std::log(nd) : 0.0;

  const double top = 1 - eps;
  const double mid = 1 - b + eps;
  near(r.beta, top, "log2(k)/n");
  if (r.beta > top) {
    const double cut = std::log2(nd) / eps;
    near(r.f, cut, "n - log2(k)");
    if (r.f <= cut) {
      r.part = "v";
      r.order = "O(1)";
    } else {
      r.part = "iv";
      r.order = "Theta(n/(omega log omega))";
    }
    return r;
  }
  near(r.beta, mid, "log2(k)/n");
  if (r.beta > mid) {
    r.part = "iii";
    r.order = "Theta(n)";
    return r;
  }
  near(r.alpha, top, "log(log2 k)/log n");
  if (r.alpha <= top) {
    r.part = "i";
    r.order = "Theta(n log n)";
  } else {
    r.part = "ii";
    r.order = "Omega(n), O(n log n)";
  }
  return r;
}

// ---- plumbing ----

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::size_t resolve_threads(std::optional<std::size_t> flag) {
  if (flag) {
    if (*flag == 0) throw Error(ErrorCode::InvalidArgument, "thread count must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("COPSROB_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
      throw Error(ErrorCode::InvalidArgument, std::string("COPSROB_THREADS must be a positive integer, got ") + env);
    }
    return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace {

void dump_into(const nlohmann::json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + ": ";
        dump_into(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        dump_into(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? fixed6(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += "\n";
  return out;
}

// ---- bound reports ----

bool holds(Relation r, double measured, double bound) {
  switch (r) {
    case Relation::eq:
      return measured == bound;
    case Relation::le:
      return measured <= bound;
    case Relation::ge:
      return measured >= bound;
    case Relation::lt:
      return measured < bound;
  }
  return false;
}

std::string_view symbol(Relation r) {
  switch (r) {
    case Relation::eq:
      return "==";
    case Relation::le:
      return "<=";
    case Relation::ge:
      return ">=";
    case Relation::lt:
      return "<";
  }
  return "?";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string value_str(double v, bool real) { return real ? fixed6(v) : count_str(v); }

nlohmann::json value_json(double v, bool real) {
  if (real) return v;
  return static_cast<long long>(std::llround(v));
}

}  // namespace

std::string reports_csv(const std::vector<BoundReport>& rows) {
  std::string out = "suite,instance,quantity,measured,bound,pass,seed,rounds,runtime_ms\n";
  for (const auto& r : rows) {
    out += csv_field(r.suite) + "," + csv_field(r.instance) + "," + csv_field(r.quantity) + "," +
           value_str(r.measured, r.real) + "," + value_str(r.bound, r.real) + "," + (r.pass ? "true" : "false") + "," +
           std::to_string(r.seed) + "," + std::to_string(r.rounds) + "," + fixed6(r.runtime_ms) + "\n";
  }
  return out;
}

nlohmann::json reports_json(const std::vector<BoundReport>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"suite", r.suite},
                   {"instance", r.instance},
                   {"quantity", r.quantity},
                   {"measured", value_json(r.measured, r.real)},
                   {"bound", value_json(r.bound, r.real)},
                   {"pass", r.pass},
                   {"seed", r.seed},
                   {"rounds", r.rounds},
                   {"runtime_ms", r.runtime_ms}});
  }
  return out;
}

// ---- suites ----

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!on_) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

struct Rows {
  std::string suite;
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<BoundReport> rows;

  void add(const std::string& lhs, Relation rel, const std::string& rhs, double measured, double bound,
           std::size_t rounds, double ms, bool real = false) {
    BoundReport r;
    r.suite = suite;
    r.instance = instance;
    r.quantity = lhs + " " + std::string(symbol(rel)) + " " + rhs;
    r.relation = rel;
    r.measured = measured;
    r.bound = bound;
    r.real = real;
    r.pass = holds(rel, measured, bound);
    r.seed = seed;
    r.rounds = rounds;
    r.runtime_ms = ms;
    rows.push_back(std::move(r));
  }
};

std::string pad2(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return buf;
}

std::string sub(const std::string& name, std::size_t k) { return name + "_" + std::to_string(k); }

/// Capture round, or max_rounds + 1 when the game timed out.
double rounds_or_over(const PlayTranscript& t, std::size_t max_rounds) {
  return t.capture_round ? static_cast<double>(*t.capture_round) : static_cast<double>(max_rounds + 1);
}

/// Exact capt_k when the solver fits in its limits; k >= n is 0 outright.
std::optional<RoundCount> feasible_capture_time(const Graph& g, std::size_t k, const SolveLimits& limits) {
  if (k >= g.order()) return 0;
  const std::uint64_t configs = ConfigSpace::count(g.order(), k);
  if (configs > limits.max_states / (2 * g.order()) || estimate_joint_moves(g, k) > limits.max_moves) {
    return std::nullopt;
  }
  try {
    return capture_time(g, k, limits).value;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::StateBudgetExceeded) return std::nullopt;
    throw;
  }
}

using Job = std::function<Rows()>;

std::vector<BoundReport> run_jobs(const std::vector<Job>& jobs, std::size_t threads) {
  std::vector<Rows> out(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { out[i] = jobs[i](); });
  std::vector<BoundReport> rows;
  for (auto& r : out) {
    for (auto& row : r.rows) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Job> trees_jobs(const SuiteParams& p) {
  const std::size_t n_max = p.n_max.value_or(12), k_max = p.k_max.value_or(3), count = p.seeds.value_or(20);
  if (n_max < 3) throw Error(ErrorCode::InvalidArgument, "trees suite needs n-max >= 3");
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    jobs.push_back([=, &p] {
      const std::uint64_t seed = derive_seed(p.base_seed, i);
      const std::size_t n = 3 + i % (n_max - 2);
      const Graph g = gen_tree(n, seed);
      Rows rows{"trees", "tree-" + pad2(i) + "-n" + std::to_string(n), seed, {}};
      for (std::size_t k = 1; k <= std::min(k_max, n); ++k) {
        Stopwatch sw(p.timing);
        const RoundCount capt = capture_time(g, k, p.limits).value;
        const Distance rad = k_center(g, k, KCenterMode::exact).radius;
        rows.add(sub("capt", k), Relation::eq, sub("rad", k), capt, rad, 0, sw.ms());
        if (k < n) {
          Stopwatch sw2(p.timing);
          TreePolicy cops(g, k);
          SolverRobberPolicy robber(cached_solve(g, k, p.limits));
          const std::size_t max_rounds = n + 1;
          const auto t = play(g, k, cops, robber, {max_rounds, false});
          rows.add(sub("tree_policy_rounds", k), Relation::le, sub("rad", k), rounds_or_over(t, max_rounds), rad,
                   t.rounds.size(), sw2.ms());
        }
      }
      return rows;
    });
  }
  return jobs;
}

struct GnpCase {
  std::string id;
  Graph graph;
  std::uint64_t seed = 0;
};

// Instance i: n cycles through 5..n_max, p alternates 0.3 / 0.5, and the
// seed advances until the sample is connected.
GnpCase gnp_case(std::size_t i, std::size_t n_max, std::uint64_t base) {
  if (n_max < 5) throw Error(ErrorCode::InvalidArgument, "suite needs n-max >= 5");
  const std::size_t n = 5 + i % (n_max - 4);
  const double p = i % 2 == 0 ? 0.3 : 0.5;
  for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
    const std::uint64_t seed = derive_seed(base, i * 10000 + attempt);
    Graph g = gen_gnp(n, p, seed);
    if (is_connected(g)) {
      return {"gnp-" + pad2(i) + "-n" + std::to_string(n) + "-p" + (i % 2 == 0 ? "0.3" : "0.5"), std::move(g), seed};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no connected sample found");
}

std::vector<Job> lower_bound_jobs(const SuiteParams& p) {
  const std::size_t n_max = p.n_max.value_or(10), count = p.seeds.value_or(50);
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    jobs.push_back([=, &p] {
      const GnpCase c = gnp_case(i, n_max, p.base_seed);
      const Graph& g = c.graph;
      const Distance diam = metrics(g).diameter;
      Rows rows{"lower-bounds", c.id, c.seed, {}};
      for (std::size_t k = 1; k <= g.order(); ++k) {
        Stopwatch sw(p.timing);
        const auto capt = feasible_capture_time(g, k, p.limits);
        if (!capt || *capt == kNoCapture) continue;
        const double ms = sw.ms();
        const Distance rad = k_center(g, k, KCenterMode::exact).radius;
        const std::size_t num = diam + 1 > k ? diam + 1 - k : 0;
        const std::size_t spread = (num + 2 * k - 1) / (2 * k);
        rows.add(sub("capt", k), Relation::ge, sub("rad", k), *capt, rad, 0, ms);
        rows.add(sub("capt", k), Relation::ge, "ceil((diam-" + std::to_string(k) + "+1)/" + std::to_string(2 * k) + ")",
                 *capt, static_cast<double>(spread), 0, 0.0);
      }
      return rows;
    });
  }
  return jobs;
}

std::vector<Job> monotonicity_jobs(const SuiteParams& p) {
  const std::size_t n_max = p.n_max.value_or(10), count = p.seeds.value_or(50);
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    jobs.push_back([=, &p] {
      const GnpCase c = gnp_case(i, n_max, p.base_seed);
      const Graph& g = c.graph;
      const std::size_t n = g.order();
      Rows rows{"monotonicity", c.id, c.seed, {}};
      Stopwatch sw(p.timing);
      std::vector<std::optional<RoundCount>> capt(n + 1);
      for (std::size_t k = 1; k <= n; ++k) capt[k] = feasible_capture_time(g, k, p.limits);
      const double ms = sw.ms();
      for (std::size_t k = 1; k < n; ++k) {
        if (capt[k] && capt[k + 1] && *capt[k] != kNoCapture) {
          rows.add(sub("capt", k + 1), Relation::le, sub("capt", k), *capt[k + 1], *capt[k], 0, ms);
        }
      }
      const std::size_t gamma = domination_number(g);
      if (gamma < n && capt[gamma]) {
        rows.add("capt_gamma(" + std::to_string(gamma) + ")", Relation::eq, "1", *capt[gamma], 1, 0, 0.0);
      }
      rows.add(sub("capt", n), Relation::eq, "0", *capt[n], 0, 0, 0.0);
      return rows;
    });
  }
  return jobs;
}

std::vector<Job> grid_scaling_jobs(const SuiteParams& p) {
  std::vector<Job> jobs;
  for (std::size_t q : {4, 6, 8}) {
    for (std::size_t k : {2, 4, 8}) {
      jobs.push_back([=, &p] {
        Rows rows{"grid-scaling", "grid2-q" + std::to_string(q) + "-k" + std::to_string(k), 0, {}};
        Stopwatch sw(p.timing);
        const GridGraph grid = gen_grid(2, q);
        const auto exact = feasible_capture_time(grid.graph, k, p.limits);
        const Distance pigeon = PigeonholeGridRobber(grid.codec, k).guaranteed_rounds();
        const auto cover = grid_cover_policy(grid, k, solver_sub_policy(p.limits));
        const auto cover_bound = cover->certified_bound();
        if (!cover_bound) throw Error(ErrorCode::InvalidArgument, "grid cover has no certified bound");
        const double ms = sw.ms();
        const double scale = std::sqrt(static_cast<double>(k)) / static_cast<double>(q);
        // capt_k >= rad_k, when the exact k-center search fits its cap.
        std::optional<Distance> rad;
        try {
          rad = k_center(grid.graph, k, KCenterMode::exact).radius;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SearchSpaceTooLarge) throw;
        }
        double lower = std::max<double>(pigeon, rad.value_or(0));
        double upper = *cover_bound;
        if (rad) rows.add(sub("rad", k), Relation::le, "cover_bound", *rad, *cover_bound, 0, 0.0);
        if (exact) {
          rows.add("pigeonhole_rounds", Relation::le, sub("capt", k), pigeon, *exact, 0, ms);
          rows.add(sub("capt", k), Relation::le, "cover_bound", *exact, *cover_bound, 0, 0.0);
          if (rad) rows.add(sub("rad", k), Relation::le, sub("capt", k), *rad, *exact, 0, 0.0);
          lower = upper = *exact;
        } else {
          rows.add("pigeonhole_rounds", Relation::le, "cover_bound", pigeon, *cover_bound, 0, ms);
        }
        rows.add("lower*sqrt(k)/q", Relation::ge, "window_low", lower * scale, kGridRatioLow, 0, 0.0, true);
        rows.add("upper*sqrt(k)/q", Relation::le, "window_high", upper * scale, kGridRatioHigh, 0, 0.0, true);
        return rows;
      });
    }
  }
  return jobs;
}

std::vector<Job> hypercube_jobs(const SuiteParams& p) {
  std::vector<Job> jobs;
  for (std::size_t n : {2, 3}) {
    jobs.push_back([=, &p] {
      Rows rows{"hypercube", "Q" + std::to_string(n), 0, {}};
      Stopwatch sw(p.timing);
      const auto c = cop_number(gen_hypercube(n).graph, p.limits);
      rows.add("cop_number", Relation::eq, "ceil((n+1)/2)", static_cast<double>(c), static_cast<double>((n + 2) / 2), 0,
               sw.ms());
      return rows;
    });
  }
  jobs.push_back([&p] {
    Rows rows{"hypercube", "Q3", 0, {}};
    Stopwatch sw(p.timing);
    rows.add("capt_2", Relation::eq, "1", capture_time(gen_hypercube(3).graph, 2, p.limits).value, 1, 0, sw.ms());
    return rows;
  });
  jobs.push_back([&p] {
    Rows rows{"hypercube", "Q4", 0, {}};
    const Graph g = gen_hypercube(4).graph;
    const BigRatio k_max = qn_lower_k_max(4, 1);
    rows.add("k", Relation::lt, "2^n/(1+n)", 3, k_max.value, 0, 0.0, true);
    Stopwatch sw(p.timing);
    const auto table = cached_solve(g, 3, p.limits);
    rows.add("capt_3", Relation::ge, "2", capture_time(*table).value, 2, 0, sw.ms());
    SolverCopPolicy cops(table);
    StayFarRobber robber;
    const auto t = play(g, 3, cops, robber, {100, false});
    rows.add("stay_far_survival", Relation::ge, "2", rounds_or_over(t, 100), 2, t.rounds.size(), 0.0);
    return rows;
  });
  return jobs;
}

std::vector<Job> strategies_jobs(const SuiteParams& p) {
  std::vector<Job> jobs;
  jobs.push_back([&p] {
    Rows rows{"strategies", "grid2-q6-k8-cover", 0, {}};
    Stopwatch sw(p.timing);
    const GridGraph grid = gen_grid(2, 6);
    const RoundCount target = capture_time(gen_grid(2, 3).graph, 2, p.limits).value;
    auto cops = grid_cover_policy(grid, 8, solver_sub_policy(p.limits));
    const WorstCase w = worst_case_capture(grid.graph, 8, *cops, target);
    rows.add("worst_case_rounds", Relation::le, "capt_2(G2_3)", w.rounds == kNoCapture ? target + 1.0 : w.rounds, target,
             w.rounds == kNoCapture ? target + 1 : w.rounds, sw.ms());
    return rows;
  });
  jobs.push_back([&p] {
    Rows rows{"strategies", "Q4-k4-subcube3", 0, {}};
    Stopwatch sw(p.timing);
    const CubeGraph cube = gen_hypercube(4);
    const RoundCount target = capture_time(gen_hypercube(3).graph, 2, p.limits).value;
    auto cops = subcube_partition_policy(cube, 4, 3, solver_sub_policy(p.limits));
    const WorstCase w = worst_case_capture(cube.graph, 4, *cops, target);
    rows.add("worst_case_rounds", Relation::le, "capt_2(Q3)", w.rounds == kNoCapture ? target + 1.0 : w.rounds, target,
             w.rounds == kNoCapture ? target + 1 : w.rounds, sw.ms());
    return rows;
  });
  return jobs;
}

std::vector<Job> sphere_trap_jobs(const SuiteParams& p) {
  const std::size_t count = p.seeds.value_or(200);
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    jobs.push_back([=, &p] {
      const std::uint64_t seed = derive_seed(p.base_seed, i);
      Rows rows{"sphere-trap", "Q3-d1-k4-" + pad2(i), seed, {}};
      Stopwatch sw(p.timing);
      const Graph g = gen_hypercube(3).graph;
      SphereTrapPolicy cops(1, TrapMode::general, seed);
      SolverRobberPolicy robber(cached_solve(g, 4, p.limits));
      const std::size_t max_rounds = 50;
      const auto t = play(g, 4, cops, robber, {max_rounds, false});
      if (const auto bound = cops.certified_bound()) {
        rows.add("capture_round", Relation::le, "2d+1", rounds_or_over(t, max_rounds), *bound, t.rounds.size(), sw.ms());
      } else {
        // Unsaturated or failed: must be flagged as a fallback.
        const bool flagged = t.metadata["cop"].value("fallback", false);
        rows.add("fallback_flagged", Relation::eq, "1", flagged ? 1 : 0, 1, t.rounds.size(), sw.ms());
      }
      return rows;
    });
  }
  return jobs;
}

struct PlanarCase {
  std::string id;
  Graph graph;
  std::uint64_t seed = 0;
};

std::vector<Job> planar_jobs(const SuiteParams& p) {
  const std::size_t trees = p.seeds.value_or(10);
  std::vector<PlanarCase> cases;
  cases.push_back({"grid2-q4", gen_grid(2, 4).graph, 0});
  cases.push_back({"cycle6", gen_cycle(6), 0});
  for (std::size_t i = 0; i < trees; ++i) {
    const std::uint64_t seed = derive_seed(p.base_seed, i);
    const std::size_t n = 6 + i % 7;
    cases.push_back({"tree-" + pad2(i) + "-n" + std::to_string(n), gen_tree(n, seed), seed});
  }
  std::vector<Job> jobs;
  for (auto& c : cases) {
    jobs.push_back([c, &p] {
      Rows rows{"planar", c.id, c.seed, {}};
      const Graph& g = c.graph;
      const std::size_t n = g.order();
      const double bound = static_cast<double>((metrics(g).diameter + 1) * n);
      const std::size_t max_rounds = static_cast<std::size_t>(bound) + 1;
      const auto table = cached_solve(g, 3, p.limits);
      const RoundCount capt3 = capture_time(*table).value;
      auto audit = [&](RobberPolicy& robber, const std::string& tag, bool lower) {
        Stopwatch sw(p.timing);
        ThreeCopPlanarPolicy cops;
        double rounds = static_cast<double>(max_rounds + 1);
        std::size_t played = max_rounds;
        double shrink = static_cast<double>(n + 1);
        try {
          const auto t = play(g, 3, cops, robber, {max_rounds, false});
          rounds = rounds_or_over(t, max_rounds);
          played = t.rounds.size();
          shrink = 0;
          for (const auto& ph : cops.phases()) {
            if (ph.complete && ph.territory_after < ph.territory_before) shrink += ph.territory_before - ph.territory_after;
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ProgressStall) throw;
        }
        const double ms = sw.ms();
        rows.add("three_cop_rounds_vs_" + tag, Relation::le, "(diam+1)n", rounds, bound, played, ms);
        rows.add("sum_k_i_vs_" + tag, Relation::le, "n", shrink, static_cast<double>(n), played, 0.0);
        if (lower) rows.add("three_cop_rounds_vs_" + tag, Relation::ge, "capt_3", rounds, capt3, played, 0.0);
      };
      GreedyRobber greedy;
      audit(greedy, "greedy", false);
      SolverRobberPolicy solver(table);
      audit(solver, "solver", true);
      return rows;
    });
  }
  for (bool fast : {false, true}) {
    jobs.push_back([fast, &p] {
      Rows rows{"planar", std::string("grid2-q20-k240-sweep") + (fast ? "-fast" : ""), 0, {}};
      Stopwatch sw(p.timing);
      const Graph g = gen_grid(2, 20).graph;
      const double n = static_cast<double>(g.order());
      const double bound = 6.0 * metrics(g).radius * std::log2(n);
      const std::size_t max_rounds = 4000;
      SeparatorSweepPolicy cops(fast);
      GreedyRobber robber(fast);
      const auto t = play(g, 240, cops, robber, {max_rounds, fast});
      const double ms = sw.ms();
      const double rounds = rounds_or_over(t, max_rounds);
      if (fast) {
        rows.add("capture_round", Relation::le, "max_rounds", rounds, static_cast<double>(max_rounds), t.rounds.size(), ms);
      } else {
        rows.add("capture_round", Relation::le, "6*rad*log2(n)", rounds, bound, t.rounds.size(), ms, true);
      }
      double worst = 0;
      for (const auto& ph : cops.phases()) {
        if (ph.complete && ph.territory_before > 0) {
          worst = std::max(worst, static_cast<double>(ph.territory_after) / static_cast<double>(ph.territory_before));
        }
      }
      rows.add("max_phase_shrink", Relation::le, "2/3", worst, 2.0 / 3.0, t.rounds.size(), 0.0, true);
      std::size_t increases = 0;
      const auto& trace = cops.territory_trace();
      for (std::size_t i = 1; i < trace.size(); ++i) increases += trace[i] > trace[i - 1] ? 1 : 0;
      rows.add("territory_increases", Relation::eq, "0", static_cast<double>(increases), 0, t.rounds.size(), 0.0);
      return rows;
    });
  }
  return jobs;
}

using SuiteBuilder = std::vector<Job> (*)(const SuiteParams&);

const std::map<std::string, SuiteBuilder>& suites() {
  static const std::map<std::string, SuiteBuilder> table = {
      {"trees", trees_jobs},         {"lower-bounds", lower_bound_jobs}, {"monotonicity", monotonicity_jobs},
      {"grid-scaling", grid_scaling_jobs}, {"hypercube", hypercube_jobs}, {"strategies", strategies_jobs},
      {"sphere-trap", sphere_trap_jobs},   {"planar", planar_jobs},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, builder] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<BoundReport> verify_suite(const std::string& name, const SuiteParams& params) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
  return run_jobs(it->second(params), params.threads);
}

// ---- policies ----

namespace {

template <typename T>
T param(const PolicySpec& spec, const char* key, T fallback) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  try {
    return it->template get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::InvalidArgument, "policy '" + spec.name + "': bad value for '" + key + "'");
  }
}

GridGraph require_grid(const PolicySpec& spec, const GraphInstance& instance) {
  if (!instance.grid) throw Error(ErrorCode::InvalidArgument, "policy '" + spec.name + "' needs a grid graph");
  return GridGraph{instance.graph, *instance.grid};
}

double average_degree(const Graph& g) {
  return g.order() == 0 ? 0.0 : 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
}

}  // namespace

const std::vector<std::string>& cop_policy_names() {
  static const std::vector<std::string> names = {"greedy",         "grid-cover", "separator-sweep", "solver",
                                                 "sphere-trap",    "subcube",    "three-cop-planar", "tree"};
  return names;
}

const std::vector<std::string>& robber_policy_names() {
  static const std::vector<std::string> names = {"greedy", "greedy-fast", "pigeonhole", "random-walk", "solver",
                                                 "stay-far"};
  return names;
}

std::unique_ptr<CopPolicy> make_cop_policy(const PolicySpec& spec, const GraphInstance& instance, std::size_t k,
                                           std::uint64_t seed) {
  const Graph& g = instance.graph;
  const std::string& name = spec.name;
  if (name == "greedy") return std::make_unique<GreedyPursuitPolicy>();
  if (name == "tree") return std::make_unique<TreePolicy>(g, k);
  if (name == "solver") return std::make_unique<SolverCopPolicy>(cached_solve(g, k));
  if (name == "three-cop-planar") return std::make_unique<ThreeCopPlanarPolicy>();
  if (name == "separator-sweep") {
    const std::string mode = param<std::string>(spec, "mode", "bfs_level");
    if (mode != "bfs_level" && mode != "exact") throw Error(ErrorCode::InvalidArgument, "mode must be bfs_level or exact");
    return std::make_unique<SeparatorSweepPolicy>(param<bool>(spec, "fast", false),
                                                  mode == "exact" ? SeparatorMode::exact : SeparatorMode::bfs_level);
  }
  if (name == "sphere-trap") {
    const std::string mode = param<std::string>(spec, "mode", "general");
    if (mode != "general" && mode != "hypercube") throw Error(ErrorCode::InvalidArgument, "mode must be general or hypercube");
    std::size_t d = 0;
    const auto it = spec.params.find("d");
    if (it == spec.params.end() || (it->is_string() && it->get<std::string>() == "auto")) {
      // The radius threshold r, with the sampled graph's average degree.
      d = radius_threshold(average_degree(g), g.order(), k, param<double>(spec, "C", 10.0));
    } else {
      d = param<std::size_t>(spec, "d", 1);
    }
    return std::make_unique<SphereTrapPolicy>(d, mode == "hypercube" ? TrapMode::hypercube : TrapMode::general, seed);
  }
  if (name == "grid-cover") return grid_cover_policy(require_grid(spec, instance), k);
  if (name == "subcube") {
    if (!instance.cube) throw Error(ErrorCode::InvalidArgument, "policy 'subcube' needs a hypercube");
    const CubeGraph cube{g, *instance.cube};
    const std::size_t l = param<std::size_t>(spec, "l", choose_subcube_dimension(instance.cube->dimension(), k));
    return subcube_partition_policy(cube, k, l);
  }
  throw Error(ErrorCode::UnknownPolicy, "unknown cop policy '" + name + "'");
}

std::unique_ptr<RobberPolicy> make_robber_policy(const PolicySpec& spec, const GraphInstance& instance,
                                                 std::size_t k, std::uint64_t seed) {
  const std::string& name = spec.name;
  if (name == "greedy") return std::make_unique<GreedyRobber>(false);
  if (name == "greedy-fast") return std::make_unique<GreedyRobber>(true);
  if (name == "stay-far") return std::make_unique<StayFarRobber>();
  if (name == "random-walk") return std::make_unique<RandomWalkRobber>(seed);
  if (name == "solver") return std::make_unique<SolverRobberPolicy>(cached_solve(instance.graph, k));
  if (name == "pigeonhole") return std::make_unique<PigeonholeGridRobber>(require_grid(spec, instance).codec, k);
  throw Error(ErrorCode::UnknownPolicy, "unknown robber policy '" + name + "'");
}

// ---- Monte Carlo ----

namespace {

PolicySpec policy_from_json(const nlohmann::json& j, const char* key) {
  PolicySpec out;
  if (j.is_string()) {
    out.name = j.get<std::string>();
  } else if (j.is_object() && j.contains("name") && j["name"].is_string()) {
    out.name = j["name"].get<std::string>();
    if (j.contains("params")) {
      if (!j["params"].is_object()) throw Error(ErrorCode::ParseError, std::string(key) + ".params must be an object");
      out.params = j["params"];
    }
  } else {
    throw Error(ErrorCode::ParseError, std::string(key) + " must be a policy name or {\"name\", \"params\"}");
  }
  return out;
}

}  // namespace

McConfig mc_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  static const std::vector<std::string> known = {"bound", "cops",   "fast_robber", "graph", "k",
                                                 "max_rounds", "robber", "seed", "seeds", "trials"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      throw Error(ErrorCode::ParseError, "unknown key '" + it.key() + "'");
    }
  }
  auto get_uint = [&](const char* key) -> std::optional<std::uint64_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_unsigned()) throw Error(ErrorCode::ParseError, std::string(key) + " must be a nonnegative integer");
    return j[key].get<std::uint64_t>();
  };
  McConfig c;
  if (!j.contains("graph") || !j["graph"].is_string()) throw Error(ErrorCode::ParseError, "graph must be a generator spec string");
  c.graph = j["graph"].get<std::string>();
  const auto k = get_uint("k");
  if (!k) throw Error(ErrorCode::ParseError, "k is required");
  c.k = *k;
  if (!j.contains("cops")) throw Error(ErrorCode::ParseError, "cops is required");
  if (!j.contains("robber")) throw Error(ErrorCode::ParseError, "robber is required");
  c.cops = policy_from_json(j["cops"], "cops");
  c.robber = policy_from_json(j["robber"], "robber");
  if (auto v = get_uint("trials")) c.trials = *v;
  if (auto v = get_uint("seed")) c.seed = *v;
  if (auto v = get_uint("max_rounds")) c.max_rounds = *v;
  if (auto v = get_uint("bound")) c.bound = *v;
  if (j.contains("fast_robber")) {
    if (!j["fast_robber"].is_boolean()) throw Error(ErrorCode::ParseError, "fast_robber must be a boolean");
    c.fast_robber = j["fast_robber"].get<bool>();
  }
  if (j.contains("seeds")) {
    if (!j["seeds"].is_array()) throw Error(ErrorCode::ParseError, "seeds must be an array");
    for (const auto& s : j["seeds"]) {
      if (!s.is_number_unsigned()) throw Error(ErrorCode::ParseError, "seeds must hold nonnegative integers");
      c.seeds.push_back(s.get<std::uint64_t>());
    }
    if (!j.contains("trials")) c.trials = c.seeds.size();
  }
  validate(c);
  return c;
}

void validate(const McConfig& c) {
  if (c.k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (c.trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (c.max_rounds == 0) throw Error(ErrorCode::InvalidArgument, "max_rounds must be at least 1");
  if (!c.seeds.empty() && c.seeds.size() != c.trials) {
    throw Error(ErrorCode::InvalidArgument, "seeds lists " + std::to_string(c.seeds.size()) + " entries for " +
                                                std::to_string(c.trials) + " trials");
  }
  const auto& cops = cop_policy_names();
  if (std::find(cops.begin(), cops.end(), c.cops.name) == cops.end()) {
    throw Error(ErrorCode::UnknownPolicy, "unknown cop policy '" + c.cops.name + "'");
  }
  const auto& robbers = robber_policy_names();
  if (std::find(robbers.begin(), robbers.end(), c.robber.name) == robbers.end()) {
    throw Error(ErrorCode::UnknownPolicy, "unknown robber policy '" + c.robber.name + "'");
  }
  // Surfaces grammar errors before any trial runs.
  (void)parse_generator_spec(c.graph, c.seed);
}

McSummary mc_run(const McConfig& config, std::size_t threads) {
  validate(config);
  McSummary s;
  s.trials = config.trials;
  s.rows.resize(config.trials);
  parallel_for(config.trials, threads, [&](std::size_t t) {
    McTrial& row = s.rows[t];
    row.trial = t;
    row.seed = config.seeds.empty() ? derive_seed(config.seed, t) : config.seeds[t];
    try {
      const GraphInstance instance = parse_generator_spec(config.graph, row.seed);
      auto cops = make_cop_policy(config.cops, instance, config.k, row.seed);
      auto robber = make_robber_policy(config.robber, instance, config.k, derive_seed(row.seed, 1));
      const auto tr = play(instance.graph, config.k, *cops, *robber, {config.max_rounds, config.fast_robber});
      row.capture_round = tr.capture_round;
      row.success = tr.capture_round && (!config.bound || *tr.capture_round <= *config.bound);
      const auto& meta = tr.metadata["cop"];
      if (meta.contains("certified_bound")) {
        const auto& cb = meta["certified_bound"];
        row.certified = !cb.is_null() && tr.capture_round && *tr.capture_round <= cb.get<std::size_t>();
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  std::vector<std::size_t> rounds;
  for (const auto& row : s.rows) {
    if (row.capture_round) {
      ++s.captured;
      rounds.push_back(*row.capture_round);
    }
    s.successes += row.success ? 1 : 0;
    s.certified += row.certified.value_or(false) ? 1 : 0;
    s.errors += row.error.empty() ? 0 : 1;
  }
  s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
  s.certified_rate = static_cast<double>(s.certified) / static_cast<double>(s.trials);
  if (!rounds.empty()) {
    std::sort(rounds.begin(), rounds.end());
    auto rank = [&](double q) {
      const auto r = static_cast<std::size_t>(std::ceil(q * static_cast<double>(rounds.size())));
      return rounds[std::max<std::size_t>(r, 1) - 1];
    };
    s.min_rounds = rounds.front();
    s.p50_rounds = rank(0.5);
    s.p90_rounds = rank(0.9);
    s.max_rounds = rounds.back();
  }
  return s;
}

nlohmann::json to_json(const McSummary& s) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"trial", r.trial},
                    {"seed", r.seed},
                    {"captured", r.capture_round.has_value()},
                    {"capture_round", opt(r.capture_round)},
                    {"success", r.success},
                    {"certified", r.certified ? nlohmann::json(*r.certified) : nlohmann::json(nullptr)},
                    {"error", r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error)}});
  }
  return {{"trials", s.trials},
          {"captured", s.captured},
          {"successes", s.successes},
          {"certified", s.certified},
          {"errors", s.errors},
          {"success_rate", s.success_rate},
          {"certified_rate", s.certified_rate},
          {"rounds", {{"min", opt(s.min_rounds)}, {"p50", opt(s.p50_rounds)}, {"p90", opt(s.p90_rounds)}, {"max", opt(s.max_rounds)}}},
          {"rows", rows}};
}

std::string trials_csv(const McSummary& s) {
  std::string out = "trial,seed,captured,capture_round,success,certified,error\n";
  for (const auto& r : s.rows) {
    out += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + (r.capture_round ? "true" : "false") + "," +
           (r.capture_round ? std::to_string(*r.capture_round) : "") + "," + (r.success ? "true" : "false") + "," +
           (r.certified ? (*r.certified ? "true" : "false") : "") + "," + csv_field(r.error) + "\n";
  }
  return out;
}

}  // namespace copsrob
