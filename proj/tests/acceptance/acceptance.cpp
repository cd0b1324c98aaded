// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Tolerances, rates and time budgets are pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "copsrob/experiments.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/metrics.hpp"
#include "copsrob/rng.hpp"
#include "copsrob/solver.hpp"
#include "copsrob/thresholds.hpp"
#include "oracles.hpp"

using namespace copsrob;

namespace {

constexpr double kRegimeBTarget = 0.2716;
constexpr double kRegimeBTolerance = 1e-3;
constexpr double kCertifyRate = 0.95;
constexpr std::size_t kTrials = 100;
constexpr std::size_t kSphereSeeds = 200;
constexpr std::uint64_t kBaseSeed = 1;
constexpr std::uint64_t kMcSeed = 7;
constexpr std::size_t kOtherThreads = 4;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Suite output computed once at one thread; criterion 12 reruns it at more.
std::map<std::string, std::vector<BoundReport>> g_suites;

SuiteParams suite_params(const std::string& name, std::size_t threads) {
  SuiteParams p;
  p.base_seed = kBaseSeed;
  p.threads = threads;
  if (name == "trees") {
    p.n_max = 12;
    p.k_max = 3;
    p.seeds = 20;
  } else if (name == "lower-bounds" || name == "monotonicity") {
    p.n_max = 10;
    p.seeds = 50;
  } else if (name == "sphere-trap") {
    p.seeds = kSphereSeeds;
  } else if (name == "planar") {
    p.seeds = 10;
  }
  return p;
}

const std::vector<BoundReport>& suite(const std::string& name) {
  auto it = g_suites.find(name);
  if (it == g_suites.end()) it = g_suites.emplace(name, verify_suite(name, suite_params(name, 1))).first;
  return it->second;
}

struct Tally {
  std::size_t rows = 0, failed = 0;
  std::set<std::string> instances;
  std::string first_failure;
};

Tally tally(const std::vector<BoundReport>& rows, const std::function<bool(const BoundReport&)>& keep) {
  Tally t;
  for (const auto& r : rows) {
    if (!keep(r)) continue;
    ++t.rows;
    t.instances.insert(r.instance);
    if (!r.pass) {
      if (t.failed++ == 0) t.first_failure = r.instance + ": " + r.quantity + " (" + std::to_string(r.measured) + ")";
    }
  }
  return t;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

McConfig random_graph_config(const std::string& robber, std::size_t trials) {
  McConfig c;
  c.graph = "gnp:500,0.5";
  c.k = static_cast<std::size_t>(std::ceil(10 * std::sqrt(500 * std::log(500.0))));
  c.cops = {"sphere-trap", {{"d", "auto"}, {"C", 10}}};
  c.robber = {robber, nlohmann::json::object()};
  c.trials = trials;
  c.seed = kMcSeed;
  c.max_rounds = 50;
  c.bound = 3;
  return c;
}

McSummary g_certify, g_stay_far;

Outcome trees() {
  std::size_t checks = 0, mismatches = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    const std::size_t n = 3 + i % 10;
    const Graph g = gen_tree(n, derive_seed(kBaseSeed, i));
    for (std::size_t k = 1; k <= 3; ++k) {
      ++checks;
      if (capture_time(g, k).value != oracle::k_center(g, k).radius) ++mismatches;
    }
  }
  const Tally t = tally(suite("trees"), [](const BoundReport& r) { return starts_with(r.quantity, "capt_"); });
  const bool ok = mismatches == 0 && checks == 60 && t.failed == 0 && t.rows == 60;
  return {ok, std::to_string(checks) + " capt_k == brute-force rad_k checks, " + std::to_string(mismatches) +
                  " mismatches; suite rows " + std::to_string(t.rows) + ", failed " + std::to_string(t.failed)};
}

Outcome grid_closed_form() {
  std::size_t bad = 0;
  std::string first;
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const RoundCount capt = capture_time(gen_grid({m, n}).graph, 2).value;
      const std::size_t want = (m + n) / 2 - 1;
      if (capt != want && bad++ == 0) first = fmt(" first: %gx%g capt %g want %g", m, n, capt, want);
    }
  }
  return {bad == 0, "16 grids 2..5 x 2..5, " + std::to_string(bad) + " off floor((m+n)/2)-1" + first};
}

Outcome lower_bounds() {
  const Tally t = tally(suite("lower-bounds"), [](const BoundReport&) { return true; });
  const bool ok = t.failed == 0 && t.instances.size() == 50;
  return {ok, std::to_string(t.instances.size()) + " G(n<=10, p in {0.3,0.5}) instances, " + std::to_string(t.rows) +
                  " inequalities over feasible k, " + std::to_string(t.failed) + " failed " + t.first_failure};
}

Outcome monotonicity() {
  const auto& rows = suite("monotonicity");
  const Tally all = tally(rows, [](const BoundReport&) { return true; });
  const Tally gamma = tally(rows, [](const BoundReport& r) { return starts_with(r.quantity, "capt_gamma"); });
  const Tally full = tally(rows, [](const BoundReport& r) { return r.quantity.find("== 0") != std::string::npos; });
  const bool ok = all.failed == 0 && all.instances.size() == 50 && gamma.rows == 50 && full.rows == 50;
  return {ok, std::to_string(all.rows) + " rows (" + std::to_string(gamma.rows) + " capt_gamma == 1, " +
                  std::to_string(full.rows) + " capt_n == 0), " + std::to_string(all.failed) + " failed " +
                  all.first_failure};
}

// Every 3-set of Q4 vertices leaves a vertex at distance >= 2 from all of
// them, so the robber survives the first cop move.
bool q4_three_cops_miss_a_vertex() {
  const Graph g = gen_hypercube(4).graph;
  const auto d = oracle::floyd_warshall(g);
  bool always = true;
  oracle::for_each_subset(16, 3, [&](const std::vector<Vertex>& s) {
    bool miss = false;
    for (Vertex v = 0; v < 16 && !miss; ++v) {
      miss = std::all_of(s.begin(), s.end(), [&](Vertex c) { return d[c][v] >= 2; });
    }
    always = always && miss;
  });
  return always;
}

Outcome hypercube() {
  const std::size_t c2 = cop_number(gen_hypercube(2).graph), c3 = cop_number(gen_hypercube(3).graph);
  const RoundCount capt2_q3 = capture_time(gen_hypercube(3).graph, 2).value;
  const BigRatio k_max = qn_lower_k_max(4, 1);
  const bool counting = k_max.below == "3" && q4_three_cops_miss_a_vertex();
  const CaptureResult q4 = capture_time(gen_hypercube(4).graph, 3);
  const bool ok = c2 == 2 && c3 == 2 && capt2_q3 == 1 && counting && q4.value >= 2 && q4.value != kNoCapture;
  return {ok, fmt("c(Q2)=%g c(Q3)=%g capt_2(Q3)=%g; 3 < 16/5 so capt_3(Q4) >= 2, solver gives %g", c2, c3, capt2_q3,
                  q4.value) +
                  " (" + std::to_string(q4.states) + " states)"};
}

Outcome strategies() {
  const Tally tree = tally(suite("trees"), [](const BoundReport& r) { return starts_with(r.quantity, "tree_policy"); });
  const auto& rows = suite("strategies");
  const Tally strat = tally(rows, [](const BoundReport&) { return true; });
  std::string detail = "tree_policy vs solver robber: " + std::to_string(tree.rows) + " games, " +
                       std::to_string(tree.failed) + " over rad_k;";
  for (const auto& r : rows) detail += " " + r.instance + fmt(" worst %g <= %g;", r.measured, r.bound);
  return {tree.failed == 0 && tree.rows > 0 && strat.failed == 0 && strat.rows == 2, detail};
}

Outcome sphere_trap() {
  const auto& rows = suite("sphere-trap");
  const Tally certified = tally(rows, [](const BoundReport& r) { return r.quantity.find("2d+1") != std::string::npos; });
  const Tally flagged = tally(rows, [](const BoundReport& r) { return starts_with(r.quantity, "fallback"); });
  const bool ok = certified.rows + flagged.rows == kSphereSeeds && certified.failed == 0 && flagged.failed == 0;
  return {ok, std::to_string(certified.rows) + " saturated runs, " + std::to_string(certified.failed) +
                  " over 3 rounds; " + std::to_string(flagged.rows) + " Hall failures, " +
                  std::to_string(flagged.failed) + " unflagged"};
}

Outcome random_graphs() {
  const McConfig c = random_graph_config("greedy", kTrials);
  const double expected_degree = 0.5 * 499;
  const std::size_t r = radius_threshold(expected_degree, 500, c.k, 10.0);
  // The same r from each trial's own average degree.
  std::size_t r_off = 0;
  for (std::size_t t = 0; t < kTrials; ++t) {
    const Graph g = parse_generator_spec(c.graph, derive_seed(c.seed, t)).graph;
    const double degree = 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
    if (radius_threshold(degree, 500, c.k, 10.0) != r) ++r_off;
  }
  g_certify = mc_run(c, 1);
  g_stay_far = mc_run(random_graph_config("stay-far", kTrials), 1);
  const std::size_t survive = g_stay_far.min_rounds.value_or(0);
  const bool ok = r == 1 && r_off == 0 && c.k == 558 && g_certify.errors == 0 && g_certify.certified_rate >= kCertifyRate &&
                  g_stay_far.errors == 0 && g_stay_far.captured == kTrials && survive >= r;
  return {ok, fmt("k=%g r=%g; certified %.2f (need %.2f)", c.k, r, g_certify.certified_rate, kCertifyRate) +
                  fmt("; stay-far survives >= %g rounds in all %g trials", survive, g_stay_far.trials)};
}

Outcome separator_sweep() {
  const auto& rows = suite("planar");
  const Tally t = tally(rows, [](const BoundReport& r) { return r.instance.find("sweep") != std::string::npos; });
  std::string detail;
  bool fast_captured = false;
  for (const auto& r : rows) {
    if (r.instance.find("sweep") == std::string::npos || !starts_with(r.quantity, "capture_round")) continue;
    const bool fast = r.instance.find("fast") != std::string::npos;
    if (fast) fast_captured = r.pass && r.measured <= r.bound;
    detail += (fast ? "fast " : "slow ") + fmt("%g rounds (bound %.2f); ", r.measured, r.bound);
  }
  return {t.failed == 0 && t.rows == 6 && fast_captured,
          detail + std::to_string(t.rows) + " rows incl. shrink <= 2/3 and monotone territory, " +
              std::to_string(t.failed) + " failed"};
}

Outcome three_cop_planar() {
  const Tally t = tally(suite("planar"), [](const BoundReport& r) { return r.instance.find("sweep") == std::string::npos; });
  return {t.failed == 0 && t.instances.size() == 12,
          std::to_string(t.instances.size()) + " graphs (G2_4, C6, 10 trees) vs greedy and solver robbers, " +
              std::to_string(t.rows) + " rows, " + std::to_string(t.failed) + " failed " + t.first_failure};
}

Outcome regimes() {
  const double n = 1000;
  const auto iii = qn_regime(1000, 0.9 * n, 0.02);
  const auto i = qn_regime(1000, 2 * std::log2(n));
  const auto v = qn_regime(1000, n - 3 * std::log2(n));
  const double b = -g_eval(regime_constants().c);
  const bool ok = i.part == "i" && iii.part == "iii" && v.part == "v" && std::abs(b - kRegimeBTarget) <= kRegimeBTolerance;
  return {ok, "n^2 -> " + i.part + ", 2^(0.9n) -> " + iii.part + ", 2^n/n^3 -> " + v.part + fmt("; b = %.6f", b)};
}

Outcome determinism() {
  std::size_t compared = 0;
  std::string differs;
  for (const auto& [name, rows] : g_suites) {
    const auto again = verify_suite(name, suite_params(name, kOtherThreads));
    ++compared;
    if (reports_csv(again) != reports_csv(rows) || dump_json(reports_json(again)) != dump_json(reports_json(rows))) {
      differs += " " + name;
    }
  }
  const auto certify = mc_run(random_graph_config("greedy", kTrials), kOtherThreads);
  const auto stay_far = mc_run(random_graph_config("stay-far", kTrials), kOtherThreads);
  compared += 2;
  if (dump_json(to_json(certify)) != dump_json(to_json(g_certify)) || trials_csv(certify) != trials_csv(g_certify)) {
    differs += " mc-greedy";
  }
  if (dump_json(to_json(stay_far)) != dump_json(to_json(g_stay_far))) differs += " mc-stay-far";
  return {differs.empty(), std::to_string(compared) + " runs repeated at " + std::to_string(kOtherThreads) +
                               " threads vs 1: " + (differs.empty() ? "byte-identical" : "differ:" + differs)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "trees: capt_k == rad_k", 60, trees},
      {2, "grid closed form", 120, grid_closed_form},
      {3, "lower bounds", 120, lower_bounds},
      {4, "monotonicity and endpoints", 120, monotonicity},
      {5, "hypercube small cases", 300, hypercube},
      {6, "strategy audits", 120, strategies},
      {7, "sphere trap on Q3", 60, sphere_trap},
      {8, "random graphs G(500, 0.5)", 300, random_graphs},
      {9, "separator sweep on G2_20", 120, separator_sweep},
      {10, "three-cop planar", 300, three_cop_planar},
      {11, "regime classifier", 1, regimes},
      {12, "determinism across threads", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && s <= c.budget_s;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s [%.2f s / %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s,
                c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
