#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "copsrob/error.hpp"
#include "copsrob/experiments.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/graph_io.hpp"
#include "copsrob/metrics.hpp"
#include "copsrob/policy.hpp"
#include "copsrob/rng.hpp"
#include "copsrob/solver.hpp"
#include "copsrob/thresholds.hpp"

namespace copsrob::cli {

namespace {

using nlohmann::json;

struct GraphSource {
  std::string gen;
  std::string file;
  bool from_stdin = false;
  std::uint64_t seed = 1;
};

void add_graph_options(CLI::App* sub, GraphSource& src) {
  // Exclusivity is checked in load(); CLI11's excludes() lists print in
  // pointer order, which would make the help text unstable.
  sub->add_option("--gen", src.gen, "Generator spec, e.g. grid:d=2,q=3 or gnp:10,0.5,7");
  sub->add_option("--file", src.file, "Graph file in edge-list format");
  sub->add_flag("--stdin", src.from_stdin, "Read the graph file from standard input");
  sub->add_option("--seed", src.seed, "Seed for random generators given without one")->capture_default_str();
}

struct Loaded {
  GraphInstance instance;
  std::string source;
};

Loaded load(const GraphSource& src, std::istream& in, std::ostream& err) {
  const int given = !src.gen.empty() + !src.file.empty() + src.from_stdin;
  if (given != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --gen, --file, --stdin");
  Loaded out;
  if (!src.gen.empty()) {
    out.instance = parse_generator_spec(src.gen, src.seed);
    out.source = src.gen;
    return out;
  }
  LoadedGraph g;
  if (!src.file.empty()) {
    std::ifstream f(src.file);
    if (!f) throw Error(ErrorCode::Io, "cannot open " + src.file);
    g = read_graph(f);
    out.source = src.file;
  } else {
    g = read_graph(in);
    out.source = "-";
  }
  for (const auto& w : g.warnings) err << "warning: " << w << "\n";
  out.instance.spec = out.source;
  out.instance.graph = std::move(g.graph);
  return out;
}

json graph_json(const Loaded& l) {
  return {{"source", l.source}, {"order", l.instance.graph.order()}, {"size", l.instance.graph.size()}};
}

struct Output {
  std::string path;
};

void add_output_option(CLI::App* sub, Output& o) { sub->add_option("-o,--output", o.path, "Write here instead of stdout"); }

void emit(const Output& o, std::ostream& out, const std::string& text) {
  if (o.path.empty() || o.path == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.path);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + o.path);
  f << text;
}

json parse_params(const std::string& text, const char* flag) {
  if (text.empty()) return json::object();
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string(flag) + " must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(flag) + ": " + e.what());
  }
}

json ratio_json(const BigRatio& r) {
  return {{"numerator", r.numerator}, {"denominator", r.denominator}, {"value", r.value},
          {"floor", r.floor},         {"ceiling", r.ceiling},         {"below", r.below}};
}

class Timer {
 public:
  double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and robbers on graphs: exact capture times, strategies, and bound checks.", "copsrob"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "copsrob 0.1.0");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated graph in edge-list format");
  std::string gen_spec;
  std::uint64_t gen_seed = 1;
  Output gen_out;
  gen->add_option("spec", gen_spec, "Generator spec")->required();
  gen->add_option("--seed", gen_seed, "Seed for random generators given without one")->capture_default_str();
  add_output_option(gen, gen_out);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Exact k-capture time (and optionally the cop number)");
  GraphSource solve_src;
  std::size_t solve_k = 0;
  bool solve_cop_number = false, solve_timing = false;
  Output solve_out;
  add_graph_options(solve_cmd, solve_src);
  solve_cmd->add_option("-k", solve_k, "Number of cops")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--cop-number", solve_cop_number, "Also compute the cop number");
  solve_cmd->add_flag("--timing", solve_timing, "Report wall-clock ms (otherwise 0)");
  add_output_option(solve_cmd, solve_out);

  // kcenter
  auto* kc = app.add_subcommand("kcenter", "Metric k-center of a graph");
  GraphSource kc_src;
  std::size_t kc_k = 0;
  std::string kc_mode = "exact";
  Output kc_out;
  add_graph_options(kc, kc_src);
  kc->add_option("-k", kc_k, "Number of centers")->required()->check(CLI::PositiveNumber);
  kc->add_option("--mode", kc_mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}))->capture_default_str();
  add_output_option(kc, kc_out);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Play one game between named policies and print the transcript");
  GraphSource sim_src;
  std::size_t sim_k = 0, sim_rounds = 1000;
  std::string sim_cops = "greedy", sim_robber = "greedy", sim_cop_params, sim_robber_params;
  bool sim_fast = false;
  Output sim_out;
  add_graph_options(sim, sim_src);
  sim->add_option("-k", sim_k, "Number of cops")->required()->check(CLI::PositiveNumber);
  sim->add_option("--cops", sim_cops, "Cop policy")->capture_default_str();
  sim->add_option("--robber", sim_robber, "Robber policy")->capture_default_str();
  sim->add_option("--cop-params", sim_cop_params, "Cop policy parameters as a JSON object");
  sim->add_option("--robber-params", sim_robber_params, "Robber policy parameters as a JSON object");
  sim->add_option("--max-rounds", sim_rounds, "Round cap")->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_flag("--fast-robber", sim_fast, "The robber moves anywhere in its cop-free component");
  add_output_option(sim, sim_out);

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite; exit 3 when any bound fails");
  std::string ver_suite, ver_format = "csv";
  std::size_t ver_n_max = 0, ver_k_max = 0, ver_seeds = 0, ver_threads = 0;
  std::uint64_t ver_seed = 1;
  bool ver_timing = false;
  Output ver_out;
  ver->add_option("suite", ver_suite, "Suite name")->required();
  ver->add_option("--n-max", ver_n_max, "Largest instance order (suite default if unset)");
  ver->add_option("--k-max", ver_k_max, "Largest cop count (suite default if unset)");
  ver->add_option("--seeds", ver_seeds, "Number of seeded instances (suite default if unset)");
  ver->add_option("--seed", ver_seed, "Base seed")->capture_default_str();
  ver->add_option("--threads", ver_threads, "Worker threads (else COPSROB_THREADS, else all cores)");
  ver->add_option("--format", ver_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  ver->add_flag("--timing", ver_timing, "Record runtime_ms (otherwise 0)");
  add_output_option(ver, ver_out);

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo trials from a JSON config");
  std::string mc_path, mc_format = "json";
  std::size_t mc_threads = 0;
  Output mc_out;
  mc->add_option("config", mc_path, "Config file, or - for stdin")->required();
  mc->add_option("--threads", mc_threads, "Worker threads (else COPSROB_THREADS, else all cores)");
  mc->add_option("--format", mc_format, "json (summary and rows) or csv (rows)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  add_output_option(mc, mc_out);

  // regime
  auto* reg = app.add_subcommand("regime", "Classify k cops on the n-cube by capture-time regime");
  std::size_t reg_n = 0;
  std::optional<std::uint64_t> reg_k;
  std::optional<double> reg_log2k;
  double reg_eps = kDefaultRegimeEpsilon;
  Output reg_out;
  reg->add_option("-n", reg_n, "Cube dimension")->required();
  reg->add_option("-k", reg_k, "Number of cops");
  reg->add_option("--log2k", reg_log2k, "log2 of the number of cops, for k beyond 64 bits");
  reg->add_option("--eps", reg_eps, "Boundary margin")->capture_default_str();
  add_output_option(reg, reg_out);

  // thresholds
  auto* thr = app.add_subcommand("thresholds", "Cop-count thresholds on the n-cube and the radius r");
  std::size_t thr_n = 0, thr_d = 0;
  std::optional<std::size_t> thr_k;
  std::optional<double> thr_degree;
  double thr_c = 10.0;
  Output thr_out;
  thr->add_option("-n", thr_n, "Cube dimension, and graph order for r")->required();
  thr->add_option("-d", thr_d, "Trap radius d")->required();
  thr->add_option("-k", thr_k, "Number of cops, needed for r");
  thr->add_option("--degree", thr_degree, "Degree for r (default d)");
  thr->add_option("-C", thr_c, "Constant C for r")->capture_default_str();
  add_output_option(thr, thr_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (gen->parsed()) {
      const GraphInstance g = parse_generator_spec(gen_spec, gen_seed);
      std::ostringstream s;
      write_graph(s, g.graph);
      emit(gen_out, out, s.str());
    } else if (solve_cmd->parsed()) {
      const Loaded l = load(solve_src, in, err);
      const Timer t;
      const CaptureResult r = capture_time(l.instance.graph, solve_k);
      json j = {{"graph", graph_json(l)},
                {"k", solve_k},
                {"capt", r.value == kNoCapture ? json(nullptr) : json(r.value)},
                {"states_visited", r.states}};
      if (solve_cop_number) j["cop_number"] = cop_number(l.instance.graph);
      j["ms"] = solve_timing ? t.ms() : 0.0;
      emit(solve_out, out, dump_json(j));
    } else if (kc->parsed()) {
      const Loaded l = load(kc_src, in, err);
      const auto r = k_center(l.instance.graph, kc_k, kc_mode == "exact" ? KCenterMode::exact : KCenterMode::greedy);
      emit(kc_out, out,
           dump_json({{"graph", graph_json(l)}, {"k", kc_k}, {"mode", kc_mode}, {"centers", r.centers}, {"radius", r.radius}}));
    } else if (sim->parsed()) {
      const Loaded l = load(sim_src, in, err);
      const PolicySpec cops{sim_cops, parse_params(sim_cop_params, "--cop-params")};
      const PolicySpec robber{sim_robber, parse_params(sim_robber_params, "--robber-params")};
      auto cp = make_cop_policy(cops, l.instance, sim_k, sim_src.seed);
      auto rp = make_robber_policy(robber, l.instance, sim_k, derive_seed(sim_src.seed, 1));
      const auto tr = play(l.instance.graph, sim_k, *cp, *rp, {sim_rounds, sim_fast});
      emit(sim_out, out, dump_json(to_json(tr)));
    } else if (ver->parsed()) {
      SuiteParams p;
      if (ver_n_max > 0) p.n_max = ver_n_max;
      if (ver_k_max > 0) p.k_max = ver_k_max;
      if (ver_seeds > 0) p.seeds = ver_seeds;
      p.base_seed = ver_seed;
      p.threads = resolve_threads(ver_threads > 0 ? std::optional<std::size_t>(ver_threads) : std::nullopt);
      p.timing = ver_timing;
      const auto rows = verify_suite(ver_suite, p);
      emit(ver_out, out, ver_format == "csv" ? reports_csv(rows) : dump_json(reports_json(rows)));
      const auto failed = std::count_if(rows.begin(), rows.end(), [](const BoundReport& r) { return !r.pass; });
      err << ver_suite << ": " << rows.size() << " rows, " << failed << " failed\n";
      if (failed > 0) return kSuiteFailure;
    } else if (mc->parsed()) {
      json config;
      try {
        if (mc_path == "-") {
          config = json::parse(in);
        } else {
          std::ifstream f(mc_path);
          if (!f) throw Error(ErrorCode::Io, "cannot open " + mc_path);
          config = json::parse(f);
        }
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
      }
      const McConfig c = mc_config_from_json(config);
      const auto s = mc_run(c, resolve_threads(mc_threads > 0 ? std::optional<std::size_t>(mc_threads) : std::nullopt));
      emit(mc_out, out, mc_format == "csv" ? trials_csv(s) : dump_json(to_json(s)));
    } else if (reg->parsed()) {
      if (reg_k.has_value() == reg_log2k.has_value()) throw Error(ErrorCode::InvalidArgument, "give one of -k, --log2k");
      if (reg_k && *reg_k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
      const double log2_k = reg_k ? std::log2(static_cast<double>(*reg_k)) : *reg_log2k;
      const Regime r = qn_regime(reg_n, log2_k, reg_eps);
      emit(reg_out, out,
           dump_json({{"n", reg_n},
                      {"log2_k", log2_k},
                      {"eps", reg_eps},
                      {"part", r.part},
                      {"order", r.order},
                      {"beta", r.beta},
                      {"alpha", r.alpha},
                      {"f", r.f},
                      {"omega", r.omega}}));
    } else if (thr->parsed()) {
      const auto upper = qn_upper_k_min(thr_n, thr_d);
      json j = {{"n", thr_n},
                {"d", thr_d},
                {"qn_upper_k_min", ratio_json(upper.k_min)},
                {"d_in_range", upper.d_in_range},
                {"qn_lower_k_max", ratio_json(qn_lower_k_max(thr_n, thr_d))}};
      if (thr_k) {
        const double degree = thr_degree.value_or(static_cast<double>(thr_d));
        j["k"] = *thr_k;
        j["C"] = thr_c;
        j["degree"] = degree;
        j["r"] = radius_threshold(degree, thr_n, *thr_k, thr_c);
      }
      emit(thr_out, out, dump_json(j));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? kValidationError : kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace copsrob::cli
