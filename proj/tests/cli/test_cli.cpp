#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = copsrob::cli::cli_main(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const std::vector<std::string> kSubcommands = {"gen", "solve", "kcenter", "simulate", "verify", "mc", "regime", "thresholds"};

}  // namespace

TEST_CASE("help text matches the snapshots") {
  const std::filesystem::path dir = COPSROB_SNAPSHOT_DIR;
  const bool update = std::getenv("COPSROB_UPDATE_SNAPSHOTS") != nullptr;
  std::vector<std::pair<std::string, std::vector<std::string>>> cases = {{"copsrob", {"--help"}}};
  for (const auto& s : kSubcommands) cases.push_back({s, {s, "--help"}});
  for (const auto& [name, args] : cases) {
    CAPTURE(name);
    const Run r = run(args);
    CHECK(r.code == copsrob::cli::kOk);
    CHECK(r.out.find("Usage:") != std::string::npos);
    const auto path = dir / (name + ".txt");
    if (update) {
      std::ofstream(path) << r.out;
    } else {
      REQUIRE(std::filesystem::exists(path));
      CHECK(r.out == slurp(path));
    }
  }
}

TEST_CASE("solve on the 3x3 grid") {
  const Run r = run({"solve", "--gen", "grid:d=2,q=3", "-k", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["capt"] == 2);
  CHECK(j["k"] == 2);
  CHECK(j["graph"]["order"] == 9);
  CHECK(j["graph"]["size"] == 12);
  CHECK(j["ms"] == 0.0);
  CHECK_FALSE(j.contains("cop_number"));
  CHECK(j["states_visited"].is_number_integer());
}

TEST_CASE("ambiguous grid spec is a validation error") {
  const Run r = run({"solve", "--gen", "grid:2x3,3", "-k", "2"});
  CHECK(r.code == copsrob::cli::kValidationError);
  CHECK(r.out.empty());
  CHECK(r.err.find("'3'") != std::string::npos);
}

TEST_CASE("gen piped into solve") {
  const Run g = run({"gen", "hypercube:3"});
  REQUIRE(g.code == 0);
  const Run s = run({"solve", "-k", "2", "--stdin", "--cop-number"}, g.out);
  REQUIRE(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["capt"] == 1);
  CHECK(j["cop_number"] == 2);
}

TEST_CASE("verify exits by suite outcome") {
  const Run r = run({"verify", "trees", "--n-max", "12", "--k-max", "3", "--seeds", "20", "--threads", "2"});
  CHECK(r.code == copsrob::cli::kOk);
  CHECK(r.out.rfind("suite,instance,quantity,", 0) == 0);
  CHECK(r.err.find("0 failed") != std::string::npos);
  const Run again = run({"verify", "trees", "--n-max", "12", "--k-max", "3", "--seeds", "20", "--threads", "1"});
  CHECK(again.out == r.out);
  CHECK(run({"verify", "nope"}).code == copsrob::cli::kValidationError);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == copsrob::cli::kValidationError);
  CHECK(run({"frobnicate"}).code == copsrob::cli::kValidationError);
  CHECK(run({"solve", "--gen", "path:4"}).code == copsrob::cli::kValidationError);  // -k missing
  CHECK(run({"solve", "--gen", "path:4", "--stdin", "-k", "1"}).code == copsrob::cli::kValidationError);
  CHECK(run({"solve", "-k", "1"}).code == copsrob::cli::kValidationError);  // no source
  CHECK(run({"solve", "--file", "/nonexistent/g.txt", "-k", "1"}).code == copsrob::cli::kValidationError);
  CHECK(run({"solve", "--stdin", "-k", "1"}, "3 1\n0 7\n").code == copsrob::cli::kValidationError);
  CHECK(run({"kcenter", "--gen", "path:4", "-k", "1", "--mode", "psychic"}).code == copsrob::cli::kValidationError);
  CHECK(run({"simulate", "--gen", "path:4", "-k", "1", "--cops", "teleport"}).code ==
        copsrob::cli::kValidationError);
  CHECK(run({"simulate", "--gen", "path:4", "-k", "1", "--cop-params", "[1]"}).code ==
        copsrob::cli::kValidationError);
  CHECK(run({"regime", "-n", "100"}).code == copsrob::cli::kValidationError);
  CHECK(run({"regime", "-n", "100", "--log2k", "95"}).code == copsrob::cli::kValidationError);  // boundary
  CHECK(run({"mc", "-"}, "{not json").code == copsrob::cli::kValidationError);
  CHECK(run({"--version"}).code == copsrob::cli::kOk);
}

TEST_CASE("runtime errors exit 2") {
  // Exceeds the solver's state budget.
  const Run r = run({"solve", "--gen", "grid:d=2,q=8", "-k", "6"});
  CHECK(r.code == copsrob::cli::kRuntimeError);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("simulate emits a transcript") {
  const Run r = run({"simulate", "--gen", "cycle:6", "-k", "2", "--cops", "greedy", "--robber", "stay-far", "--seed", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"placements", "rounds", "capture_round", "metadata"}) CHECK(j.contains(key));
  CHECK(j["metadata"]["cop_policy"] == "greedy");
  CHECK(run({"simulate", "--gen", "cycle:6", "-k", "2", "--seed", "3", "--robber", "stay-far"}).out == r.out);
}

TEST_CASE("kcenter, regime and thresholds") {
  const auto kc = nlohmann::json::parse(run({"kcenter", "--gen", "path:5", "-k", "1"}).out);
  CHECK(kc["radius"] == 2);
  CHECK(kc["centers"] == nlohmann::json::array({2}));
  const auto reg = nlohmann::json::parse(run({"regime", "-n", "1000", "--log2k", "900", "--eps", "0.02"}).out);
  CHECK(reg["part"] == "iii");
  const auto thr = nlohmann::json::parse(run({"thresholds", "-n", "500", "-d", "1", "-k", "558", "--degree", "249.5"}).out);
  CHECK(thr["r"] == 1);
  CHECK(thr["qn_lower_k_max"]["denominator"] == "501");
}

TEST_CASE("mc from a config on stdin") {
  const std::string config =
      R"({"graph": "grid:3x4", "k": 2, "cops": "greedy", "robber": "random-walk", "trials": 6, "seed": 9})";
  const Run a = run({"mc", "-", "--threads", "1"}, config);
  const Run b = run({"mc", "-", "--threads", "3"}, config);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["trials"] == 6);
  const Run csv = run({"mc", "-", "--format", "csv"}, config);
  CHECK(csv.out.rfind("trial,seed,", 0) == 0);
}

TEST_CASE("output file option") {
  const auto path = std::filesystem::temp_directory_path() / "copsrob_cli_test_gen.txt";
  REQUIRE(run({"gen", "path:3", "-o", path.string()}).code == 0);
  CHECK(slurp(path) == "3 2\n0 1\n1 2\n");
  std::filesystem::remove(path);
}
