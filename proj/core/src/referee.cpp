#include <algorithm>

#include "copsrob/error.hpp"
#include "copsrob/policy.hpp"

namespace copsrob {

namespace {

bool on_cop(const Positions& cops, Vertex r) { return std::find(cops.begin(), cops.end(), r) != cops.end(); }

void check_placement(const Graph& g, std::size_t k, const Positions& cops) {
  if (cops.size() != k) {
    throw Error(ErrorCode::IllegalMove,
                "cop policy placed " + std::to_string(cops.size()) + " cops, expected " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (cops[i] >= g.order()) {
      throw Error(ErrorCode::IllegalMove, "cop " + std::to_string(i) + " placed on missing vertex " +
                                              std::to_string(cops[i]));
    }
  }
}

}  // namespace

void check_cop_move(const Graph& g, const Positions& prev, const Positions& next) {
  if (next.size() != prev.size()) {
    throw Error(ErrorCode::IllegalMove, "cop policy returned " + std::to_string(next.size()) + " positions for " +
                                            std::to_string(prev.size()) + " cops");
  }
  for (std::size_t i = 0; i < prev.size(); ++i) {
    if (next[i] >= g.order() || !g.can_step(prev[i], next[i])) {
      throw Error(ErrorCode::IllegalMove, "cop " + std::to_string(i) + " moved from " + std::to_string(prev[i]) +
                                              " to non-adjacent vertex " + std::to_string(next[i]));
    }
  }
}

bool robber_can_reach(const Graph& g, const Positions& cops, Vertex from, Vertex to, bool fast) {
  if (to >= g.order()) return false;
  if (g.can_step(from, to)) return true;
  if (!fast) return false;
  VertexMask free(g.order(), true);
  for (Vertex c : cops) free[c] = false;
  if (!free[from] || !free[to]) return false;
  return bfs_distances(g, from, free)[to] != kUnreachable;
}

PlayTranscript play(const Graph& g, std::size_t k, CopPolicy& cops, RobberPolicy& robber, const PlayOptions& options) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (options.max_rounds == 0) throw Error(ErrorCode::InvalidArgument, "max_rounds must be at least 1");
  PlayTranscript t;
  Positions pos = cops.place(g, k);
  check_placement(g, k, pos);
  Vertex r = robber.place(g, pos);
  if (r >= g.order()) throw Error(ErrorCode::IllegalMove, "robber placed on missing vertex " + std::to_string(r));
  t.placement = pos;
  t.robber_start = r;

  if (on_cop(pos, r)) {
    t.capture_round = 0;
  } else {
    for (std::size_t round = 1; round <= options.max_rounds; ++round) {
      Positions next = cops.move(g, pos, r, round);
      check_cop_move(g, pos, next);
      pos = std::move(next);
      if (on_cop(pos, r)) {
        t.rounds.push_back({pos, r});
        t.capture_round = round;
        break;
      }
      const Vertex to = robber.move(g, pos, r, round);
      if (!robber_can_reach(g, pos, r, to, options.fast_robber)) {
        throw Error(ErrorCode::IllegalMove,
                    "robber moved from " + std::to_string(r) + " to unreachable vertex " + std::to_string(to));
      }
      r = to;
      t.rounds.push_back({pos, r});
      if (on_cop(pos, r)) {
        t.capture_round = round;
        break;
      }
    }
  }
  t.metadata = {{"cop_policy", cops.name()},
                {"robber_policy", robber.name()},
                {"cop", cops.metadata()},
                {"robber", robber.metadata()}};
  return t;
}

nlohmann::json to_json(const PlayTranscript& t) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& rec : t.rounds) rounds.push_back({{"cops", rec.cops}, {"robber", rec.robber}});
  nlohmann::json out = {{"placements", {{"cops", t.placement}, {"robber", t.robber_start}}},
                        {"rounds", std::move(rounds)},
                        {"metadata", t.metadata}};
  out["capture_round"] = t.capture_round ? nlohmann::json(*t.capture_round) : nlohmann::json(nullptr);
  return out;
}

namespace {

struct Replay {
  std::optional<std::size_t> capture_round;
  Positions cops;
  Vertex robber = 0;
};

// Plays script[0] as placement and script[i] as the robber's move in round
// i, then the cop move of the following round.
Replay replay(const Graph& g, std::size_t k, CopPolicy& policy, const std::vector<Vertex>& script) {
  Replay out;
  out.cops = policy.place(g, k);
  check_placement(g, k, out.cops);
  out.robber = script[0];
  if (on_cop(out.cops, out.robber)) {
    out.capture_round = 0;
    return out;
  }
  for (std::size_t round = 1;; ++round) {
    Positions next = policy.move(g, out.cops, out.robber, round);
    check_cop_move(g, out.cops, next);
    out.cops = std::move(next);
    if (on_cop(out.cops, out.robber)) {
      out.capture_round = round;
      return out;
    }
    if (round == script.size()) return out;
    out.robber = script[round];
    if (on_cop(out.cops, out.robber)) {
      out.capture_round = round;
      return out;
    }
  }
}

RoundCount explore(const Graph& g, std::size_t k, CopPolicy& policy, RoundCount bound, std::vector<Vertex>& script,
                   std::vector<Vertex>& witness) {
  const Replay state = replay(g, k, policy, script);
  if (state.capture_round || script.size() > bound) {
    witness = script;
    return state.capture_round ? static_cast<RoundCount>(*state.capture_round) : kNoCapture;
  }
  RoundCount worst = 0;
  bool first = true;
  for (Vertex to : g.closed_neighborhood(state.robber)) {
    script.push_back(to);
    std::vector<Vertex> sub;
    const RoundCount v = explore(g, k, policy, bound, script, sub);
    script.pop_back();
    if (first || v > worst) {
      worst = v;
      witness = std::move(sub);
      first = false;
    }
    if (worst == kNoCapture) break;
  }
  return worst;
}

}  // namespace

WorstCase worst_case_capture(const Graph& g, std::size_t k, CopPolicy& cops, RoundCount bound) {
  WorstCase out;
  std::vector<Vertex> script;
  for (Vertex start = 0; start < g.order(); ++start) {
    script.assign(1, start);
    std::vector<Vertex> witness;
    const RoundCount v = explore(g, k, cops, bound, script, witness);
    if (start == 0 || v > out.rounds) {
      out.rounds = v;
      out.script = std::move(witness);
    }
    if (out.rounds == kNoCapture) break;
  }
  return out;
}

}  // namespace copsrob
