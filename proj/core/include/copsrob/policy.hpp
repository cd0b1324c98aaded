#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "copsrob/graph.hpp"
#include "copsrob/solver.hpp"

namespace copsrob {

/// Cop positions indexed by cop id.
using Positions = std::vector<Vertex>;

/// A cop strategy. place() starts a new game and must reset any per-game
/// state (including reseeding), so one instance can play many games in
/// sequence. move() returns the next position of every cop; each must stay
/// within the closed neighborhood of its previous vertex.
class CopPolicy {
 public:
  virtual ~CopPolicy() = default;
  virtual std::string name() const = 0;
  virtual Positions place(const Graph& g, std::size_t k) = 0;
  virtual Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) = 0;
  /// Per-game diagnostics attached to transcripts.
  virtual nlohmann::json metadata() const { return nlohmann::json::object(); }
};

class RobberPolicy {
 public:
  virtual ~RobberPolicy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Graph& g, const Positions& cops) = 0;
  virtual Vertex move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) = 0;
  virtual nlohmann::json metadata() const { return nlohmann::json::object(); }
};

struct PlayOptions {
  std::size_t max_rounds = 1000;
  /// The robber may move anywhere in its component of g minus the cop
  /// vertices instead of one step.
  bool fast_robber = false;
};

struct RoundRecord {
  Positions cops;  // after the cop move
  Vertex robber;   // after the robber move (unchanged when caught by the cops)
};

struct PlayTranscript {
  Positions placement;
  Vertex robber_start = 0;
  std::vector<RoundRecord> rounds;
  /// Number of cop moves made before capture; 0 when the robber was placed
  /// on a cop. Empty on timeout.
  std::optional<std::size_t> capture_round;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Referee. Round 0 is placement (cops first); each later round is a cop
/// move then a robber move, with capture checked after each. Throws
/// IllegalMove naming the offending player, InvalidArgument for k == 0 or
/// max_rounds == 0.
PlayTranscript play(const Graph& g, std::size_t k, CopPolicy& cops, RobberPolicy& robber,
                    const PlayOptions& options = {});

/// {"placements": {"cops", "robber"}, "rounds": [{"cops", "robber"}],
///  "capture_round": n | null, "metadata": {...}}
nlohmann::json to_json(const PlayTranscript& t);

/// Throws IllegalMove when `next` is not a legal joint cop move from `prev`.
void check_cop_move(const Graph& g, const Positions& prev, const Positions& next);
/// Legal robber destinations: N[r], plus (fast) the whole component of g
/// minus the cop vertices.
bool robber_can_reach(const Graph& g, const Positions& cops, Vertex from, Vertex to, bool fast);

struct WorstCase {
  /// Largest capture round over all robber scripts, or kNoCapture when some
  /// script survives past `bound` rounds.
  RoundCount rounds = 0;
  /// Robber placement and moves realizing it.
  std::vector<Vertex> script;
};

/// Exhaustive adversary: every robber placement and step sequence is played
/// against a deterministic cop policy (replayed from place() for each
/// branch), up to bound + 1 rounds.
WorstCase worst_case_capture(const Graph& g, std::size_t k, CopPolicy& cops, RoundCount bound);

}  // namespace copsrob
