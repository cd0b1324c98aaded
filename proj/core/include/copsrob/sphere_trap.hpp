#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"
#include "copsrob/policy.hpp"
#include "copsrob/rng.hpp"

namespace copsrob {

/// layers[i] = N_i(v), the vertices at distance exactly i from v, ascending.
struct LayerDecomposition {
  Vertex center = 0;
  std::vector<std::vector<Vertex>> layers;
  std::vector<Distance> distance;  // from center, kUnreachable beyond r_max
};

LayerDecomposition layers(const Graph& g, Vertex v, std::size_t r_max);

enum class TrapMode {
  /// Cops on N_{2d+1}(v) at distance exactly d+1 from their target.
  hypercube,
  /// Any cop within distance `reach` of its target.
  general,
};

struct TrapAssignment {
  std::vector<Vertex> targets;             // N_d(v), ascending
  std::vector<std::size_t> cop_for_target; // cop id per target, or npos when unmatched
  std::vector<std::vector<Vertex>> routes; // per target: shortest path from the cop (empty when unmatched)
  bool saturated = false;
  /// When unsaturated: targets S with fewer than |S| eligible cops.
  std::vector<Vertex> hall_witness;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Maximum matching of the sphere N_d(v) to distinct eligible cops, each
/// target trying its nearest cops first.
TrapAssignment trap_matching(const Graph& g, const Positions& cops, Vertex v, std::size_t d, TrapMode mode,
                             std::size_t reach);

/// One tightening step: the cops listed in `occupiers` cover layer i; returns
/// their next positions so that layer i-1 is covered. Matched cops take
/// their matched inner vertex; the rest step to their smallest-id inner
/// neighbor; cops off layer i stay. Throws LayerHallFailure with the
/// deficient inner set, InvalidArgument when layer i is not covered.
Positions tighten_step(const Graph& g, const LayerDecomposition& ld, std::size_t i, const Positions& occupiers);

/// Random placement, then: match the sphere N_d(robber start) to cops, walk
/// matched cops to their targets (arriving by round d+1), and tighten one
/// layer per round. A saturated matching certifies capture within 2d+1
/// rounds. Without one, or when a tightening step fails, the cops fall back
/// to greedy pursuit and the run is flagged in metadata.
class SphereTrapPolicy final : public CopPolicy {
 public:
  SphereTrapPolicy(std::size_t d, TrapMode mode, std::uint64_t seed);

  std::string name() const override { return "sphere-trap"; }
  Positions place(const Graph& g, std::size_t k) override;
  Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  nlohmann::json metadata() const override;

  bool matching_saturated() const noexcept { return saturated_; }
  std::optional<RoundCount> certified_bound() const;

 private:
  Positions pursue(const Graph& g, const Positions& cops, Vertex robber);

  std::size_t d_;
  TrapMode mode_;
  std::uint64_t seed_;
  Rng rng_;

  // per game
  bool started_ = false;
  bool saturated_ = false;
  bool fell_back_ = false;
  std::string failure_;
  LayerDecomposition ld_;
  TrapAssignment trap_;
  std::vector<std::size_t> trap_cops_;
};

}  // namespace copsrob
