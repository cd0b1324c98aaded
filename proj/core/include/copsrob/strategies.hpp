#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "copsrob/generators.hpp"
#include "copsrob/graph.hpp"
#include "copsrob/policy.hpp"
#include "copsrob/retract.hpp"
#include "copsrob/rng.hpp"
#include "copsrob/solver.hpp"

namespace copsrob {

/// Cops start on a greedy k-center and each steps along a shortest path
/// toward the robber, smallest-id vertex on ties.
class GreedyPursuitPolicy final : public CopPolicy {
 public:
  std::string name() const override { return "greedy"; }
  Positions place(const Graph& g, std::size_t k) override;
  Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;

 private:
  std::uint64_t graph_hash_ = 0;
  std::size_t graph_order_ = 0;
  DistanceMatrix dist_;
};

/// k cops on a tree: cop i starts at the i-th exact k-center and chases the
/// robber's shadow in its ball B(center_i, rad_k). Captures within rad_k(T)
/// rounds against any robber. Throws NotATree.
class TreePolicy final : public CopPolicy {
 public:
  TreePolicy(const Graph& tree, std::size_t k);

  std::string name() const override { return "tree"; }
  Positions place(const Graph& g, std::size_t k) override;
  Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  nlohmann::json metadata() const override;

  Distance radius() const noexcept { return radius_; }

 private:
  Positions centers_;
  Distance radius_ = 0;
  std::vector<RetractMap> balls_;
  DistanceMatrix dist_;
};

/// A cop team's territory: a vertex set, a retract of the whole graph onto
/// it, and the number of cops assigned.
struct Territory {
  std::vector<Vertex> vertices;
  RetractMap retract;
  std::size_t cops = 0;
};

/// Builds the team strategy for one territory, given the territory as a
/// standalone graph (local ids follow ascending global ids).
using SubPolicyFactory = std::function<std::unique_ptr<CopPolicy>(const Graph& territory, std::size_t cops)>;

/// Default factory: optimal play from a (cached) solved table.
SubPolicyFactory solver_sub_policy(const SolveLimits& limits = {});

/// Each team plays its sub-policy on its territory against the robber's
/// shadow under the territory's retract. Captures within the largest team
/// capture time. Throws CoverageGap when territories miss a vertex and
/// RetractInvalid when a map is not a retract onto its territory.
class RetractPartitionPolicy final : public CopPolicy {
 public:
  RetractPartitionPolicy(const Graph& g, std::vector<Territory> territories,
                         SubPolicyFactory factory = solver_sub_policy());

  std::string name() const override { return "retract-partition"; }
  Positions place(const Graph& g, std::size_t k) override;
  Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  nlohmann::json metadata() const override;

  std::size_t cops() const noexcept { return total_cops_; }
  const std::vector<Territory>& territories() const noexcept { return territories_; }
  /// Largest capture time any team's sub-policy reports, when all report one.
  std::optional<RoundCount> certified_bound() const;

 private:
  struct Team {
    InducedSubgraph local;
    std::unique_ptr<CopPolicy> policy;
    std::size_t first = 0;  // first cop id of the team
  };
  std::vector<Territory> territories_;
  std::vector<Team> teams_;
  std::size_t total_cops_ = 0;
};

/// Boxes of the grid cover for k cops: c = ceil((d+1)/2) cops per box, m^d
/// boxes with m^d <= floor(k/c), sides ceil(q/m). Boxes that would run past
/// the grid are shifted back inside, so boxes may overlap. Cops left over
/// form an idle team on vertex 0. Throws TooFewCops when k < c.
std::vector<Territory> grid_cover_territories(const GridGraph& grid, std::size_t k);
std::unique_ptr<RetractPartitionPolicy> grid_cover_policy(const GridGraph& grid, std::size_t k,
                                                          SubPolicyFactory factory = solver_sub_policy());

inline constexpr std::size_t kMaxSubcubeDimension = 4;

/// Smallest l >= 1 with 2^l / l >= 2^n / k, capped at n.
std::size_t choose_subcube_dimension(std::size_t n, std::size_t k);
/// The 2^(n-l) subcubes fixing the high n-l bits, ceil((l+1)/2) cops each.
/// Throws TooFewCops and SubcubeTooLarge (l above `max_dimension`).
std::vector<Territory> subcube_territories(const CubeGraph& cube, std::size_t k, std::size_t l,
                                           std::size_t max_dimension = kMaxSubcubeDimension);
std::unique_ptr<RetractPartitionPolicy> subcube_partition_policy(const CubeGraph& cube, std::size_t k, std::size_t l,
                                                                 SubPolicyFactory factory = solver_sub_policy());

/// Places at a vertex farthest from the cops (smallest id on ties) and stays.
class StayFarRobber final : public RobberPolicy {
 public:
  std::string name() const override { return "stay-far"; }
  Vertex place(const Graph& g, const Positions& cops) override;
  Vertex move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
};

/// Places like StayFarRobber; each turn moves to the reachable vertex
/// farthest from the cops, smallest id on ties. Reachable means N[r], or
/// the whole cop-free component when `fast`.
class GreedyRobber final : public RobberPolicy {
 public:
  explicit GreedyRobber(bool fast = false) : fast_(fast) {}
  std::string name() const override { return fast_ ? "greedy-fast" : "greedy"; }
  Vertex place(const Graph& g, const Positions& cops) override;
  Vertex move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;

 private:
  bool fast_;
};

/// Uniform placement, then a uniform step in N[r] each round.
class RandomWalkRobber final : public RobberPolicy {
 public:
  explicit RandomWalkRobber(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override { return "random-walk"; }
  Vertex place(const Graph& g, const Positions& cops) override;
  Vertex move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  nlohmann::json metadata() const override { return {{"seed", seed_}}; }

 private:
  std::uint64_t seed_;
  Rng rng_;
};

/// Packs m^d >= k+1 disjoint boxes of side floor(q/m) into the grid, picks
/// a box with no cop whose center is farthest from the cops, and sits at
/// that center. Throws PackingImpossible when the side would be 0.
class PigeonholeGridRobber final : public RobberPolicy {
 public:
  PigeonholeGridRobber(const GridCodec& codec, std::size_t k);
  std::string name() const override { return "pigeonhole"; }
  Vertex place(const Graph& g, const Positions& cops) override;
  Vertex move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  nlohmann::json metadata() const override { return {{"boxes", boxes_.size()}, {"side", side_}}; }

  std::size_t side() const noexcept { return side_; }
  /// Rounds any cop placement needs to catch this robber: the least distance
  /// from a box center to a vertex outside its box. A lower bound on capt_k.
  Distance guaranteed_rounds() const;

 private:
  struct Box {
    std::vector<std::size_t> lo;
    std::vector<std::size_t> hi;
    Vertex center;
  };
  GridCodec codec_;
  std::size_t side_ = 0;
  std::vector<Box> boxes_;
};

}  // namespace copsrob
