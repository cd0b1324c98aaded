#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "copsrob/graph.hpp"
#include "copsrob/policy.hpp"

namespace copsrob {

/// S, A, B partition V; no edge joins A and B; |A|, |B| <= 2n/3.
struct SeparatorResult {
  std::vector<Vertex> separator;
  std::vector<Vertex> a;  // the smaller side
  std::vector<Vertex> b;
};

enum class SeparatorMode {
  /// Minimum size by subset search, lexicographically first; n <= 25.
  exact,
  /// BFS levels from the smallest-id vertex of maximum eccentricity: the
  /// most balanced single level, else the most balanced pair of adjacent
  /// levels. Ties go to the smaller separator, then the lower level.
  bfs_level,
};

inline constexpr std::size_t kExactSeparatorMaxOrder = 25;

/// Components of g - S are split into the two sides by subset sum, so a
/// separator need not leave exactly two pieces. Throws DisconnectedGraph,
/// SearchSpaceTooLarge (exact mode above the cap), NoBalancedLevel.
SeparatorResult separator(const Graph& g, SeparatorMode mode);

/// Empty when `r` is a valid balanced separator of g, else the reason.
std::optional<std::string> check_separator(const Graph& g, const SeparatorResult& r);

/// A cop guarding a shortest path P of a subgraph K (the domain). The shadow
/// of x in K is the path vertex at distance min(d_K(P[0], x), |P|-1) from
/// P[0]; it is a retract of K onto P, so it moves at most one step per robber
/// step. Moving: walk to the central vertex of P, then along P toward the
/// shadow. Guarding: stand on the shadow after every cop move, which makes
/// entering P fatal for the robber.
class GuardedPath {
 public:
  /// `skip_edge` is left out of K. Throws NotIsometric when P is not a
  /// shortest path of K from P[0], InvalidArgument when P leaves the domain.
  GuardedPath(const Graph& g, std::size_t cop, std::vector<Vertex> path, const VertexMask& domain,
              std::optional<std::pair<Vertex, Vertex>> skip_edge = std::nullopt);

  std::size_t cop() const noexcept { return cop_; }
  const std::vector<Vertex>& path() const noexcept { return path_; }
  bool guarding() const noexcept { return guarding_; }
  bool on_path(Vertex v) const { return index_[v] != kUnreachable; }
  bool in_domain(Vertex v) const { return anchor_dist_[v] != kUnreachable; }

  /// Throws InvalidArgument when x is outside the domain.
  Vertex shadow(Vertex x) const;

  /// Next vertex for the cop; switches to guarding once it lands on the
  /// robber's shadow.
  Vertex next_move(const Graph& g, Vertex cop_at, Vertex robber);

 private:
  std::size_t cop_;
  std::vector<Vertex> path_;
  std::vector<Distance> index_;        // path index per vertex, kUnreachable off P
  std::vector<Distance> anchor_dist_;  // d_K(P[0], .), kUnreachable outside K
  std::vector<Distance> to_center_;    // d_G(., central vertex of P)
  bool guarding_ = false;
};

/// Teams of cops occupy balanced separators of the robber's shrinking
/// territory, one cop per separator vertex; each team walks in while all
/// placed teams hold still, then holds forever. Spare cops start on the
/// first separator. Throws TeamBudgetExceeded from move() when a separator
/// needs more cops than remain.
class SeparatorSweepPolicy final : public CopPolicy {
 public:
  explicit SeparatorSweepPolicy(bool fast_robber = false, SeparatorMode mode = SeparatorMode::bfs_level)
      : fast_robber_(fast_robber), mode_(mode) {}

  std::string name() const override { return fast_robber_ ? "separator-sweep-fast" : "separator-sweep"; }
  Positions place(const Graph& g, std::size_t k) override;
  Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  /// {"phases": [{"phase", "separator", "territory_before", "territory_after",
  ///  "rounds"}], "territory": [size after each robber move], "cops_used"}
  nlohmann::json metadata() const override;

  struct Phase {
    std::size_t separator = 0;
    std::size_t territory_before = 0;
    std::size_t territory_after = 0;  // 0 until the team is in place
    std::size_t rounds = 0;
    bool complete = false;
  };
  const std::vector<Phase>& phases() const noexcept { return phases_; }
  const std::vector<std::size_t>& territory_trace() const noexcept { return territory_trace_; }

 private:
  void begin_phase(const Graph& g, std::size_t round);
  std::vector<Vertex> robber_component(const Graph& g, Vertex robber) const;

  bool fast_robber_;
  SeparatorMode mode_;

  // per game
  std::size_t k_ = 0;
  bool started_ = false;
  VertexMask held_;                  // vertices of teams in place
  std::vector<Vertex> territory_;    // robber's component of g - held
  std::vector<std::size_t> free_;    // unassigned cop ids, ascending
  std::vector<std::size_t> walkers_; // current team
  std::vector<Vertex> targets_;
  std::vector<std::vector<Distance>> target_dist_;
  std::vector<Phase> phases_;
  std::vector<std::size_t> territory_trace_;
  std::size_t used_ = 0;
};

/// Three cops on a connected planar graph: one guards a diametral path,
/// then each phase sends a free cop to guard a new shortest path that cuts
/// the robber's territory (cases I, II, III of the classical argument),
/// releasing cops whose paths no longer touch it. Regions are taken to be
/// components of the graph minus the guarded paths. Extra cops idle. Throws
/// TooFewCops for k < 3, DisconnectedGraph, and ProgressStall when the
/// territory fails to shrink within diam + n rounds (non-planar input).
class ThreeCopPlanarPolicy final : public CopPolicy {
 public:
  std::string name() const override { return "three-cop-planar"; }
  Positions place(const Graph& g, std::size_t k) override;
  Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  /// {"diameter", "phases": [{"case", "territory_before", "territory_after",
  ///  "k", "rounds"}], "notes": [...]}
  nlohmann::json metadata() const override;

  struct Phase {
    std::string kind;  // init, I, II-b, II-c, III
    std::size_t territory_before = 0;
    std::size_t territory_after = 0;
    std::size_t rounds = 0;
    bool complete = false;
  };
  const std::vector<Phase>& phases() const noexcept { return phases_; }
  Distance diameter() const noexcept { return diameter_; }

 private:
  VertexMask walls(std::optional<std::size_t> except = std::nullopt) const;
  std::vector<Vertex> territory(const Graph& g, Vertex robber, const VertexMask& blocked) const;
  void release_redundant(const Graph& g, Vertex robber);
  void start_phase(const Graph& g, Vertex robber);
  void close_phase(std::size_t territory_after);
  std::optional<std::size_t> free_cop() const;
  void assign(const Graph& g, std::size_t cop, std::vector<Vertex> path, const VertexMask& domain,
              std::optional<std::pair<Vertex, Vertex>> skip = std::nullopt);
  void note(std::string text);

  // per game
  std::size_t n_ = 0;
  Distance diameter_ = 0;
  std::vector<Vertex> diametral_;
  bool started_ = false;
  std::vector<GuardedPath> guards_;
  std::vector<Phase> phases_;
  std::vector<std::string> notes_;
  std::size_t best_territory_ = 0;
  std::size_t last_progress_ = 0;
};

}  // namespace copsrob
