#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

/// Rounds of cop moves until capture; kNoCapture when the robber escapes forever.
using RoundCount = std::uint32_t;
inline constexpr RoundCount kNoCapture = std::numeric_limits<RoundCount>::max();

/// All multisets of k vertex ids out of n, in lexicographic order of their
/// sorted form. Index order is lexicographic order.
class ConfigSpace {
 public:
  ConfigSpace() = default;
  ConfigSpace(std::size_t n, std::size_t k);

  /// C(n+k-1, k), saturating at UINT64_MAX.
  static std::uint64_t count(std::size_t n, std::size_t k) noexcept;

  std::size_t vertices() const noexcept { return n_; }
  std::size_t cops() const noexcept { return k_; }
  std::size_t size() const noexcept { return size_; }

  /// Index of a nondecreasing sequence of k vertex ids.
  std::size_t rank(std::span<const Vertex> sorted) const;
  std::span<const Vertex> config(std::size_t index) const {
    return {configs_.data() + index * k_, k_};
  }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::size_t size_ = 0;
  std::vector<Vertex> configs_;
  // prefix_[s * (n+1) + x] = number of multisets of size s over [v, n), summed over v < x.
  std::vector<std::uint64_t> prefix_;
};

struct SolveLimits {
  /// Bound on 2 * C(n+k-1, k) * n game states.
  std::uint64_t max_states = 20'000'000;
  /// Bound on joint cop moves enumerated while building the move graph.
  std::uint64_t max_moves = 20'000'000;
};

/// Exact game values for k cops on g, indexed by (cop configuration, robber
/// vertex) for each side to move. Immutable once built.
class ValueTable {
 public:
  const Graph& graph() const noexcept { return graph_; }
  std::size_t cops() const noexcept { return space_.cops(); }
  const ConfigSpace& space() const noexcept { return space_; }

  /// Value with the cops to move; 0 iff the robber shares a vertex with a cop.
  RoundCount cop_turn(std::size_t config, Vertex robber) const { return cop_values_[config * n_ + robber]; }
  /// Value with the robber to move.
  RoundCount robber_turn(std::size_t config, Vertex robber) const { return robber_values_[config * n_ + robber]; }

  /// Value just after the cops moved to `sorted`: 0 when they landed on the
  /// robber, else the robber-turn value.
  RoundCount after_cop_move(std::span<const Vertex> sorted, Vertex robber) const;
  /// Value just after the robber moved: 0 when it stepped onto a cop.
  RoundCount after_robber_move(std::span<const Vertex> sorted, Vertex robber) const;

  std::uint64_t state_count() const noexcept { return 2 * static_cast<std::uint64_t>(space_.size()) * n_; }
  std::uint64_t joint_moves() const noexcept { return joint_moves_; }

 private:
  friend ValueTable solve(const Graph& g, std::size_t k, const SolveLimits& limits);
  friend ValueTable load_value_table(const std::filesystem::path& path, const Graph& g);

  Graph graph_;
  std::size_t n_ = 0;
  ConfigSpace space_;
  std::vector<RoundCount> cop_values_;
  std::vector<RoundCount> robber_values_;
  std::uint64_t joint_moves_ = 0;
};

/// Least fixed point of the capture-time recurrence by retrograde analysis.
/// Each cop steps independently within its closed neighborhood; capture is
/// checked after both the cop move and the robber move.
/// Throws InvalidArgument (k == 0 or empty graph) and StateBudgetExceeded.
ValueTable solve(const Graph& g, std::size_t k, const SolveLimits& limits = {});

/// Joint-move count the solver would enumerate (one multiset of destinations
/// per group of cops sharing a vertex), computed without building anything.
/// Saturates at UINT64_MAX.
std::uint64_t estimate_joint_moves(const Graph& g, std::size_t k);

struct CaptureResult {
  RoundCount value = kNoCapture;
  std::vector<Vertex> placement;  // an optimal cop placement, sorted
  std::uint64_t states = 0;       // states in the solved table (0 if none was needed)
};

/// min over placements of max over robber starts of the cop-turn value, with
/// the lexicographically smallest optimal placement.
CaptureResult capture_time(const ValueTable& table);
/// Solves and evaluates. For k >= n, placing a cop on every vertex gives
/// value 0, the least possible, so no table is built.
CaptureResult capture_time(const Graph& g, std::size_t k, const SolveLimits& limits = {});

/// Smallest k with finite capture time. Throws StateBudgetExceeded when the
/// solver runs out of room first.
std::size_t cop_number(const Graph& g, const SolveLimits& limits = {});

/// Re-evaluates the recurrence at every state by brute-force joint move
/// enumeration. Returns a description of the first inconsistent state.
std::optional<std::string> audit_fixed_point(const ValueTable& table);

/// Binary cache: "CRVT", u32 version, u32 n, u32 k, u64 graph hash,
/// u64 entries per side, then cop-turn values and robber-turn values as
/// little-endian u32 in state-index order (config * n + robber).
void save_value_table(const ValueTable& table, const std::filesystem::path& path);
/// Throws ParseError on a malformed file or when it belongs to another graph.
ValueTable load_value_table(const std::filesystem::path& path, const Graph& g);

/// Calls `visit(destinations)` for every joint move from `cops` (per-cop
/// order, each cop within its closed neighborhood), in lexicographic order
/// of the per-cop destination tuple.
template <typename Visit>
void for_each_joint_move(const Graph& g, std::span<const Vertex> cops, Visit&& visit) {
  std::vector<std::vector<Vertex>> options;
  options.reserve(cops.size());
  for (Vertex c : cops) options.push_back(g.closed_neighborhood(c));
  std::vector<std::size_t> pick(cops.size(), 0);
  std::vector<Vertex> dest(cops.size());
  for (;;) {
    for (std::size_t i = 0; i < cops.size(); ++i) dest[i] = options[i][pick[i]];
    visit(std::span<const Vertex>(dest));
    std::size_t i = cops.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (cops.empty()) return;
  }
}

}  // namespace copsrob
