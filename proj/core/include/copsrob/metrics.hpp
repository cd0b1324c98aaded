#pragma once

#include <cstdint>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

struct Metrics {
  Distance radius = 0;
  Distance diameter = 0;
  std::vector<Distance> eccentricity;
};

/// Throws DisconnectedGraph when g is not connected.
Metrics metrics(const Graph& g);

enum class KCenterMode { exact, greedy };

struct KCenterResult {
  std::vector<Vertex> centers;  // ascending
  Distance radius = 0;
};

/// Default bound on the number of k-subsets the exact search may enumerate.
inline constexpr std::uint64_t kDefaultSubsetCap = 5'000'000;

/// Metric k-center. Exact mode enumerates k-subsets in lexicographic order
/// with pruning and returns the lexicographically smallest optimal set.
/// Greedy mode is farthest-point seeding from a central vertex and is within
/// a factor 2 of optimal. k larger than n is clamped to n.
/// Throws DisconnectedGraph, InvalidArgument (k == 0), SearchSpaceTooLarge.
KCenterResult k_center(const Graph& g, std::size_t k, KCenterMode mode,
                       std::uint64_t subset_cap = kDefaultSubsetCap);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

struct DominationResult {
  std::size_t size = 0;
  std::vector<Vertex> set;  // one minimum dominating set, ascending
};

inline constexpr std::size_t kDominationVertexCap = 64;

/// Exact minimum dominating set by branch and bound over closed
/// neighborhoods. Throws SearchSpaceTooLarge above `vertex_cap` (at most 64).
DominationResult minimum_dominating_set(const Graph& g, std::size_t vertex_cap = kDominationVertexCap);
std::size_t domination_number(const Graph& g, std::size_t vertex_cap = kDominationVertexCap);

}  // namespace copsrob
