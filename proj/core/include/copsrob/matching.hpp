#pragma once

#include <cstdint>
#include <vector>

namespace copsrob {

inline constexpr std::uint32_t kUnmatched = UINT32_MAX;

struct BipartiteMatching {
  std::vector<std::uint32_t> left_to_right;  // kUnmatched when free
  std::vector<std::uint32_t> right_to_left;
  std::size_t size = 0;
};

/// Maximum matching by Hopcroft-Karp. `adjacency[l]` lists right vertices
/// adjacent to left vertex l; they are tried in the given order.
BipartiteMatching hopcroft_karp(std::size_t right_count, const std::vector<std::vector<std::uint32_t>>& adjacency);

/// For a matching that leaves some left vertex free, a left set S with
/// |N(S)| < |S|: everything reachable from the free left vertices along
/// alternating paths. Empty when the matching saturates the left side.
std::vector<std::uint32_t> hall_violator(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                         const BipartiteMatching& matching);

}  // namespace copsrob
