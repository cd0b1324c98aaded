#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

/// A map G -> H onto an induced subgraph H that fixes H pointwise and sends
/// closed neighborhoods into closed neighborhoods (reflexive homomorphism).
struct RetractMap {
  std::vector<Vertex> image;  // ascending
  std::vector<Vertex> map;    // total: vertex -> vertex

  Vertex operator()(Vertex v) const { return map[v]; }

  static RetractMap identity(std::size_t n);
  /// Builds the map and derives `image` as the set of map values.
  static RetractMap from_map(std::vector<Vertex> map);
};

struct RetractViolation {
  enum class Kind { wrong_size, out_of_range, outside_image, not_fixed, edge_broken };
  Kind kind;
  Vertex u = 0;
  Vertex v = 0;  // second endpoint for edge_broken
  std::string describe() const;
};

/// Empty optional when `r` is a valid retract of g; otherwise the first
/// violation in vertex/edge order.
std::optional<RetractViolation> verify_retract(const Graph& g, const RetractMap& r);

/// Retract onto an isometric path: u goes to the path vertex at distance
/// min(dist(u, anchor), length) from the anchor. Vertices in other components
/// go to the far end. `anchor` must be an endpoint; `path` is reversed if it
/// ends at the anchor. Throws NotIsometric, InvalidArgument.
RetractMap path_retract(const Graph& g, std::vector<Vertex> path, Vertex anchor);

/// True when consecutive path vertices are adjacent and the endpoint
/// distance in g equals the path length.
bool is_isometric_path(const Graph& g, const std::vector<Vertex>& path);

/// Retract of a tree onto the ball B(center, radius): each vertex moves along
/// the unique path toward the center until it is inside the ball.
/// Throws NotATree.
RetractMap tree_ball_retract(const Graph& tree, Vertex center, Distance radius);

}  // namespace copsrob
