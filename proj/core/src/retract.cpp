#include "copsrob/retract.hpp"

#include <algorithm>

#include "copsrob/error.hpp"

namespace copsrob {

RetractMap RetractMap::identity(std::size_t n) {
  RetractMap r;
  r.map.resize(n);
  for (Vertex v = 0; v < n; ++v) r.map[v] = v;
  r.image = r.map;
  return r;
}

RetractMap RetractMap::from_map(std::vector<Vertex> map) {
  RetractMap r;
  r.image = map;
  std::sort(r.image.begin(), r.image.end());
  r.image.erase(std::unique(r.image.begin(), r.image.end()), r.image.end());
  r.map = std::move(map);
  return r;
}

std::string RetractViolation::describe() const {
  switch (kind) {
    case Kind::wrong_size: return "map size differs from vertex count";
    case Kind::out_of_range: return "map(" + std::to_string(u) + ") out of range";
    case Kind::outside_image: return "map(" + std::to_string(u) + ") not in image";
    case Kind::not_fixed: return "image vertex " + std::to_string(u) + " not fixed";
    case Kind::edge_broken:
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " maps to a non-edge";
  }
  return "unknown";
}

std::optional<RetractViolation> verify_retract(const Graph& g, const RetractMap& r) {
  using Kind = RetractViolation::Kind;
  if (r.map.size() != g.order()) return RetractViolation{Kind::wrong_size};
  for (Vertex v : r.image) {
    if (v >= g.order()) return RetractViolation{Kind::out_of_range, v};
  }
  const VertexMask in_image = mask_of(g.order(), r.image);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (r.map[v] >= g.order()) return RetractViolation{Kind::out_of_range, v};
    if (!in_image[r.map[v]]) return RetractViolation{Kind::outside_image, v};
  }
  for (Vertex v : r.image) {
    if (r.map[v] != v) return RetractViolation{Kind::not_fixed, v};
  }
  for (auto [u, v] : g.edges()) {
    if (!g.can_step(r.map[u], r.map[v])) return RetractViolation{Kind::edge_broken, u, v};
  }
  return std::nullopt;
}

bool is_isometric_path(const Graph& g, const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.adjacent(path[i], path[i + 1])) return false;
  }
  const auto dist = bfs_distances(g, path.front());
  return dist[path.back()] == path.size() - 1;
}

RetractMap path_retract(const Graph& g, std::vector<Vertex> path, Vertex anchor) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  if (path.back() == anchor && path.front() != anchor) std::reverse(path.begin(), path.end());
  if (path.front() != anchor) {
    throw Error(ErrorCode::InvalidArgument, "anchor " + std::to_string(anchor) + " is not a path endpoint");
  }
  if (!is_isometric_path(g, path)) throw Error(ErrorCode::NotIsometric, "path is not a shortest path");
  const auto dist = bfs_distances(g, anchor);
  const Distance length = static_cast<Distance>(path.size() - 1);
  std::vector<Vertex> map(g.order());
  for (Vertex u = 0; u < g.order(); ++u) map[u] = path[std::min(dist[u], length)];
  return RetractMap::from_map(std::move(map));
}

RetractMap tree_ball_retract(const Graph& tree, Vertex center, Distance radius) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "ball retract requires a tree");
  const auto dist = bfs_distances(tree, center);
  std::vector<Vertex> parent(tree.order(), center);
  for (Vertex v = 0; v < tree.order(); ++v) {
    for (Vertex w : tree.neighbors(v)) {
      if (dist[w] + 1 == dist[v]) parent[v] = w;
    }
  }
  std::vector<Vertex> map(tree.order());
  for (Vertex v = 0; v < tree.order(); ++v) {
    Vertex x = v;
    while (dist[x] > radius) x = parent[x];
    map[v] = x;
  }
  return RetractMap::from_map(std::move(map));
}

}  // namespace copsrob
