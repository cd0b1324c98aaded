#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace copsrob {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

/// Distance to a vertex in another component.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Undirected simple graph. Loops are never stored: every player may pass,
/// so movement always ranges over the closed neighborhood N[v].
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges are merged; self-loops and
  /// out-of-range ids throw InvalidArgument.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Builds from per-vertex neighbor lists. Throws NonSymmetricInput when
  /// u lists v but v does not list u.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Closed neighborhood {v} ∪ adj(v), ascending.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;
  /// u == v or u adjacent to v: a legal single step.
  bool can_step(Vertex from, Vertex to) const { return from == to || adjacent(from, to); }

  /// Edges (u, v) with u < v, in ascending order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// FNV-1a over the canonical adjacency; stable across platforms.
  std::uint64_t hash() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Vertex subset as a dense membership mask.
using VertexMask = std::vector<bool>;

VertexMask mask_of(std::size_t n, std::span<const Vertex> vertices);

/// BFS distances from `source`; unreachable vertices get kUnreachable.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
/// BFS restricted to vertices with `allowed[v]` set. The source must be allowed.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const VertexMask& allowed);
/// Distance to the nearest of several sources (cops, centers).
std::vector<Distance> multi_source_distances(const Graph& g, std::span<const Vertex> sources);

/// Component label per vertex (labels in order of smallest member).
/// Vertices outside `allowed` get label kUnreachable.
std::vector<std::uint32_t> component_labels(const Graph& g, const VertexMask& allowed);
bool is_connected(const Graph& g);

/// Vertices of the component of `start` in the subgraph induced by `allowed`,
/// ascending. Empty when `start` is not allowed.
std::vector<Vertex> component_of(const Graph& g, Vertex start, const VertexMask& allowed);

bool is_tree(const Graph& g);

/// Shortest path from s to t inside `allowed` (all vertices if empty mask).
/// At each step takes the smallest-id neighbor that lies on a shortest path,
/// so the result is the lexicographically smallest shortest path.
/// Returns an empty vector when t is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const VertexMask& allowed = {});

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_global;           // local id -> global id
  std::vector<Vertex> to_local;            // global id -> local id or kUnreachable
};

/// Subgraph induced by `vertices` (any order, duplicates ignored); local ids
/// follow ascending global id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// All-pairs BFS distances, n*n entries.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const Distance> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

  /// Smallest-id vertex of N[from] closest to `to`; `from` itself when
  /// from == to or `to` is unreachable.
  Vertex next_hop(const Graph& g, Vertex from, Vertex to) const;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

}  // namespace copsrob
