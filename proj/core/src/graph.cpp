#include "copsrob/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "copsrob/error.hpp"

namespace copsrob {

namespace {

void canonicalize(std::vector<Vertex>& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : adjacency_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                      std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    canonicalize(list);
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  Graph g;
  const auto n = adjacency.size();
  for (Vertex u = 0; u < n; ++u) {
    auto& list = adjacency[u];
    canonicalize(list);
    for (Vertex v : list) {
      if (v >= n) throw Error(ErrorCode::InvalidArgument, "neighbor id out of range: " + std::to_string(v));
      if (v == u) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adjacency[u]) {
      if (!std::binary_search(adjacency[v].begin(), adjacency[v].end(), u)) {
        throw Error(ErrorCode::NonSymmetricInput,
                    std::to_string(u) + " lists " + std::to_string(v) + " but not conversely");
      }
    }
    g.edge_count_ += adjacency[u].size();
  }
  g.edge_count_ /= 2;
  g.adjacency_ = std::move(adjacency);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(adjacency_[v].size() + 1);
  const auto& list = adjacency_[v];
  auto it = std::lower_bound(list.begin(), list.end(), v);
  out.insert(out.end(), list.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, list.end());
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFFu;
      h *= 1099511628211ULL;
    }
  };
  mix(adjacency_.size());
  for (const auto& list : adjacency_) {
    mix(list.size());
    for (Vertex v : list) mix(v);
  }
  return h;
}

VertexMask mask_of(std::size_t n, std::span<const Vertex> vertices) {
  VertexMask mask(n, false);
  for (Vertex v : vertices) mask[v] = true;
  return mask;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, source, VertexMask(g.order(), true));
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const VertexMask& allowed) {
  std::vector<Distance> dist(g.order(), kUnreachable);
  if (source >= g.order() || !allowed[source]) return dist;
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (allowed[w] && dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Distance> multi_source_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> component_labels(const Graph& g, const VertexMask& allowed) {
  std::vector<std::uint32_t> label(g.order(), kUnreachable);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!allowed[s] || label[s] != kUnreachable) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (allowed[w] && label[w] == kUnreachable) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kUnreachable; });
}

std::vector<Vertex> component_of(const Graph& g, Vertex start, const VertexMask& allowed) {
  std::vector<Vertex> out;
  const auto dist = bfs_distances(g, start, allowed);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] != kUnreachable) out.push_back(v);
  }
  return out;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const VertexMask& allowed) {
  const VertexMask all = allowed.empty() ? VertexMask(g.order(), true) : allowed;
  if (!all[s] || !all[t]) return {};
  const auto dist = bfs_distances(g, t, all);
  if (dist[s] == kUnreachable) return {};
  std::vector<Vertex> path{s};
  Vertex cur = s;
  while (cur != t) {
    for (Vertex w : g.neighbors(cur)) {
      if (all[w] && dist[w] + 1 == dist[cur]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_local.assign(g.order(), kUnreachable);
  out.to_global.assign(vertices.begin(), vertices.end());
  std::sort(out.to_global.begin(), out.to_global.end());
  out.to_global.erase(std::unique(out.to_global.begin(), out.to_global.end()), out.to_global.end());
  for (Vertex i = 0; i < out.to_global.size(); ++i) out.to_local[out.to_global[i]] = i;
  std::vector<std::vector<Vertex>> adjacency(out.to_global.size());
  for (Vertex i = 0; i < out.to_global.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_global[i])) {
      if (out.to_local[w] != kUnreachable) adjacency[i].push_back(out.to_local[w]);
    }
  }
  out.graph = Graph::from_adjacency(std::move(adjacency));
  return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    const auto dist = bfs_distances(g, s);
    std::copy(dist.begin(), dist.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

Vertex DistanceMatrix::next_hop(const Graph& g, Vertex from, Vertex to) const {
  const Distance here = (*this)(from, to);
  if (from == to || here == kUnreachable) return from;
  for (Vertex w : g.neighbors(from)) {
    if ((*this)(w, to) + 1 == here) return w;
  }
  return from;
}

}  // namespace copsrob
