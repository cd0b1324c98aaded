#include "copsrob/sphere_trap.hpp"

#include <algorithm>
#include <numeric>

#include "copsrob/error.hpp"
#include "copsrob/matching.hpp"

namespace copsrob {

namespace {

std::string list(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

}  // namespace

LayerDecomposition layers(const Graph& g, Vertex v, std::size_t r_max) {
  if (v >= g.order()) throw Error(ErrorCode::InvalidArgument, "center out of range");
  LayerDecomposition ld;
  ld.center = v;
  ld.distance = bfs_distances(g, v);
  ld.layers.assign(r_max + 1, {});
  for (Vertex u = 0; u < g.order(); ++u) {
    if (ld.distance[u] != kUnreachable && ld.distance[u] <= r_max) {
      ld.layers[ld.distance[u]].push_back(u);
    } else {
      ld.distance[u] = kUnreachable;
    }
  }
  return ld;
}

TrapAssignment trap_matching(const Graph& g, const Positions& cops, Vertex v, std::size_t d, TrapMode mode,
                             std::size_t reach) {
  if (reach == 0) throw Error(ErrorCode::InvalidArgument, "reach must be at least 1");
  TrapAssignment out;
  const auto from_center = bfs_distances(g, v);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (from_center[u] == d) out.targets.push_back(u);
  }
  std::vector<std::vector<std::uint32_t>> adj(out.targets.size());
  for (std::size_t t = 0; t < out.targets.size(); ++t) {
    const auto du = bfs_distances(g, out.targets[t]);
    for (std::uint32_t j = 0; j < cops.size(); ++j) {
      const Vertex p = cops[j];
      const bool eligible = mode == TrapMode::hypercube
                                ? from_center[p] == 2 * d + 1 && du[p] == d + 1
                                : du[p] != kUnreachable && du[p] <= reach;
      if (eligible) adj[t].push_back(j);
    }
    // Nearest cops are tried first.
    std::stable_sort(adj[t].begin(), adj[t].end(),
                     [&](std::uint32_t a, std::uint32_t b) { return du[cops[a]] < du[cops[b]]; });
  }
  const auto m = hopcroft_karp(cops.size(), adj);
  out.cop_for_target.assign(out.targets.size(), TrapAssignment::npos);
  out.routes.assign(out.targets.size(), {});
  for (std::size_t t = 0; t < out.targets.size(); ++t) {
    if (m.left_to_right[t] == kUnmatched) continue;
    const std::size_t j = m.left_to_right[t];
    out.cop_for_target[t] = j;
    out.routes[t] = shortest_path(g, cops[j], out.targets[t]);
  }
  out.saturated = m.size == out.targets.size();
  for (std::uint32_t t : hall_violator(adj, m)) out.hall_witness.push_back(out.targets[t]);
  return out;
}

Positions tighten_step(const Graph& g, const LayerDecomposition& ld, std::size_t i, const Positions& occupiers) {
  if (i == 0 || i >= ld.layers.size()) throw Error(ErrorCode::InvalidArgument, "layer index out of range");
  const auto& outer = ld.layers[i];
  const auto& inner = ld.layers[i - 1];
  for (Vertex u : outer) {
    if (std::find(occupiers.begin(), occupiers.end(), u) == occupiers.end()) {
      throw Error(ErrorCode::InvalidArgument, "layer " + std::to_string(i) + " vertex " + std::to_string(u) +
                                                  " is not occupied");
    }
  }
  std::vector<std::vector<std::uint32_t>> adj(inner.size());
  for (std::size_t w = 0; w < inner.size(); ++w) {
    for (std::uint32_t j = 0; j < occupiers.size(); ++j) {
      const Vertex p = occupiers[j];
      if (ld.distance[p] == i && g.adjacent(p, inner[w])) adj[w].push_back(j);
    }
  }
  const auto m = hopcroft_karp(occupiers.size(), adj);
  if (m.size < inner.size()) {
    std::vector<Vertex> witness;
    for (std::uint32_t w : hall_violator(adj, m)) witness.push_back(inner[w]);
    throw Error(ErrorCode::LayerHallFailure, "layer " + std::to_string(i - 1) + " set " + list(witness) +
                                                 " has fewer occupied neighbors on layer " + std::to_string(i));
  }
  Positions next = occupiers;
  for (std::uint32_t j = 0; j < occupiers.size(); ++j) {
    if (m.right_to_left[j] != kUnmatched) {
      next[j] = inner[m.right_to_left[j]];
    } else if (ld.distance[occupiers[j]] == i) {
      for (Vertex u : g.neighbors(occupiers[j])) {
        if (ld.distance[u] == i - 1) {
          next[j] = u;
          break;
        }
      }
    }
  }
  return next;
}

SphereTrapPolicy::SphereTrapPolicy(std::size_t d, TrapMode mode, std::uint64_t seed)
    : d_(d), mode_(mode), seed_(seed), rng_(seed) {}

Positions SphereTrapPolicy::place(const Graph& g, std::size_t k) {
  rng_ = Rng(seed_);
  started_ = false;
  saturated_ = false;
  fell_back_ = false;
  failure_.clear();
  trap_ = {};
  trap_cops_.clear();
  const std::size_t n = g.order();
  Positions out;
  if (k <= n) {
    // Partial Fisher-Yates: k distinct vertices.
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng_.uniform_below(n - i));
      std::swap(ids[i], ids[j]);
    }
    out.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    for (std::size_t i = 0; i < k; ++i) out.push_back(static_cast<Vertex>(rng_.uniform_below(n)));
  }
  return out;
}

Positions SphereTrapPolicy::pursue(const Graph& g, const Positions& cops, Vertex robber) {
  const auto d = bfs_distances(g, robber);
  Positions next = cops;
  for (Vertex& c : next) {
    if (d[c] == 0 || d[c] == kUnreachable) continue;
    for (Vertex u : g.neighbors(c)) {
      if (d[u] + 1 == d[c]) {
        c = u;
        break;
      }
    }
  }
  return next;
}

Positions SphereTrapPolicy::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) {
  if (!started_) {
    started_ = true;
    ld_ = layers(g, robber, d_);
    trap_ = trap_matching(g, cops, robber, d_, mode_, d_ + 1);
    saturated_ = trap_.saturated && !trap_.targets.empty();
    if (!saturated_) {
      fell_back_ = true;
      failure_ = trap_.targets.empty() ? "empty sphere" : "matching unsaturated";
    }
    for (std::size_t j : trap_.cop_for_target) trap_cops_.push_back(j);
  }
  if (fell_back_) return pursue(g, cops, robber);

  const std::size_t d = d_;
  if (round <= d + 1) {
    Positions next = cops;
    for (std::size_t t = 0; t < trap_.targets.size(); ++t) {
      const auto& route = trap_.routes[t];
      next[trap_.cop_for_target[t]] = route[std::min(round, route.size() - 1)];
    }
    return next;
  }
  if (round <= 2 * d + 1) {
    const std::size_t layer = 2 * d + 2 - round;
    Positions occupiers;
    for (std::size_t j : trap_cops_) occupiers.push_back(cops[j]);
    try {
      const Positions moved = tighten_step(g, ld_, layer, occupiers);
      Positions next = cops;
      for (std::size_t t = 0; t < trap_cops_.size(); ++t) next[trap_cops_[t]] = moved[t];
      return next;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LayerHallFailure) throw;
      fell_back_ = true;
      failure_ = e.what();
      return pursue(g, cops, robber);
    }
  }
  fell_back_ = true;
  failure_ = "robber outlasted the trap";
  return pursue(g, cops, robber);
}

std::optional<RoundCount> SphereTrapPolicy::certified_bound() const {
  if (!saturated_ || fell_back_) return std::nullopt;
  return static_cast<RoundCount>(2 * d_ + 1);
}

nlohmann::json SphereTrapPolicy::metadata() const {
  const auto bound = certified_bound();
  nlohmann::json out = {{"mode", mode_ == TrapMode::hypercube ? "hypercube" : "general"},
                        {"d", d_},
                        {"seed", seed_},
                        {"matching_saturated", saturated_},
                        {"certified_bound", bound ? nlohmann::json(*bound) : nlohmann::json(nullptr)},
                        {"fallback", fell_back_}};
  if (!failure_.empty()) out["failure"] = failure_;
  if (!trap_.hall_witness.empty()) out["hall_witness"] = trap_.hall_witness;
  return out;
}

}  // namespace copsrob
