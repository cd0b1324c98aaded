#include "copsrob/strategies.hpp"

#include <algorithm>
#include <cmath>

#include "copsrob/error.hpp"
#include "copsrob/metrics.hpp"
#include "copsrob/solver_policy.hpp"

namespace copsrob {

namespace {

Positions pad_to(std::vector<Vertex> centers, std::size_t k) {
  const Vertex fill = centers.front();
  centers.resize(k, fill);
  return centers;
}

// Vertex farthest from the cops; smallest id on ties. Restricted to
// `candidates` when nonempty.
Vertex farthest_from(const Graph& g, const Positions& cops, std::span<const Vertex> candidates = {}) {
  const auto d = multi_source_distances(g, cops);
  Vertex best = candidates.empty() ? 0 : candidates.front();
  auto consider = [&](Vertex v) {
    if (d[v] > d[best] || (d[v] == d[best] && v < best)) best = v;
  };
  if (candidates.empty()) {
    for (Vertex v = 0; v < g.order(); ++v) consider(v);
  } else {
    for (Vertex v : candidates) consider(v);
  }
  return best;
}

std::size_t integer_root(std::size_t t, std::size_t d) {
  std::size_t m = 1;
  auto pow_le = [&](std::size_t base) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (acc > t / base) return false;
      acc *= base;
    }
    return acc <= t;
  };
  while (pow_le(m + 1)) ++m;
  return m;
}

Territory idle_team(std::size_t n, std::size_t cops) {
  Territory t;
  t.vertices = {0};
  t.retract = RetractMap::from_map(std::vector<Vertex>(n, 0));
  t.cops = cops;
  return t;
}

}  // namespace

Positions GreedyPursuitPolicy::place(const Graph& g, std::size_t k) {
  if (g.hash() != graph_hash_ || g.order() != graph_order_ || dist_.order() != g.order()) {
    dist_ = DistanceMatrix(g);
    graph_hash_ = g.hash();
    graph_order_ = g.order();
  }
  return pad_to(k_center(g, k, KCenterMode::greedy).centers, k);
}

Positions GreedyPursuitPolicy::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t) {
  Positions next(cops.size());
  for (std::size_t i = 0; i < cops.size(); ++i) next[i] = dist_.next_hop(g, cops[i], robber);
  return next;
}

TreePolicy::TreePolicy(const Graph& tree, std::size_t k) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "tree policy needs a tree");
  const auto kc = k_center(tree, k, KCenterMode::exact);
  centers_ = pad_to(kc.centers, k);
  radius_ = kc.radius;
  for (Vertex c : centers_) balls_.push_back(tree_ball_retract(tree, c, radius_));
  dist_ = DistanceMatrix(tree);
}

Positions TreePolicy::place(const Graph& g, std::size_t k) {
  if (k != centers_.size() || g.order() != dist_.order()) {
    throw Error(ErrorCode::InvalidArgument, "tree policy was built for another (graph, k)");
  }
  return centers_;
}

Positions TreePolicy::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t) {
  Positions next(cops.size());
  for (std::size_t i = 0; i < cops.size(); ++i) next[i] = dist_.next_hop(g, cops[i], balls_[i](robber));
  return next;
}

nlohmann::json TreePolicy::metadata() const { return {{"radius", radius_}, {"centers", centers_}}; }

SubPolicyFactory solver_sub_policy(const SolveLimits& limits) {
  return [limits](const Graph& territory, std::size_t cops) -> std::unique_ptr<CopPolicy> {
    return std::make_unique<SolverCopPolicy>(cached_solve(territory, cops, limits));
  };
}

RetractPartitionPolicy::RetractPartitionPolicy(const Graph& g, std::vector<Territory> territories,
                                               SubPolicyFactory factory)
    : territories_(std::move(territories)) {
  if (territories_.empty()) throw Error(ErrorCode::CoverageGap, "no territories");
  std::vector<bool> covered(g.order(), false);
  for (std::size_t i = 0; i < territories_.size(); ++i) {
    Territory& t = territories_[i];
    std::sort(t.vertices.begin(), t.vertices.end());
    t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
    if (auto bad = verify_retract(g, t.retract)) {
      throw Error(ErrorCode::RetractInvalid, "territory " + std::to_string(i) + ": " + bad->describe());
    }
    if (t.retract.image != t.vertices) {
      throw Error(ErrorCode::RetractInvalid, "territory " + std::to_string(i) + ": retract image differs from the territory");
    }
    for (Vertex v : t.vertices) covered[v] = true;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!covered[v]) throw Error(ErrorCode::CoverageGap, "vertex " + std::to_string(v) + " is in no territory");
  }
  for (const Territory& t : territories_) {
    Team team;
    team.local = induced_subgraph(g, t.vertices);
    team.first = total_cops_;
    if (t.cops > 0) team.policy = factory(team.local.graph, t.cops);
    total_cops_ += t.cops;
    teams_.push_back(std::move(team));
  }
}

Positions RetractPartitionPolicy::place(const Graph&, std::size_t k) {
  if (k != total_cops_) {
    throw Error(ErrorCode::InvalidArgument, "territories hold " + std::to_string(total_cops_) + " cops, not " +
                                                std::to_string(k));
  }
  Positions out(k);
  for (std::size_t i = 0; i < teams_.size(); ++i) {
    Team& team = teams_[i];
    if (!team.policy) continue;
    const Positions local = team.policy->place(team.local.graph, territories_[i].cops);
    for (std::size_t j = 0; j < local.size(); ++j) out[team.first + j] = team.local.to_global[local[j]];
  }
  return out;
}

Positions RetractPartitionPolicy::move(const Graph&, const Positions& cops, Vertex robber, std::size_t round) {
  Positions out(cops.size());
  for (std::size_t i = 0; i < teams_.size(); ++i) {
    Team& team = teams_[i];
    if (!team.policy) continue;
    const std::size_t size = territories_[i].cops;
    Positions local(size);
    for (std::size_t j = 0; j < size; ++j) local[j] = team.local.to_local[cops[team.first + j]];
    const Vertex shadow = team.local.to_local[territories_[i].retract(robber)];
    const Positions next = team.policy->move(team.local.graph, local, shadow, round);
    for (std::size_t j = 0; j < size; ++j) out[team.first + j] = team.local.to_global[next[j]];
  }
  return out;
}

std::optional<RoundCount> RetractPartitionPolicy::certified_bound() const {
  RoundCount bound = 0;
  for (const Team& team : teams_) {
    if (!team.policy) continue;
    const auto meta = team.policy->metadata();
    if (!meta.contains("capt") || !meta["capt"].is_number_unsigned()) return std::nullopt;
    bound = std::max(bound, meta["capt"].get<RoundCount>());
  }
  return bound;
}

nlohmann::json RetractPartitionPolicy::metadata() const {
  nlohmann::json teams = nlohmann::json::array();
  for (std::size_t i = 0; i < teams_.size(); ++i) {
    teams.push_back({{"vertices", territories_[i].vertices.size()}, {"cops", territories_[i].cops}});
  }
  const auto bound = certified_bound();
  return {{"teams", teams}, {"certified_bound", bound ? nlohmann::json(*bound) : nlohmann::json(nullptr)}};
}

std::vector<Territory> grid_cover_territories(const GridGraph& grid, std::size_t k) {
  const auto& dims = grid.codec.dims();
  const std::size_t d = dims.size();
  const std::size_t c = (d + 2) / 2;
  if (k < c) {
    throw Error(ErrorCode::TooFewCops, "grid cover needs at least " + std::to_string(c) + " cops, got " +
                                           std::to_string(k));
  }
  std::size_t m = integer_root(k / c, d);
  m = std::min(m, *std::min_element(dims.begin(), dims.end()));
  std::vector<std::size_t> side(d);
  for (std::size_t a = 0; a < d; ++a) side[a] = (dims[a] + m - 1) / m;

  std::vector<Territory> out;
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<std::size_t> lo(d);
    std::vector<std::size_t> hi(d);
    for (std::size_t a = 0; a < d; ++a) {
      lo[a] = std::min(idx[a] * side[a], dims[a] - side[a]);
      hi[a] = lo[a] + side[a] - 1;
    }
    Territory t;
    t.retract = box_retract(grid.codec, lo, hi);
    t.vertices = t.retract.image;
    t.cops = c;
    out.push_back(std::move(t));
    std::size_t a = d;
    while (a > 0 && idx[a - 1] + 1 == m) idx[--a] = 0;
    if (a == 0) break;
    ++idx[a - 1];
  }
  const std::size_t used = out.size() * c;
  if (k > used) out.push_back(idle_team(grid.graph.order(), k - used));
  return out;
}

std::unique_ptr<RetractPartitionPolicy> grid_cover_policy(const GridGraph& grid, std::size_t k,
                                                          SubPolicyFactory factory) {
  return std::make_unique<RetractPartitionPolicy>(grid.graph, grid_cover_territories(grid, k), std::move(factory));
}

std::size_t choose_subcube_dimension(std::size_t n, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  for (std::size_t l = 1; l < n; ++l) {
    // 2^l / l >= 2^n / k  <=>  k * 2^l >= l * 2^n
    const long double lhs = static_cast<long double>(k) * std::ldexp(1.0L, static_cast<int>(l));
    const long double rhs = static_cast<long double>(l) * std::ldexp(1.0L, static_cast<int>(n));
    if (lhs >= rhs) return l;
  }
  return std::max<std::size_t>(n, 1);
}

std::vector<Territory> subcube_territories(const CubeGraph& cube, std::size_t k, std::size_t l,
                                           std::size_t max_dimension) {
  const std::size_t n = cube.codec.dimension();
  if (l == 0 || l > n) throw Error(ErrorCode::InvalidArgument, "subcube dimension must be in [1, n]");
  if (l > max_dimension) {
    throw Error(ErrorCode::SubcubeTooLarge, "subcube dimension " + std::to_string(l) + " exceeds the solver limit " +
                                                std::to_string(max_dimension));
  }
  const std::size_t per = (l + 2) / 2;
  const std::size_t parts = std::size_t{1} << (n - l);
  if (k < parts * per) {
    throw Error(ErrorCode::TooFewCops, std::to_string(parts) + " subcubes of dimension " + std::to_string(l) +
                                           " need " + std::to_string(parts * per) + " cops, got " + std::to_string(k));
  }
  const std::uint64_t high = ((std::uint64_t{1} << n) - 1) & ~((std::uint64_t{1} << l) - 1);
  std::vector<Territory> out;
  for (std::uint64_t p = 0; p < parts; ++p) {
    Territory t;
    t.retract = subcube_retract(cube.codec, {high, p << l});
    t.vertices = t.retract.image;
    t.cops = per;
    out.push_back(std::move(t));
  }
  if (k > parts * per) out.push_back(idle_team(cube.graph.order(), k - parts * per));
  return out;
}

std::unique_ptr<RetractPartitionPolicy> subcube_partition_policy(const CubeGraph& cube, std::size_t k, std::size_t l,
                                                                 SubPolicyFactory factory) {
  return std::make_unique<RetractPartitionPolicy>(cube.graph, subcube_territories(cube, k, l), std::move(factory));
}

Vertex StayFarRobber::place(const Graph& g, const Positions& cops) { return farthest_from(g, cops); }

Vertex StayFarRobber::move(const Graph&, const Positions&, Vertex robber, std::size_t) { return robber; }

Vertex GreedyRobber::place(const Graph& g, const Positions& cops) { return farthest_from(g, cops); }

Vertex GreedyRobber::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t) {
  if (fast_) {
    VertexMask free(g.order(), true);
    for (Vertex c : cops) free[c] = false;
    if (free[robber]) {
      const auto reach = component_of(g, robber, free);
      return farthest_from(g, cops, reach);
    }
  }
  const auto options = g.closed_neighborhood(robber);
  return farthest_from(g, cops, options);
}

Vertex RandomWalkRobber::place(const Graph& g, const Positions&) {
  rng_ = Rng(seed_);
  return static_cast<Vertex>(rng_.uniform_below(g.order()));
}

Vertex RandomWalkRobber::move(const Graph& g, const Positions&, Vertex robber, std::size_t) {
  const auto options = g.closed_neighborhood(robber);
  return options[rng_.uniform_below(options.size())];
}

PigeonholeGridRobber::PigeonholeGridRobber(const GridCodec& codec, std::size_t k) : codec_(codec) {
  const auto& dims = codec.dims();
  const std::size_t d = dims.size();
  std::size_t m = 1;
  auto boxes_for = [&](std::size_t side_count) {
    long double acc = 1;
    for (std::size_t i = 0; i < d; ++i) acc *= static_cast<long double>(side_count);
    return acc;
  };
  while (boxes_for(m) < static_cast<long double>(k) + 1) ++m;
  std::vector<std::size_t> side(d);
  for (std::size_t a = 0; a < d; ++a) side[a] = dims[a] / m;
  side_ = *std::min_element(side.begin(), side.end());
  if (side_ == 0) {
    throw Error(ErrorCode::PackingImpossible, std::to_string(k + 1) + " disjoint boxes do not fit in the grid");
  }
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    Box box;
    std::vector<std::size_t> center(d);
    for (std::size_t a = 0; a < d; ++a) {
      box.lo.push_back(idx[a] * side[a]);
      box.hi.push_back(box.lo[a] + side[a] - 1);
      center[a] = box.lo[a] + (side[a] - 1) / 2;
    }
    box.center = codec_.encode(center);
    boxes_.push_back(std::move(box));
    std::size_t a = d;
    while (a > 0 && idx[a - 1] + 1 == m) idx[--a] = 0;
    if (a == 0) break;
    ++idx[a - 1];
  }
}

Vertex PigeonholeGridRobber::place(const Graph& g, const Positions& cops) {
  std::vector<Vertex> free_centers;
  for (const Box& box : boxes_) {
    const bool occupied = std::any_of(cops.begin(), cops.end(), [&](Vertex c) {
      const auto x = codec_.decode(c);
      for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a] < box.lo[a] || x[a] > box.hi[a]) return false;
      }
      return true;
    });
    if (!occupied) free_centers.push_back(box.center);
  }
  if (free_centers.empty()) throw Error(ErrorCode::PackingImpossible, "every packed box holds a cop");
  return farthest_from(g, cops, free_centers);
}

Vertex PigeonholeGridRobber::move(const Graph&, const Positions&, Vertex robber, std::size_t) { return robber; }

Distance PigeonholeGridRobber::guaranteed_rounds() const {
  const auto& dims = codec_.dims();
  Distance best = kUnreachable;
  for (const Box& box : boxes_) {
    const auto c = codec_.decode(box.center);
    for (std::size_t a = 0; a < dims.size(); ++a) {
      if (box.lo[a] > 0) best = std::min(best, static_cast<Distance>(c[a] - box.lo[a] + 1));
      if (box.hi[a] + 1 < dims[a]) best = std::min(best, static_cast<Distance>(box.hi[a] - c[a] + 1));
    }
  }
  return best;
}

}  // namespace copsrob
