#include "copsrob/planar.hpp"

#include <algorithm>
#include <deque>

#include "copsrob/error.hpp"

namespace copsrob {

namespace {

using Edge = std::pair<Vertex, Vertex>;

bool is_skipped(const std::optional<Edge>& skip, Vertex u, Vertex v) {
  return skip && ((skip->first == u && skip->second == v) || (skip->first == v && skip->second == u));
}

std::vector<Distance> distances_in(const Graph& g, Vertex source, const VertexMask& allowed,
                                   const std::optional<Edge>& skip) {
  std::vector<Distance> dist(g.order(), kUnreachable);
  if (!allowed[source]) return dist;
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (!allowed[v] || dist[v] != kUnreachable || is_skipped(skip, u, v)) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

// Lexicographically smallest shortest s-t path inside `allowed`, avoiding `skip`.
std::vector<Vertex> path_in(const Graph& g, Vertex s, Vertex t, const VertexMask& allowed,
                            const std::optional<Edge>& skip) {
  const auto dist = distances_in(g, t, allowed, skip);
  if (dist[s] == kUnreachable) return {};
  std::vector<Vertex> path{s};
  while (path.back() != t) {
    const Vertex u = path.back();
    for (Vertex v : g.neighbors(u)) {
      if (allowed[v] && dist[v] + 1 == dist[u] && !is_skipped(skip, u, v)) {
        path.push_back(v);
        break;
      }
    }
  }
  return path;
}

VertexMask full_mask(std::size_t n) { return VertexMask(n, true); }

struct Split {
  std::vector<Vertex> a, b;
  std::size_t larger = 0;
};

// Distributes the components of g - removed over two sides, the smaller as
// large as possible. Empty when the larger side exceeds 2n/3.
std::optional<Split> split_sides(const Graph& g, const VertexMask& removed) {
  const std::size_t n = g.order();
  VertexMask allowed(n);
  for (std::size_t v = 0; v < n; ++v) allowed[v] = !removed[v];
  const auto labels = component_labels(g, allowed);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex v = 0; v < n; ++v) {
    if (labels[v] == kUnreachable) continue;
    if (labels[v] >= comps.size()) comps.resize(labels[v] + 1);
    comps[labels[v]].push_back(v);
  }
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();

  // 0/1 subset sum with the first component reaching each sum as parent.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(total + 1, none);
  std::vector<bool> reached(total + 1, false);
  reached[0] = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::size_t w = comps[i].size();
    for (std::size_t s = total; s >= w && s > 0; --s) {
      if (!reached[s] && reached[s - w]) {
        reached[s] = true;
        parent[s] = i;
      }
    }
  }
  std::size_t best = total / 2;
  while (!reached[best]) --best;
  const std::size_t larger = total - best;
  if (3 * larger > 2 * n) return std::nullopt;

  Split out;
  out.larger = larger;
  std::vector<bool> in_a(comps.size(), false);
  for (std::size_t s = best; s > 0; s -= comps[parent[s]].size()) in_a[parent[s]] = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& side = in_a[i] ? out.a : out.b;
    side.insert(side.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

SeparatorResult make_result(std::vector<Vertex> s, Split split) {
  std::sort(s.begin(), s.end());
  return {std::move(s), std::move(split.a), std::move(split.b)};
}

SeparatorResult exact_separator(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kExactSeparatorMaxOrder) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "exact separator search is capped at n=" + std::to_string(kExactSeparatorMaxOrder));
  }
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      VertexMask removed(n, false);
      for (auto i : idx) removed[i] = true;
      if (auto split = split_sides(g, removed)) {
        return make_result(std::vector<Vertex>(idx.begin(), idx.end()), std::move(*split));
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::NoBalancedLevel, "no balanced separator");  // unreachable: S = V works
}

SeparatorResult level_separator(const Graph& g) {
  const std::size_t n = g.order();
  Vertex root = 0;
  Distance ecc_max = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto d = bfs_distances(g, v);
    const Distance e = *std::max_element(d.begin(), d.end());
    if (e > ecc_max || v == 0) {
      ecc_max = e;
      root = v;
    }
  }
  const auto dist = bfs_distances(g, root);
  std::vector<std::vector<Vertex>> levels(ecc_max + 1);
  for (Vertex v = 0; v < n; ++v) levels[dist[v]].push_back(v);

  for (std::size_t width = 1; width <= 2; ++width) {
    std::optional<SeparatorResult> best;
    std::size_t best_larger = 0;
    for (std::size_t i = 0; i + width <= levels.size(); ++i) {
      std::vector<Vertex> s;
      for (std::size_t j = i; j < i + width; ++j) s.insert(s.end(), levels[j].begin(), levels[j].end());
      const VertexMask removed = mask_of(n, s);
      auto split = split_sides(g, removed);
      if (!split) continue;
      const bool better = !best || split->larger < best_larger ||
                          (split->larger == best_larger && s.size() < best->separator.size());
      if (better) {
        best_larger = split->larger;
        best = make_result(std::move(s), std::move(*split));
      }
    }
    if (best) return std::move(*best);
  }
  throw Error(ErrorCode::NoBalancedLevel, "no single or double BFS level is balanced");
}

}  // namespace

SeparatorResult separator(const Graph& g, SeparatorMode mode) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "separator needs a connected graph");
  return mode == SeparatorMode::exact ? exact_separator(g) : level_separator(g);
}

std::optional<std::string> check_separator(const Graph& g, const SeparatorResult& r) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  const std::vector<Vertex>* parts[] = {&r.separator, &r.a, &r.b};
  for (int p = 0; p < 3; ++p) {
    for (Vertex v : *parts[p]) {
      if (v >= n) return "vertex " + std::to_string(v) + " out of range";
      if (side[v] != -1) return "vertex " + std::to_string(v) + " appears twice";
      side[v] = p;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == -1) return "vertex " + std::to_string(v) + " missing";
  }
  for (const auto& [u, v] : g.edges()) {
    if (side[u] + side[v] == 3) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " joins A and B";
  }
  if (3 * r.a.size() > 2 * n || 3 * r.b.size() > 2 * n) return std::string("side larger than 2n/3");
  return std::nullopt;
}

GuardedPath::GuardedPath(const Graph& g, std::size_t cop, std::vector<Vertex> path, const VertexMask& domain,
                         std::optional<std::pair<Vertex, Vertex>> skip_edge)
    : cop_(cop), path_(std::move(path)) {
  const std::size_t n = g.order();
  if (path_.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  if (domain.size() != n) throw Error(ErrorCode::InvalidArgument, "domain mask has the wrong size");
  index_.assign(n, kUnreachable);
  for (std::size_t i = 0; i < path_.size(); ++i) {
    const Vertex v = path_[i];
    if (v >= n || !domain[v]) throw Error(ErrorCode::InvalidArgument, "path leaves the domain");
    if (index_[v] != kUnreachable) throw Error(ErrorCode::InvalidArgument, "path repeats a vertex");
    index_[v] = static_cast<Distance>(i);
  }
  anchor_dist_ = distances_in(g, path_[0], domain, skip_edge);
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (anchor_dist_[path_[i]] != i) {
      throw Error(ErrorCode::NotIsometric, "path vertex " + std::to_string(path_[i]) + " is not at distance " +
                                               std::to_string(i) + " from the anchor");
    }
  }
  to_center_ = bfs_distances(g, path_[path_.size() / 2]);
}

Vertex GuardedPath::shadow(Vertex x) const {
  const Distance d = anchor_dist_[x];
  if (d == kUnreachable) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(x) + " is outside the guarded domain");
  }
  return path_[std::min<std::size_t>(d, path_.size() - 1)];
}

Vertex GuardedPath::next_move(const Graph& g, Vertex cop_at, Vertex robber) {
  const Vertex target = shadow(robber);
  if (guarding_) return target;
  Vertex next = cop_at;
  if (cop_at == target) {
    next = cop_at;
  } else if (index_[cop_at] != kUnreachable) {
    const Distance j = index_[cop_at];
    next = path_[index_[target] > j ? j + 1 : j - 1];
  } else {
    for (Vertex u : g.neighbors(cop_at)) {
      if (to_center_[u] + 1 == to_center_[cop_at]) {
        next = u;
        break;
      }
    }
  }
  if (next == target) guarding_ = true;
  return next;
}

// Separator sweep.

std::vector<Vertex> SeparatorSweepPolicy::robber_component(const Graph& g, Vertex robber) const {
  VertexMask allowed(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) allowed[v] = !held_[v];
  return component_of(g, robber, allowed);
}

Positions SeparatorSweepPolicy::place(const Graph& g, std::size_t k) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "sweep needs a connected graph");
  k_ = k;
  started_ = false;
  phases_.clear();
  territory_trace_.clear();
  walkers_.clear();
  targets_.clear();
  target_dist_.clear();
  free_.clear();

  const auto first = separator(g, mode_).separator;
  if (first.size() > k) {
    throw Error(ErrorCode::TeamBudgetExceeded,
                "first separator needs " + std::to_string(first.size()) + " cops, k=" + std::to_string(k));
  }
  held_ = mask_of(g.order(), first);
  used_ = first.size();
  Positions out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = first[i % first.size()];
  for (std::size_t i = first.size(); i < k; ++i) free_.push_back(i);
  phases_.push_back({first.size(), g.order(), 0, 0, false});
  return out;
}

void SeparatorSweepPolicy::begin_phase(const Graph& g, std::size_t /*round*/) {
  walkers_.clear();
  targets_.clear();
  target_dist_.clear();
  if (territory_.empty()) return;
  const auto sub = induced_subgraph(g, territory_);
  const auto sep = separator(sub.graph, mode_);
  for (Vertex v : sep.separator) targets_.push_back(sub.to_global[v]);
  if (targets_.size() > free_.size()) {
    throw Error(ErrorCode::TeamBudgetExceeded,
                "phase " + std::to_string(phases_.size()) + " needs " + std::to_string(targets_.size()) +
                    " cops, " + std::to_string(free_.size()) + " of k=" + std::to_string(k_) + " remain");
  }
  walkers_.assign(free_.begin(), free_.begin() + static_cast<std::ptrdiff_t>(targets_.size()));
  free_.erase(free_.begin(), free_.begin() + static_cast<std::ptrdiff_t>(targets_.size()));
  for (Vertex t : targets_) target_dist_.push_back(bfs_distances(g, t));
  used_ += targets_.size();
  phases_.push_back({targets_.size(), territory_.size(), 0, 0, false});
}

Positions SeparatorSweepPolicy::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) {
  if (!started_) {
    started_ = true;
    territory_ = robber_component(g, robber);
    phases_.back().territory_after = territory_.size();
    phases_.back().complete = true;
    begin_phase(g, round);
  } else if (!walkers_.empty()) {
    bool arrived = true;
    for (std::size_t i = 0; i < walkers_.size(); ++i) arrived = arrived && cops[walkers_[i]] == targets_[i];
    if (arrived) {
      for (Vertex t : targets_) held_[t] = true;
      territory_ = robber_component(g, robber);
      phases_.back().territory_after = territory_.size();
      phases_.back().complete = true;
      begin_phase(g, round);
    }
  }
  // Every round, the robber's component given the teams in place; in the
  // fast variant this is where a relocating robber may be.
  territory_trace_.push_back(robber_component(g, robber).size());

  Positions next = cops;
  for (std::size_t i = 0; i < walkers_.size(); ++i) {
    const Vertex c = cops[walkers_[i]];
    const auto& dist = target_dist_[i];
    if (dist[c] == 0) continue;
    for (Vertex u : g.neighbors(c)) {
      if (dist[u] + 1 == dist[c]) {
        next[walkers_[i]] = u;
        break;
      }
    }
  }
  if (!walkers_.empty()) ++phases_.back().rounds;
  return next;
}

nlohmann::json SeparatorSweepPolicy::metadata() const {
  nlohmann::json phases = nlohmann::json::array();
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    const auto& p = phases_[i];
    phases.push_back({{"phase", i},
                      {"separator", p.separator},
                      {"territory_before", p.territory_before},
                      {"territory_after", p.complete ? nlohmann::json(p.territory_after) : nlohmann::json(nullptr)},
                      {"rounds", p.rounds}});
  }
  return {{"phases", phases}, {"territory", territory_trace_}, {"cops_used", used_}, {"fast_robber", fast_robber_}};
}

// Three cops.

VertexMask ThreeCopPlanarPolicy::walls(std::optional<std::size_t> except) const {
  VertexMask out(n_, false);
  for (std::size_t i = 0; i < guards_.size(); ++i) {
    if (except == i || !guards_[i].guarding()) continue;
    for (Vertex v : guards_[i].path()) out[v] = true;
  }
  return out;
}

std::vector<Vertex> ThreeCopPlanarPolicy::territory(const Graph& g, Vertex robber, const VertexMask& blocked) const {
  VertexMask allowed(n_);
  for (std::size_t v = 0; v < n_; ++v) allowed[v] = !blocked[v];
  return component_of(g, robber, allowed);
}

void ThreeCopPlanarPolicy::note(std::string text) { notes_.push_back(std::move(text)); }

std::optional<std::size_t> ThreeCopPlanarPolicy::free_cop() const {
  for (std::size_t c = 0; c < 3; ++c) {
    const bool busy = std::any_of(guards_.begin(), guards_.end(), [&](const GuardedPath& p) { return p.cop() == c; });
    if (!busy) return c;
  }
  return std::nullopt;
}

void ThreeCopPlanarPolicy::assign(const Graph& g, std::size_t cop, std::vector<Vertex> path, const VertexMask& domain,
                                  std::optional<std::pair<Vertex, Vertex>> skip) {
  guards_.emplace_back(g, cop, std::move(path), domain, skip);
}

void ThreeCopPlanarPolicy::release_redundant(const Graph& g, Vertex robber) {
  // A guard is redundant when dropping its path leaves the robber's
  // component unchanged: nothing it alone blocks touches the territory.
  for (bool again = true; again;) {
    again = false;
    const std::size_t size = territory(g, robber, walls()).size();
    for (std::size_t i = 0; i < guards_.size(); ++i) {
      if (territory(g, robber, walls(i)).size() == size) {
        guards_.erase(guards_.begin() + static_cast<std::ptrdiff_t>(i));
        again = true;
        break;
      }
    }
  }
}

void ThreeCopPlanarPolicy::close_phase(std::size_t territory_after) {
  if (phases_.empty() || phases_.back().complete) return;
  auto& p = phases_.back();
  p.territory_after = territory_after;
  p.complete = true;
}

void ThreeCopPlanarPolicy::start_phase(const Graph& g, Vertex robber) {
  const auto h = territory(g, robber, walls());
  if (h.empty()) return;
  const VertexMask hmask = mask_of(n_, h);

  auto attachments = [&](const GuardedPath& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.path().size(); ++i) {
      const auto nbrs = g.neighbors(p.path()[i]);
      if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return hmask[u]; })) out.push_back(i);
    }
    return out;
  };
  auto first_neighbor_in = [&](Vertex v) {
    for (Vertex u : g.neighbors(v)) {
      if (hmask[u]) return u;
    }
    return v;
  };

  std::vector<Vertex> touching;
  for (const auto& p : guards_) {
    for (auto i : attachments(p)) touching.push_back(p.path()[i]);
  }
  std::sort(touching.begin(), touching.end());
  touching.erase(std::unique(touching.begin(), touching.end()), touching.end());

  std::string kind;
  const auto cop = free_cop();
  if (guards_.empty()) {
    // The robber's territory is unguarded: guard a diametral path of it.
    Vertex u = h.front();
    Distance ecc = 0;
    for (Vertex v : h) {
      const auto d = bfs_distances(g, v, hmask);
      Distance e = 0;
      for (Vertex w : h) e = std::max(e, d[w]);
      if (e > ecc) {
        ecc = e;
        u = v;
      }
    }
    const auto d = bfs_distances(g, u, hmask);
    Vertex w = u;
    for (Vertex x : h) {
      if (d[x] > d[w]) w = x;
    }
    assign(g, *cop, shortest_path(g, u, w, hmask), hmask);
    kind = "init";
  } else if (touching.size() == 1) {
    // Case III: one vertex v holds the robber in. Guard a shortest path
    // from v to a vertex farthest from it.
    const Vertex v = touching.front();
    VertexMask ymask = hmask;
    ymask[v] = true;
    const auto d = bfs_distances(g, v, ymask);
    Vertex u = h.front();
    for (Vertex x : h) {
      if (d[x] > d[u]) u = x;
    }
    assign(g, *cop, shortest_path(g, u, v, ymask), ymask);
    kind = "III";
  } else if (guards_.size() == 1) {
    // Case I: cut the territory with a shortest path between the
    // neighbors of the first and last attachment vertices.
    const auto& p = guards_.front();
    const auto att = attachments(p);
    const Vertex u1 = first_neighbor_in(p.path()[att.front()]);
    const Vertex u2 = first_neighbor_in(p.path()[att.back()]);
    assign(g, *cop, shortest_path(g, u1, u2, hmask), hmask);
    kind = "I";
  } else if (guards_.size() == 2) {
    const auto a0 = attachments(guards_[0]);
    const auto a1 = attachments(guards_[1]);
    if (a0.size() <= 1 && a1.size() <= 1) {
      // One attachment per path: a shortest v1-v2 path through the
      // territory frees both guards once held.
      const Vertex v1 = guards_[0].path()[a0.front()];
      const Vertex v2 = guards_[1].path()[a1.front()];
      VertexMask kmask = hmask;
      kmask[v1] = kmask[v2] = true;
      const std::optional<Edge> skip = g.adjacent(v1, v2) ? std::optional<Edge>(Edge{v1, v2}) : std::nullopt;
      assign(g, *cop, path_in(g, v1, v2, kmask, skip), kmask, skip);
      kind = "II-b";
    } else {
      // A path P1 with two attachments v1, v2: guard P1 with its middle
      // replaced by a shortest v1-v2 path through the territory. The old
      // walls stay up while the cop gets in place; afterwards whichever side
      // the robber is on, one of the other two paths stops touching it.
      const std::size_t gi = a0.size() >= 2 ? 0 : 1;
      const auto& att = gi == 0 ? a0 : a1;
      const auto& p1 = guards_[gi].path();
      VertexMask dmask = hmask;
      for (std::size_t i = 0; i <= att.front(); ++i) dmask[p1[i]] = true;
      for (std::size_t i = att.back(); i < p1.size(); ++i) dmask[p1[i]] = true;
      const Vertex v1 = p1[att.front()], v2 = p1[att.back()];
      const std::optional<Edge> skip =
          att.back() == att.front() + 1 ? std::optional<Edge>(Edge{v1, v2}) : std::nullopt;
      assign(g, *cop, path_in(g, p1.front(), p1.back(), dmask, skip), dmask, skip);
      kind = "II-c";
    }
  } else {
    // Three paths all needed: no case applies, the stall check reports it.
    note("three guarded paths all touch a territory of " + std::to_string(h.size()) + " vertices");
    return;
  }
  phases_.push_back({kind, h.size(), 0, 0, false});
}

Positions ThreeCopPlanarPolicy::place(const Graph& g, std::size_t k) {
  if (k < 3) throw Error(ErrorCode::TooFewCops, "three-cop strategy needs k >= 3, got " + std::to_string(k));
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "needs a connected graph");
  n_ = g.order();
  started_ = false;
  guards_.clear();
  phases_.clear();
  notes_.clear();

  Vertex u = 0;
  diameter_ = 0;
  for (Vertex v = 0; v < n_; ++v) {
    const auto d = bfs_distances(g, v);
    const Distance e = *std::max_element(d.begin(), d.end());
    if (e > diameter_) {
      diameter_ = e;
      u = v;
    }
  }
  const auto d = bfs_distances(g, u);
  const Vertex w = static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
  diametral_ = shortest_path(g, u, w);
  best_territory_ = n_;
  last_progress_ = 0;
  return Positions(k, diametral_[diametral_.size() / 2]);
}

Positions ThreeCopPlanarPolicy::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) {
  try {
    if (!started_) {
      started_ = true;
      assign(g, 0, diametral_, full_mask(n_));
      phases_.push_back({"init", n_, 0, 0, false});
    } else if (std::all_of(guards_.begin(), guards_.end(), [](const GuardedPath& p) { return p.guarding(); })) {
      release_redundant(g, robber);
      close_phase(territory(g, robber, walls()).size());
      start_phase(g, robber);
    }

    Positions next = cops;
    const VertexMask blocked = walls();
    for (auto& p : guards_) {
      // A robber on a guarded path is caught by that path's cop this move;
      // guards whose domain excludes it hold still.
      if (!p.in_domain(robber) && blocked[robber]) continue;
      next[p.cop()] = p.next_move(g, cops[p.cop()], robber);
    }
    if (!phases_.empty() && !phases_.back().complete) ++phases_.back().rounds;

    const std::size_t size = territory(g, robber, walls()).size();
    if (size < best_territory_) {
      best_territory_ = size;
      last_progress_ = round;
    } else if (round - last_progress_ > diameter_ + n_) {
      throw Error(ErrorCode::ProgressStall, "territory stuck at " + std::to_string(size) + " vertices for " +
                                                std::to_string(round - last_progress_) + " rounds");
    }
    return next;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::NotIsometric) {
      throw Error(ErrorCode::ProgressStall, std::string("guarding broke down: ") + e.what());
    }
    throw;
  }
}

nlohmann::json ThreeCopPlanarPolicy::metadata() const {
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& p : phases_) {
    const std::size_t shrink = p.complete && p.territory_after < p.territory_before ? p.territory_before - p.territory_after : 0;
    phases.push_back({{"case", p.kind},
                      {"territory_before", p.territory_before},
                      {"territory_after", p.complete ? nlohmann::json(p.territory_after) : nlohmann::json(nullptr)},
                      {"k", shrink},
                      {"rounds", p.rounds}});
  }
  return {{"diameter", diameter_}, {"phases", phases}, {"notes", notes_}};
}

}  // namespace copsrob
