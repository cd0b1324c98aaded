#include "copsrob/metrics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "copsrob/error.hpp"

namespace copsrob {

Metrics metrics(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::InvalidArgument, "empty graph has no metrics");
  Metrics m;
  m.eccentricity.resize(g.order());
  m.radius = kUnreachable;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    const Distance ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc == kUnreachable) throw Error(ErrorCode::DisconnectedGraph, "metrics require a connected graph");
    m.eccentricity[v] = ecc;
    m.radius = std::min(m.radius, ecc);
    m.diameter = std::max(m.diameter, ecc);
  }
  return m;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

class ExactKCenter {
 public:
  ExactKCenter(const DistanceMatrix& d, std::size_t k) : d_(d), n_(d.order()), k_(k) {
    best_radius_ = kUnreachable;
    chosen_.reserve(k);
    cover_.assign(k + 1, std::vector<Distance>(n_, kUnreachable));
  }

  KCenterResult run() {
    search(0, 0);
    return {best_, best_radius_};
  }

 private:
  void update_reach() {
    // last_close_[v]: largest candidate id within distance < best_radius_ of v.
    last_close_.assign(n_, -1);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u = 0; u < n_; ++u) {
        if (d_(u, v) < best_radius_) last_close_[v] = static_cast<long>(u);
      }
    }
  }

  void search(std::size_t depth, Vertex first) {
    const auto& cover = cover_[depth];
    if (depth == k_) {
      const Distance r = *std::max_element(cover.begin(), cover.end());
      if (r < best_radius_) {
        best_radius_ = r;
        best_ = chosen_;
        update_reach();
      }
      return;
    }
    if (best_radius_ != kUnreachable) {
      for (Vertex v = 0; v < n_; ++v) {
        if (cover[v] >= best_radius_ && last_close_[v] < static_cast<long>(first)) return;
      }
    }
    const std::size_t remaining = k_ - depth;
    for (Vertex c = first; c + remaining <= n_; ++c) {
      auto& next = cover_[depth + 1];
      const auto row = d_.row(c);
      for (Vertex v = 0; v < n_; ++v) next[v] = std::min(cover[v], row[v]);
      chosen_.push_back(c);
      search(depth + 1, c + 1);
      chosen_.pop_back();
      if (best_radius_ == 0) return;
    }
  }

  const DistanceMatrix& d_;
  std::size_t n_;
  std::size_t k_;
  Distance best_radius_;
  std::vector<Vertex> best_;
  std::vector<Vertex> chosen_;
  std::vector<std::vector<Distance>> cover_;
  std::vector<long> last_close_;
};

}  // namespace

KCenterResult k_center(const Graph& g, std::size_t k, KCenterMode mode, std::uint64_t subset_cap) {
  const std::size_t n = g.order();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k-center needs k >= 1");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "k-center of an empty graph");
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "k-center requires a connected graph");
  k = std::min(k, n);
  if (k == n) {
    KCenterResult all;
    for (Vertex v = 0; v < n; ++v) all.centers.push_back(v);
    return all;
  }

  if (mode == KCenterMode::exact) {
    const auto subsets = binomial(n, k);
    if (subsets > subset_cap) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "C(" + std::to_string(n) + "," + std::to_string(k) + ")=" + std::to_string(subsets) +
                      " exceeds cap " + std::to_string(subset_cap));
    }
    const DistanceMatrix d(g);
    return ExactKCenter(d, k).run();
  }

  const Metrics m = metrics(g);
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (m.eccentricity[v] < m.eccentricity[start]) start = v;
  }
  KCenterResult out;
  out.centers.push_back(start);
  auto dist = bfs_distances(g, start);
  while (out.centers.size() < k) {
    const auto far = std::max_element(dist.begin(), dist.end());
    if (*far == 0) break;
    const auto v = static_cast<Vertex>(far - dist.begin());
    out.centers.push_back(v);
    const auto from_v = bfs_distances(g, v);
    for (Vertex u = 0; u < n; ++u) dist[u] = std::min(dist[u], from_v[u]);
  }
  out.radius = *std::max_element(dist.begin(), dist.end());
  std::sort(out.centers.begin(), out.centers.end());
  return out;
}

namespace {

class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : n_(g.order()), closed_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = std::uint64_t{1} << v;
      for (Vertex w : g.neighbors(v)) closed_[v] |= std::uint64_t{1} << w;
    }
    max_cover_ = 0;
    for (auto mask : closed_) max_cover_ = std::max(max_cover_, std::popcount(mask));
    best_size_ = n_ + 1;
  }

  DominationResult run() {
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    search(all);
    return {best_size_, best_};
  }

 private:
  void search(std::uint64_t undominated) {
    if (undominated == 0) {
      if (chosen_.size() < best_size_) {
        best_size_ = chosen_.size();
        best_ = chosen_;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }
    const auto left = static_cast<std::size_t>(std::popcount(undominated));
    const std::size_t lower = (left + static_cast<std::size_t>(max_cover_) - 1) / static_cast<std::size_t>(max_cover_);
    if (chosen_.size() + lower >= best_size_) return;

    // Branch on the undominated vertex with the fewest ways to be dominated.
    Vertex pivot = 0;
    int fewest = std::numeric_limits<int>::max();
    for (std::uint64_t rest = undominated; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      const int options = std::popcount(closed_[v]);
      if (options < fewest) {
        fewest = options;
        pivot = v;
      }
    }
    std::vector<Vertex> options;
    for (std::uint64_t rest = closed_[pivot]; rest != 0; rest &= rest - 1) {
      options.push_back(static_cast<Vertex>(std::countr_zero(rest)));
    }
    std::stable_sort(options.begin(), options.end(), [&](Vertex a, Vertex b) {
      return std::popcount(closed_[a] & undominated) > std::popcount(closed_[b] & undominated);
    });
    for (Vertex u : options) {
      chosen_.push_back(u);
      search(undominated & ~closed_[u]);
      chosen_.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> closed_;
  int max_cover_;
  std::size_t best_size_;
  std::vector<Vertex> best_;
  std::vector<Vertex> chosen_;
};

}  // namespace

DominationResult minimum_dominating_set(const Graph& g, std::size_t vertex_cap) {
  const std::size_t cap = std::min<std::size_t>(vertex_cap, 64);
  if (g.order() > cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "domination search limited to " + std::to_string(cap) + " vertices, got " + std::to_string(g.order()));
  }
  if (g.order() == 0) return {};
  return DominationSearch(g).run();
}

std::size_t domination_number(const Graph& g, std::size_t vertex_cap) {
  return minimum_dominating_set(g, vertex_cap).size;
}

}  // namespace copsrob
