#pragma once

// Brute-force reference implementations used to check the library. They
// share no code with it beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "copsrob/graph.hpp"

namespace oracle {

using copsrob::Graph;
using copsrob::Vertex;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][m] != kInf && d[m][j] != kInf) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

// All k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<Vertex> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Vertex>(i);
  for (;;) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

struct Center {
  std::uint32_t radius = kInf;
  std::vector<Vertex> centers;
};

inline Center k_center(const Graph& g, std::size_t k) {
  const auto d = floyd_warshall(g);
  Center best;
  for_each_subset(g.order(), k, [&](const std::vector<Vertex>& s) {
    std::uint32_t r = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::uint32_t near = kInf;
      for (Vertex c : s) near = std::min(near, d[c][v]);
      r = std::max(r, near);
    }
    if (r < best.radius) best = {r, s};
  });
  return best;
}

inline std::size_t domination_number(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t k = 1; k <= n; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
      if (found) return;
      std::vector<bool> hit(n, false);
      for (Vertex c : s) {
        hit[c] = true;
        for (Vertex v : g.neighbors(c)) hit[v] = true;
      }
      found = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    });
    if (found) return k;
  }
  return 0;
}

// Game values over ordered cop tuples (n^k of them) by plain value
// iteration from "never captured" downward until nothing changes.
struct Game {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint32_t> cop;  // cop to move, index tuple * n + robber
  std::vector<std::uint32_t> rob;  // robber to move

  std::size_t tuple_index(const std::vector<Vertex>& t) const {
    std::size_t x = 0;
    for (Vertex v : t) x = x * n + v;
    return x;
  }
  std::vector<Vertex> tuple_at(std::size_t x) const {
    std::vector<Vertex> t(k);
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<Vertex>(x % n);
      x /= n;
    }
    return t;
  }
  std::uint32_t capture_time() const {
    std::uint32_t best = kInf;
    std::size_t tuples = cop.size() / n;
    for (std::size_t t = 0; t < tuples; ++t) {
      std::uint32_t worst = 0;
      for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, cop[t * n + r]);
      best = std::min(best, worst);
    }
    return best;
  }
};

inline Game solve_game(const Graph& g, std::size_t k) {
  Game G;
  G.n = g.order();
  G.k = k;
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= G.n;
  G.cop.assign(tuples * G.n, kInf);
  G.rob.assign(tuples * G.n, kInf);
  auto on_cop = [&](const std::vector<Vertex>& t, Vertex r) { return std::find(t.begin(), t.end(), r) != t.end(); };
  std::vector<std::vector<Vertex>> closed(G.n);
  for (Vertex v = 0; v < G.n; ++v) {
    closed[v].push_back(v);
    for (Vertex u : g.neighbors(v)) closed[v].push_back(u);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < tuples; ++x) {
      const auto t = G.tuple_at(x);
      for (Vertex r = 0; r < G.n; ++r) {
        std::uint32_t c = 0;
        std::uint32_t b = 0;
        if (!on_cop(t, r)) {
          // cops: min over per-cop product of moves
          std::uint32_t best = kInf;
          std::vector<std::size_t> pick(k, 0);
          std::vector<Vertex> dest(k);
          for (bool more = true; more;) {
            for (std::size_t i = 0; i < k; ++i) dest[i] = closed[t[i]][pick[i]];
            const std::uint32_t v = on_cop(dest, r) ? 0 : G.rob[G.tuple_index(dest) * G.n + r];
            best = std::min(best, v);
            more = false;
            for (std::size_t i = k; i-- > 0;) {
              if (++pick[i] < closed[t[i]].size()) {
                more = true;
                break;
              }
              pick[i] = 0;
            }
          }
          c = best == kInf ? kInf : best + 1;
          for (Vertex to : closed[r]) {
            const std::uint32_t v = on_cop(t, to) ? 0 : G.cop[x * G.n + to];
            b = std::max(b, v);
          }
        }
        if (c != G.cop[x * G.n + r] || b != G.rob[x * G.n + r]) {
          G.cop[x * G.n + r] = c;
          G.rob[x * G.n + r] = b;
          changed = true;
        }
      }
    }
  }
  return G;
}

}  // namespace oracle
