#include <algorithm>
#include <cmath>
#include <set>

#include "copsrob/error.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/metrics.hpp"
#include "copsrob/planar.hpp"
#include "copsrob/retract.hpp"
#include "copsrob/solver_policy.hpp"
#include "copsrob/strategies.hpp"
#include "doctest.h"

using namespace copsrob;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Random connected spanning subgraph of a grid: a random spanning tree plus
// each remaining edge with probability p.
Graph grid_subgraph(std::size_t rows, std::size_t cols, double p, std::uint64_t seed) {
  const Graph full = gen_grid({rows, cols}).graph;
  Rng rng(seed);
  auto edges = full.edges();
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.uniform_below(i)]);
  std::vector<Vertex> parent(full.order());
  for (Vertex v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  EdgeList kept;
  for (const auto& [u, v] : edges) {
    const Vertex a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      kept.emplace_back(u, v);
    } else if (rng.uniform01() < p) {
      kept.emplace_back(u, v);
    }
  }
  return Graph(full.order(), kept);
}

// Grid with one diagonal per square: a planar triangulated grid.
Graph triangulated_grid(std::size_t rows, std::size_t cols) {
  EdgeList edges;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < rows && c + 1 < cols) edges.emplace_back(id(r, c), id(r + 1, c + 1));
    }
  }
  return Graph(rows * cols, edges);
}

// Polygon with random non-crossing chords.
Graph outerplanar(std::size_t n, std::size_t tries, std::uint64_t seed) {
  Rng rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  std::vector<std::pair<Vertex, Vertex>> chords;
  auto crosses = [](std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b) {
    auto inside = [&](Vertex x) { return a.first < x && x < a.second; };
    const bool b1 = inside(b.first), b2 = inside(b.second);
    const bool shares = b.first == a.first || b.first == a.second || b.second == a.first || b.second == a.second;
    return !shares && b1 != b2;
  };
  for (std::size_t t = 0; t < tries; ++t) {
    Vertex u = static_cast<Vertex>(rng.uniform_below(n)), v = static_cast<Vertex>(rng.uniform_below(n));
    if (u > v) std::swap(u, v);
    if (v - u < 2 || (u == 0 && v == n - 1)) continue;
    const std::pair<Vertex, Vertex> c{u, v};
    if (std::any_of(chords.begin(), chords.end(), [&](auto o) { return o == c || crosses(o, c); })) continue;
    chords.push_back(c);
    edges.push_back(c);
  }
  return Graph(n, edges);
}

Graph wheel(std::size_t rim) {
  EdgeList edges;
  for (Vertex i = 1; i <= rim; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, static_cast<Vertex>(i % rim + 1));
  }
  return Graph(rim + 1, edges);
}

struct Named {
  std::string name;
  Graph g;
};

std::vector<Named> planar_family() {
  std::vector<Named> out;
  out.push_back({"G2_4", gen_grid(2, 4).graph});
  out.push_back({"C6", gen_cycle(6)});
  for (std::size_t q = 2; q <= 6; ++q) out.push_back({"grid" + std::to_string(q), gen_grid(2, q).graph});
  out.push_back({"grid3x7", gen_grid({3, 7}).graph});
  for (std::size_t n = 3; n <= 12; ++n) out.push_back({"C" + std::to_string(n), gen_cycle(n)});
  for (std::uint64_t s = 0; s < 10; ++s) out.push_back({"tree" + std::to_string(s), gen_tree(12, s)});
  for (std::uint64_t s = 0; s < 25; ++s) {
    out.push_back({"gridsub" + std::to_string(s), grid_subgraph(3 + s % 4, 4 + s % 3, 0.5, s)});
  }
  for (std::size_t q = 2; q <= 5; ++q) out.push_back({"tri" + std::to_string(q), triangulated_grid(q, q + 1)});
  for (std::uint64_t s = 0; s < 20; ++s) {
    out.push_back({"outer" + std::to_string(s), outerplanar(6 + s % 9, 3 + s % 7, s)});
  }
  for (std::size_t r = 3; r <= 8; ++r) out.push_back({"wheel" + std::to_string(r), wheel(r)});
  out.push_back({"K4", gen_complete(4)});
  out.push_back({"star", gen_star(6)});
  return out;
}

Distance diameter_of(const Graph& g) { return metrics(g).diameter; }

}  // namespace

TEST_CASE("separator examples") {
  const auto p7 = separator(gen_path(7), SeparatorMode::bfs_level);
  CHECK(p7.separator == std::vector<Vertex>{3});
  CHECK(p7.a.size() == 3);
  CHECK(p7.b.size() == 3);
  CHECK(separator(gen_path(7), SeparatorMode::exact).separator.size() == 1);

  // G^2_5 from a corner: the main anti-diagonal, sides 10 and 10.
  const Graph g5 = gen_grid(2, 5).graph;
  const auto lv = separator(g5, SeparatorMode::bfs_level);
  CHECK(lv.separator.size() == 5);
  CHECK(lv.a.size() == 10);
  CHECK(lv.b.size() == 10);
  // A smaller balanced separator exists: 4 vertices cutting off a corner.
  const auto ex = separator(g5, SeparatorMode::exact);
  CHECK(ex.separator.size() == 4);
  CHECK_FALSE(check_separator(g5, ex).has_value());

  CHECK(separator(gen_complete(4), SeparatorMode::exact).separator.size() == 2);
  CHECK(separator(gen_path(1), SeparatorMode::exact).separator == std::vector<Vertex>{0});

  CHECK_THROWS_AS(separator(gen_grid(2, 6).graph, SeparatorMode::exact), Error);
  CHECK_THROWS_AS(separator(Graph(3, EdgeList{{0, 1}}), SeparatorMode::bfs_level), Error);
}

TEST_CASE("exact separator is minimum") {
  // Oracle: no subset of size |S| - 1 leaves components splittable within 2n/3.
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = grid_subgraph(3, 3 + seed % 2, 0.4, seed);
    const auto r = separator(g, SeparatorMode::exact);
    REQUIRE_FALSE(check_separator(g, r).has_value());
    const std::size_t n = g.order();
    const std::size_t s = r.separator.size();
    if (s == 0) continue;
    bool smaller = false;
    for (std::uint32_t bits = 0; bits < (1u << n) && !smaller; ++bits) {
      if (static_cast<std::size_t>(__builtin_popcount(bits)) != s - 1) continue;
      VertexMask allowed(n);
      for (Vertex v = 0; v < n; ++v) allowed[v] = !(bits >> v & 1u);
      const auto labels = component_labels(g, allowed);
      std::vector<std::size_t> sizes;
      for (Vertex v = 0; v < n; ++v) {
        if (labels[v] == kUnreachable) continue;
        if (labels[v] >= sizes.size()) sizes.resize(labels[v] + 1, 0);
        ++sizes[labels[v]];
      }
      // Try every assignment of components to two sides.
      for (std::uint32_t pick = 0; pick < (1u << sizes.size()) && !smaller; ++pick) {
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) ((pick >> i & 1u) ? a : b) += sizes[i];
        smaller = 3 * a <= 2 * n && 3 * b <= 2 * n;
      }
    }
    CHECK_FALSE(smaller);
  }
}

TEST_CASE("separators are valid on the planar family") {
  for (const auto& [name, g] : planar_family()) {
    CAPTURE(name);
    const auto r = separator(g, SeparatorMode::bfs_level);
    CHECK_FALSE(check_separator(g, r).has_value());
  }
}

TEST_CASE("guarded path") {
  // P5 inside C8: path 0..4, domain everything.
  const Graph c8 = gen_cycle(8);
  const std::vector<Vertex> p{0, 1, 2, 3, 4};
  const VertexMask all(8, true);

  SUBCASE("shadow moves at most one step per robber step") {
    GuardedPath guard(c8, 0, p, all);
    for (const auto& [u, v] : c8.edges()) {
      const Vertex a = guard.shadow(u), b = guard.shadow(v);
      CHECK(c8.can_step(a, b));
    }
    for (Vertex v : p) CHECK(guard.shadow(v) == v);
  }
  SUBCASE("from the center, guarding after one step when the shadow is adjacent") {
    GuardedPath guard(c8, 0, p, all);
    CHECK(guard.next_move(c8, 2, 3) == 3);
    CHECK(guard.guarding());
  }
  SUBCASE("robber stepping onto the guarded path is caught") {
    // Every robber start off P and every cop start on P; once guarding, any
    // robber step onto P lands on the cop or next to it, and the cop's next
    // move is onto the robber.
    for (Vertex cop0 : p) {
      for (Vertex r0 = 5; r0 < 8; ++r0) {
        GuardedPath guard(c8, 0, p, all);
        Vertex cop = cop0, r = r0;
        for (int t = 0; t < 6 && !guard.guarding(); ++t) cop = guard.next_move(c8, cop, r);
        REQUIRE(guard.guarding());
        for (Vertex step : c8.closed_neighborhood(r)) {
          if (!guard.on_path(step)) continue;
          const Vertex next = guard.next_move(c8, cop, step);
          CHECK(c8.can_step(cop, next));
          CHECK(next == step);
        }
      }
    }
  }
  CHECK_THROWS_AS(GuardedPath(c8, 0, {0, 1, 2, 3, 4, 5}, all), Error);
}

TEST_CASE("separator sweep") {
  SUBCASE("P7 with three cops") {
    const Graph p7 = gen_path(7);
    SeparatorSweepPolicy cops;
    StayFarRobber r;
    const auto t = play(p7, 3, cops, r);
    REQUIRE(t.capture_round.has_value());
    std::vector<std::size_t> sizes{cops.phases().front().territory_before};
    for (const auto& ph : cops.phases()) {
      if (ph.complete) sizes.push_back(ph.territory_after);
    }
    CHECK(sizes.front() == 7);
    CHECK(sizes[1] == 3);
    CHECK(sizes[2] == 1);
  }
  SUBCASE("budget errors name the demand") {
    SeparatorSweepPolicy cops;
    GreedyRobber r;
    CHECK_THROWS_AS(play(gen_grid(2, 8).graph, 3, cops, r), Error);
  }
  SUBCASE("territory is monotone and shrinks by 2/3 per phase") {
    for (bool fast : {false, true}) {
      for (std::size_t q : {6u, 10u}) {
        const Graph g = gen_grid(2, q).graph;
        const std::size_t k = static_cast<std::size_t>(std::ceil(12 * std::sqrt(static_cast<double>(g.order()))));
        SeparatorSweepPolicy cops(fast);
        GreedyRobber greedy(fast);
        RandomWalkRobber walk(q);
        for (RobberPolicy* r : std::initializer_list<RobberPolicy*>{&greedy, &walk}) {
          const auto t = play(g, k, cops, *r, {2000, fast});
          REQUIRE(t.capture_round.has_value());
          const auto& trace = cops.territory_trace();
          for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1]);
          for (const auto& ph : cops.phases()) {
            if (ph.complete) CHECK(3 * ph.territory_after <= 2 * ph.territory_before);
          }
        }
      }
    }
  }
}

TEST_CASE("three-cop planar strategy") {
  for (const auto& [name, g] : planar_family()) {
    CAPTURE(name);
    const std::size_t n = g.order();
    const std::size_t bound = (diameter_of(g) + 1) * n;
    ThreeCopPlanarPolicy cops;
    GreedyRobber greedy;
    StayFarRobber stay;
    std::vector<std::unique_ptr<RobberPolicy>> robbers;
    robbers.push_back(std::make_unique<GreedyRobber>());
    robbers.push_back(std::make_unique<StayFarRobber>());
    for (std::uint64_t s = 0; s < 5; ++s) robbers.push_back(std::make_unique<RandomWalkRobber>(s));
    if (n <= 16) robbers.push_back(std::move(extract_policies(cached_solve(g, 3)).robber));
    for (auto& r : robbers) {
      CAPTURE(r->name());
      const auto t = play(g, 3, cops, *r, {bound + 1, false});
      REQUIRE(t.capture_round.has_value());
      CHECK(*t.capture_round <= bound);
      std::size_t total = 0;
      for (const auto& ph : cops.phases()) {
        if (ph.complete && ph.territory_after < ph.territory_before) total += ph.territory_before - ph.territory_after;
      }
      CHECK(total <= n);
      // Against optimal play no strategy beats capt_3.
      if (r->name() == "solver") CHECK(*t.capture_round >= capture_time(*cached_solve(g, 3)).value);
    }
  }
}

TEST_CASE("three-cop planar examples") {
  SUBCASE("C6: one diametral path leaves at most two vertices") {
    const Graph c6 = gen_cycle(6);
    ThreeCopPlanarPolicy cops;
    StayFarRobber r;
    const auto t = play(c6, 3, cops, r);
    REQUIRE(t.capture_round.has_value());
    CHECK(*t.capture_round <= 24);
    REQUIRE_FALSE(cops.phases().empty());
    CHECK(cops.phases().front().kind == "init");
    CHECK(cops.phases().front().territory_after <= 2);
  }
  SUBCASE("errors") {
    ThreeCopPlanarPolicy cops;
    CHECK_THROWS_AS(cops.place(gen_cycle(5), 2), Error);
    CHECK_THROWS_AS(cops.place(Graph(3, EdgeList{{0, 1}}), 3), Error);
  }
}
