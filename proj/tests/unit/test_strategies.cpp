#include <memory>

#include "copsrob/error.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/metrics.hpp"
#include "copsrob/policy.hpp"
#include "copsrob/solver_policy.hpp"
#include "copsrob/strategies.hpp"
#include "doctest.h"
#include "test_policies.hpp"

using namespace copsrob;
using testing_support::JumpingCops;
using testing_support::StaticCops;

namespace {

std::size_t played(const Graph& g, std::size_t k, CopPolicy& c, RobberPolicy& r, std::size_t max_rounds = 1000) {
  const auto t = play(g, k, c, r, {max_rounds, false});
  REQUIRE(t.capture_round.has_value());
  return *t.capture_round;
}

std::vector<Graph> connected_samples(std::size_t count, std::size_t n, double p) {
  std::vector<Graph> out;
  for (std::uint64_t seed = 100; out.size() < count; ++seed) {
    Graph g = gen_gnp(n, p, seed);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("referee basics") {
  const Graph p7 = gen_path(7);
  auto optimal = extract_policies(cached_solve(p7, 1));
  CHECK(played(p7, 1, *optimal.cops, *optimal.robber) == 3);

  StaticCops idle({0});
  StayFarRobber far;
  const auto t = play(p7, 1, idle, far, {25, false});
  CHECK_FALSE(t.capture_round.has_value());
  CHECK(t.rounds.size() == 25);

  StaticCops everywhere({0, 1, 2, 3, 4, 5, 6});
  CHECK(played(p7, 7, everywhere, far) == 0);

  const auto j = to_json(t);
  CHECK(j["capture_round"].is_null());
  CHECK(j["placements"]["cops"] == nlohmann::json::array({0}));
  CHECK(j["placements"]["robber"] == 6);
}

TEST_CASE("referee rejects illegal moves and names the offender") {
  JumpingCops jumper;
  StayFarRobber far;
  try {
    play(gen_path(7), 2, jumper, far);
    FAIL("expected IllegalMove");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalMove);
    CHECK(std::string(e.what()).find("cop 1") != std::string::npos);
  }
  CHECK(robber_can_reach(gen_path(5), {2}, 0, 1, false));
  CHECK_FALSE(robber_can_reach(gen_path(5), {2}, 0, 4, true));
  CHECK(robber_can_reach(gen_path(5), {4}, 0, 3, true));
  CHECK_FALSE(robber_can_reach(gen_path(5), {4}, 0, 3, false));
}

TEST_CASE("extracted policies reproduce the capture time") {
  CHECK(played(gen_grid(2, 3).graph, 2, *extract_policies(cached_solve(gen_grid(2, 3).graph, 2)).cops,
               *extract_policies(cached_solve(gen_grid(2, 3).graph, 2)).robber) == 2);
  for (const Graph& g : connected_samples(8, 8, 0.3)) {
    for (std::size_t k = 1; k <= 2; ++k) {
      auto table = cached_solve(g, k);
      const RoundCount capt = capture_time(*table).value;
      if (capt == kNoCapture) continue;
      auto pair = extract_policies(table);
      CHECK(played(g, k, *pair.cops, *pair.robber) == capt);
      // The optimal robber outlasts weaker cops too.
      GreedyPursuitPolicy greedy;
      const auto t = play(g, k, greedy, *pair.robber, {200, false});
      if (t.capture_round) CHECK(*t.capture_round >= capt);
      // No robber does better than the value against optimal cops.
      CHECK(worst_case_capture(g, k, *pair.cops, capt).rounds == capt);
    }
  }
}

TEST_CASE("tree policy") {
  const Graph p7 = gen_path(7);
  TreePolicy one(p7, 1);
  auto robber1 = SolverRobberPolicy(cached_solve(p7, 1));
  CHECK(played(p7, 1, one, robber1) == 3);
  TreePolicy two(p7, 2);
  auto robber2 = SolverRobberPolicy(cached_solve(p7, 2));
  CHECK(played(p7, 2, two, robber2) == 2);
  const Graph star = gen_star(5);
  TreePolicy center(star, 1);
  auto robber_star = SolverRobberPolicy(cached_solve(star, 1));
  CHECK(played(star, 1, center, robber_star) == 1);
  CHECK_THROWS_AS(TreePolicy(gen_cycle(5), 1), Error);

  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph t = gen_tree(10, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      TreePolicy policy(t, k);
      CHECK(worst_case_capture(t, k, policy, policy.radius()).rounds <= policy.radius());
    }
  }
}

TEST_CASE("retract partition policy") {
  const Graph p7 = gen_path(7);
  {
    std::vector<Territory> whole{{{0, 1, 2, 3, 4, 5, 6}, RetractMap::identity(7), 1}};
    RetractPartitionPolicy single(p7, whole);
    auto robber = SolverRobberPolicy(cached_solve(p7, 1));
    CHECK(played(p7, 1, single, robber) == 3);
    CHECK(single.certified_bound() == 3u);
  }
  {
    std::vector<Territory> balls{{{0, 1, 2, 3, 4}, path_retract(p7, {0, 1, 2, 3, 4}, 0), 1},
                                 {{2, 3, 4, 5, 6}, path_retract(p7, {6, 5, 4, 3, 2}, 6), 1}};
    RetractPartitionPolicy policy(p7, balls);
    CHECK(worst_case_capture(p7, 2, policy, 2).rounds <= 2);
  }
  {
    const auto q4 = gen_hypercube(4);
    const RoundCount bound = capture_time(gen_hypercube(3).graph, 2).value;
    std::vector<Territory> halves{{{}, subcube_retract(q4.codec, {0b1000, 0}), 2},
                                  {{}, subcube_retract(q4.codec, {0b1000, 0b1000}), 2}};
    for (auto& t : halves) t.vertices = t.retract.image;
    RetractPartitionPolicy policy(q4.graph, halves);
    CHECK(worst_case_capture(q4.graph, 4, policy, bound).rounds <= bound);
  }
  {
    std::vector<Territory> gap{{{0, 1, 2}, path_retract(p7, {0, 1, 2}, 0), 1}};
    try {
      RetractPartitionPolicy bad(p7, gap);
      FAIL("expected CoverageGap");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CoverageGap);
    }
    auto broken = RetractMap::from_map({0, 6, 2, 3, 4, 5, 6});
    std::vector<Territory> invalid{{{0, 1, 2, 3, 4, 5, 6}, RetractMap::identity(7), 1},
                                   {broken.image, broken, 1}};
    try {
      RetractPartitionPolicy bad(p7, invalid);
      FAIL("expected RetractInvalid");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RetractInvalid);
    }
  }
}

TEST_CASE("grid cover policy") {
  const auto g26 = gen_grid(2, 6);
  const auto cover = grid_cover_territories(g26, 8);
  REQUIRE(cover.size() == 4);
  for (const auto& t : cover) CHECK(t.vertices.size() == 9);
  auto policy = grid_cover_policy(g26, 8);
  const RoundCount box_bound = capture_time(gen_grid(2, 3).graph, 2).value;
  CHECK(box_bound == 2);
  CHECK(policy->certified_bound() == box_bound);
  CHECK(worst_case_capture(g26.graph, 8, *policy, box_bound).rounds <= box_bound);

  const auto g19 = gen_grid(1, 9);
  auto path_cover = grid_cover_policy(g19, 3);
  CHECK(worst_case_capture(g19.graph, 3, *path_cover, 1).rounds <= 1);

  const auto g24 = gen_grid(2, 4);
  auto whole = grid_cover_policy(g24, 2);
  REQUIRE(whole->territories().size() == 1);
  auto robber = SolverRobberPolicy(cached_solve(g24.graph, 2));
  CHECK(played(g24.graph, 2, *whole, robber) == 3);

  // Uneven covers shift boxes inward and keep leftover cops idle.
  const auto g27 = gen_grid(2, 7);
  const auto shifted = grid_cover_territories(g27, 9);
  REQUIRE(shifted.size() == 5);
  CHECK(shifted[4].cops == 1);
  CHECK(shifted[3].vertices.back() == 48);
  auto uneven = grid_cover_policy(g27, 9);
  CHECK(worst_case_capture(g27.graph, 9, *uneven, *uneven->certified_bound()).rounds <= *uneven->certified_bound());

  try {
    grid_cover_territories(gen_grid(3, 3), 1);
    FAIL("expected TooFewCops");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewCops);
  }
}

TEST_CASE("subcube partition policy") {
  const auto q4 = gen_hypercube(4);
  const RoundCount q3 = capture_time(gen_hypercube(3).graph, 2).value;
  auto policy = subcube_partition_policy(q4, 4, 3);
  CHECK(worst_case_capture(q4.graph, 4, *policy, q3).rounds <= q3);

  const auto cube3 = gen_hypercube(3);
  auto identity = subcube_partition_policy(cube3, 2, 3);
  auto robber = SolverRobberPolicy(cached_solve(cube3.graph, 2));
  CHECK(played(cube3.graph, 2, *identity, robber) == q3);

  CHECK(choose_subcube_dimension(4, 4) == 4);  // 2^4/4 >= 4 > 2^3/3
  CHECK(choose_subcube_dimension(4, 6) == 3);  // 2^3/3 >= 16/6 > 2^2/2
  CHECK(choose_subcube_dimension(10, 1024) == 1);
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t k = 1; k <= 300; k += 7) {
      const std::size_t l = choose_subcube_dimension(n, k);
      const double target = std::ldexp(1.0, static_cast<int>(n)) / static_cast<double>(k);
      if (l < n) CHECK(std::ldexp(1.0, static_cast<int>(l)) / static_cast<double>(l) >= target);
      if (l > 1 && l < n) CHECK(std::ldexp(1.0, static_cast<int>(l - 1)) / static_cast<double>(l - 1) < target);
    }

  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code([&] { subcube_territories(q4, 3, 3); }) == ErrorCode::TooFewCops);
  CHECK(code([&] { subcube_territories(gen_hypercube(6), 40, 5); }) == ErrorCode::SubcubeTooLarge);
}

TEST_CASE("stay-far robber") {
  const Graph p7 = gen_path(7);
  StayFarRobber far;
  for (Vertex c = 0; c < 7; ++c) {
    GreedyPursuitPolicy chase;
    StaticCops start({c});
    const auto t = play(p7, 1, chase, far);
    REQUIRE(t.capture_round.has_value());
    CHECK(*t.capture_round >= 3);
  }
  TreePolicy two(p7, 2);
  CHECK(played(p7, 2, two, far) >= 2);
  StaticCops all({0, 1, 2, 3, 4, 5, 6});
  CHECK(played(p7, 7, all, far) == 0);

  // Lower-bound instance: survives at least rad_k against optimal cops.
  for (const Graph& g : connected_samples(6, 8, 0.35)) {
    for (std::size_t k = 1; k <= 2; ++k) {
      auto table = cached_solve(g, k);
      if (capture_time(*table).value == kNoCapture) continue;
      SolverCopPolicy cops(table);
      CHECK(played(g, k, cops, far) >= k_center(g, k, KCenterMode::exact).radius);
    }
  }
}

TEST_CASE("greedy robber") {
  const Graph p7 = gen_path(7);
  StaticCops at0({0});
  GreedyRobber greedy;
  const auto t = play(p7, 1, at0, greedy, {5, false});
  CHECK(t.robber_start == 6);
  for (const auto& r : t.rounds) CHECK(r.robber == 6);

  for (const Graph& g : {gen_cycle(7), gen_grid(2, 3).graph, gen_hypercube(3).graph}) {
    for (Vertex c1 = 0; c1 < g.order(); ++c1)
      for (Vertex c2 = c1; c2 < g.order(); ++c2) {
        const Positions cops{c1, c2};
        const auto d = multi_source_distances(g, cops);
        for (Vertex r = 0; r < g.order(); ++r) CHECK(d[greedy.move(g, cops, r, 1)] >= d[r]);
      }
  }

  GreedyRobber fast(true);
  const Graph p9 = gen_path(9);
  const Vertex to = fast.move(p9, {4}, 3, 1);
  CHECK(to == 0);
}

TEST_CASE("random walk robber is reproducible") {
  const Graph q3 = gen_hypercube(3).graph;
  GreedyPursuitPolicy a;
  GreedyPursuitPolicy b;
  RandomWalkRobber ra(12);
  RandomWalkRobber rb(12);
  const auto ta = to_json(play(q3, 1, a, ra, {50, false}));
  const auto tb = to_json(play(q3, 1, b, rb, {50, false}));
  CHECK(ta.dump() == tb.dump());
  // place() reseeds, so a second game repeats the first.
  CHECK(to_json(play(q3, 1, a, ra, {50, false})).dump() == ta.dump());
}

TEST_CASE("pigeonhole robber") {
  const auto g19 = gen_grid(1, 9);
  PigeonholeGridRobber line(g19.codec, 2);
  CHECK(line.side() == 3);
  for (Vertex a = 0; a < 9; ++a)
    for (Vertex b = a; b < 9; ++b) {
      const Positions cops{a, b};
      const Vertex r = line.place(g19.graph, cops);
      CHECK(multi_source_distances(g19.graph, cops)[r] >= 1);
    }
  GreedyPursuitPolicy chase;
  CHECK(played(g19.graph, 2, chase, line) >= 1);

  const auto g29 = gen_grid(2, 9);
  PigeonholeGridRobber square(g29.codec, 3);
  CHECK(square.side() >= 4);
  GreedyPursuitPolicy chase3;
  CHECK(played(g29.graph, 3, chase3, square) >= square.side() / 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    Positions cops;
    for (int i = 0; i < 3; ++i) cops.push_back(static_cast<Vertex>(rng.uniform_below(81)));
    const Vertex r = square.place(g29.graph, cops);
    CHECK(multi_source_distances(g29.graph, cops)[r] >= square.side() / 2);
  }

  try {
    PigeonholeGridRobber impossible(gen_grid(2, 3).codec, 9);
    FAIL("expected PackingImpossible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PackingImpossible);
  }
}
