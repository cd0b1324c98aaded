#include "copsrob/solver_policy.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "copsrob/error.hpp"

namespace copsrob {

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::uint64_t, std::size_t>, std::shared_ptr<const ValueTable>> cache;

void check_graph(const ValueTable& t, const Graph& g) {
  if (g.order() != t.graph().order() || g.hash() != t.graph().hash()) {
    throw Error(ErrorCode::InvalidArgument, "solver policy used on a graph it was not solved for");
  }
}

}  // namespace

std::shared_ptr<const ValueTable> cached_solve(const Graph& g, std::size_t k, const SolveLimits& limits) {
  const auto key = std::make_pair(g.hash(), k);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->graph() == g) return it->second;
  }
  auto table = std::make_shared<const ValueTable>(solve(g, k, limits));
  std::lock_guard lock(cache_mutex);
  auto [it, inserted] = cache.emplace(key, table);
  if (!inserted && it->second->graph() == g) return it->second;
  return table;
}

void clear_solver_cache() {
  std::lock_guard lock(cache_mutex);
  cache.clear();
}

SolverCopPolicy::SolverCopPolicy(std::shared_ptr<const ValueTable> table)
    : table_(std::move(table)), optimum_(capture_time(*table_)) {}

Positions SolverCopPolicy::place(const Graph& g, std::size_t k) {
  check_graph(*table_, g);
  if (k != table_->cops()) {
    throw Error(ErrorCode::InvalidArgument, "solver policy was built for k=" + std::to_string(table_->cops()));
  }
  return optimum_.placement;
}

Positions SolverCopPolicy::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t) {
  RoundCount best = kNoCapture;
  std::size_t best_rank = 0;
  Positions choice(cops.begin(), cops.end());
  bool have = false;
  std::vector<Vertex> sorted(cops.size());
  for_each_joint_move(g, cops, [&](std::span<const Vertex> dest) {
    std::copy(dest.begin(), dest.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
    const RoundCount v = table_->after_cop_move(sorted, robber);
    const std::size_t rank = table_->space().rank(sorted);
    if (!have || v < best || (v == best && rank < best_rank)) {
      best = v;
      best_rank = rank;
      choice.assign(dest.begin(), dest.end());
      have = true;
    }
  });
  return choice;
}

nlohmann::json SolverCopPolicy::metadata() const {
  nlohmann::json capt = optimum_.value == kNoCapture ? nlohmann::json(nullptr) : nlohmann::json(optimum_.value);
  return {{"k", table_->cops()}, {"capt", capt}};
}

SolverRobberPolicy::SolverRobberPolicy(std::shared_ptr<const ValueTable> table) : table_(std::move(table)) {}

std::vector<Vertex> SolverRobberPolicy::sorted(const Graph& g, const Positions& cops) const {
  check_graph(*table_, g);
  if (cops.size() != table_->cops()) {
    throw Error(ErrorCode::InvalidArgument, "solver robber was built for k=" + std::to_string(table_->cops()));
  }
  std::vector<Vertex> s(cops.begin(), cops.end());
  std::sort(s.begin(), s.end());
  return s;
}

Vertex SolverRobberPolicy::place(const Graph& g, const Positions& cops) {
  const auto s = sorted(g, cops);
  const std::size_t c = table_->space().rank(s);
  Vertex best = 0;
  for (Vertex r = 1; r < g.order(); ++r) {
    if (table_->cop_turn(c, r) > table_->cop_turn(c, best)) best = r;
  }
  return best;
}

Vertex SolverRobberPolicy::move(const Graph& g, const Positions& cops, Vertex robber, std::size_t) {
  const auto s = sorted(g, cops);
  Vertex best = robber;
  RoundCount best_value = 0;
  bool have = false;
  for (Vertex to : g.closed_neighborhood(robber)) {
    const RoundCount v = table_->after_robber_move(s, to);
    if (!have || v > best_value) {
      best = to;
      best_value = v;
      have = true;
    }
  }
  return best;
}

PolicyPair extract_policies(std::shared_ptr<const ValueTable> table) {
  return {std::make_unique<SolverCopPolicy>(table), std::make_unique<SolverRobberPolicy>(table)};
}

}  // namespace copsrob
