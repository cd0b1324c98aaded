#pragma once

#include <memory>

#include "copsrob/policy.hpp"
#include "copsrob/solver.hpp"

namespace copsrob {

/// Solves (g, k) once per process and shares the table. Thread-safe.
std::shared_ptr<const ValueTable> cached_solve(const Graph& g, std::size_t k, const SolveLimits& limits = {});
void clear_solver_cache();

/// Optimal cops read off a solved table. Placement is the lexicographically
/// smallest optimal configuration; each move minimizes the resulting value,
/// ties going to the smallest destination configuration.
class SolverCopPolicy final : public CopPolicy {
 public:
  explicit SolverCopPolicy(std::shared_ptr<const ValueTable> table);

  std::string name() const override { return "solver"; }
  Positions place(const Graph& g, std::size_t k) override;
  Positions move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;
  nlohmann::json metadata() const override;

 private:
  std::shared_ptr<const ValueTable> table_;
  CaptureResult optimum_;
};

/// Optimal robber: places and steps to maximize the value, smallest id on ties.
class SolverRobberPolicy final : public RobberPolicy {
 public:
  explicit SolverRobberPolicy(std::shared_ptr<const ValueTable> table);

  std::string name() const override { return "solver"; }
  Vertex place(const Graph& g, const Positions& cops) override;
  Vertex move(const Graph& g, const Positions& cops, Vertex robber, std::size_t round) override;

 private:
  std::vector<Vertex> sorted(const Graph& g, const Positions& cops) const;
  std::shared_ptr<const ValueTable> table_;
};

struct PolicyPair {
  std::unique_ptr<CopPolicy> cops;
  std::unique_ptr<RobberPolicy> robber;
};

PolicyPair extract_policies(std::shared_ptr<const ValueTable> table);

}  // namespace copsrob
