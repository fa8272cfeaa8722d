#include "ahncut/ishikawa.hpp"

#include <cmath>
#include <string>

#include "ahncut/errors.hpp"
#include "monge.hpp"

namespace ahncut {

ThreeLevelSolution ishikawa_minimize(const ThreeLevelProblem& problem) {
  if (static_cast<int>(problem.unary.size()) != problem.num_vars)
    throw ParameterError("unary count does not match the variable count");

  double finite_sum = 1.0;
  for (const auto& u : problem.unary)
    for (double c : u) {
      if (std::isnan(c) || c == -kInfiniteCost) throw ParameterError("invalid level cost");
      if (!std::isinf(c)) finite_sum += std::abs(c);
    }
  for (const auto& e : problem.edges) {
    if (e.u < 0 || e.u >= problem.num_vars || e.v < 0 || e.v >= problem.num_vars || e.u == e.v)
      throw ParameterError("edge endpoint out of range");
    for (double c : e.diff_cost) {
      if (!std::isfinite(c)) throw ParameterError("edge costs must be finite");
      finite_sum += std::abs(c);
    }
    for (int d = -1; d <= 1; ++d) {
      double second =
          e.diff_cost[d + 1] + e.diff_cost[d + 3] - 2.0 * e.diff_cost[d + 2];
      if (second < -1e-9)
        throw NonSubmodularError("edge cost is not convex in the level difference at offset " +
                                 std::to_string(d));
    }
  }
  double sentinel = 4.0;
  while (sentinel < 4.0 * finite_sum) sentinel *= 2.0;

  QpbProblem qpb(2 * problem.num_vars);
  std::vector<detail::LevelPair> vars(problem.num_vars);
  for (int v = 0; v < problem.num_vars; ++v) {
    vars[v] = {2 * v, 2 * v + 1};
    detail::add_monotone_gadget(qpb, vars[v]);
    std::array<double, 3> u = problem.unary[v];
    for (double& c : u)
      if (std::isinf(c)) c = sentinel;
    detail::add_level_unary(qpb, vars[v], u);
  }
  for (const auto& e : problem.edges) {
    std::array<std::array<double, 3>, 3> theta;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) theta[a][b] = e.diff_cost[a - b + 2];
    detail::add_monge_pairwise(qpb, vars[e.u], vars[e.v], theta);
  }

  QpbSolution cut = minimize_qpb(qpb);
  ThreeLevelSolution solution;
  solution.levels.resize(problem.num_vars);
  double energy = 0.0;
  for (int v = 0; v < problem.num_vars; ++v) {
    int level = (cut.assignment[2 * v] ? 1 : 0) + (cut.assignment[2 * v + 1] ? 1 : 0);
    solution.levels[v] = level;
    energy += problem.unary[v][level];
  }
  for (const auto& e : problem.edges)
    energy += e.diff_cost[solution.levels[e.u] - solution.levels[e.v] + 2];
  if (std::isinf(energy)) throw InfeasibleError("every three-level assignment is forbidden");
  solution.energy = energy;
  return solution;
}

}  // namespace ahncut
