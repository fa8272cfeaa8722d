#pragma once

#include <array>
#include <vector>

namespace ahncut {

// Variables over three ordered levels {0,1,2} with arbitrary (possibly
// forbidden) level costs and pairwise costs that are convex functions of the
// level difference. This is the classic layered-graph construction restricted
// to three levels, which is all the range moves need.
struct ThreeLevelProblem {
  int num_vars = 0;
  // unary[v][level]; kInfiniteCost marks a forbidden level.
  std::vector<std::array<double, 3>> unary;
  struct Edge {
    int u = 0;
    int v = 0;
    // diff_cost[d + 2] = cost of (level_u - level_v == d), d in -2..2.
    // Must be finite and convex: diff_cost[d-1] + diff_cost[d+1] >= 2*diff_cost[d].
    std::array<double, 5> diff_cost{};
  };
  std::vector<Edge> edges;
};

struct ThreeLevelSolution {
  std::vector<int> levels;
  double energy = 0.0;
};

// Exact minimization via a single minimum cut. Throws NonSubmodularError on a
// non-convex edge and InfeasibleError when every assignment is forbidden.
// Deterministic tie handling follows the cut's residual-reachability rule.
ThreeLevelSolution ishikawa_minimize(const ThreeLevelProblem& problem);

}  // namespace ahncut
