#include <array>
#include <vector>

#include "ahncut/errors.hpp"
#include "ahncut/ishikawa.hpp"
#include "ahncut/qpb.hpp"
#include "ahncut/rng.hpp"
#include "doctest.h"

using namespace ahncut;

namespace {

double evaluate(const ThreeLevelProblem& p, const std::vector<int>& levels) {
  double e = 0.0;
  for (int v = 0; v < p.num_vars; ++v) {
    if (p.unary[v][levels[v]] == kInfiniteCost) return kInfiniteCost;
    e += p.unary[v][levels[v]];
  }
  for (const ThreeLevelProblem::Edge& edge : p.edges)
    e += edge.diff_cost[levels[edge.u] - levels[edge.v] + 2];
  return e;
}

double exhaustive_min(const ThreeLevelProblem& p, std::vector<int>* arg = nullptr) {
  std::vector<int> levels(p.num_vars, 0);
  double best = kInfiniteCost;
  while (true) {
    const double e = evaluate(p, levels);
    if (e < best) {
      best = e;
      if (arg) *arg = levels;
    }
    int i = 0;
    while (i < p.num_vars && levels[i] == 2) levels[i++] = 0;
    if (i == p.num_vars) break;
    ++levels[i];
  }
  return best;
}

// Absolute-difference cost with slope `half`, the shape every intra-level term
// of a range move has after the label ordering.
std::array<double, 5> vee(double half) {
  return {2 * half, half, 0.0, half, 2 * half};
}

}  // namespace

TEST_CASE("forced endpoints pay one full weight across the chain") {
  const double k = 2.0;
  ThreeLevelProblem p;
  p.num_vars = 3;
  p.unary = {{0.0, kInfiniteCost, kInfiniteCost},
             {0.0, 0.0, 0.0},
             {kInfiniteCost, kInfiniteCost, 0.0}};
  p.edges.push_back({0, 1, vee(k / 2)});
  p.edges.push_back({1, 2, vee(k / 2)});

  const ThreeLevelSolution s = ishikawa_minimize(p);
  CHECK(s.energy == k);  // any middle level yields |0-m| + |m-2| = 2 halves
  CHECK(s.levels[0] == 0);
  CHECK(s.levels[2] == 2);
  // Tie handling is deterministic.
  const ThreeLevelSolution again = ishikawa_minimize(p);
  CHECK(again.levels == s.levels);
}

TEST_CASE("uniformly preferred level wins everywhere") {
  ThreeLevelProblem p;
  p.num_vars = 4;
  p.unary.assign(4, {1.0, 0.0, 1.0});
  for (int v = 0; v + 1 < 4; ++v) p.edges.push_back({v, v + 1, vee(0.5)});
  const ThreeLevelSolution s = ishikawa_minimize(p);
  CHECK(s.energy == 0.0);
  for (int v = 0; v < 4; ++v) CHECK(s.levels[v] == 1);
}

TEST_CASE("random convex chains match exhaustive enumeration") {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    ThreeLevelProblem p;
    p.num_vars = 1 + static_cast<int>(rng.below(6));
    for (int v = 0; v < p.num_vars; ++v) {
      std::array<double, 3> u;
      for (double& c : u) c = rng.dyadic(4.0);
      if (rng.below(8) == 0) u[rng.below(3)] = kInfiniteCost;  // occasional forbidden level
      p.unary.push_back(u);
    }
    const int arcs = static_cast<int>(rng.below(2 * p.num_vars));
    for (int a = 0; a < arcs && p.num_vars >= 2; ++a) {
      const int u = static_cast<int>(rng.below(p.num_vars));
      int v = static_cast<int>(rng.below(p.num_vars));
      if (v == u) v = (v + 1) % p.num_vars;
      // Convex in the difference: c*|d| + extra convex bumps at the extremes.
      const double slope = rng.dyadic(2.0), bump = rng.dyadic(1.0);
      p.edges.push_back({u, v,
                         {2 * slope + bump + bump, slope + bump, 0.0, slope + bump,
                          2 * slope + bump + bump}});
    }
    std::vector<int> want_arg;
    const double want = exhaustive_min(p, &want_arg);
    if (want == kInfiniteCost) {
      CHECK_THROWS_AS(ishikawa_minimize(p), InfeasibleError);
      continue;
    }
    const ThreeLevelSolution s = ishikawa_minimize(p);
    CHECK(s.energy == want);
    CHECK(evaluate(p, s.levels) == want);
  }
}

TEST_CASE("non-convex difference costs are rejected") {
  ThreeLevelProblem p;
  p.num_vars = 2;
  p.unary.assign(2, {0.0, 0.0, 0.0});
  // diff_cost[-1..1] = (0, 1, 0) violates convexity: 0 + 0 < 2*1.
  p.edges.push_back({0, 1, {4.0, 0.0, 1.0, 0.0, 4.0}});
  CHECK_THROWS_AS(ishikawa_minimize(p), NonSubmodularError);
}

TEST_CASE("fully forbidden variables make the problem infeasible") {
  ThreeLevelProblem p;
  p.num_vars = 1;
  p.unary = {{kInfiniteCost, kInfiniteCost, kInfiniteCost}};
  CHECK_THROWS_AS(ishikawa_minimize(p), InfeasibleError);
}
