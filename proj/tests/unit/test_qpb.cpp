#include <string>
#include <vector>

#include "ahncut/errors.hpp"
#include "ahncut/qpb.hpp"
#include "ahncut/rng.hpp"
#include "doctest.h"

using namespace ahncut;

namespace {

double exhaustive_min(const QpbProblem& p, std::vector<bool>* arg = nullptr) {
  double best = kInfiniteCost;
  std::vector<bool> x(p.num_vars());
  for (int mask = 0; mask < (1 << p.num_vars()); ++mask) {
    for (int i = 0; i < p.num_vars(); ++i) x[i] = (mask >> i) & 1;
    const double e = p.evaluate(x);
    if (e < best) {
      best = e;
      if (arg) *arg = x;
    }
  }
  return best;
}

QpbProblem draw_submodular(Rng& rng, int max_vars) {
  const int n = 1 + static_cast<int>(rng.below(max_vars));
  QpbProblem p(n);
  p.add_constant(rng.dyadic(2.0));
  for (int i = 0; i < n; ++i) p.add_unary(i, rng.dyadic(4.0), rng.dyadic(4.0));
  const int terms = static_cast<int>(rng.below(2 * n + 1));
  for (int t = 0; t < terms; ++t) {
    const int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    if (v == u) v = (v + 1) % n;
    if (u == v) continue;  // n == 1
    // Draw t01/t10 first, then keep t00 + t11 below their sum.
    const double t01 = rng.dyadic(4.0), t10 = rng.dyadic(4.0);
    const double slack = t01 + t10;
    const double t00 = rng.dyadic(slack > 0 ? slack : 0.0);
    const double t11 = rng.dyadic(slack - t00 > 0 ? slack - t00 : 0.0);
    p.add_pairwise(u, v, t00, t01, t10, t11);
  }
  return p;
}

}  // namespace

TEST_CASE("single-variable minimum") {
  QpbProblem p(1);
  p.add_unary(0, 2.0, 1.0);
  const QpbSolution s = minimize_qpb(p);
  CHECK(s.energy == 1.0);
  CHECK(s.assignment == std::vector<bool>{true});
}

TEST_CASE("prohibited-state gadget never emits the forbidden pair") {
  // Infinite cost on (u,v) = (0,1); push the unaries toward exactly that state.
  QpbProblem p(2);
  p.add_unary(0, 0.0, 5.0);
  p.add_unary(1, 5.0, 0.0);
  p.add_pairwise(0, 1, 0.0, kInfiniteCost, 0.0, 0.0);
  const QpbSolution s = minimize_qpb(p);
  CHECK_FALSE((s.assignment[0] == false && s.assignment[1] == true));
  CHECK(s.energy == exhaustive_min(p));
  CHECK(s.energy == 5.0);  // both admitted escapes cost 5
}

TEST_CASE("non-submodular terms are rejected naming the pair") {
  QpbProblem p(3);
  CHECK_THROWS_AS(p.add_pairwise(0, 2, 1.0, 0.0, 0.0, 1.0), NonSubmodularError);
  try {
    p.add_pairwise(0, 2, 1.0, 0.0, 0.0, 1.0);
  } catch (const NonSubmodularError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("0") != std::string::npos);
    CHECK(msg.find("2") != std::string::npos);
  }
}

TEST_CASE("fully prohibited problems raise the infeasibility error") {
  QpbProblem p(1);
  p.add_unary(0, kInfiniteCost, kInfiniteCost);
  CHECK_THROWS_AS(minimize_qpb(p), InfeasibleError);
}

TEST_CASE("evaluate reports infinity on prohibited assignments") {
  QpbProblem p(2);
  p.add_pairwise(0, 1, 0.0, kInfiniteCost, 0.0, 0.0);
  CHECK(p.evaluate({false, true}) == kInfiniteCost);
  CHECK(p.evaluate({false, false}) == 0.0);
}

TEST_CASE("random submodular problems minimize exactly") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const QpbProblem p = draw_submodular(rng, 10);
    std::vector<bool> arg;
    const double want = exhaustive_min(p, &arg);
    const QpbSolution s = minimize_qpb(p);
    CHECK(s.energy == want);  // dyadic costs: exact equality
    CHECK(p.evaluate(s.assignment) == want);
  }
}

TEST_CASE("problems with prohibited pairs still minimize exactly") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    QpbProblem p = draw_submodular(rng, 8);
    if (p.num_vars() >= 2) p.add_pairwise(0, 1, 0.0, kInfiniteCost, 0.0, 0.0);
    const double want = exhaustive_min(p);
    const QpbSolution s = minimize_qpb(p);
    CHECK(s.energy == want);
    CHECK(p.evaluate(s.assignment) == want);
  }
}
