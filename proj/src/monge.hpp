#pragma once

// Shared encoding of three-level ordered variables into pairs of booleans, plus
// the telescoping decomposition of Monge (lattice-submodular) 3x3 tables into
// submodular pairwise terms. Internal to the library.

#include <array>

#include "ahncut/qpb.hpp"

namespace ahncut::detail {

// One ordered variable with levels {0,1,2} encoded as level = low + high.
// The combination (low=0, high=1) is prohibited.
struct LevelPair {
  int low = -1;
  int high = -1;
};

// Prohibits (low=0, high=1) so that exactly levels 0..2 remain.
inline void add_monotone_gadget(QpbProblem& q, LevelPair v) {
  q.add_pairwise(v.low, v.high, 0.0, kInfiniteCost, 0.0, 0.0);
}

// Level costs (must be finite; substitute sentinels for forbidden levels before
// calling). Encoded as u[0] + (u[1]-u[0])*low + (u[2]-u[1])*high, which equals
// u[level] on every admitted state.
inline void add_level_unary(QpbProblem& q, LevelPair v, const std::array<double, 3>& u) {
  q.add_constant(u[0]);
  q.add_unary(v.low, 0.0, u[1] - u[0]);
  q.add_unary(v.high, 0.0, u[2] - u[1]);
}

// theta[a][b] = cost of (level_a, level_b). Requires the Monge condition
// theta[p+1][q+1] - theta[p][q+1] - theta[p+1][q] + theta[p][q] <= 0; the
// telescoping decomposition then reproduces theta exactly on all nine states
// with each interaction term submodular. Throws NonSubmodularError otherwise.
void add_monge_pairwise(QpbProblem& q, LevelPair a, LevelPair b,
                        const std::array<std::array<double, 3>, 3>& theta, double tol = 1e-9);

}  // namespace ahncut::detail
