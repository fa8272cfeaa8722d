#include "monge.hpp"

#include <string>

#include "ahncut/errors.hpp"

namespace ahncut::detail {

void add_monge_pairwise(QpbProblem& q, LevelPair a, LevelPair b,
                        const std::array<std::array<double, 3>, 3>& theta, double tol) {
  q.add_constant(theta[0][0]);
  q.add_unary(a.low, 0.0, theta[1][0] - theta[0][0]);
  q.add_unary(a.high, 0.0, theta[2][0] - theta[1][0]);
  q.add_unary(b.low, 0.0, theta[0][1] - theta[0][0]);
  q.add_unary(b.high, 0.0, theta[0][2] - theta[0][1]);
  const int bits_a[2] = {a.low, a.high};
  const int bits_b[2] = {b.low, b.high};
  for (int p = 0; p < 2; ++p) {
    for (int r = 0; r < 2; ++r) {
      double mixed =
          theta[p + 1][r + 1] - theta[p][r + 1] - theta[p + 1][r] + theta[p][r];
      if (mixed > tol)
        throw NonSubmodularError("three-level table is not lattice submodular (cell " +
                                 std::to_string(p) + "," + std::to_string(r) + ")");
      if (mixed > 0.0) mixed = 0.0;  // rounding dust within tol
      if (mixed != 0.0) q.add_pairwise(bits_a[p], bits_b[r], 0.0, 0.0, 0.0, mixed);
    }
  }
}

}  // namespace ahncut::detail
