#pragma once

#include <limits>
#include <vector>

namespace ahncut {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// Pseudo-boolean energy: a constant, unary terms, and pairwise terms that must
// each be submodular (t00 + t11 <= t01 + t10). Prohibited states are encoded by
// kInfiniteCost, which is only admitted on unary entries and on the t01/t10
// cells of pairwise terms (an infinite t00/t11 could not be submodular).
class QpbProblem {
 public:
  explicit QpbProblem(int num_vars);

  int num_vars() const { return num_vars_; }

  void add_constant(double c) { constant_ += c; }
  void add_unary(int v, double cost0, double cost1);
  // Throws NonSubmodularError (naming the pair) if t00 + t11 > t01 + t10.
  void add_pairwise(int u, int v, double t00, double t01, double t10, double t11);

  double constant() const { return constant_; }

  // Plain evaluation; returns kInfiniteCost if the assignment hits any
  // prohibited entry.
  double evaluate(const std::vector<bool>& assignment) const;

 private:
  friend struct QpbReduction;
  struct Pairwise {
    int u, v;
    double t00, t01, t10, t11;
  };
  int num_vars_;
  double constant_ = 0.0;
  std::vector<double> unary0_, unary1_;
  std::vector<Pairwise> pairwise_;
};

struct QpbSolution {
  std::vector<bool> assignment;
  double energy = 0.0;
  double flow_value = 0.0;     // max-flow value of the underlying cut problem
  double flow_constant = 0.0;  // energy = flow_value + flow_constant at the optimum
};

// Exact minimization by reduction to a minimum cut. Deterministic: among tied
// optima it returns the one whose zero-set is maximal w.r.t. residual
// source-reachability. Throws InfeasibleError when no finite assignment
// exists.
QpbSolution minimize_qpb(const QpbProblem& problem);

}  // namespace ahncut
