#include "ahncut/qpb.hpp"

#include <cmath>
#include <string>

#include "ahncut/errors.hpp"
#include "ahncut/maxflow.hpp"

namespace ahncut {

namespace {

bool is_inf(double v) { return std::isinf(v); }

void check_entry(double v, const char* what) {
  if (std::isnan(v) || v == -kInfiniteCost)
    throw ParameterError(std::string("invalid ") + what + " cost");
}

}  // namespace

QpbProblem::QpbProblem(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw ParameterError("variable count must be >= 0");
  unary0_.assign(num_vars, 0.0);
  unary1_.assign(num_vars, 0.0);
}

void QpbProblem::add_unary(int v, double cost0, double cost1) {
  if (v < 0 || v >= num_vars_) throw ParameterError("unary variable out of range");
  check_entry(cost0, "unary");
  check_entry(cost1, "unary");
  unary0_[v] += cost0;
  unary1_[v] += cost1;
}

void QpbProblem::add_pairwise(int u, int v, double t00, double t01, double t10, double t11) {
  if (u < 0 || u >= num_vars_ || v < 0 || v >= num_vars_)
    throw ParameterError("pairwise variable out of range");
  if (u == v) throw ParameterError("pairwise term needs two distinct variables");
  for (double t : {t00, t01, t10, t11}) check_entry(t, "pairwise");
  if (is_inf(t00) || is_inf(t11))
    throw NonSubmodularError("infinite diagonal cost on pair (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
  if (!is_inf(t01) && !is_inf(t10) && t00 + t11 > t01 + t10)
    throw NonSubmodularError("non-submodular term on pair (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
  pairwise_.push_back({u, v, t00, t01, t10, t11});
}

double QpbProblem::evaluate(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != num_vars_)
    throw ParameterError("assignment size mismatch");
  double total = constant_;
  for (int v = 0; v < num_vars_; ++v) total += assignment[v] ? unary1_[v] : unary0_[v];
  for (const Pairwise& p : pairwise_) {
    double t = assignment[p.u] ? (assignment[p.v] ? p.t11 : p.t10)
                               : (assignment[p.v] ? p.t01 : p.t00);
    if (is_inf(t)) return kInfiniteCost;
    total += t;
  }
  return total;
}

// Builds the standard additive cut representation: every finite pairwise term
// decomposes into a constant, two unary adjustments, and one non-negative
// interaction capacity on the arc u->v (paid when u is with the source / 0 and
// v with the sink / 1); infinities become a sentinel larger than any finite
// cut.
struct QpbReduction {
  explicit QpbReduction(const QpbProblem& p) : problem(p) {}

  QpbSolution solve() {
    const int n = problem.num_vars_;
    double finite_sum = 1.0;
    for (int v = 0; v < n; ++v) {
      if (!is_inf(problem.unary0_[v])) finite_sum += std::abs(problem.unary0_[v]);
      if (!is_inf(problem.unary1_[v])) finite_sum += std::abs(problem.unary1_[v]);
    }
    for (const auto& t : problem.pairwise_)
      for (double c : {t.t00, t.t01, t.t10, t.t11})
        if (!is_inf(c)) finite_sum += std::abs(c);
    // Any assignment through a sentinel must cost more than any finite one;
    // finite energies live in [-finite_sum, finite_sum], so the sentinel has to
    // clear twice that. A power of two keeps sentinel arithmetic exact for
    // dyadic inputs.
    double sentinel = 4.0;
    while (sentinel < 4.0 * finite_sum) sentinel *= 2.0;
    auto finite = [&](double c) { return is_inf(c) ? sentinel : c; };

    std::vector<double> cost1(n, 0.0), cost0(n, 0.0);
    double constant = 0.0;
    FlowGraph graph(n);
    for (int v = 0; v < n; ++v) {
      cost1[v] += finite(problem.unary1_[v]);
      cost0[v] += finite(problem.unary0_[v]);
    }
    for (const auto& t : problem.pairwise_) {
      double t00 = finite(t.t00), t01 = finite(t.t01), t10 = finite(t.t10), t11 = finite(t.t11);
      constant += t00;
      cost1[t.u] += t10 - t00;
      cost1[t.v] += t11 - t10;
      double w = t01 + t10 - t00 - t11;
      if (w < 0.0) w = 0.0;  // guarded by the submodularity check; clamp rounding dust
      if (w > 0.0) graph.add_arc(t.u, t.v, w, 0.0);
    }
    for (int v = 0; v < n; ++v) {
      constant += std::min(cost0[v], cost1[v]);
      if (cost1[v] > cost0[v])
        graph.add_terminal(v, cost1[v] - cost0[v], 0.0);
      else if (cost0[v] > cost1[v])
        graph.add_terminal(v, 0.0, cost0[v] - cost1[v]);
    }

    FlowGraph::Result cut = graph.max_flow();
    QpbSolution solution;
    solution.assignment.resize(n);
    for (int v = 0; v < n; ++v) solution.assignment[v] = !cut.source_side[v];
    solution.flow_value = cut.value;
    solution.flow_constant = constant + problem.constant_;
    solution.energy = problem.evaluate(solution.assignment);
    if (is_inf(solution.energy))
      throw InfeasibleError("pseudo-boolean problem has no finite assignment");
    return solution;
  }

  const QpbProblem& problem;
};

QpbSolution minimize_qpb(const QpbProblem& problem) { return QpbReduction(problem).solve(); }

}  // namespace ahncut
