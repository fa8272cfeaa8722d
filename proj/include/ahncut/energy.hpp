#pragma once

#include <cstdint>
#include <vector>

#include "ahncut/network.hpp"

namespace ahncut {

// Pairwise cost of a same-level edge: 0 if equal, lambda/2 if exactly one side
// is free, lambda otherwise. Symmetric, zero diagonal, triangle inequality.
inline double edge_cost(double lambda, Label a, Label b) {
  if (a == b) return 0.0;
  if (a.is_free() || b.is_free()) return 0.5 * lambda;
  return lambda;
}

// Original (asymmetric) link cost: 0 when the parent is free or agrees with the
// child, weight otherwise.
inline double link_cost(double weight, Label child, Label parent) {
  if (parent.is_free() || parent == child) return 0.0;
  return weight;
}

// Link cost after the symmetric reparameterization (to be combined with
// reparam_unary_cost): 0 if equal, weight/2 if exactly one side is free,
// weight otherwise. Symmetric, zero diagonal, triangle inequality.
inline double reparam_link_cost(double weight, Label child, Label parent) {
  if (child == parent) return 0.0;
  if (child.is_free() || parent.is_free()) return 0.5 * weight;
  return weight;
}

// Exact energy of a full labeling: all unaries, all same-level edges, all
// inter-level links. Throws InvalidLabelingError on shape/validity mismatch.
double eval_joint(const HierarchicalNetwork& net, const Labeling& x);

struct HigherOrderResult {
  double energy = 0.0;
  Labeling labeling;  // the given base labels plus minimizing auxiliary labels
};

// Assignments an exact auxiliary minimization may enumerate per coupled
// component before giving up with OracleInfeasibleError.
inline constexpr std::int64_t kExactAuxBudget = 1'000'000;

// Energy of a base labeling with every auxiliary level minimized out exactly.
// Auxiliary variables that are not coupled to each other (by same-level edges
// or aux-to-aux links) are minimized independently; coupled components are
// enumerated if they fit kExactAuxBudget, otherwise OracleInfeasibleError is
// thrown. Ties prefer the lowest base label index, then the free label.
HigherOrderResult eval_higher_order(const HierarchicalNetwork& net,
                                    const std::vector<Label>& base_labels);

}  // namespace ahncut
