#pragma once

#include <vector>

#include "ahncut/label.hpp"
#include "ahncut/network.hpp"

namespace ahncut {

// Robust Pn clique potential: pays, for the best base label l, the label cost
// gamma[l] plus weight[i] for every clique member disagreeing with l, truncated
// at gamma_max. Requires weights >= 0 and gamma[l] <= gamma_max.
struct RobustPnClique {
  std::vector<double> weights;   // one per clique member
  std::vector<double> gammas;    // one per base label
  double gamma_max = 0.0;

  void validate() const;  // throws StructureError
};

// Direct evaluation of the clique potential on the members' base labels.
double robust_pn_value(const RobustPnClique& clique, const std::vector<Label>& member_labels);

// The equivalent single-auxiliary-variable pairwise form: the auxiliary unary
// is (gammas..., gamma_max) over the extended label set and each member is tied
// to the auxiliary by a link of the member's weight. Minimizing the auxiliary
// out reproduces robust_pn_value exactly.
struct CliquePairwiseForm {
  std::vector<double> aux_unary;        // num_labels + 1 entries
  std::vector<double> link_weights;     // one per clique member
};

CliquePairwiseForm clique_to_pairwise(const RobustPnClique& clique);

// Convenience: registers the pairwise form of `clique` on an existing builder,
// with the given members on `level` and the auxiliary variable `parent` on
// level + 1.
void attach_clique(NetworkBuilder& builder, const RobustPnClique& clique, int level,
                   const std::vector<int>& members, int parent);

}  // namespace ahncut
