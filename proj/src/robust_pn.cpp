#include "ahncut/robust_pn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ahncut/errors.hpp"

namespace ahncut {

void RobustPnClique::validate() const {
  if (gammas.empty()) throw StructureError("clique needs at least one base label cost");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w)) throw StructureError("clique member weight must be >= 0");
  if (!std::isfinite(gamma_max)) throw StructureError("clique truncation cost must be finite");
  for (double g : gammas) {
    if (!std::isfinite(g)) throw StructureError("clique label cost must be finite");
    if (g > gamma_max) throw StructureError("clique label cost exceeds the truncation cost");
  }
}

double robust_pn_value(const RobustPnClique& clique, const std::vector<Label>& member_labels) {
  clique.validate();
  if (member_labels.size() != clique.weights.size())
    throw ParameterError("clique has " + std::to_string(clique.weights.size()) + " members, got " +
                         std::to_string(member_labels.size()) + " labels");
  double best = clique.gamma_max;
  for (int l = 0; l < static_cast<int>(clique.gammas.size()); ++l) {
    double cost = clique.gammas[l];
    for (size_t i = 0; i < member_labels.size(); ++i)
      if (member_labels[i] != Label::base(l)) cost += clique.weights[i];
    best = std::min(best, cost);
  }
  return best;
}

CliquePairwiseForm clique_to_pairwise(const RobustPnClique& clique) {
  clique.validate();
  CliquePairwiseForm form;
  form.aux_unary = clique.gammas;
  form.aux_unary.push_back(clique.gamma_max);
  form.link_weights = clique.weights;
  return form;
}

void attach_clique(NetworkBuilder& builder, const RobustPnClique& clique, int level,
                   const std::vector<int>& members, int parent) {
  if (members.size() != clique.weights.size())
    throw ParameterError("member index count does not match the clique weight count");
  CliquePairwiseForm form = clique_to_pairwise(clique);
  builder.set_unary(level + 1, parent, form.aux_unary);
  for (size_t i = 0; i < members.size(); ++i)
    builder.add_link(level + 1, parent, members[i], form.link_weights[i]);
}

}  // namespace ahncut
