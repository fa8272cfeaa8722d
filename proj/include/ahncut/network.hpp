#pragma once

#include <span>
#include <vector>

#include "ahncut/label.hpp"

namespace ahncut {

// Potts-with-free pairwise term between two variables of the same level:
// cost 0 when the labels agree, lambda/2 when exactly one side is free,
// lambda otherwise. lambda >= 0.
struct PottsEdge {
  int u = 0;
  int v = 0;
  double lambda = 0.0;
};

// Weighted link between a parent variable and one child variable on the level
// below. Costs weight when the parent holds a base label the child disagrees
// with, 0 when the parent is free or agrees. weight >= 0.
struct InterLevelLink {
  int parent = 0;
  int child = 0;
  double weight = 0.0;
};

struct Level {
  int num_vars = 0;
  // Per-variable cost vector. Base level: num_labels entries (the free label is
  // forbidden there and has no stored cost). Auxiliary levels: num_labels + 1
  // entries, the last one being the cost of the free label.
  std::vector<std::vector<double>> unary;
  std::vector<PottsEdge> edges;
  // Links whose parent lives on this level and whose child lives one level
  // below. Always empty on the base level.
  std::vector<InterLevelLink> links;
};

// A multi-level network: a base level of variables over K labels plus zero or
// more auxiliary levels over K+1 labels (the extra one being the free label),
// tied together by inter-level links. Immutable once built; adjacency indices
// are precomputed at construction.
class HierarchicalNetwork {
 public:
  int num_labels() const { return num_labels_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }
  int level_size(int level) const { return levels_[level].num_vars; }
  const Level& level(int level) const { return levels_[level]; }

  // Number of cost slots for a variable of the given level (K or K+1).
  int label_slots(int level) const { return level == 0 ? num_labels_ : num_labels_ + 1; }

  bool allowed(int level, Label l) const { return !(level == 0 && l.is_free()); }

  double unary_cost(int level, int var, Label l) const {
    return levels_[level].unary[var][l.slot(num_labels_)];
  }

  // Unary cost after the link reparameterization that splits every link weight
  // symmetrically: the free slot of a variable gains +weight/2 for each link it
  // participates in as a child and -weight/2 for each link as a parent. Base
  // labels are unchanged. The total energy of any labeling is identical.
  double reparam_unary_cost(int level, int var, Label l) const {
    double c = unary_cost(level, var, l);
    if (l.is_free()) c += free_shift_[level][var];
    return c;
  }

  std::span<const int> edge_ids(int level, int var) const { return edge_ids_[level][var]; }
  std::span<const int> parent_link_ids(int level, int var) const {
    return parent_link_ids_[level][var];
  }
  // Ids into level(level + 1).links for which this variable is the child.
  std::span<const int> child_link_ids(int level, int var) const {
    return child_link_ids_[level][var];
  }

  // Sum of |unary| + lambda + weight over the whole network; used to size the
  // sentinel cost that stands in for forbidden states in move encodings.
  double magnitude_bound() const { return magnitude_bound_; }

  int num_aux_vars() const { return num_aux_vars_; }

 private:
  friend class NetworkBuilder;
  HierarchicalNetwork() = default;

  int num_labels_ = 0;
  std::vector<Level> levels_;
  std::vector<std::vector<std::vector<int>>> edge_ids_;
  std::vector<std::vector<std::vector<int>>> parent_link_ids_;
  std::vector<std::vector<std::vector<int>>> child_link_ids_;
  std::vector<std::vector<double>> free_shift_;
  double magnitude_bound_ = 0.0;
  int num_aux_vars_ = 0;
};

// Assembles a HierarchicalNetwork and validates the structural invariants:
// positive label/level counts, index ranges, non-negative weights, unary vector
// shapes, and (on auxiliary levels) base-label costs <= free-label cost.
class NetworkBuilder {
 public:
  NetworkBuilder(int num_labels, int num_levels);

  NetworkBuilder& set_level_size(int level, int num_vars);
  NetworkBuilder& set_unary(int level, int var, std::vector<double> costs);
  NetworkBuilder& add_edge(int level, int u, int v, double lambda);
  NetworkBuilder& add_link(int parent_level, int parent, int child, double weight);

  HierarchicalNetwork build();

 private:
  int num_labels_;
  std::vector<Level> levels_;
  std::vector<std::vector<bool>> unary_set_;
};

// One label per variable per level. levels[h][i] is the label of variable i on
// level h (h = 0 is the base level).
struct Labeling {
  std::vector<std::vector<Label>> levels;

  static Labeling sized(const HierarchicalNetwork& net, Label fill_base, Label fill_aux);

  std::vector<Label>& base() { return levels.front(); }
  const std::vector<Label>& base() const { return levels.front(); }
};

// Throws InvalidLabelingError unless the labeling matches the network's shape
// and respects the base-level free-label prohibition.
void validate_labeling(const HierarchicalNetwork& net, const Labeling& x);

}  // namespace ahncut
