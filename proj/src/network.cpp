#include "ahncut/network.hpp"

#include <cmath>
#include <string>

#include "ahncut/errors.hpp"

namespace ahncut {

namespace {

std::string at(int level, int var) {
  return "level " + std::to_string(level + 1) + " var " + std::to_string(var);
}

}  // namespace

NetworkBuilder::NetworkBuilder(int num_labels, int num_levels) : num_labels_(num_labels) {
  if (num_labels < 1) throw StructureError("label count must be >= 1");
  if (num_levels < 1) throw StructureError("level count must be >= 1");
  levels_.resize(num_levels);
  unary_set_.resize(num_levels);
}

NetworkBuilder& NetworkBuilder::set_level_size(int level, int num_vars) {
  if (level < 0 || level >= static_cast<int>(levels_.size()))
    throw StructureError("level index " + std::to_string(level + 1) + " out of range");
  if (num_vars < 1) throw StructureError("level must have at least one variable");
  Level& lv = levels_[level];
  lv.num_vars = num_vars;
  int slots = level == 0 ? num_labels_ : num_labels_ + 1;
  lv.unary.assign(num_vars, std::vector<double>(slots, 0.0));
  unary_set_[level].assign(num_vars, false);
  return *this;
}

NetworkBuilder& NetworkBuilder::set_unary(int level, int var, std::vector<double> costs) {
  if (level < 0 || level >= static_cast<int>(levels_.size()))
    throw StructureError("level index " + std::to_string(level + 1) + " out of range");
  Level& lv = levels_[level];
  if (var < 0 || var >= lv.num_vars) throw StructureError("variable index out of range at " + at(level, var));
  size_t want = level == 0 ? num_labels_ : num_labels_ + 1;
  if (costs.size() != want)
    throw StructureError("unary vector for " + at(level, var) + " must have " + std::to_string(want) +
                         " entries, got " + std::to_string(costs.size()));
  for (double c : costs)
    if (!std::isfinite(c)) throw StructureError("non-finite unary cost at " + at(level, var));
  lv.unary[var] = std::move(costs);
  unary_set_[level][var] = true;
  return *this;
}

NetworkBuilder& NetworkBuilder::add_edge(int level, int u, int v, double lambda) {
  if (level < 0 || level >= static_cast<int>(levels_.size()))
    throw StructureError("level index " + std::to_string(level + 1) + " out of range");
  Level& lv = levels_[level];
  if (u < 0 || u >= lv.num_vars || v < 0 || v >= lv.num_vars)
    throw StructureError("edge endpoint out of range on level " + std::to_string(level + 1));
  if (u == v) throw StructureError("self edge on level " + std::to_string(level + 1));
  if (!(lambda >= 0.0)) throw StructureError("edge strength must be >= 0");
  lv.edges.push_back({u, v, lambda});
  return *this;
}

NetworkBuilder& NetworkBuilder::add_link(int parent_level, int parent, int child, double weight) {
  if (parent_level < 1 || parent_level >= static_cast<int>(levels_.size()))
    throw StructureError("link level " + std::to_string(parent_level + 1) + " out of range");
  Level& up = levels_[parent_level];
  Level& down = levels_[parent_level - 1];
  if (parent < 0 || parent >= up.num_vars)
    throw StructureError("link parent out of range at " + at(parent_level, parent));
  if (child < 0 || child >= down.num_vars)
    throw StructureError("link child out of range at " + at(parent_level - 1, child));
  if (!(weight >= 0.0)) throw StructureError("link weight must be >= 0");
  up.links.push_back({parent, child, weight});
  return *this;
}

HierarchicalNetwork NetworkBuilder::build() {
  int num_levels = static_cast<int>(levels_.size());
  for (int h = 0; h < num_levels; ++h)
    if (levels_[h].num_vars == 0)
      throw StructureError("level " + std::to_string(h + 1) + " has no size set");

  // Auxiliary unary vectors must keep every base-label cost at or below the
  // free-label cost: the free slot plays the role of the clique truncation.
  for (int h = 1; h < num_levels; ++h) {
    const Level& lv = levels_[h];
    for (int i = 0; i < lv.num_vars; ++i) {
      double free_cost = lv.unary[i][num_labels_];
      for (int l = 0; l < num_labels_; ++l)
        if (lv.unary[i][l] > free_cost)
          throw StructureError("base-label cost exceeds free-label cost at " + at(h, i));
    }
  }

  HierarchicalNetwork net;
  net.num_labels_ = num_labels_;
  net.levels_ = std::move(levels_);

  net.edge_ids_.resize(num_levels);
  net.parent_link_ids_.resize(num_levels);
  net.child_link_ids_.resize(num_levels);
  net.free_shift_.resize(num_levels);
  double bound = 0.0;
  int aux = 0;
  for (int h = 0; h < num_levels; ++h) {
    const Level& lv = net.levels_[h];
    if (h > 0) aux += lv.num_vars;
    net.edge_ids_[h].resize(lv.num_vars);
    net.parent_link_ids_[h].resize(lv.num_vars);
    net.child_link_ids_[h].resize(lv.num_vars);
    net.free_shift_[h].assign(lv.num_vars, 0.0);
    for (int e = 0; e < static_cast<int>(lv.edges.size()); ++e) {
      net.edge_ids_[h][lv.edges[e].u].push_back(e);
      net.edge_ids_[h][lv.edges[e].v].push_back(e);
      bound += lv.edges[e].lambda;
    }
    for (int k = 0; k < static_cast<int>(lv.links.size()); ++k) {
      const InterLevelLink& link = lv.links[k];
      net.parent_link_ids_[h][link.parent].push_back(k);
      net.child_link_ids_[h - 1][link.child].push_back(k);
      net.free_shift_[h][link.parent] -= 0.5 * link.weight;
      net.free_shift_[h - 1][link.child] += 0.5 * link.weight;
      bound += link.weight;
    }
    for (const auto& u : lv.unary)
      for (double c : u) bound += std::abs(c);
  }
  net.magnitude_bound_ = bound;
  net.num_aux_vars_ = aux;
  return net;
}

Labeling Labeling::sized(const HierarchicalNetwork& net, Label fill_base, Label fill_aux) {
  Labeling x;
  x.levels.resize(net.num_levels());
  for (int h = 0; h < net.num_levels(); ++h)
    x.levels[h].assign(net.level_size(h), h == 0 ? fill_base : fill_aux);
  return x;
}

void validate_labeling(const HierarchicalNetwork& net, const Labeling& x) {
  if (static_cast<int>(x.levels.size()) != net.num_levels())
    throw InvalidLabelingError("labeling has " + std::to_string(x.levels.size()) + " levels, network has " +
                               std::to_string(net.num_levels()));
  for (int h = 0; h < net.num_levels(); ++h) {
    if (static_cast<int>(x.levels[h].size()) != net.level_size(h))
      throw InvalidLabelingError("labeling level " + std::to_string(h + 1) + " has " +
                                 std::to_string(x.levels[h].size()) + " entries, expected " +
                                 std::to_string(net.level_size(h)));
    for (int i = 0; i < net.level_size(h); ++i) {
      Label l = x.levels[h][i];
      if (!net.allowed(h, l))
        throw InvalidLabelingError("free label on the base level at var " + std::to_string(i));
      if (!l.is_free() && l.index() >= net.num_labels())
        throw InvalidLabelingError("label index out of range at level " + std::to_string(h + 1) +
                                   " var " + std::to_string(i));
    }
  }
}

}  // namespace ahncut
