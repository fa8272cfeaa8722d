#include "ahncut/energy.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ahncut/errors.hpp"

namespace ahncut {

double eval_joint(const HierarchicalNetwork& net, const Labeling& x) {
  validate_labeling(net, x);
  double total = 0.0;
  for (int h = 0; h < net.num_levels(); ++h) {
    const Level& lv = net.level(h);
    for (int i = 0; i < lv.num_vars; ++i) total += net.unary_cost(h, i, x.levels[h][i]);
    for (const PottsEdge& e : lv.edges) total += edge_cost(e.lambda, x.levels[h][e.u], x.levels[h][e.v]);
    for (const InterLevelLink& link : lv.links)
      total += link_cost(link.weight, x.levels[h - 1][link.child], x.levels[h][link.parent]);
  }
  return total;
}

namespace {

// Identifies one auxiliary variable by (level, index); level >= 1.
struct AuxVar {
  int level;
  int var;
};

// Connected components of the auxiliary coupling graph: nodes are auxiliary
// variables, joined by same-level edges and by links whose child is itself
// auxiliary. Links to base-level children do not couple auxiliaries.
class AuxComponents {
 public:
  explicit AuxComponents(const HierarchicalNetwork& net) {
    ids_.resize(net.num_levels());
    int n = 0;
    for (int h = 1; h < net.num_levels(); ++h) {
      ids_[h].resize(net.level_size(h));
      for (int i = 0; i < net.level_size(h); ++i) ids_[h][i] = n++;
    }
    parent_.resize(n);
    for (int i = 0; i < n; ++i) parent_[i] = i;
    for (int h = 1; h < net.num_levels(); ++h) {
      for (const PottsEdge& e : net.level(h).edges) unite(ids_[h][e.u], ids_[h][e.v]);
      if (h >= 2)
        for (const InterLevelLink& link : net.level(h).links)
          unite(ids_[h][link.parent], ids_[h - 1][link.child]);
    }
    // Group members in deterministic (level, var) order.
    members_.resize(n);
    for (int h = 1; h < net.num_levels(); ++h)
      for (int i = 0; i < net.level_size(h); ++i) members_[find(ids_[h][i])].push_back({h, i});
  }

  // Non-empty components, ordered by their first (level, var) member.
  std::vector<std::vector<AuxVar>> components() {
    std::vector<std::vector<AuxVar>> out;
    for (auto& m : members_)
      if (!m.empty()) out.push_back(std::move(m));
    return out;
  }

 private:
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::vector<int>> ids_;
  std::vector<int> parent_;
  std::vector<std::vector<AuxVar>> members_;
};

// Energy contribution owned by one component: member unaries, same-level edges
// among members, and links whose parent is a member (children are either fixed
// base variables or members themselves).
double component_cost(const HierarchicalNetwork& net, const Labeling& x,
                      const std::vector<AuxVar>& comp) {
  double total = 0.0;
  for (const AuxVar& a : comp) {
    total += net.unary_cost(a.level, a.var, x.levels[a.level][a.var]);
    for (int e : net.edge_ids(a.level, a.var)) {
      const PottsEdge& edge = net.level(a.level).edges[e];
      // Both endpoints are members; visit each edge once, from its u side.
      if (edge.u == a.var)
        total += edge_cost(edge.lambda, x.levels[a.level][edge.u], x.levels[a.level][edge.v]);
    }
    for (int k : net.parent_link_ids(a.level, a.var)) {
      const InterLevelLink& link = net.level(a.level).links[k];
      total += link_cost(link.weight, x.levels[a.level - 1][link.child], x.levels[a.level][a.var]);
    }
  }
  return total;
}

}  // namespace

HigherOrderResult eval_higher_order(const HierarchicalNetwork& net,
                                    const std::vector<Label>& base_labels) {
  Labeling x;
  x.levels.resize(net.num_levels());
  x.levels[0] = base_labels;
  for (int h = 1; h < net.num_levels(); ++h)
    x.levels[h].assign(net.level_size(h), Label::base(0));
  validate_labeling(net, x);

  AuxComponents cc(net);
  int slots = net.num_labels() + 1;
  for (const std::vector<AuxVar>& comp : cc.components()) {
    std::int64_t count = 1;
    for (size_t i = 0; i < comp.size(); ++i) {
      count *= slots;
      if (count > kExactAuxBudget)
        throw OracleInfeasibleError("auxiliary component of " + std::to_string(comp.size()) +
                                    " variables exceeds the exact enumeration budget");
    }
    // Lexicographic enumeration with strict improvement keeps the first
    // minimizer, which realises the lowest-base-label-then-free tie rule.
    std::vector<int> assign(comp.size(), 0);
    std::vector<int> best_assign(comp.size(), 0);
    for (size_t i = 0; i < comp.size(); ++i)
      x.levels[comp[i].level][comp[i].var] = Label::from_slot(0, net.num_labels());
    double best = component_cost(net, x, comp);
    for (std::int64_t it = 1; it < count; ++it) {
      int pos = static_cast<int>(comp.size()) - 1;
      while (assign[pos] == slots - 1) assign[pos--] = 0;
      ++assign[pos];
      for (size_t i = 0; i < comp.size(); ++i)
        x.levels[comp[i].level][comp[i].var] = Label::from_slot(assign[i], net.num_labels());
      double cost = component_cost(net, x, comp);
      if (cost < best) {
        best = cost;
        best_assign = assign;
      }
    }
    for (size_t i = 0; i < comp.size(); ++i)
      x.levels[comp[i].level][comp[i].var] = Label::from_slot(best_assign[i], net.num_labels());
  }

  return {eval_joint(net, x), std::move(x)};
}

}  // namespace ahncut
