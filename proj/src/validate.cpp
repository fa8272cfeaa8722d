#include "ahncut/validate.hpp"

#include <algorithm>
#include <cmath>

namespace ahncut {

ConsistencyReport check_hierarchical_consistency(const HierarchicalNetwork& net) {
  ConsistencyReport report;
  for (int h = 1; h < net.num_levels(); ++h) {
    for (int i = 0; i < net.level_size(h); ++i) {
      double max_unary = net.level(h).unary[i][0];
      for (int l = 1; l < net.num_labels(); ++l)
        max_unary = std::max(max_unary, net.level(h).unary[i][l]);
      double edge_slack = 0.0;
      for (int e : net.edge_ids(h, i)) edge_slack += net.level(h).edges[e].lambda;
      double child_weight = 0.0;
      for (int k : net.parent_link_ids(h, i)) child_weight += net.level(h).links[k].weight;
      ConsistencyEntry entry;
      entry.level = h;
      entry.var = i;
      entry.lhs = max_unary + edge_slack;
      entry.rhs = 0.5 * child_weight;
      entry.pass = entry.lhs < entry.rhs;  // equality fails
      report.all_pass = report.all_pass && entry.pass;
      report.entries.push_back(entry);
    }
  }
  return report;
}

bool check_edge_family(const HierarchicalNetwork& net) {
  for (int h = 0; h < net.num_levels(); ++h)
    for (const PottsEdge& e : net.level(h).edges)
      if (!(e.lambda >= 0.0) || !std::isfinite(e.lambda)) return false;
  return true;
}

}  // namespace ahncut
