#pragma once

#include <vector>

#include "ahncut/network.hpp"

namespace ahncut {

// One auxiliary variable's weighted-majority margin check. An auxiliary
// variable is consistent when, for every base label, its own label cost plus
// the worst case of its same-level edges stays strictly below half the total
// weight of its child links:
//
//   max_l unary(l) + sum(incident same-level lambda) < 0.5 * sum(child weights)
//
// Equality counts as a failure. Only same-level edges enter the slack term;
// links to the level above do not.
struct ConsistencyEntry {
  int level = 0;  // 0-based; always >= 1
  int var = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;  // one per auxiliary variable
  bool all_pass = true;
};

// Reports, never throws: inconsistent networks are legal inputs, the solvers
// just lose their transformational-optimality guarantee on them.
ConsistencyReport check_hierarchical_consistency(const HierarchicalNetwork& net);

// Every same-level edge is of the admitted family (0 on agreement, lambda/2
// against free, lambda otherwise, lambda >= 0). The network type can only hold
// such edges, so this verifies the stored strengths and returns true.
bool check_edge_family(const HierarchicalNetwork& net);

}  // namespace ahncut
