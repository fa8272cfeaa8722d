#pragma once

#include <cstdint>

#include "ahncut/energy.hpp"
#include "ahncut/network.hpp"

namespace ahncut {

// Joint assignments brute_force_map may enumerate before giving up.
inline constexpr std::int64_t kBruteForceBudget = 10'000'000;

// Exact global minimum of the joint energy by full enumeration over every
// level. Throws OracleInfeasibleError when the joint space exceeds
// kBruteForceBudget. Ties resolve to the lexicographically first labeling in
// (level, var) order with base labels ascending and the free label last.
HigherOrderResult brute_force_map(const HierarchicalNetwork& net);

}  // namespace ahncut
