#pragma once

#include <cstdint>
#include <string>

#include "ahncut/network.hpp"

namespace ahncut {

// Description of a synthetic network instance, parsed from whitespace-separated
// key=value tokens ('#' starts a comment). Two kinds:
//
//   kind=random_small   dense random instances small enough for exhaustive
//                       search: base_vars/base_edges on the base level,
//                       aux_vars (+ optional aux_edges) on one auxiliary level,
//                       aux2_vars on a second auxiliary level above it.
//   kind=grid_hierarchy a width x height 4-neighbor grid whose first auxiliary
//                       level holds `partitions` overlapping stripe partitions
//                       of `segments` segments each (axis-aligned, boundaries
//                       jittered by the seed, alternating orientation), and an
//                       optional second auxiliary level of super_segments
//                       variables grouping the segments by index. partitions=0
//                       or segments=0 yields a plain one-level grid.
//
// Costs are random multiples of 1/64 (scaled by cost_scale) so that energies of
// generated instances compare exactly in double arithmetic. Link weights are
// rescaled per parent so that every generated network passes
// check_hierarchical_consistency. Generation is a pure function of the spec.
struct GeneratorSpec {
  std::string kind = "random_small";
  int labels = 3;
  std::uint64_t seed = 0;
  double cost_scale = 4.0;

  // random_small
  int base_vars = 6;
  int base_edges = 6;
  int aux_vars = 2;
  int aux_edges = 0;
  int aux2_vars = 0;

  // grid_hierarchy
  int width = 8;
  int height = 8;
  int partitions = 2;
  int segments = 4;
  int super_segments = 0;

  static GeneratorSpec parse(const std::string& text);
  std::string to_text() const;
};

HierarchicalNetwork generate(const GeneratorSpec& spec);

}  // namespace ahncut
