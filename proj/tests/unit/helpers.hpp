#pragma once

#include <vector>

#include "ahncut/network.hpp"

namespace ahncut::testing {

// The canonical two-level test network: three base variables over K = 2 labels
// with zero unaries, one parent with label costs (0, 0) and free cost
// gamma_max, tied to every child by a weight-1 link.
inline HierarchicalNetwork three_child_clique(double gamma_max = 2.0) {
  NetworkBuilder b(2, 2);
  b.set_level_size(0, 3).set_level_size(1, 1);
  for (int i = 0; i < 3; ++i) b.set_unary(0, i, {0.0, 0.0});
  b.set_unary(1, 0, {0.0, 0.0, gamma_max});
  for (int i = 0; i < 3; ++i) b.add_link(1, 0, i, 1.0);
  return b.build();
}

inline Labeling full_labeling(std::vector<Label> base, std::vector<Label> aux) {
  Labeling x;
  x.levels.push_back(std::move(base));
  x.levels.push_back(std::move(aux));
  return x;
}

}  // namespace ahncut::testing
