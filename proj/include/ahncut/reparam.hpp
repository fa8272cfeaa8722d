#pragma once

#include <vector>

#include "ahncut/label.hpp"

namespace ahncut {

// Dense symmetric-or-not pairwise cost table over the extended label set
// (num_labels base labels plus the free label in the last slot).
class PairwiseTable {
 public:
  explicit PairwiseTable(int num_labels, double fill = 0.0)
      : num_labels_(num_labels), cells_((num_labels + 1) * (num_labels + 1), fill) {}

  int num_labels() const { return num_labels_; }
  int size() const { return num_labels_ + 1; }

  double& at(Label a, Label b) { return cells_[a.slot(num_labels_) * size() + b.slot(num_labels_)]; }
  double at(Label a, Label b) const {
    return cells_[a.slot(num_labels_) * size() + b.slot(num_labels_)];
  }
  double& at_slot(int a, int b) { return cells_[a * size() + b]; }
  double at_slot(int a, int b) const { return cells_[a * size() + b]; }

  // Potts over the extended set: 0 on the diagonal, lambda off it.
  static PairwiseTable potts(int num_labels, double lambda);

 private:
  int num_labels_;
  std::vector<double> cells_;
};

// The decomposition of one link of weight w into a symmetric pairwise part plus
// unary shifts on its endpoints:
//
//   link_cost(w, child, parent) = child_shift(child) + parent_shift(parent)
//                               + symmetric(child, parent)
//
// where symmetric() is 0 on agreement, w/2 when exactly one side is free and w
// otherwise; child_shift is +w/2 on the free label (0 on base labels) and
// parent_shift is -w/2 on the free label. The identity holds exactly for every
// pair over the extended label set.
struct ReparamTriple {
  double weight = 0.0;

  double symmetric(Label child, Label parent) const {
    if (child == parent) return 0.0;
    if (child.is_free() || parent.is_free()) return 0.5 * weight;
    return weight;
  }
  double child_shift(Label child) const { return child.is_free() ? 0.5 * weight : 0.0; }
  double parent_shift(Label parent) const { return parent.is_free() ? -0.5 * weight : 0.0; }

  // Dense table of the symmetric part over the extended label set.
  PairwiseTable symmetric_table(int num_labels) const;
};

ReparamTriple reparameterize_link(double weight);

// True iff the table is symmetric, non-negative, exactly zero on the diagonal
// and satisfies the triangle inequality, all within `tol`.
bool check_metric(const PairwiseTable& table, double tol = 1e-9);

}  // namespace ahncut
