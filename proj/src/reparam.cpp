#include "ahncut/reparam.hpp"

#include <cmath>

#include "ahncut/errors.hpp"

namespace ahncut {

PairwiseTable PairwiseTable::potts(int num_labels, double lambda) {
  PairwiseTable t(num_labels, lambda);
  for (int a = 0; a <= num_labels; ++a) t.at_slot(a, a) = 0.0;
  return t;
}

PairwiseTable ReparamTriple::symmetric_table(int num_labels) const {
  PairwiseTable t(num_labels);
  for (int a = 0; a <= num_labels; ++a)
    for (int b = 0; b <= num_labels; ++b)
      t.at_slot(a, b) = symmetric(Label::from_slot(a, num_labels), Label::from_slot(b, num_labels));
  return t;
}

ReparamTriple reparameterize_link(double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw ParameterError("link weight must be finite and >= 0");
  return ReparamTriple{weight};
}

bool check_metric(const PairwiseTable& table, double tol) {
  int n = table.size();
  for (int a = 0; a < n; ++a) {
    if (std::abs(table.at_slot(a, a)) > tol) return false;
    for (int b = 0; b < n; ++b) {
      if (table.at_slot(a, b) < -tol) return false;
      if (std::abs(table.at_slot(a, b) - table.at_slot(b, a)) > tol) return false;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table.at_slot(a, c) > table.at_slot(a, b) + table.at_slot(b, c) + tol) return false;
  return true;
}

}  // namespace ahncut
