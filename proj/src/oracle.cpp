#include "ahncut/oracle.hpp"

#include <vector>

#include "ahncut/errors.hpp"

namespace ahncut {

HigherOrderResult brute_force_map(const HierarchicalNetwork& net) {
  struct Slot {
    int level;
    int var;
    int count;
  };
  std::vector<Slot> slots;
  double total = 1.0;
  for (int h = 0; h < net.num_levels(); ++h) {
    for (int v = 0; v < net.level_size(h); ++v) {
      slots.push_back({h, v, net.label_slots(h)});
      total *= slots.back().count;
      if (total > static_cast<double>(kBruteForceBudget))
        throw OracleInfeasibleError("joint label space exceeds the exhaustive search budget");
    }
  }

  std::vector<int> counter(slots.size(), 0);
  Labeling x = Labeling::sized(net, Label::base(0), Label::base(0));
  HigherOrderResult best;
  best.energy = 0.0;
  bool have_best = false;
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      x.levels[slots[i].level][slots[i].var] = Label::from_slot(counter[i], net.num_labels());
    const double e = eval_joint(net, x);
    if (!have_best || e < best.energy) {
      have_best = true;
      best.energy = e;
      best.labeling = x;
    }
    int i = static_cast<int>(slots.size()) - 1;
    while (i >= 0) {
      if (++counter[i] < slots[i].count) break;
      counter[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return best;
}

}  // namespace ahncut
