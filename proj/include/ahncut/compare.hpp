#pragma once

#include <string>
#include <vector>

#include "ahncut/moves.hpp"
#include "ahncut/network.hpp"

namespace ahncut {

struct AlgorithmStats {
  MoveAlgorithm algorithm = MoveAlgorithm::kIcm;
  int instances = 0;        // instances solved without error
  int errors = 0;
  int wins = 0;             // final energy within 1e-9 of the reference minimum
  double mean_energy = 0.0;
  double mean_diff = 0.0;   // mean of (energy - reference)
  double mean_ratio = 0.0;  // mean of energy/reference over ratio-eligible instances
  int ratio_excluded = 0;   // instances skipped because the reference is ~0 and the energy is not
  double mean_time_ms = 0.0;
};

// Side-by-side result of running every move algorithm over an instance corpus.
// The per-instance reference minimum is the exact optimum where exhaustive
// search is affordable and otherwise the best energy any algorithm found on
// that instance; reference_exact reports which of the two it was for the whole
// corpus. Wins, differences, and ratios all measure against that reference.
// Instances whose reference energy is within 1e-12 of zero contribute ratio 1
// when the method also reached ~0 and are otherwise excluded from mean_ratio
// (and counted in ratio_excluded).
struct ComparisonReport {
  int num_instances = 0;
  bool reference_exact = true;
  std::vector<AlgorithmStats> stats;

  // Total (instance, algorithm) cells that solved without error.
  int solved_cells() const;

  std::string to_csv(bool with_timings) const;
  std::string to_table(bool with_timings) const;
};

// All five move algorithms in their canonical comparison order: expansion,
// swap, range-expansion, range-swap, icm.
const std::vector<MoveAlgorithm>& all_algorithms();

// Runs each algorithm on every instance with the same solve options. Needs at
// least one instance and two algorithms. Solver errors are recorded per cell
// and excluded from the aggregates.
ComparisonReport compare_algorithms(const std::vector<HierarchicalNetwork>& instances,
                                    const std::vector<MoveAlgorithm>& algorithms = all_algorithms(),
                                    const SolveOptions& options = {});

}  // namespace ahncut
