#include "ahncut/compare.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "ahncut/errors.hpp"
#include "ahncut/io.hpp"
#include "ahncut/oracle.hpp"

namespace ahncut {
namespace {

constexpr double kWinTolerance = 1e-9;
constexpr double kZeroEnergy = 1e-12;

}  // namespace

const std::vector<MoveAlgorithm>& all_algorithms() {
  static const std::vector<MoveAlgorithm> order = {
      MoveAlgorithm::kExpansion, MoveAlgorithm::kSwap, MoveAlgorithm::kRangeExpansion,
      MoveAlgorithm::kRangeSwap, MoveAlgorithm::kIcm};
  return order;
}

ComparisonReport compare_algorithms(const std::vector<HierarchicalNetwork>& instances,
                                    const std::vector<MoveAlgorithm>& algorithms,
                                    const SolveOptions& options) {
  if (instances.empty()) throw ParameterError("comparison needs at least one instance");
  if (algorithms.size() < 2) throw ParameterError("comparison needs at least two algorithms");
  const int num_algorithms = static_cast<int>(algorithms.size());
  struct Cell {
    bool solved = false;
    double energy = 0.0;
    double millis = 0.0;
  };
  std::vector<std::vector<Cell>> cells(instances.size(), std::vector<Cell>(num_algorithms));
  std::vector<double> reference(instances.size(), 0.0);
  std::vector<bool> has_reference(instances.size(), false);

  ComparisonReport report;
  report.num_instances = static_cast<int>(instances.size());
  report.stats.resize(num_algorithms);
  for (int a = 0; a < num_algorithms; ++a) report.stats[a].algorithm = algorithms[a];

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const HierarchicalNetwork& net = instances[i];
    for (int a = 0; a < num_algorithms; ++a) {
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const MoveResult result = solve(net, algorithms[a], options);
        const auto t1 = std::chrono::steady_clock::now();
        cells[i][a].solved = true;
        cells[i][a].energy = result.final_higher_order;
        cells[i][a].millis =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();
      } catch (const Error&) {
        report.stats[a].errors += 1;
      }
    }
    try {
      reference[i] = brute_force_map(net).energy;
      has_reference[i] = true;
    } catch (const OracleInfeasibleError&) {
      report.reference_exact = false;
      double best = 0.0;
      bool any = false;
      for (int a = 0; a < num_algorithms; ++a) {
        if (!cells[i][a].solved) continue;
        if (!any || cells[i][a].energy < best) best = cells[i][a].energy;
        any = true;
      }
      reference[i] = best;
      has_reference[i] = any;
    }
  }

  for (int a = 0; a < num_algorithms; ++a) {
    AlgorithmStats& st = report.stats[a];
    double sum_energy = 0.0, sum_diff = 0.0, sum_ratio = 0.0, sum_ms = 0.0;
    int ratio_count = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Cell& cell = cells[i][a];
      if (!cell.solved || !has_reference[i]) continue;
      st.instances += 1;
      sum_energy += cell.energy;
      sum_ms += cell.millis;
      sum_diff += cell.energy - reference[i];
      if (std::abs(cell.energy - reference[i]) <= kWinTolerance) st.wins += 1;
      if (std::abs(reference[i]) <= kZeroEnergy) {
        if (std::abs(cell.energy) <= kZeroEnergy) {
          sum_ratio += 1.0;
          ratio_count += 1;
        } else {
          st.ratio_excluded += 1;
        }
      } else {
        sum_ratio += cell.energy / reference[i];
        ratio_count += 1;
      }
    }
    if (st.instances > 0) {
      st.mean_energy = sum_energy / st.instances;
      st.mean_diff = sum_diff / st.instances;
      st.mean_time_ms = sum_ms / st.instances;
    }
    if (ratio_count > 0) st.mean_ratio = sum_ratio / ratio_count;
  }
  return report;
}

int ComparisonReport::solved_cells() const {
  int total = 0;
  for (const AlgorithmStats& st : stats) total += st.instances;
  return total;
}

std::string ComparisonReport::to_csv(bool with_timings) const {
  std::string out =
      "algorithm,instances,errors,wins,mean_energy,mean_diff,mean_ratio,ratio_excluded,"
      "mean_time_ms\n";
  for (const AlgorithmStats& st : stats) {
    out += to_string(st.algorithm);
    out += ',' + std::to_string(st.instances);
    out += ',' + std::to_string(st.errors);
    out += ',' + std::to_string(st.wins);
    out += ',' + format_number(st.mean_energy);
    out += ',' + format_number(st.mean_diff);
    out += ',' + format_number(st.mean_ratio);
    out += ',' + std::to_string(st.ratio_excluded);
    out += ',' + format_number(with_timings ? st.mean_time_ms : 0.0);
    out += '\n';
  }
  return out;
}

std::string ComparisonReport::to_table(bool with_timings) const {
  std::string out = "instances: " + std::to_string(num_instances) + "\n";
  out += std::string("reference: ") +
         (reference_exact ? "exact optimum (exhaustive search)"
                          : "best labeling found by any algorithm") +
         "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %9s %6s %4s %12s %12s %10s %8s %12s\n", "algorithm",
                "instances", "errors", "wins", "mean_energy", "mean_diff", "mean_ratio", "ratio_ex",
                "mean_time_ms");
  out += line;
  for (const AlgorithmStats& st : stats) {
    std::snprintf(line, sizeof line, "%-16s %9d %6d %4d %12s %12s %10s %8d %12s\n",
                  to_string(st.algorithm).c_str(), st.instances, st.errors, st.wins,
                  format_number(st.mean_energy).c_str(), format_number(st.mean_diff).c_str(),
                  format_number(st.mean_ratio).c_str(), st.ratio_excluded,
                  format_number(with_timings ? st.mean_time_ms : 0.0).c_str());
    out += line;
  }
  return out;
}

}  // namespace ahncut
