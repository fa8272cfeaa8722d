#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahncut/network.hpp"
#include "ahncut/qpb.hpp"

namespace ahncut {

enum class MoveAlgorithm { kExpansion, kSwap, kRangeExpansion, kRangeSwap, kIcm };

std::string to_string(MoveAlgorithm a);
std::optional<MoveAlgorithm> parse_algorithm(const std::string& name);

// One row of the per-step trace. alpha/beta are empty where the step has none
// (ICM passes have neither, expansions have no beta).
struct TraceRecord {
  int sweep = 0;
  int step = 0;
  MoveAlgorithm algorithm = MoveAlgorithm::kIcm;
  std::optional<Label> alpha;
  std::optional<Label> beta;
  double energy_before = 0.0;
  double energy_after = 0.0;
  bool accepted = false;
  std::int64_t elapsed_micros = 0;
};

std::string trace_to_csv(const std::vector<TraceRecord>& trace, bool with_timings);

// A labeling under optimization. Steps take a state and return the successor
// state; the energy always equals eval_joint of the labeling, a step that finds
// no strict improvement returns the labeling unchanged, and every step appends
// one trace record.
struct MoveState {
  Labeling labeling;
  double energy = 0.0;
  int iteration = 0;  // number of steps applied
  int sweep = 0;      // stamped into trace records by the sweep driver
  std::vector<TraceRecord> trace;
  std::vector<std::string> notes;
};

MoveState make_move_state(const HierarchicalNetwork& net, Labeling labeling);

enum class InitKind { kArgmin, kUniform, kRandom };

struct InitOptions {
  InitKind kind = InitKind::kArgmin;
  Label uniform_label = Label::base(0);
  std::uint64_t seed = 0;
};

// Base labels per the chosen scheme, auxiliaries set by collapse_auxiliaries
// (or its coordinate-descent fallback when exact collapse is infeasible, which
// leaves a note on the state).
MoveState initial_state(const HierarchicalNetwork& net, const InitOptions& options = {});

// Every variable (every level) keeps its label or switches to alpha; the best
// such move is found exactly with one cut on the reparameterized form.
MoveState alpha_expansion_step(const HierarchicalNetwork& net, MoveState state, Label alpha);

// Variables currently holding alpha or beta choose between alpha and beta
// (labels may include the free label on networks with auxiliary levels).
MoveState alphabeta_swap_step(const HierarchicalNetwork& net, MoveState state, Label alpha,
                              Label beta);

// Every variable chooses between keeping its label, the free label, and alpha
// (base-level variables cannot take free). Exact via a two-boolean-per-variable
// encoding.
MoveState range_expansion_step(const HierarchicalNetwork& net, MoveState state, Label alpha);

// Variables currently in {alpha, free, beta} choose any label of that range.
MoveState range_swap_step(const HierarchicalNetwork& net, MoveState state, Label alpha,
                          Label beta);

// One coordinate-descent pass over all variables in (level, index) order.
MoveState icm_step(const HierarchicalNetwork& net, MoveState state);

// Replaces all auxiliary labels with exact conditional minimizers given the
// base labels. Throws OracleInfeasibleError on oversized coupled components.
MoveState collapse_auxiliaries(const HierarchicalNetwork& net, MoveState state);

// The boolean encoding of one three-state move variable: its two qpb boolean
// ids (the state (low,high) = (0,1) is prohibited) and the label each encoded
// level stands for.
struct MoveEncoding {
  int level = 0;
  int var = 0;
  int bit_low = -1;
  int bit_high = -1;
  Label states[3];
};

// The full pseudo-boolean problem of one range move, exposed for verification:
// evaluating `qpb` at any admitted boolean state equals eval_joint of the
// decoded labeling (frozen variables and label-independent terms are folded
// into the problem constant).
struct RangeMoveProblem {
  QpbProblem qpb;
  std::vector<MoveEncoding> vars;
};

RangeMoveProblem build_range_expansion_problem(const HierarchicalNetwork& net, const Labeling& x,
                                               Label alpha);
RangeMoveProblem build_range_swap_problem(const HierarchicalNetwork& net, const Labeling& x,
                                          Label alpha, Label beta);

struct SolveOptions {
  int max_sweeps = 500;
  InitOptions init;
};

struct MoveResult {
  Labeling labeling;                // after the final auxiliary collapse
  double final_joint = 0.0;         // joint energy when the sweeps stopped
  double final_higher_order = 0.0;  // joint energy after the final collapse
  bool higher_order_exact = true;   // false if the collapse fell back to coordinate descent
  int sweeps = 0;
  bool converged = false;
  std::vector<TraceRecord> trace;
  std::vector<std::string> notes;
};

// Runs sweeps of the chosen algorithm until a full sweep accepts no move or
// max_sweeps is reached. Expansions sweep alpha over the base labels;
// swaps sweep label pairs in lexicographic order (including pairs with the
// free label when the network has auxiliary levels); range swaps sweep base
// label pairs; ICM sweeps are single passes.
MoveResult solve(const HierarchicalNetwork& net, MoveAlgorithm algorithm,
                 const SolveOptions& options = {});

}  // namespace ahncut
