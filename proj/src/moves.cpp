#include "ahncut/moves.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <cstddef>
#include <utility>

#include "ahncut/energy.hpp"
#include "ahncut/errors.hpp"
#include "ahncut/io.hpp"
#include "ahncut/rng.hpp"
#include "monge.hpp"

namespace ahncut {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

// Finite stand-in cost for forbidden move states. Any labeling that uses it
// costs more than every admissible labeling (whose energy is bounded by the
// network's magnitude bound), and a power of two keeps arithmetic on dyadic
// test costs exact.
double forbidden_sentinel(const HierarchicalNetwork& net) {
  double s = 4.0;
  const double need = 4.0 * (net.magnitude_bound() + 1.0);
  while (s < need) s *= 2.0;
  return s;
}

void require_base_label(const HierarchicalNetwork& net, Label l, const char* what) {
  if (l.is_free() || l.index() >= net.num_labels())
    throw ParameterError(std::string(what) + " must be a base label of the network");
}

void require_swap_label(const HierarchicalNetwork& net, Label l, const char* what) {
  if (!l.is_free() && l.index() >= net.num_labels())
    throw ParameterError(std::string(what) + " is not a label of the network");
}

// Appends the trace record for one step and applies the proposal if it is a
// strict improvement; otherwise the state is returned unchanged (apart from
// the record and the step counter).
MoveState finish_step(const HierarchicalNetwork& net, MoveState state, MoveAlgorithm algorithm,
                      std::optional<Label> alpha, std::optional<Label> beta,
                      const Labeling* proposed, Clock::time_point t0) {
  TraceRecord rec;
  rec.sweep = state.sweep;
  rec.step = state.iteration;
  rec.algorithm = algorithm;
  rec.alpha = alpha;
  rec.beta = beta;
  rec.energy_before = state.energy;
  if (proposed != nullptr) {
    const double after = eval_joint(net, *proposed);
    if (after < state.energy) {
      rec.accepted = true;
      state.labeling = *proposed;
      state.energy = after;
    }
  }
  rec.energy_after = state.energy;
  rec.elapsed_micros = micros_since(t0);
  state.trace.push_back(rec);
  state.iteration += 1;
  return state;
}

// ---------------------------------------------------------------------------
// One-boolean-per-variable moves on the reparameterized pairwise form.
// Boolean 0 keeps candidate[0], boolean 1 takes candidate[1]; forbidden
// candidates get an infinite unary. Frozen variables and their mutual terms are
// folded in so that the problem value equals the joint energy of the proposal.
// ---------------------------------------------------------------------------

struct BinarySpec {
  std::vector<std::vector<int>> pid;  // [level][var] -> participant id or -1
  std::vector<std::pair<int, int>> vars;
  std::vector<std::array<Label, 2>> cand;
};

BinarySpec empty_binary_spec(const HierarchicalNetwork& net) {
  BinarySpec s;
  s.pid.resize(net.num_levels());
  for (int h = 0; h < net.num_levels(); ++h) s.pid[h].assign(net.level_size(h), -1);
  return s;
}

void add_binary_participant(BinarySpec& s, int level, int var, Label label0, Label label1) {
  s.pid[level][var] = static_cast<int>(s.vars.size());
  s.vars.emplace_back(level, var);
  s.cand.push_back({label0, label1});
}

QpbProblem binary_qpb(const HierarchicalNetwork& net, const Labeling& x, const BinarySpec& s) {
  QpbProblem q(static_cast<int>(s.vars.size()));
  for (int h = 0; h < net.num_levels(); ++h) {
    for (int v = 0; v < net.level_size(h); ++v) {
      const int p = s.pid[h][v];
      if (p < 0) {
        q.add_constant(net.reparam_unary_cost(h, v, x.levels[h][v]));
        continue;
      }
      const auto cost = [&](Label l) {
        return net.allowed(h, l) ? net.reparam_unary_cost(h, v, l) : kInfiniteCost;
      };
      q.add_unary(p, cost(s.cand[p][0]), cost(s.cand[p][1]));
    }
    for (const PottsEdge& e : net.level(h).edges) {
      const int pu = s.pid[h][e.u];
      const int pv = s.pid[h][e.v];
      const Label xu = x.levels[h][e.u];
      const Label xv = x.levels[h][e.v];
      if (pu >= 0 && pv >= 0) {
        const auto& cu = s.cand[pu];
        const auto& cv = s.cand[pv];
        q.add_pairwise(pu, pv, edge_cost(e.lambda, cu[0], cv[0]), edge_cost(e.lambda, cu[0], cv[1]),
                       edge_cost(e.lambda, cu[1], cv[0]), edge_cost(e.lambda, cu[1], cv[1]));
      } else if (pu >= 0) {
        q.add_unary(pu, edge_cost(e.lambda, s.cand[pu][0], xv), edge_cost(e.lambda, s.cand[pu][1], xv));
      } else if (pv >= 0) {
        q.add_unary(pv, edge_cost(e.lambda, xu, s.cand[pv][0]), edge_cost(e.lambda, xu, s.cand[pv][1]));
      } else {
        q.add_constant(edge_cost(e.lambda, xu, xv));
      }
    }
    for (const InterLevelLink& link : net.level(h).links) {
      const int pc = s.pid[h - 1][link.child];
      const int pp = s.pid[h][link.parent];
      const Label xc = x.levels[h - 1][link.child];
      const Label xp = x.levels[h][link.parent];
      const double w = link.weight;
      if (pc >= 0 && pp >= 0) {
        const auto& cc = s.cand[pc];
        const auto& cp = s.cand[pp];
        q.add_pairwise(pc, pp, reparam_link_cost(w, cc[0], cp[0]), reparam_link_cost(w, cc[0], cp[1]),
                       reparam_link_cost(w, cc[1], cp[0]), reparam_link_cost(w, cc[1], cp[1]));
      } else if (pc >= 0) {
        q.add_unary(pc, reparam_link_cost(w, s.cand[pc][0], xp), reparam_link_cost(w, s.cand[pc][1], xp));
      } else if (pp >= 0) {
        q.add_unary(pp, reparam_link_cost(w, xc, s.cand[pp][0]), reparam_link_cost(w, xc, s.cand[pp][1]));
      } else {
        q.add_constant(reparam_link_cost(w, xc, xp));
      }
    }
  }
  return q;
}

MoveState run_binary_step(const HierarchicalNetwork& net, MoveState state, MoveAlgorithm algorithm,
                          std::optional<Label> alpha, std::optional<Label> beta,
                          const BinarySpec& spec) {
  const Clock::time_point t0 = Clock::now();
  if (spec.vars.empty())
    return finish_step(net, std::move(state), algorithm, alpha, beta, nullptr, t0);
  const QpbSolution sol = minimize_qpb(binary_qpb(net, state.labeling, spec));
  Labeling proposed = state.labeling;
  for (std::size_t p = 0; p < spec.vars.size(); ++p) {
    const auto [h, v] = spec.vars[p];
    proposed.levels[h][v] = spec.cand[p][sol.assignment[p] ? 1 : 0];
  }
  return finish_step(net, std::move(state), algorithm, alpha, beta, &proposed, t0);
}

// ---------------------------------------------------------------------------
// Two-boolean-per-variable range moves on the original potentials. Every
// participant is a three-level variable (levels low+high with (0,1)
// prohibited); pairwise terms are 3x3 label-cost tables encoded through the
// Monge decomposition. A participant whose current label duplicates a later
// state gets the free-label cost row in its tables and a sentinel on the
// duplicate state, which pins the optimum to the canonical representative
// without changing any admitted value.
// ---------------------------------------------------------------------------

struct RangeSpec {
  std::vector<std::vector<int>> pid;  // [level][var] -> participant id or -1
  std::vector<std::pair<int, int>> vars;
  std::vector<std::array<Label, 3>> table_labels;   // labels used for cost tables
  std::vector<std::array<Label, 3>> decode_labels;  // labels an optimum decodes to
  std::vector<std::array<double, 3>> unary;
};

RangeSpec empty_range_spec(const HierarchicalNetwork& net) {
  RangeSpec s;
  s.pid.resize(net.num_levels());
  for (int h = 0; h < net.num_levels(); ++h) s.pid[h].assign(net.level_size(h), -1);
  return s;
}

RangeMoveProblem assemble_range(const HierarchicalNetwork& net, const Labeling& x,
                                const RangeSpec& spec) {
  const int n = static_cast<int>(spec.vars.size());
  RangeMoveProblem out{QpbProblem(2 * n), {}};
  out.vars.reserve(n);
  std::vector<detail::LevelPair> pairs(n);
  for (int p = 0; p < n; ++p) {
    pairs[p] = detail::LevelPair{2 * p, 2 * p + 1};
    detail::add_monotone_gadget(out.qpb, pairs[p]);
    detail::add_level_unary(out.qpb, pairs[p], spec.unary[p]);
    const auto [h, v] = spec.vars[p];
    out.vars.push_back(MoveEncoding{h, v, pairs[p].low, pairs[p].high,
                                    {spec.decode_labels[p][0], spec.decode_labels[p][1],
                                     spec.decode_labels[p][2]}});
  }
  for (int h = 0; h < net.num_levels(); ++h) {
    for (int v = 0; v < net.level_size(h); ++v) {
      if (spec.pid[h][v] < 0) out.qpb.add_constant(net.unary_cost(h, v, x.levels[h][v]));
    }
    for (const PottsEdge& e : net.level(h).edges) {
      const int pu = spec.pid[h][e.u];
      const int pv = spec.pid[h][e.v];
      if (pu >= 0 && pv >= 0) {
        std::array<std::array<double, 3>, 3> theta;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            theta[a][b] = edge_cost(e.lambda, spec.table_labels[pu][a], spec.table_labels[pv][b]);
        detail::add_monge_pairwise(out.qpb, pairs[pu], pairs[pv], theta);
      } else if (pu >= 0 || pv >= 0) {
        const int p = pu >= 0 ? pu : pv;
        const Label frozen = pu >= 0 ? x.levels[h][e.v] : x.levels[h][e.u];
        std::array<double, 3> u{};
        for (int a = 0; a < 3; ++a) u[a] = edge_cost(e.lambda, spec.table_labels[p][a], frozen);
        detail::add_level_unary(out.qpb, pairs[p], u);
      } else {
        out.qpb.add_constant(edge_cost(e.lambda, x.levels[h][e.u], x.levels[h][e.v]));
      }
    }
    for (const InterLevelLink& link : net.level(h).links) {
      const int pc = spec.pid[h - 1][link.child];
      const int pp = spec.pid[h][link.parent];
      const double w = link.weight;
      if (pc >= 0 && pp >= 0) {
        std::array<std::array<double, 3>, 3> theta;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            theta[a][b] = link_cost(w, spec.table_labels[pc][a], spec.table_labels[pp][b]);
        detail::add_monge_pairwise(out.qpb, pairs[pc], pairs[pp], theta);
      } else if (pc >= 0) {
        const Label xp = x.levels[h][link.parent];
        std::array<double, 3> u{};
        for (int a = 0; a < 3; ++a) u[a] = link_cost(w, spec.table_labels[pc][a], xp);
        detail::add_level_unary(out.qpb, pairs[pc], u);
      } else if (pp >= 0) {
        const Label xc = x.levels[h - 1][link.child];
        std::array<double, 3> u{};
        for (int b = 0; b < 3; ++b) u[b] = link_cost(w, xc, spec.table_labels[pp][b]);
        detail::add_level_unary(out.qpb, pairs[pp], u);
      } else {
        out.qpb.add_constant(link_cost(w, x.levels[h - 1][link.child], x.levels[h][link.parent]));
      }
    }
  }
  return out;
}

MoveState run_range_step(const HierarchicalNetwork& net, MoveState state, MoveAlgorithm algorithm,
                         std::optional<Label> alpha, std::optional<Label> beta,
                         const RangeSpec& spec) {
  const Clock::time_point t0 = Clock::now();
  if (spec.vars.empty())
    return finish_step(net, std::move(state), algorithm, alpha, beta, nullptr, t0);
  const RangeMoveProblem problem = assemble_range(net, state.labeling, spec);
  const QpbSolution sol = minimize_qpb(problem.qpb);
  Labeling proposed = state.labeling;
  for (const MoveEncoding& enc : problem.vars) {
    const int level = (sol.assignment[enc.bit_low] ? 1 : 0) + (sol.assignment[enc.bit_high] ? 1 : 0);
    proposed.levels[enc.level][enc.var] = enc.states[level];
  }
  return finish_step(net, std::move(state), algorithm, alpha, beta, &proposed, t0);
}

RangeSpec range_expansion_spec(const HierarchicalNetwork& net, const Labeling& x, Label alpha) {
  const double sentinel = forbidden_sentinel(net);
  RangeSpec spec = empty_range_spec(net);
  for (int h = 0; h < net.num_levels(); ++h) {
    for (int v = 0; v < net.level_size(h); ++v) {
      const Label cur = x.levels[h][v];
      const bool duplicate = cur == alpha;
      const bool free_ok = h > 0;
      spec.pid[h][v] = static_cast<int>(spec.vars.size());
      spec.vars.emplace_back(h, v);
      spec.table_labels.push_back({duplicate ? Label::free() : cur, Label::free(), alpha});
      spec.decode_labels.push_back({cur, Label::free(), alpha});
      spec.unary.push_back({duplicate ? sentinel : net.unary_cost(h, v, cur),
                            free_ok ? net.unary_cost(h, v, Label::free()) : sentinel,
                            net.unary_cost(h, v, alpha)});
    }
  }
  return spec;
}

RangeSpec range_swap_spec(const HierarchicalNetwork& net, const Labeling& x, Label alpha,
                          Label beta) {
  const double sentinel = forbidden_sentinel(net);
  RangeSpec spec = empty_range_spec(net);
  for (int h = 0; h < net.num_levels(); ++h) {
    for (int v = 0; v < net.level_size(h); ++v) {
      const Label cur = x.levels[h][v];
      if (!(cur == alpha || cur == beta || cur.is_free())) continue;
      const bool free_ok = h > 0;
      spec.pid[h][v] = static_cast<int>(spec.vars.size());
      spec.vars.emplace_back(h, v);
      spec.table_labels.push_back({alpha, Label::free(), beta});
      spec.decode_labels.push_back({alpha, Label::free(), beta});
      spec.unary.push_back({net.unary_cost(h, v, alpha),
                            free_ok ? net.unary_cost(h, v, Label::free()) : sentinel,
                            net.unary_cost(h, v, beta)});
    }
  }
  return spec;
}

// Conditional cost of putting label l on (level, var) with every other variable
// fixed at x; original potentials.
double conditional_cost(const HierarchicalNetwork& net, const Labeling& x, int level, int var,
                        Label l) {
  double c = net.unary_cost(level, var, l);
  for (int id : net.edge_ids(level, var)) {
    const PottsEdge& e = net.level(level).edges[id];
    const int other = e.u == var ? e.v : e.u;
    c += edge_cost(e.lambda, l, x.levels[level][other]);
  }
  for (int id : net.parent_link_ids(level, var)) {
    const InterLevelLink& link = net.level(level).links[id];
    c += link_cost(link.weight, x.levels[level - 1][link.child], l);
  }
  for (int id : net.child_link_ids(level, var)) {
    const InterLevelLink& link = net.level(level + 1).links[id];
    c += link_cost(link.weight, l, x.levels[level + 1][link.parent]);
  }
  return c;
}

// One coordinate-descent pass over the given levels in (level, var) order;
// label updates take effect immediately. Returns true if any label changed.
bool descent_pass(const HierarchicalNetwork& net, Labeling& x, int first_level) {
  bool changed = false;
  for (int h = first_level; h < net.num_levels(); ++h) {
    for (int v = 0; v < net.level_size(h); ++v) {
      const Label cur = x.levels[h][v];
      Label best = cur;
      double best_cost = conditional_cost(net, x, h, v, cur);
      for (int s = 0; s < net.label_slots(h); ++s) {
        const Label cand = Label::from_slot(s, net.num_labels());
        if (cand == cur) continue;
        const double c = conditional_cost(net, x, h, v, cand);
        if (c < best_cost) {
          best_cost = c;
          best = cand;
        }
      }
      if (!(best == cur)) {
        x.levels[h][v] = best;
        changed = true;
      }
    }
  }
  return changed;
}

// Coordinate descent over the auxiliary levels until a full pass changes
// nothing. Used when the exact collapse exceeds its enumeration budget.
MoveState approximate_collapse(const HierarchicalNetwork& net, MoveState state) {
  for (int guard = 0; guard < 100000; ++guard) {
    if (!descent_pass(net, state.labeling, 1)) break;
  }
  state.energy = eval_joint(net, state.labeling);
  return state;
}

constexpr const char* kApproximateCollapseNote =
    "auxiliary collapse fell back to coordinate descent (exact enumeration over budget)";

constexpr const char* kRangeSwapNote =
    "range swap: per-move optimality holds only without auxiliary-level edges; this network has "
    "some";

MoveState collapse_with_fallback(const HierarchicalNetwork& net, MoveState state, bool* exact) {
  try {
    // Pass a copy: the by-value callee consumes its argument even when it
    // throws, and the catch block still needs the original state.
    state = collapse_auxiliaries(net, MoveState(state));
    if (exact != nullptr) *exact = true;
  } catch (const OracleInfeasibleError&) {
    state = approximate_collapse(net, std::move(state));
    state.notes.push_back(kApproximateCollapseNote);
    if (exact != nullptr) *exact = false;
  }
  return state;
}

}  // namespace

std::string to_string(MoveAlgorithm a) {
  switch (a) {
    case MoveAlgorithm::kExpansion: return "expansion";
    case MoveAlgorithm::kSwap: return "swap";
    case MoveAlgorithm::kRangeExpansion: return "range-expansion";
    case MoveAlgorithm::kRangeSwap: return "range-swap";
    case MoveAlgorithm::kIcm: return "icm";
  }
  return "unknown";
}

std::optional<MoveAlgorithm> parse_algorithm(const std::string& name) {
  if (name == "expansion") return MoveAlgorithm::kExpansion;
  if (name == "swap") return MoveAlgorithm::kSwap;
  if (name == "range-expansion") return MoveAlgorithm::kRangeExpansion;
  if (name == "range-swap") return MoveAlgorithm::kRangeSwap;
  if (name == "icm") return MoveAlgorithm::kIcm;
  return std::nullopt;
}

std::string trace_to_csv(const std::vector<TraceRecord>& trace, bool with_timings) {
  std::string out = "sweep,step,algorithm,alpha,beta,energy_before,energy_after,accepted,elapsed_micros\n";
  for (const TraceRecord& r : trace) {
    out += std::to_string(r.sweep);
    out += ',';
    out += std::to_string(r.step);
    out += ',';
    out += to_string(r.algorithm);
    out += ',';
    out += r.alpha ? to_string(*r.alpha) : "-";
    out += ',';
    out += r.beta ? to_string(*r.beta) : "-";
    out += ',';
    out += format_number(r.energy_before);
    out += ',';
    out += format_number(r.energy_after);
    out += ',';
    out += r.accepted ? '1' : '0';
    out += ',';
    out += std::to_string(with_timings ? r.elapsed_micros : 0);
    out += '\n';
  }
  return out;
}

MoveState make_move_state(const HierarchicalNetwork& net, Labeling labeling) {
  validate_labeling(net, labeling);
  MoveState state;
  state.energy = eval_joint(net, labeling);
  state.labeling = std::move(labeling);
  return state;
}

MoveState initial_state(const HierarchicalNetwork& net, const InitOptions& options) {
  Labeling x = Labeling::sized(net, Label::base(0), Label::free());
  switch (options.kind) {
    case InitKind::kArgmin:
      for (int v = 0; v < net.level_size(0); ++v) {
        int best = 0;
        for (int s = 1; s < net.num_labels(); ++s)
          if (net.level(0).unary[v][s] < net.level(0).unary[v][best]) best = s;
        x.levels[0][v] = Label::base(best);
      }
      break;
    case InitKind::kUniform:
      require_base_label(net, options.uniform_label, "uniform initial label");
      for (int v = 0; v < net.level_size(0); ++v) x.levels[0][v] = options.uniform_label;
      break;
    case InitKind::kRandom: {
      Rng rng(options.seed);
      for (int v = 0; v < net.level_size(0); ++v)
        x.levels[0][v] = Label::base(static_cast<int>(rng.below(net.num_labels())));
      break;
    }
  }
  return collapse_with_fallback(net, make_move_state(net, std::move(x)), nullptr);
}

MoveState alpha_expansion_step(const HierarchicalNetwork& net, MoveState state, Label alpha) {
  require_base_label(net, alpha, "expansion label");
  BinarySpec spec = empty_binary_spec(net);
  for (int h = 0; h < net.num_levels(); ++h)
    for (int v = 0; v < net.level_size(h); ++v)
      add_binary_participant(spec, h, v, state.labeling.levels[h][v], alpha);
  return run_binary_step(net, std::move(state), MoveAlgorithm::kExpansion, alpha, std::nullopt,
                         spec);
}

MoveState alphabeta_swap_step(const HierarchicalNetwork& net, MoveState state, Label alpha,
                              Label beta) {
  require_swap_label(net, alpha, "swap label");
  require_swap_label(net, beta, "swap label");
  if (alpha == beta) throw ParameterError("swap labels must differ");
  BinarySpec spec = empty_binary_spec(net);
  for (int h = 0; h < net.num_levels(); ++h)
    for (int v = 0; v < net.level_size(h); ++v) {
      const Label cur = state.labeling.levels[h][v];
      if (cur == alpha || cur == beta) add_binary_participant(spec, h, v, alpha, beta);
    }
  return run_binary_step(net, std::move(state), MoveAlgorithm::kSwap, alpha, beta, spec);
}

MoveState range_expansion_step(const HierarchicalNetwork& net, MoveState state, Label alpha) {
  require_base_label(net, alpha, "expansion label");
  const RangeSpec spec = range_expansion_spec(net, state.labeling, alpha);
  return run_range_step(net, std::move(state), MoveAlgorithm::kRangeExpansion, alpha, std::nullopt,
                        spec);
}

MoveState range_swap_step(const HierarchicalNetwork& net, MoveState state, Label alpha,
                          Label beta) {
  require_base_label(net, alpha, "swap label");
  require_base_label(net, beta, "swap label");
  if (alpha == beta) throw ParameterError("swap labels must differ");
  bool aux_edges = false;
  for (int h = 1; h < net.num_levels(); ++h) aux_edges |= !net.level(h).edges.empty();
  if (aux_edges &&
      std::find(state.notes.begin(), state.notes.end(), kRangeSwapNote) == state.notes.end())
    state.notes.push_back(kRangeSwapNote);
  const RangeSpec spec = range_swap_spec(net, state.labeling, alpha, beta);
  return run_range_step(net, std::move(state), MoveAlgorithm::kRangeSwap, alpha, beta, spec);
}

MoveState icm_step(const HierarchicalNetwork& net, MoveState state) {
  const Clock::time_point t0 = Clock::now();
  Labeling proposed = state.labeling;
  descent_pass(net, proposed, 0);
  return finish_step(net, std::move(state), MoveAlgorithm::kIcm, std::nullopt, std::nullopt,
                     &proposed, t0);
}

MoveState collapse_auxiliaries(const HierarchicalNetwork& net, MoveState state) {
  HigherOrderResult res = eval_higher_order(net, state.labeling.base());
  state.labeling = std::move(res.labeling);
  state.energy = res.energy;
  return state;
}

RangeMoveProblem build_range_expansion_problem(const HierarchicalNetwork& net, const Labeling& x,
                                               Label alpha) {
  require_base_label(net, alpha, "expansion label");
  validate_labeling(net, x);
  return assemble_range(net, x, range_expansion_spec(net, x, alpha));
}

RangeMoveProblem build_range_swap_problem(const HierarchicalNetwork& net, const Labeling& x,
                                          Label alpha, Label beta) {
  require_base_label(net, alpha, "swap label");
  require_base_label(net, beta, "swap label");
  if (alpha == beta) throw ParameterError("swap labels must differ");
  validate_labeling(net, x);
  return assemble_range(net, x, range_swap_spec(net, x, alpha, beta));
}

MoveResult solve(const HierarchicalNetwork& net, MoveAlgorithm algorithm,
                 const SolveOptions& options) {
  if (options.max_sweeps < 1) throw ParameterError("max_sweeps must be at least 1");
  MoveState state = initial_state(net, options.init);

  const int K = net.num_labels();
  std::vector<std::pair<Label, Label>> pairs;
  if (algorithm == MoveAlgorithm::kSwap) {
    const int slots = K + (net.num_levels() > 1 ? 1 : 0);
    for (int i = 0; i < slots; ++i)
      for (int j = i + 1; j < slots; ++j)
        pairs.emplace_back(Label::from_slot(i, K), Label::from_slot(j, K));
  } else if (algorithm == MoveAlgorithm::kRangeSwap) {
    for (int i = 0; i < K; ++i)
      for (int j = i + 1; j < K; ++j) pairs.emplace_back(Label::base(i), Label::base(j));
  }
  int sweeps = 0;
  bool converged = false;
  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    state.sweep = sweep;
    const std::size_t first = state.trace.size();
    switch (algorithm) {
      case MoveAlgorithm::kExpansion:
        for (int a = 0; a < K; ++a)
          state = alpha_expansion_step(net, std::move(state), Label::base(a));
        break;
      case MoveAlgorithm::kRangeExpansion:
        for (int a = 0; a < K; ++a)
          state = range_expansion_step(net, std::move(state), Label::base(a));
        break;
      case MoveAlgorithm::kSwap:
        for (const auto& [a, b] : pairs)
          state = alphabeta_swap_step(net, std::move(state), a, b);
        break;
      case MoveAlgorithm::kRangeSwap:
        for (const auto& [a, b] : pairs) state = range_swap_step(net, std::move(state), a, b);
        break;
      case MoveAlgorithm::kIcm:
        state = icm_step(net, std::move(state));
        break;
    }
    sweeps = sweep;
    bool any = false;
    for (std::size_t i = first; i < state.trace.size(); ++i) any |= state.trace[i].accepted;
    if (!any) {
      converged = true;
      break;
    }
  }

  MoveResult result;
  result.final_joint = state.energy;
  result.sweeps = sweeps;
  result.converged = converged;
  state = collapse_with_fallback(net, std::move(state), &result.higher_order_exact);
  result.final_higher_order = state.energy;
  result.labeling = std::move(state.labeling);
  result.trace = std::move(state.trace);
  result.notes = std::move(state.notes);
  return result;
}

}  // namespace ahncut
