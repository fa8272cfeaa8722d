// Python bindings for the core library. Labels cross the boundary as plain
// ints: base labels by index, the free label as -1. Labelings are lists of
// lists, one row per level.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ahncut/compare.hpp"
#include "ahncut/energy.hpp"
#include "ahncut/errors.hpp"
#include "ahncut/generator.hpp"
#include "ahncut/io.hpp"
#include "ahncut/moves.hpp"
#include "ahncut/oracle.hpp"
#include "ahncut/robust_pn.hpp"
#include "ahncut/validate.hpp"

namespace py = pybind11;
using namespace ahncut;

namespace {

Label label_from_int(int v) { return v < 0 ? Label::free() : Label::base(v); }
int label_to_int(Label l) { return l.is_free() ? -1 : l.index(); }

std::vector<Label> row_from_ints(const std::vector<int>& row) {
  std::vector<Label> out;
  out.reserve(row.size());
  for (int v : row) out.push_back(label_from_int(v));
  return out;
}

Labeling labeling_from_lists(const std::vector<std::vector<int>>& rows) {
  Labeling x;
  for (const auto& row : rows) x.levels.push_back(row_from_ints(row));
  return x;
}

std::vector<std::vector<int>> labeling_to_lists(const Labeling& x) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : x.levels) {
    std::vector<int> out;
    out.reserve(row.size());
    for (Label l : row) out.push_back(label_to_int(l));
    rows.push_back(std::move(out));
  }
  return rows;
}

InitOptions make_init(const std::string& init, int uniform_label, std::uint64_t seed) {
  InitOptions options;
  options.seed = seed;
  if (init == "argmin") {
    options.kind = InitKind::kArgmin;
  } else if (init == "random") {
    options.kind = InitKind::kRandom;
  } else if (init == "uniform") {
    options.kind = InitKind::kUniform;
    options.uniform_label = Label::base(uniform_label);
  } else {
    throw ParameterError("unknown init scheme '" + init + "' (argmin, uniform, random)");
  }
  return options;
}

MoveAlgorithm algorithm_from_name(const std::string& name) {
  const auto algorithm = parse_algorithm(name);
  if (!algorithm)
    throw ParameterError("unknown algorithm '" + name +
                         "' (expansion, swap, range-expansion, range-swap, icm)");
  return *algorithm;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "MAP inference on associative hierarchical networks";

  py::register_exception<Error>(m, "Error");

  py::class_<HierarchicalNetwork>(m, "Network")
      .def_property_readonly("num_labels", &HierarchicalNetwork::num_labels)
      .def_property_readonly("num_levels", &HierarchicalNetwork::num_levels)
      .def_property_readonly("num_aux_vars", &HierarchicalNetwork::num_aux_vars)
      .def("level_size", &HierarchicalNetwork::level_size, py::arg("level"))
      .def("to_text", [](const HierarchicalNetwork& net) { return write_network(net); })
      .def("__repr__", [](const HierarchicalNetwork& net) {
        return "<Network levels=" + std::to_string(net.num_levels()) +
               " labels=" + std::to_string(net.num_labels()) +
               " base_vars=" + std::to_string(net.level_size(0)) + ">";
      });

  m.def("parse_network", &parse_network, py::arg("text"), "Parse a network from file text.");
  m.def("load_network", &load_network, py::arg("path"));
  m.def("save_network", &save_network, py::arg("net"), py::arg("path"));
  m.def(
      "generate",
      [](const std::string& spec) { return generate(GeneratorSpec::parse(spec)); },
      py::arg("spec"), "Generate a synthetic network from a key=value spec string.");

  m.def(
      "eval_joint",
      [](const HierarchicalNetwork& net, const std::vector<std::vector<int>>& rows) {
        return eval_joint(net, labeling_from_lists(rows));
      },
      py::arg("net"), py::arg("labeling"),
      "Energy of a full labeling (one row of labels per level, -1 = free).");
  m.def(
      "eval_higher_order",
      [](const HierarchicalNetwork& net, const std::vector<int>& base) {
        const HigherOrderResult res = eval_higher_order(net, row_from_ints(base));
        return py::make_tuple(res.energy, labeling_to_lists(res.labeling));
      },
      py::arg("net"), py::arg("base_labels"),
      "Energy of a base labeling with the auxiliary levels minimized out; returns "
      "(energy, full labeling).");
  m.def(
      "brute_force_map",
      [](const HierarchicalNetwork& net) {
        const HigherOrderResult res = brute_force_map(net);
        return py::make_tuple(res.energy, labeling_to_lists(res.labeling));
      },
      py::arg("net"), "Exact global minimum by enumeration; returns (energy, labeling).");

  m.def(
      "check_consistency",
      [](const HierarchicalNetwork& net) {
        const ConsistencyReport report = check_hierarchical_consistency(net);
        py::list entries;
        for (const ConsistencyEntry& e : report.entries) {
          py::dict row;
          row["level"] = e.level;
          row["var"] = e.var;
          row["lhs"] = e.lhs;
          row["rhs"] = e.rhs;
          row["pass"] = e.pass;
          entries.append(row);
        }
        return py::make_tuple(report.all_pass, entries);
      },
      py::arg("net"),
      "Weighted-majority margin check per auxiliary variable; returns (all_pass, entries).");
  m.def("check_edge_family", &check_edge_family, py::arg("net"));

  m.def(
      "solve",
      [](const HierarchicalNetwork& net, const std::string& algorithm, int max_sweeps,
         const std::string& init, int uniform_label, std::uint64_t seed) {
        SolveOptions options;
        options.max_sweeps = max_sweeps;
        options.init = make_init(init, uniform_label, seed);
        const MoveResult r = solve(net, algorithm_from_name(algorithm), options);
        py::dict out;
        out["labeling"] = labeling_to_lists(r.labeling);
        out["final_joint"] = r.final_joint;
        out["final_higher_order"] = r.final_higher_order;
        out["higher_order_exact"] = r.higher_order_exact;
        out["sweeps"] = r.sweeps;
        out["converged"] = r.converged;
        out["notes"] = r.notes;
        py::list trace;
        for (const TraceRecord& t : r.trace) {
          py::dict row;
          row["sweep"] = t.sweep;
          row["step"] = t.step;
          row["algorithm"] = to_string(t.algorithm);
          row["alpha"] = t.alpha ? py::cast(label_to_int(*t.alpha)) : py::none();
          row["beta"] = t.beta ? py::cast(label_to_int(*t.beta)) : py::none();
          row["energy_before"] = t.energy_before;
          row["energy_after"] = t.energy_after;
          row["accepted"] = t.accepted;
          trace.append(row);
        }
        out["trace"] = trace;
        return out;
      },
      py::arg("net"), py::arg("algorithm") = "expansion", py::arg("max_sweeps") = 500,
      py::arg("init") = "argmin", py::arg("uniform_label") = 0, py::arg("seed") = 0,
      "Minimize with a move-making algorithm; returns a result dict with the trace.");

  m.def(
      "robust_pn_value",
      [](const std::vector<double>& weights, const std::vector<double>& gammas, double gamma_max,
         const std::vector<int>& member_labels) {
        RobustPnClique clique;
        clique.weights = weights;
        clique.gammas = gammas;
        clique.gamma_max = gamma_max;
        clique.validate();
        return robust_pn_value(clique, row_from_ints(member_labels));
      },
      py::arg("weights"), py::arg("gammas"), py::arg("gamma_max"), py::arg("member_labels"),
      "Truncated clique potential: best per-label cost plus disagreement weights, capped.");

  m.def(
      "compare_csv",
      [](const std::vector<HierarchicalNetwork>& instances,
         const std::vector<std::string>& algorithms, int max_sweeps, bool with_timings) {
        std::vector<MoveAlgorithm> parsed;
        for (const std::string& name : algorithms) parsed.push_back(algorithm_from_name(name));
        if (parsed.empty()) parsed = all_algorithms();
        SolveOptions options;
        options.max_sweeps = max_sweeps;
        return compare_algorithms(instances, parsed, options).to_csv(with_timings);
      },
      py::arg("instances"), py::arg("algorithms") = std::vector<std::string>{},
      py::arg("max_sweeps") = 500, py::arg("with_timings") = false,
      "Run algorithms over a corpus and return the comparison report as CSV.");
}
