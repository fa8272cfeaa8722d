#pragma once

#include <vector>

namespace ahncut {

// s-t flow network over `num_nodes` ordinary nodes. The source and sink are
// implicit: per-node terminal capacities take their place. Arcs may carry a
// reverse capacity, so an undirected edge is a single add_arc call.
//
// max_flow() is const and deterministic: repeated calls (or copies) return
// identical results, and the reported cut side is canonical — a node is on the
// source side iff it is reachable from the source in the final residual graph.
class FlowGraph {
 public:
  explicit FlowGraph(int num_nodes);

  int num_nodes() const { return num_nodes_; }

  // Adds source->node capacity `from_source` and node->sink capacity `to_sink`
  // (accumulating across calls).
  void add_terminal(int node, double from_source, double to_sink);

  // Adds an arc u->v with capacity `cap` and v->u with capacity `rev_cap`.
  void add_arc(int u, int v, double cap, double rev_cap = 0.0);

  struct Result {
    double value = 0.0;
    std::vector<bool> source_side;  // one per node
  };

  Result max_flow() const;

 private:
  int num_nodes_;
  std::vector<double> to_source_;  // capacity source->i
  std::vector<double> to_sink_;    // capacity i->sink
  struct Arc {
    int u, v;
    double cap, rev_cap;
  };
  std::vector<Arc> arcs_;
};

}  // namespace ahncut
