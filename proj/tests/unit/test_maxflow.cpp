#include <algorithm>
#include <vector>

#include "ahncut/maxflow.hpp"
#include "ahncut/rng.hpp"
#include "doctest.h"

using namespace ahncut;

namespace {

struct RandomGraph {
  int nodes = 0;
  std::vector<double> from_source, to_sink;
  struct Arc {
    int u, v;
    double cap, rev;
  };
  std::vector<Arc> arcs;

  FlowGraph build(const std::vector<int>& arc_order) const {
    FlowGraph g(nodes);
    for (int i = 0; i < nodes; ++i) g.add_terminal(i, from_source[i], to_sink[i]);
    for (int idx : arc_order) g.add_arc(arcs[idx].u, arcs[idx].v, arcs[idx].cap, arcs[idx].rev);
    return g;
  }

  // Minimum cut capacity by enumerating every source-side subset.
  double min_cut_by_enumeration() const {
    double best = 1e300;
    for (int mask = 0; mask < (1 << nodes); ++mask) {
      double cut = 0.0;
      for (int i = 0; i < nodes; ++i) {
        const bool src = mask & (1 << i);
        if (!src) cut += from_source[i];
        if (src) cut += to_sink[i];
      }
      for (const Arc& a : arcs) {
        const bool us = mask & (1 << a.u), vs = mask & (1 << a.v);
        if (us && !vs) cut += a.cap;
        if (vs && !us) cut += a.rev;
      }
      best = std::min(best, cut);
    }
    return best;
  }
};

RandomGraph draw_graph(Rng& rng) {
  RandomGraph g;
  g.nodes = 2 + static_cast<int>(rng.below(7));  // 2..8
  for (int i = 0; i < g.nodes; ++i) {
    g.from_source.push_back(rng.dyadic(4.0));
    g.to_sink.push_back(rng.dyadic(4.0));
  }
  const int num_arcs = static_cast<int>(rng.below(2 * g.nodes + 1));
  for (int a = 0; a < num_arcs; ++a) {
    const int u = static_cast<int>(rng.below(g.nodes));
    int v = static_cast<int>(rng.below(g.nodes));
    if (v == u) v = (v + 1) % g.nodes;
    g.arcs.push_back({u, v, rng.dyadic(4.0), rng.dyadic(4.0)});
  }
  return g;
}

}  // namespace

TEST_CASE("single node takes the smaller terminal capacity") {
  FlowGraph g(1);
  g.add_terminal(0, 3.0, 1.0);
  const FlowGraph::Result r = g.max_flow();
  CHECK(r.value == 1.0);
  CHECK(r.source_side[0]);  // the sink arc saturates, the node stays reachable
}

TEST_CASE("two-node bottleneck") {
  FlowGraph g(2);
  g.add_terminal(0, 2.0, 0.0);
  g.add_terminal(1, 0.0, 2.0);
  g.add_arc(0, 1, 1.0);
  const FlowGraph::Result r = g.max_flow();
  CHECK(r.value == 1.0);
  CHECK(r.source_side[0]);
  CHECK_FALSE(r.source_side[1]);
}

TEST_CASE("flow equals the enumerated minimum cut on random graphs") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const RandomGraph g = draw_graph(rng);
    std::vector<int> order(g.arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    const FlowGraph::Result r = g.build(order).max_flow();
    CHECK(r.value == doctest::Approx(g.min_cut_by_enumeration()).epsilon(1e-12));

    // The reported side itself must be a cut of the same capacity.
    double cut = 0.0;
    for (int i = 0; i < g.nodes; ++i) {
      if (!r.source_side[i]) cut += g.from_source[i];
      if (r.source_side[i]) cut += g.to_sink[i];
    }
    for (const RandomGraph::Arc& a : g.arcs) {
      if (r.source_side[a.u] && !r.source_side[a.v]) cut += a.cap;
      if (r.source_side[a.v] && !r.source_side[a.u]) cut += a.rev;
    }
    CHECK(cut == doctest::Approx(r.value).epsilon(1e-12));
  }
}

TEST_CASE("flow value is invariant under arc insertion order") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomGraph g = draw_graph(rng);
    std::vector<int> order(g.arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    const FlowGraph::Result forward = g.build(order).max_flow();
    std::reverse(order.begin(), order.end());
    const FlowGraph::Result backward = g.build(order).max_flow();
    CHECK(forward.value == backward.value);
    CHECK(forward.source_side == backward.source_side);
  }
}

TEST_CASE("solving is repeatable on the same instance") {
  Rng rng(5);
  const RandomGraph g = draw_graph(rng);
  std::vector<int> order(g.arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  const FlowGraph graph = g.build(order);
  const FlowGraph::Result first = graph.max_flow();
  const FlowGraph::Result second = graph.max_flow();
  CHECK(first.value == second.value);
  CHECK(first.source_side == second.source_side);
}
