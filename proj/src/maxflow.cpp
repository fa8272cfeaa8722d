#include "ahncut/maxflow.hpp"

#include <algorithm>
#include <limits>

#include "ahncut/errors.hpp"

namespace ahncut {

FlowGraph::FlowGraph(int num_nodes) : num_nodes_(num_nodes) {
  if (num_nodes < 0) throw ParameterError("node count must be >= 0");
  to_source_.assign(num_nodes, 0.0);
  to_sink_.assign(num_nodes, 0.0);
}

void FlowGraph::add_terminal(int node, double from_source, double to_sink) {
  if (node < 0 || node >= num_nodes_) throw ParameterError("terminal node out of range");
  if (from_source < 0.0 || to_sink < 0.0) throw ParameterError("terminal capacity must be >= 0");
  to_source_[node] += from_source;
  to_sink_[node] += to_sink;
}

void FlowGraph::add_arc(int u, int v, double cap, double rev_cap) {
  if (u < 0 || u >= num_nodes_ || v < 0 || v >= num_nodes_)
    throw ParameterError("arc endpoint out of range");
  if (u == v) throw ParameterError("self arcs are not allowed");
  if (cap < 0.0 || rev_cap < 0.0) throw ParameterError("arc capacity must be >= 0");
  arcs_.push_back({u, v, cap, rev_cap});
}

namespace {

// Dinic over an explicit residual representation. Arcs are stored in pairs so
// that arc i and arc i^1 are mutual reverses.
class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add(int u, int v, double cap, double rev_cap) {
    to_.push_back(v);
    res_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    res_.push_back(rev_cap);
    next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }

  double run(int s, int t) {
    double total = 0.0;
    while (bfs(s, t)) {
      it_ = head_;
      while (true) {
        double pushed = dfs(s, t, std::numeric_limits<double>::infinity());
        if (pushed <= 0.0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Residual reachability from s (canonical minimum cut side).
  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a >= 0; a = next_[a])
        if (res_[a] > 0.0 && !seen[to_[a]]) {
          seen[to_[a]] = true;
          stack.push_back(to_[a]);
        }
    }
    return seen;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int a = head_[u]; a >= 0; a = next_[a])
        if (res_[a] > 0.0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          queue.push_back(to_[a]);
        }
    }
    return level_[t] >= 0;
  }

  double dfs(int u, int t, double limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a >= 0; a = next_[a]) {
      int v = to_[a];
      if (res_[a] > 0.0 && level_[v] == level_[u] + 1) {
        double pushed = dfs(v, t, std::min(limit, res_[a]));
        if (pushed > 0.0) {
          res_[a] -= pushed;
          res_[a ^ 1] += pushed;
          return pushed;
        }
      }
    }
    level_[u] = -1;  // dead end in this phase
    return 0.0;
  }

  std::vector<int> head_, to_, next_, level_, it_;
  std::vector<double> res_;
};

}  // namespace

FlowGraph::Result FlowGraph::max_flow() const {
  int s = num_nodes_;
  int t = num_nodes_ + 1;
  Dinic dinic(num_nodes_ + 2);
  for (int i = 0; i < num_nodes_; ++i) {
    if (to_source_[i] > 0.0) dinic.add(s, i, to_source_[i], 0.0);
    if (to_sink_[i] > 0.0) dinic.add(i, t, to_sink_[i], 0.0);
  }
  for (const Arc& a : arcs_)
    if (a.cap > 0.0 || a.rev_cap > 0.0) dinic.add(a.u, a.v, a.cap, a.rev_cap);

  Result result;
  result.value = dinic.run(s, t);
  std::vector<bool> seen = dinic.reachable(s);
  result.source_side.assign(num_nodes_, false);
  for (int i = 0; i < num_nodes_; ++i) result.source_side[i] = seen[i];
  return result;
}

}  // namespace ahncut
