#pragma once

// Dinic max-flow on an integer network. Internal helper.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace monoflow::detail {

class MaxFlow {
 public:
  explicit MaxFlow(int n) : adj_(static_cast<std::size_t>(n)), level_(n), iter_(n) {}

  int add_arc(int from, int to, std::int64_t cap) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[static_cast<std::size_t>(from)].push_back(id);
    arcs_.push_back({from, 0});
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  std::int64_t flow_on(int arc_id) const { return arcs_[static_cast<std::size_t>(arc_id) ^ 1].cap; }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  /// After run(): vertices reachable from s in the residual network.
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const auto& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct ArcData {
    int to;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(s)] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const auto& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  std::int64_t dfs(int v, int t, std::int64_t limit) {
    if (v == t) return limit;
    auto& list = adj_[static_cast<std::size_t>(v)];
    for (int& i = iter_[static_cast<std::size_t>(v)]; i < static_cast<int>(list.size()); ++i) {
      int id = list[static_cast<std::size_t>(i)];
      auto& a = arcs_[static_cast<std::size_t>(id)];
      if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1) continue;
      std::int64_t pushed = dfs(a.to, t, std::min(limit, a.cap));
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[static_cast<std::size_t>(id) ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<ArcData> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace monoflow::detail
