#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace oc::detail {

// Dinic on small unit-ish networks.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : g_(n), level_(n), it_(n) {}

  int add_edge(int u, int v, int cap) {
    g_[u].push_back({v, static_cast<int>(g_[v].size()), cap});
    g_[v].push_back({u, static_cast<int>(g_[u].size()) - 1, 0});
    return static_cast<int>(g_[u].size()) - 1;
  }

  long long run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }

  // residual capacity of the idx-th arc out of u
  int cap(int u, int idx) const { return g_[u][idx].cap; }

 private:
  struct Arc {
    int to, rev, cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : g_[u])
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = it_[u]; i < static_cast<int>(g_[u].size()); ++i) {
      Arc& a = g_[u][i];
      if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          g_[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> g_;
  std::vector<int> level_, it_;
};

}  // namespace oc::detail
