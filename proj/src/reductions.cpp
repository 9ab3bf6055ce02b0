#include "orientcount/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace oc {

bool unique_perfect_matching(const Bipartite& g) {
  if (g.na != g.nb) return false;
  std::vector<int> ma(g.na, -1), mb(g.nb, -1);
  std::vector<int> vis(g.na, 0);
  int stamp = 0;
  std::function<bool(int)> aug = [&](int a) {
    vis[a] = stamp;
    for (int b : g.adj[a])
      if (mb[b] < 0 || (vis[mb[b]] != stamp && aug(mb[b]))) {
        ma[a] = b;
        mb[b] = a;
        return true;
      }
    return false;
  };
  for (int a = 0; a < g.na; ++a) {
    ++stamp;
    if (!aug(a)) return false;
  }
  // an alternating cycle is a directed cycle on A: a -> mb[b] for unmatched b
  std::vector<int> color(g.na, 0);
  std::function<bool(int)> cyc = [&](int a) {
    color[a] = 1;
    for (int b : g.adj[a]) {
      if (b == ma[a]) continue;
      int a2 = mb[b];
      if (color[a2] == 1) return true;
      if (color[a2] == 0 && cyc(a2)) return true;
    }
    color[a] = 2;
    return false;
  };
  for (int a = 0; a < g.na; ++a)
    if (color[a] == 0 && cyc(a)) return false;
  return true;
}

Graph graph_of(const PlanarMap& m) { return {m.vertex_count(), m.edge_list()}; }

FFactorInstance alpha_to_f_factor(const PlanarMap& m, const std::vector<int>& alpha) {
  FFactorInstance r;
  const int n = m.vertex_count(), me = m.edge_count();
  r.original_n = n;
  r.graph.n = n + me;
  r.f = alpha;
  r.f.resize(n + me, 1);
  for (int e = 0; e < me; ++e) {
    auto [u, v] = m.edge_ends(e);
    r.graph.edges.push_back({u, n + e});
    r.graph.edges.push_back({v, n + e});
  }
  return r;
}

BigInt f_factor_count(const Graph& g, const std::vector<int>& f) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<int> deg(g.n, 0), left(g.n, 0);
  for (auto [u, v] : g.edges) ++left[u], ++left[v];
  for (int v = 0; v < g.n; ++v)
    if (f[v] < 0 || f[v] > left[v]) return 0;
  uint64_t total = 0;
  std::function<void(int)> go = [&](int i) {
    if (i == m) {
      ++total;
      return;
    }
    auto [u, v] = g.edges[i];
    --left[u], --left[v];
    // take the edge
    if (deg[u] < f[u] && deg[v] < f[v]) {
      ++deg[u], ++deg[v];
      if (deg[u] + left[u] >= f[u] && deg[v] + left[v] >= f[v]) go(i + 1);
      --deg[u], --deg[v];
    }
    if (deg[u] + left[u] >= f[u] && deg[v] + left[v] >= f[v]) go(i + 1);
    ++left[u], ++left[v];
  };
  go(0);
  return total;
}

BlowUp tutte_blowup(const FFactorInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<std::vector<int>> inc(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [u, v] = g.edges[e];
    if ((u < inst.original_n) == (v < inst.original_n)) fail(Errc::kInvalidInput, "graph is not bipartite");
    inc[u].push_back(e);
    inc[v].push_back(e);
  }
  // X: ports of original vertices, inner vertices of edge vertices.
  // Y: ports of edge vertices, inner vertices of original vertices.
  BlowUp r;
  r.multiplier = 1;
  std::vector<int> portx(g.edges.size()), porty(g.edges.size());
  int nx = 0, ny = 0;
  std::vector<std::vector<int>> inner_of(g.n);
  for (int v = 0; v < g.n; ++v) {
    const bool orig = v < inst.original_n;
    const int d = static_cast<int>(inc[v].size());
    if (inst.f[v] < 0 || inst.f[v] > d) fail(Errc::kInvalidInput, "f outside 0..d");
    for (int e : inc[v]) (orig ? portx[e] : porty[e]) = orig ? nx++ : ny++;
    for (int j = 0; j < d - inst.f[v]; ++j) {
      inner_of[v].push_back(orig ? ny++ : nx++);
      r.multiplier *= (j + 1);
    }
    r.ports += d;
    r.inner += d - inst.f[v];
  }
  r.graph.na = nx;
  r.graph.nb = ny;
  r.graph.adj.assign(nx, {});
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) r.graph.adj[portx[e]].push_back(porty[e]);
  for (int v = 0; v < g.n; ++v) {
    const bool orig = v < inst.original_n;
    for (int w : inner_of[v])
      for (int e : inc[v]) {
        if (orig) r.graph.adj[portx[e]].push_back(w);
        else r.graph.adj[w].push_back(porty[e]);
      }
  }
  return r;
}

namespace {

BigInt pm_brute(const Bipartite& g) {
  std::vector<char> used(g.nb, 0);
  uint64_t total = 0;
  std::function<void(int)> go = [&](int a) {
    if (a == g.na) {
      ++total;
      return;
    }
    for (int b : g.adj[a])
      if (!used[b]) {
        used[b] = 1;
        go(a + 1);
        used[b] = 0;
      }
  };
  go(0);
  return total;
}

BigInt pm_ryser(const Bipartite& g, int threads) {
  const int n = g.na;
  if (n > 30) fail(Errc::kSizeExceeded, "Ryser backend limited to 30 rows");
  if (n == 0) return 1;
  // column j -> rows having an edge to it, with multiplicity
  std::vector<std::vector<int>> col(n);
  double lg = 0;
  for (int a = 0; a < n; ++a) {
    for (int b : g.adj[a]) col[b].push_back(a);
    lg += std::log2(std::max<size_t>(1, g.adj[a].size()));
  }
  const bool small = lg + n < 125;
  const int low = std::min(n, 20);
  const uint64_t blocks = uint64_t{1} << (n - low);
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<uint64_t>(blocks, 64))));
  std::vector<BigInt> partial(threads);
  auto work = [&](int tid) {
    BigInt acc_big = 0;
    __int128 acc = 0;
    std::vector<int64_t> rs(n);
    for (uint64_t blk = tid; blk < blocks; blk += threads) {
      std::fill(rs.begin(), rs.end(), 0);
      const uint64_t hi = blk << low;
      for (int j = low; j < n; ++j)
        if ((hi >> j) & 1U)
          for (int a : col[j]) ++rs[a];
      uint64_t gray = 0;
      const uint64_t steps = uint64_t{1} << low;
      for (uint64_t x = 0; x < steps; ++x) {
        if (x) {
          int j = __builtin_ctzll(x);
          gray ^= uint64_t{1} << j;
          const int delta = (gray >> j) & 1U ? 1 : -1;
          for (int a : col[j]) rs[a] += delta;
        }
        const int size = __builtin_popcountll(gray | hi);
        if (small) {
          __int128 p = 1;
          for (int a = 0; a < n && p; ++a) p *= rs[a];
          acc += (size & 1) ? -p : p;
        } else {
          BigInt p = 1;
          for (int a = 0; a < n && p != 0; ++a) p *= rs[a];
          if (size & 1) acc_big -= p;
          else acc_big += p;
        }
      }
    }
    if (small) {
      // __int128 -> BigInt through two halves
      bool neg = acc < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-acc) : static_cast<unsigned __int128>(acc);
      BigInt b = static_cast<uint64_t>(u >> 64);
      b <<= 64;
      b += static_cast<uint64_t>(u);
      acc_big += neg ? BigInt(-b) : b;
    }
    partial[tid] = acc_big;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (auto& p : partial) total += p;
  return (n & 1) ? BigInt(-total) : total;
}

// Rows in BFS order; a column holds a slot from its first row to its last.
BigInt pm_frontier(const Bipartite& g) {
  const int na = g.na, nb = g.nb;
  std::vector<std::vector<int>> radj(nb);
  for (int a = 0; a < na; ++a)
    for (int b : g.adj[a]) radj[b].push_back(a);
  for (int b = 0; b < nb; ++b)
    if (radj[b].empty()) return 0;
  std::vector<int> order;
  std::vector<char> seen(na, 0);
  for (int s = 0; s < na; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      int a = order[head++];
      for (int b : g.adj[a])
        for (int a2 : radj[b])
          if (!seen[a2]) seen[a2] = 1, order.push_back(a2);
    }
  }
  std::vector<int> pos(na), last(nb, -1);
  for (int i = 0; i < na; ++i) pos[order[i]] = i;
  for (int b = 0; b < nb; ++b)
    for (int a : radj[b]) last[b] = std::max(last[b], pos[a]);
  std::vector<std::vector<int>> retire(na);
  for (int b = 0; b < nb; ++b) retire[last[b]].push_back(b);

  std::vector<int> slot(nb, -1);
  uint64_t free_slots = ~uint64_t{0};
  std::unordered_map<uint64_t, BigInt> cur{{0, 1}}, nxt;
  for (int i = 0; i < na; ++i) {
    const int a = order[i];
    for (int b : g.adj[a])
      if (slot[b] < 0) {
        if (!free_slots) fail(Errc::kSizeExceeded, "matching frontier wider than 64");
        slot[b] = __builtin_ctzll(free_slots);
        free_slots &= free_slots - 1;
      }
    nxt.clear();
    for (auto& [mask, c] : cur)
      for (int b : g.adj[a]) {
        uint64_t bit = uint64_t{1} << slot[b];
        if (mask & bit) continue;
        nxt[mask | bit] += c;
      }
    uint64_t need = 0;
    for (int b : retire[i]) need |= uint64_t{1} << slot[b];
    cur.clear();
    for (auto& [mask, c] : nxt)
      if ((mask & need) == need) cur[mask & ~need] += c;
    for (int b : retire[i]) {
      free_slots |= uint64_t{1} << slot[b];
      slot[b] = -2;
    }
    if (cur.empty()) return 0;
  }
  auto it = cur.find(0);
  return it == cur.end() ? BigInt(0) : it->second;
}

}  // namespace

BigInt perfect_matching_count(const Bipartite& g, PmMethod method, int threads) {
  if (g.na != g.nb) return 0;
  switch (method) {
    case PmMethod::kBrute: return pm_brute(g);
    case PmMethod::kRyser: return pm_ryser(g, threads);
    case PmMethod::kFrontier:
    case PmMethod::kAuto: return pm_frontier(g);
  }
  return pm_frontier(g);
}

BigInt spanning_tree_count(const Graph& g) {
  const int n = g.n;
  if (n == 0) fail(Errc::kDisconnected, "empty graph");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int comps = n;
  for (auto [u, v] : g.edges)
    if (u != v && find(u) != find(v)) parent[find(u)] = find(v), --comps;
  if (comps != 1) fail(Errc::kDisconnected, "graph is disconnected");
  if (n == 1) return 1;
  const int r = n - 1;  // drop the last row and column
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(r, 0));
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    if (u < r) a[u][u] += 1;
    if (v < r) a[v][v] += 1;
    if (u < r && v < r) a[u][v] -= 1, a[v][u] -= 1;
  }
  // Bareiss
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < r; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < r && a[p][k] == 0) ++p;
      if (p == r) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < r; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[r - 1][r - 1];
  return sign > 0 ? det : BigInt(-det);
}

Bipartite grid_minus_corner(int a, int b) {
  const int parity = (a + 1) & 1;  // colour class of the removed corner
  std::vector<int> id(a * b, -1);
  int na = 0, nb = 0;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      if (i == a && j == 1) continue;
      id[(i - 1) * b + j - 1] = ((i + j) & 1) == parity ? na++ : nb++;
    }
  Bipartite g;
  g.na = na;
  g.nb = nb;
  g.adj.assign(na, {});
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      int v = (i - 1) * b + j - 1;
      if (id[v] < 0 || ((i + j) & 1) != parity) continue;
      const int di[4] = {-1, 1, 0, 0}, dj[4] = {0, 0, -1, 1};
      for (int t = 0; t < 4; ++t) {
        int i2 = i + di[t], j2 = j + dj[t];
        if (i2 < 1 || i2 > a || j2 < 1 || j2 > b) continue;
        int w = (i2 - 1) * b + j2 - 1;
        if (id[w] >= 0) g.adj[id[v]].push_back(id[w]);
      }
    }
  return g;
}

GridProductReport grid_matching_product(int k, int l) {
  if (k < 2 || l < 2) fail(Errc::kBadParameters, "k, l >= 2");
  GridProductReport r;
  r.k = k;
  r.l = l;
  const double pi = std::acos(-1.0);
  auto term = [&](int i, int j) { return 4 - 2 * std::cos(pi * i / k) - 2 * std::cos(pi * j / l); };
  r.printed = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) r.printed *= term(i, j);
  r.corrected = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j)
      if (i || j) r.corrected *= term(i, j);
  r.corrected /= k * l;
  Graph grid;
  grid.n = k * l;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) {
      if (j + 1 < l) grid.edges.push_back({i * l + j, i * l + j + 1});
      if (i + 1 < k) grid.edges.push_back({i * l + j, (i + 1) * l + j});
    }
  r.spanning_trees = spanning_tree_count(grid);
  r.matchings = perfect_matching_count(grid_minus_corner(2 * k - 1, 2 * l - 1));
  const double exact = r.spanning_trees.convert_to<double>();
  r.printed_agrees = std::fabs(r.printed - exact) <= 1e-9 * exact;
  r.corrected_agrees = std::fabs(r.corrected - exact) <= 1e-9 * exact;
  return r;
}

TwoFactorStats two_factor_stats(int i) {
  if (i < 3) fail(Errc::kBadParameters, "i >= 3");
  if (i > 6) fail(Errc::kSizeExceeded, "brute force limited to K_{6,6}");
  TwoFactorStats s;
  s.i = i;
  std::vector<int> cdeg(i, 0);
  uint64_t all = 0, with0 = 0;
  // rows pick two columns each; column degrees must end at 2
  std::function<void(int, bool)> go = [&](int r, bool has0) {
    if (r == i) {
      ++all;
      if (has0) ++with0;
      return;
    }
    for (int c1 = 0; c1 < i; ++c1)
      for (int c2 = c1 + 1; c2 < i; ++c2) {
        if (cdeg[c1] == 2 || cdeg[c2] == 2) continue;
        ++cdeg[c1], ++cdeg[c2];
        // remaining rows can add at most 2 per column... and must fill all
        int rows_left = i - r - 1, need = 0;
        for (int c = 0; c < i; ++c) need += 2 - cdeg[c];
        if (need == 2 * rows_left) go(r + 1, has0 || (r == 0 && c1 == 0));
        --cdeg[c1], --cdeg[c2];
      }
  };
  go(0, false);
  s.c = all;
  s.a = with0;
  s.b = all - with0;
  s.identities = s.a * i == 2 * s.c && s.b * i == (i - 2) * s.c && s.a * (i - 2) == 2 * s.b;
  return s;
}

}  // namespace oc
