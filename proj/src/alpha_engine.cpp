#include "orientcount/alpha_engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "maxflow.hpp"

namespace oc {

std::string EdgeOrientation::bits() const {
  std::string s(m_, '0');
  for (int e = 0; e < m_; ++e)
    if (forward(e)) s[e] = '1';
  return s;
}

EdgeOrientation EdgeOrientation::from_bits(const std::string& s) {
  EdgeOrientation x(static_cast<int>(s.size()));
  for (size_t e = 0; e < s.size(); ++e) {
    if (s[e] != '0' && s[e] != '1') fail(Errc::kParse, "orientation bits must be 0/1");
    x.set(static_cast<int>(e), s[e] == '1');
  }
  return x;
}

size_t EdgeOrientationHash::operator()(const EdgeOrientation& x) const {
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(x.size());
  for (uint64_t w : x.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

int tail_of(const PlanarMap& m, const EdgeOrientation& x, int e) {
  return x.forward(e) ? m.origin(2 * e) : m.target(2 * e);
}

int head_of(const PlanarMap& m, const EdgeOrientation& x, int e) {
  return x.forward(e) ? m.target(2 * e) : m.origin(2 * e);
}

namespace {

bool active(const EdgeRules& r, int e) { return r.empty() || r[e] != EdgeRule::kIgnored; }
EdgeRule rule_of(const EdgeRules& r, int e) { return r.empty() ? EdgeRule::kFree : r[e]; }

}  // namespace

std::vector<int> out_degrees(const PlanarMap& m, const EdgeOrientation& x, const EdgeRules& rules) {
  std::vector<int> out(m.vertex_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e)
    if (active(rules, e)) ++out[tail_of(m, x, e)];
  return out;
}

bool is_alpha_orientation(const PlanarMap& m, const std::vector<int>& alpha, const EdgeOrientation& x,
                          const EdgeRules& rules) {
  if (x.size() != m.edge_count()) return false;
  for (int e = 0; e < m.edge_count(); ++e) {
    EdgeRule r = rule_of(rules, e);
    if (r == EdgeRule::kForward && !x.forward(e)) return false;
    if (r == EdgeRule::kBackward && x.forward(e)) return false;
  }
  auto out = out_degrees(m, x, rules);
  for (int v = 0; v < m.vertex_count(); ++v)
    if (alpha[v] != kFreeVertex && out[v] != alpha[v]) return false;
  return true;
}

void check_spec(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules) {
  if (static_cast<int>(alpha.size()) != m.vertex_count())
    fail(Errc::kInvalidInput, "alpha has " + std::to_string(alpha.size()) + " entries, map has " +
                                  std::to_string(m.vertex_count()) + " vertices");
  if (!rules.empty() && static_cast<int>(rules.size()) != m.edge_count())
    fail(Errc::kInvalidInput, "edge rules size differs from edge count");
  for (int v = 0; v < m.vertex_count(); ++v)
    if (alpha[v] != kFreeVertex && (alpha[v] < 0 || alpha[v] > m.degree(v)))
      fail(Errc::kInvalidInput, "alpha(" + std::to_string(v) + ") outside [0, d(v)]");
  for (int e = 0; e < m.edge_count(); ++e) {
    auto [u, v] = m.edge_ends(e);
    if (u == v && active(rules, e)) fail(Errc::kInvalidInput, "loops cannot be oriented");
  }
}

// ---------------------------------------------------------------- feasibility

namespace {

bool has_free_vertex(const std::vector<int>& alpha) {
  return std::find(alpha.begin(), alpha.end(), kFreeVertex) != alpha.end();
}

std::optional<EdgeOrientation> flow_orientation(const PlanarMap& m, const std::vector<int>& alpha,
                                                const EdgeRules& rules) {
  const int n = m.vertex_count();
  const int me = m.edge_count();
  std::vector<int> need(alpha);
  EdgeOrientation x(me);
  std::vector<int> free_edges;
  for (int e = 0; e < me; ++e) {
    EdgeRule r = rule_of(rules, e);
    if (r == EdgeRule::kIgnored) continue;
    if (r == EdgeRule::kForward || r == EdgeRule::kBackward) {
      x.set(e, r == EdgeRule::kForward);
      --need[tail_of(m, x, e)];
    } else {
      free_edges.push_back(e);
    }
  }
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    if (need[v] < 0) return std::nullopt;
    total += need[v];
  }
  const int k = static_cast<int>(free_edges.size());
  if (total != k) return std::nullopt;
  // source, edges, vertices, sink
  const int S = 0, T = 1 + k + n;
  detail::MaxFlow f(T + 1);
  std::vector<std::pair<int, int>> arcs(k);
  for (int i = 0; i < k; ++i) {
    auto [u, v] = m.edge_ends(free_edges[i]);
    f.add_edge(S, 1 + i, 1);
    arcs[i].first = f.add_edge(1 + i, 1 + k + u, 1);
    arcs[i].second = f.add_edge(1 + i, 1 + k + v, 1);
  }
  for (int v = 0; v < n; ++v)
    if (need[v] > 0) f.add_edge(1 + k + v, T, need[v]);
  if (f.run(S, T) != k) return std::nullopt;
  for (int i = 0; i < k; ++i) {
    // edge assigned to its tail
    bool to_u = f.cap(1 + i, arcs[i].first) == 0;
    x.set(free_edges[i], to_u);
  }
  return x;
}

}  // namespace

std::optional<EdgeOrientation> find_orientation(const PlanarMap& m, const std::vector<int>& alpha,
                                                const EdgeRules& rules) {
  check_spec(m, alpha, rules);
  if (!has_free_vertex(alpha)) return flow_orientation(m, alpha, rules);
  std::optional<EdgeOrientation> found;
  enumerate(m, alpha, [&](const EdgeOrientation& x) {
    found = x;
    return false;
  }, rules);
  return found;
}

bool feasible(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules) {
  return find_orientation(m, alpha, rules).has_value();
}

// ---------------------------------------------------------------- search

namespace {

class Search {
 public:
  Search(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules)
      : m_(m), alpha_(alpha), rules_(rules) {
    const int n = m.vertex_count();
    const int me = m.edge_count();
    dir_.assign(me, -1);
    out_.assign(n, 0);
    und_.assign(n, 0);
    inc_.resize(n);
    for (int e = 0; e < me; ++e) {
      if (!active(rules, e)) continue;
      auto [u, v] = m.edge_ends(e);
      inc_[u].push_back(e);
      inc_[v].push_back(e);
      ++und_[u];
      ++und_[v];
    }
    // branching order: edges as met by a BFS from the outer face
    std::vector<char> seen(n, 0), eseen(me, 0);
    std::deque<int> q;
    for (int d : m.face_darts(m.outer_face())) {
      int v = m.origin(d);
      if (!seen[v]) {
        seen[v] = 1;
        q.push_back(v);
      }
    }
    for (int s = 0; s < n; ++s) {
      if (!seen[s]) {
        seen[s] = 1;
        q.push_back(s);
      }
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int d : m.darts_at(v)) {
          int e = PlanarMap::edge_of(d);
          if (!eseen[e] && active(rules, e) && rule_of(rules, e) == EdgeRule::kFree) {
            eseen[e] = 1;
            order_.push_back(e);
          }
          int w = m.target(d);
          if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
        }
      }
    }
  }

  bool init() {
    std::vector<int> queue;
    for (int e = 0; e < m_.edge_count(); ++e) {
      EdgeRule r = rule_of(rules_, e);
      if (r == EdgeRule::kForward || r == EdgeRule::kBackward) put(e, r == EdgeRule::kForward, queue);
    }
    for (int v = 0; v < m_.vertex_count(); ++v) queue.push_back(v);
    return propagate(queue);
  }

  size_t mark() const { return trail_.size(); }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      int e = trail_.back();
      trail_.pop_back();
      auto [u, v] = m_.edge_ends(e);
      --out_[dir_[e] ? u : v];
      ++und_[u];
      ++und_[v];
      dir_[e] = -1;
    }
  }

  bool decide(int e, bool fwd) {
    std::vector<int> queue;
    put(e, fwd, queue);
    return propagate(queue);
  }

  int pick(size_t& cursor) const {
    while (cursor < order_.size() && dir_[order_[cursor]] != -1) ++cursor;
    return cursor < order_.size() ? order_[cursor] : -1;
  }

  EdgeOrientation current() const {
    EdgeOrientation x(m_.edge_count());
    for (int e = 0; e < m_.edge_count(); ++e) x.set(e, dir_[e] == 1);
    return x;
  }

  // returns false when the visitor asked to stop
  template <class Leaf>
  bool dfs(size_t cursor, Leaf& leaf, uint64_t& nodes) {
    int e = pick(cursor);
    if (e < 0) return leaf(*this);
    ++nodes;
    for (int d = 1; d >= 0; --d) {
      size_t mk = mark();
      if (decide(e, d == 1)) {
        if (!dfs(cursor, leaf, nodes)) {
          undo(mk);
          return false;
        }
      }
      undo(mk);
    }
    return true;
  }

  // expand the tree breadth-first until at least `want` open prefixes exist
  std::vector<std::vector<std::pair<int, bool>>> split(size_t want) {
    std::vector<std::vector<std::pair<int, bool>>> open{{}}, done;
    while (!open.empty() && open.size() + done.size() < want) {
      std::vector<std::vector<std::pair<int, bool>>> next;
      bool grew = false;
      for (auto& pre : open) {
        size_t mk = mark();
        bool ok = true;
        for (auto [e, f] : pre) ok = ok && decide(e, f);
        size_t cursor = 0;
        int e = ok ? pick(cursor) : -1;
        if (!ok) {
          // dead prefix, drop it
        } else if (e < 0) {
          done.push_back(pre);
        } else {
          for (int d = 1; d >= 0; --d) {
            size_t mk2 = mark();
            if (decide(e, d == 1)) {
              auto p = pre;
              p.push_back({e, d == 1});
              next.push_back(std::move(p));
              grew = true;
            }
            undo(mk2);
          }
        }
        undo(mk);
      }
      open = std::move(next);
      if (!grew) break;
    }
    for (auto& p : done) open.push_back(std::move(p));
    return open;
  }

 private:
  void put(int e, bool fwd, std::vector<int>& queue) {
    auto [u, v] = m_.edge_ends(e);
    dir_[e] = fwd ? 1 : 0;
    trail_.push_back(e);
    ++out_[fwd ? u : v];
    --und_[u];
    --und_[v];
    queue.push_back(u);
    queue.push_back(v);
  }

  bool propagate(std::vector<int>& queue) {
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      int a = alpha_[v];
      if (a == kFreeVertex) continue;
      if (out_[v] > a || out_[v] + und_[v] < a) return false;
      if (und_[v] == 0) continue;
      bool want_out;
      if (out_[v] == a) want_out = false;
      else if (out_[v] + und_[v] == a) want_out = true;
      else continue;
      for (int e : inc_[v]) {
        if (dir_[e] != -1) continue;
        auto [x, y] = m_.edge_ends(e);
        // forward means x -> y
        bool fwd = (x == v) == want_out;
        (void)y;
        put(e, fwd, queue);
      }
    }
    return true;
  }

  const PlanarMap& m_;
  const std::vector<int>& alpha_;
  const EdgeRules& rules_;
  std::vector<int8_t> dir_;
  std::vector<int> out_, und_;
  std::vector<std::vector<int>> inc_;
  std::vector<int> order_;
  std::vector<int> trail_;
};

}  // namespace

bool enumerate(const PlanarMap& m, const std::vector<int>& alpha, const Visitor& visit,
               const EdgeRules& rules, SearchStats* stats) {
  check_spec(m, alpha, rules);
  Search s(m, alpha, rules);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  if (!s.init()) return true;
  auto leaf = [&](Search& se) {
    ++st.solutions;
    return visit(se.current());
  };
  return s.dfs(0, leaf, st.nodes);
}

namespace {

CountResult search_count(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules,
                         int threads) {
  CountResult r;
  r.method = "search";
  Search root(m, alpha, rules);
  if (!root.init()) return r;
  if (threads <= 1) {
    uint64_t leaves = 0;
    auto leaf = [&](Search&) {
      ++leaves;
      return true;
    };
    root.dfs(0, leaf, r.nodes);
    r.count = leaves;
    return r;
  }
  auto tasks = root.split(static_cast<size_t>(threads) * 8);
  std::vector<uint64_t> leaves(tasks.size(), 0), nodes(tasks.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    Search s(m, alpha, rules);
    s.init();
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      size_t mk = s.mark();
      bool ok = true;
      for (auto [e, f] : tasks[i]) ok = ok && s.decide(e, f);
      if (ok) {
        uint64_t cnt = 0;
        auto leaf = [&](Search&) {
          ++cnt;
          return true;
        };
        s.dfs(0, leaf, nodes[i]);
        leaves[i] = cnt;
      }
      s.undo(mk);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < tasks.size(); ++i) {
    r.count += leaves[i];
    r.nodes += nodes[i] + tasks[i].size();
  }
  return r;
}

// ---------------------------------------------------------------- frontier DP

struct FrontierPlan {
  std::vector<int> edges;                 // processing order
  std::vector<int> slot_u, slot_v;        // slot of each endpoint (-1 if free vertex)
  std::vector<char> last_u, last_v;       // endpoint finishes at this step
  std::vector<int> rem_u, rem_v;          // remaining edges at endpoint after this step
  int width = 0;
};

std::vector<int> bfs_order(const PlanarMap& m, int s) {
  const int n = m.vertex_count();
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int root = s, k = 0; k < n; root = k++) {
    if (seen[root]) continue;
    std::deque<int> q{root};
    seen[root] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int d : m.darts_at(v)) {
        int w = m.target(d);
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      }
    }
  }
  return order;
}

FrontierPlan plan_for(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules,
                      const std::vector<int>& order) {
  const int n = m.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  FrontierPlan p;
  for (int e = 0; e < m.edge_count(); ++e)
    if (active(rules, e)) p.edges.push_back(e);
  std::stable_sort(p.edges.begin(), p.edges.end(), [&](int a, int b) {
    auto [a1, a2] = m.edge_ends(a);
    auto [b1, b2] = m.edge_ends(b);
    auto ka = std::make_pair(std::max(pos[a1], pos[a2]), std::min(pos[a1], pos[a2]));
    auto kb = std::make_pair(std::max(pos[b1], pos[b2]), std::min(pos[b1], pos[b2]));
    return ka < kb;
  });
  std::vector<int> rem(n, 0), slot(n, -1);
  for (int e : p.edges) {
    auto [u, v] = m.edge_ends(e);
    ++rem[u];
    ++rem[v];
  }
  std::vector<int> free_slots;
  int width = 0;
  auto take = [&](int v) {
    if (alpha[v] == kFreeVertex) return -1;
    if (slot[v] >= 0) return slot[v];
    if (free_slots.empty()) free_slots.push_back(width++);
    std::sort(free_slots.begin(), free_slots.end(), std::greater<int>());
    slot[v] = free_slots.back();
    free_slots.pop_back();
    return slot[v];
  };
  for (int e : p.edges) {
    auto [u, v] = m.edge_ends(e);
    p.slot_u.push_back(take(u));
    p.slot_v.push_back(take(v));
    --rem[u];
    --rem[v];
    p.rem_u.push_back(rem[u]);
    p.rem_v.push_back(rem[v]);
    p.last_u.push_back(rem[u] == 0);
    p.last_v.push_back(rem[v] == 0);
    if (rem[u] == 0 && slot[u] >= 0) free_slots.push_back(slot[u]), slot[u] = -1;
    if (rem[v] == 0 && slot[v] >= 0) free_slots.push_back(slot[v]), slot[v] = -1;
  }
  p.width = width;
  return p;
}

FrontierPlan best_plan(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules) {
  FrontierPlan best;
  int best_w = -1;
  const int n = m.vertex_count();
  const int tries = std::min(n, 64);
  for (int t = 0; t < tries; ++t) {
    int s = static_cast<int>((static_cast<long long>(t) * n) / tries);
    FrontierPlan p = plan_for(m, alpha, rules, bfs_order(m, s));
    if (best_w < 0 || p.width < best_w) {
      best_w = p.width;
      best = std::move(p);
    }
  }
  return best;
}

template <class C>
BigInt frontier_run(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules,
                    const FrontierPlan& p, uint64_t& states_seen) {
  for (int v = 0; v < m.vertex_count(); ++v) {
    bool has = false;
    for (int d : m.darts_at(v)) has = has || active(rules, PlanarMap::edge_of(d));
    if (!has && alpha[v] != kFreeVertex && alpha[v] != 0) return 0;
  }
  std::unordered_map<std::string, C> cur, nxt;
  cur.emplace(std::string(static_cast<size_t>(p.width), '\0'), C(1));
  for (size_t i = 0; i < p.edges.size(); ++i) {
    const int e = p.edges[i];
    auto [u, v] = m.edge_ends(e);
    EdgeRule r = rule_of(rules, e);
    nxt.clear();
    nxt.reserve(cur.size() * 2);
    for (auto& [key, cnt] : cur) {
      for (int d = 1; d >= 0; --d) {
        if (r == EdgeRule::kForward && d == 0) continue;
        if (r == EdgeRule::kBackward && d == 1) continue;
        std::string k2 = key;
        bool ok = true;
        auto touch = [&](int w, int s, bool is_tail, int remaining, bool last) {
          if (s < 0) return;
          unsigned char c = static_cast<unsigned char>(k2[s]) + (is_tail ? 1 : 0);
          int a = alpha[w];
          if (c > a || c + remaining < a) ok = false;
          if (last) c = 0;
          k2[s] = static_cast<char>(c);
        };
        touch(u, p.slot_u[i], d == 1, p.rem_u[i], p.last_u[i]);
        touch(v, p.slot_v[i], d == 0, p.rem_v[i], p.last_v[i]);
        if (!ok) continue;
        auto it = nxt.find(k2);
        if (it == nxt.end()) nxt.emplace(std::move(k2), cnt);
        else it->second += cnt;
      }
    }
    std::swap(cur, nxt);
    states_seen += cur.size();
    if (cur.empty()) return 0;
  }
  BigInt total = 0;
  for (auto& [key, cnt] : cur) {
    if constexpr (std::is_same_v<C, BigInt>) total += cnt;
    else {
      // split the 128-bit value into two 64-bit halves
      unsigned __int128 x = cnt;
      BigInt hi = static_cast<uint64_t>(x >> 64);
      total += (hi << 64) + static_cast<uint64_t>(x);
    }
  }
  return total;
}

CountResult frontier_count(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules) {
  CountResult r;
  r.method = "frontier";
  FrontierPlan p = best_plan(m, alpha, rules);
  if (p.edges.size() < 120) r.count = frontier_run<unsigned __int128>(m, alpha, rules, p, r.nodes);
  else r.count = frontier_run<BigInt>(m, alpha, rules, p, r.nodes);
  return r;
}

}  // namespace

CountResult count(const PlanarMap& m, const std::vector<int>& alpha, const CountOptions& opt) {
  check_spec(m, alpha, opt.rules);
  auto t0 = std::chrono::steady_clock::now();
  CountResult r;
  CountMethod method = opt.method;
  if (method == CountMethod::kAuto) {
    FrontierPlan p = best_plan(m, alpha, opt.rules);
    method = p.width <= 28 ? CountMethod::kFrontier : CountMethod::kSearch;
  }
  if (method == CountMethod::kFrontier) r = frontier_count(m, alpha, opt.rules);
  else r = search_count(m, alpha, opt.rules, opt.threads);
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

BigInt brute_force_count(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules,
                         int max_m) {
  check_spec(m, alpha, rules);
  std::vector<int> free_edges;
  EdgeOrientation base(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    EdgeRule r = rule_of(rules, e);
    if (r == EdgeRule::kFree) free_edges.push_back(e);
    else if (r == EdgeRule::kForward) base.set(e, true);
  }
  const int k = static_cast<int>(free_edges.size());
  if (k > max_m) fail(Errc::kSizeExceeded, "brute force limited to " + std::to_string(max_m) + " edges");
  BigInt total = 0;
  EdgeOrientation x = base;
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    for (int i = 0; i < k; ++i) x.set(free_edges[i], (mask >> i) & 1U);
    if (is_alpha_orientation(m, alpha, x, rules)) ++total;
  }
  return total;
}

std::vector<int> rigid_edges(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules) {
  auto x0 = find_orientation(m, alpha, rules);
  if (!x0) fail(Errc::kInfeasible, "no alpha-orientation exists");
  std::vector<int> out;
  EdgeRules r = rules.empty() ? EdgeRules(m.edge_count(), EdgeRule::kFree) : rules;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (r[e] == EdgeRule::kIgnored) continue;
    if (r[e] != EdgeRule::kFree) {
      out.push_back(e);
      continue;
    }
    r[e] = x0->forward(e) ? EdgeRule::kBackward : EdgeRule::kForward;
    if (!feasible(m, alpha, r)) out.push_back(e);
    r[e] = EdgeRule::kFree;
  }
  return out;
}

// ---------------------------------------------------------------- cycles

Chirality classify_cycle(const PlanarMap& m, const std::vector<int>& darts) {
  if (darts.empty()) fail(Errc::kInvalidInput, "empty cycle");
  std::vector<char> on(m.edge_count(), 0), vseen(m.vertex_count(), 0);
  for (size_t i = 0; i < darts.size(); ++i) {
    int d = darts[i], nx = darts[(i + 1) % darts.size()];
    if (m.target(d) != m.origin(nx)) fail(Errc::kInvalidInput, "darts do not form a closed walk");
    if (vseen[m.origin(d)]++) fail(Errc::kInvalidInput, "cycle is not simple");
    on[PlanarMap::edge_of(d)] = 1;
  }
  std::vector<char> seen(m.face_count(), 0);
  std::vector<int> st;
  for (int d : darts)
    if (!seen[m.face_of(d)]) {
      seen[m.face_of(d)] = 1;
      st.push_back(m.face_of(d));
    }
  while (!st.empty()) {
    int f = st.back();
    st.pop_back();
    for (int d : m.face_darts(f)) {
      if (on[PlanarMap::edge_of(d)]) continue;
      int g = m.face_of(d ^ 1);
      if (!seen[g]) {
        seen[g] = 1;
        st.push_back(g);
      }
    }
  }
  return seen[m.outer_face()] ? Chirality::kCw : Chirality::kCcw;
}

FlipCycle make_cycle(const PlanarMap& m, const std::vector<int>& darts) {
  return FlipCycle{darts, classify_cycle(m, darts)};
}

EdgeOrientation flip(const PlanarMap& m, const EdgeOrientation& x, const FlipCycle& c) {
  (void)m;
  for (int d : c.darts)
    if (!x.carries(d)) fail(Errc::kCycleNotDirected, "dart " + std::to_string(d) + " is not directed along the cycle");
  EdgeOrientation y = x;
  for (int d : c.darts) y.toggle(PlanarMap::edge_of(d));
  return y;
}

// ---------------------------------------------------------------- lattice

Lattice lattice(const PlanarMap& m, const std::vector<int>& alpha, const LatticeOptions& opt) {
  if (!m.planar()) fail(Errc::kInvalidInput, "lattice needs a plane map");
  check_spec(m, alpha, opt.rules);
  Lattice L;
  bool over = false;
  enumerate(m, alpha, [&](const EdgeOrientation& x) {
    if (L.elements.size() >= opt.cap) {
      over = true;
      return false;
    }
    L.elements.push_back(x);
    return true;
  }, opt.rules);
  if (over) fail(Errc::kCapExceeded, "more than " + std::to_string(opt.cap) + " orientations");
  if (L.elements.empty()) fail(Errc::kInfeasible, "no alpha-orientation exists");
  const int N = static_cast<int>(L.elements.size());

  // merge faces across rigid or ignored edges
  std::vector<char> dead(m.edge_count(), 0);
  for (int e : rigid_edges(m, alpha, opt.rules)) dead[e] = 1;
  for (int e = 0; e < m.edge_count(); ++e)
    if (!active(opt.rules, e)) dead[e] = 1;
  std::vector<int> parent(m.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int e = 0; e < m.edge_count(); ++e)
    if (dead[e]) parent[find(m.face_of(2 * e))] = find(m.face_of(2 * e + 1));
  const int outer_root = find(m.outer_face());
  std::vector<int> root_to_region(m.face_count(), -1);
  std::vector<std::vector<int>> boundary;
  for (int f = 0; f < m.face_count(); ++f) {
    int r = find(f);
    if (r == outer_root) continue;
    if (root_to_region[r] < 0) {
      root_to_region[r] = static_cast<int>(L.regions.size());
      L.regions.emplace_back();
      boundary.emplace_back();
    }
    int id = root_to_region[r];
    L.regions[id].push_back(f);
    for (int d : m.face_darts(f))
      if (!dead[PlanarMap::edge_of(d)]) boundary[id].push_back(d);
  }

  std::unordered_map<EdgeOrientation, int, EdgeOrientationHash> index;
  for (int i = 0; i < N; ++i) index.emplace(L.elements[i], i);
  L.down.assign(N, {});
  std::vector<std::vector<int>> up(N);
  for (int i = 0; i < N; ++i) {
    const auto& x = L.elements[i];
    for (size_t r = 0; r < boundary.size(); ++r) {
      if (boundary[r].empty()) continue;
      bool ccw = true;
      for (int d : boundary[r]) ccw = ccw && x.carries(d);
      if (!ccw) continue;
      EdgeOrientation y = x;
      for (int d : boundary[r]) y.toggle(PlanarMap::edge_of(d));
      auto it = index.find(y);
      if (it == index.end()) fail(Errc::kLatticeViolation, "region flip left the orientation set");
      L.down[i].push_back(it->second);
      up[it->second].push_back(i);
    }
  }
  std::vector<int> mins, maxs;
  for (int i = 0; i < N; ++i) {
    if (L.down[i].empty()) mins.push_back(i);
    if (up[i].empty()) maxs.push_back(i);
  }
  if (mins.size() != 1 || maxs.size() != 1)
    fail(Errc::kLatticeViolation, "flip graph has " + std::to_string(mins.size()) + " minima and " +
                                      std::to_string(maxs.size()) + " maxima");
  L.minimum = mins[0];
  L.maximum = maxs[0];
  {
    std::vector<char> seen(N, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int i = st.back();
      st.pop_back();
      for (const auto* adj : {&L.down[i], &up[i]})
        for (int j : *adj)
          if (!seen[j]) {
            seen[j] = 1;
            ++cnt;
            st.push_back(j);
          }
    }
    L.connected = cnt == N;
    if (!L.connected) fail(Errc::kLatticeViolation, "flip graph is disconnected");
  }
  if (static_cast<size_t>(N) > opt.exhaustive_cap) return L;

  // order ideals as bitsets: below[i] = elements reachable by ccw flips
  const int W = (N + 63) / 64;
  std::vector<std::vector<uint64_t>> below(N, std::vector<uint64_t>(W, 0)), above = below;
  std::vector<int> indeg(N, 0), topo;
  for (int i = 0; i < N; ++i)
    for (int j : L.down[i]) ++indeg[j];
  std::vector<int> st;
  for (int i = 0; i < N; ++i)
    if (!indeg[i]) st.push_back(i);
  while (!st.empty()) {
    int i = st.back();
    st.pop_back();
    topo.push_back(i);
    for (int j : L.down[i])
      if (--indeg[j] == 0) st.push_back(j);
  }
  if (static_cast<int>(topo.size()) != N) fail(Errc::kLatticeViolation, "flip order has a cycle");
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int i = *it;
    below[i][i >> 6] |= uint64_t{1} << (i & 63);
    for (int j : L.down[i])
      for (int w = 0; w < W; ++w) below[i][w] |= below[j][w];
  }
  for (int i : topo) {
    above[i][i >> 6] |= uint64_t{1} << (i & 63);
    for (int j : up[i])
      for (int w = 0; w < W; ++w) above[i][w] |= above[j][w];
  }
  auto bound = [&](const std::vector<std::vector<uint64_t>>& cone, int a, int b, bool greatest) {
    // greatest element of cone[a] & cone[b] w.r.t. the order given by cone
    std::vector<uint64_t> inter(W);
    for (int w = 0; w < W; ++w) inter[w] = cone[a][w] & cone[b][w];
    int found = -1;
    for (int k = 0; k < N; ++k) {
      if (!((inter[k >> 6] >> (k & 63)) & 1U)) continue;
      bool all = true;
      for (int w = 0; w < W && all; ++w) all = (inter[w] & ~cone[k][w]) == 0;
      if (all) {
        if (found >= 0) fail(Errc::kLatticeViolation, "two candidate bounds");
        found = k;
      }
    }
    (void)greatest;
    if (found < 0) fail(Errc::kLatticeViolation, "missing meet or join");
    return found;
  };
  L.meet.assign(N, std::vector<int>(N));
  L.join.assign(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      L.meet[a][b] = L.meet[b][a] = bound(below, a, b, true);
      L.join[a][b] = L.join[b][a] = bound(above, a, b, false);
    }
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int z = y; z < N; ++z)
        if (L.meet[x][L.join[y][z]] != L.join[L.meet[x][y]][L.meet[x][z]])
          fail(Errc::kLatticeViolation, "distributive law fails");
  L.order_checked = true;
  return L;
}

std::string lattice_dot(const PlanarMap& m, const Lattice& l) {
  (void)m;
  std::ostringstream os;
  os << "digraph flips {\n  rankdir=BT;\n";
  for (size_t i = 0; i < l.elements.size(); ++i) {
    os << "  o" << i << " [label=\"" << l.elements[i].bits() << "\"";
    if (static_cast<int>(i) == l.minimum) os << ", shape=box";
    if (static_cast<int>(i) == l.maximum) os << ", shape=doubleoctagon";
    os << "];\n";
  }
  for (size_t i = 0; i < l.down.size(); ++i)
    for (int j : l.down[i]) os << "  o" << j << " -> o" << i << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace oc
