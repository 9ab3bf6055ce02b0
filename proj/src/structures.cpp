#include "orientcount/structures.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "orientcount/generators.hpp"

namespace oc {

namespace {

int mod3(int c) { return ((c - 1) % 3 + 3) % 3 + 1; }

// Slots around v in ccw order: real darts, plus the half-edge at a special
// sitting in its outer corner (dart -1 - i for a_i).
std::vector<int> slots_at(const PlanarMap& m, const std::array<int, 3>& a, int v) {
  std::vector<int> out;
  int special = -1;
  for (int i = 0; i < 3; ++i)
    if (a[i] == v) special = i;
  bool placed = false;
  for (int d : m.darts_at(v)) {
    out.push_back(d);
    if (special >= 0 && !placed && m.face_of(d) == m.outer_face()) {
      out.push_back(-1 - special);
      placed = true;
    }
  }
  if (special >= 0 && !placed) fail(Errc::kSpecialsNotOnOuterFace, "special vertex not on the outer face");
  return out;
}

int out_color(const SchnyderWood& w, int slot) {
  if (slot < 0) return -slot;  // half-edge at a_i carries color i+1
  int e = slot >> 1;
  return (slot & 1) ? w.bwd[e] : w.fwd[e];
}

int in_color(const SchnyderWood& w, int slot) {
  if (slot < 0) return 0;
  int e = slot >> 1;
  return (slot & 1) ? w.fwd[e] : w.bwd[e];
}

// W3 at one vertex given the slot colors.
std::string w3_at(const std::vector<int>& slots, const SchnyderWood& w) {
  const int deg = static_cast<int>(slots.size());
  int p[4] = {-1, -1, -1, -1};
  for (int q = 0; q < deg; ++q) {
    int c = out_color(w, slots[q]);
    if (c == 0) continue;
    if (p[c] >= 0) return "two outgoing edges of color " + std::to_string(c);
    p[c] = q;
  }
  for (int c = 1; c <= 3; ++c)
    if (p[c] < 0) return "no outgoing edge of color " + std::to_string(c);
  auto dist = [&](int from, int to) { return ((to - from) % deg + deg) % deg; };
  // clockwise 1,2,3 means counterclockwise 1,3,2
  if (!(dist(p[1], p[3]) < dist(p[1], p[2]))) return "outgoing colors not in clockwise order 1,2,3";
  for (int q = 0; q < deg; ++q) {
    int c = in_color(w, slots[q]);
    if (c == 0) continue;
    int lo = p[mod3(c - 1)], hi = p[mod3(c + 1)];
    if (dist(lo, q) > dist(lo, hi)) return "incoming color " + std::to_string(c) + " outside its sector";
  }
  return {};
}

std::string w4_faces(const PlanarMap& m, const SchnyderWood& w) {
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face()) continue;
    const auto& fd = m.face_darts(f);
    for (int dir = 0; dir < 2; ++dir) {
      int c0 = out_color(w, dir ? PlanarMap::rev(fd[0]) : fd[0]);
      if (c0 == 0) continue;
      bool mono = true;
      for (int d : fd) mono = mono && out_color(w, dir ? PlanarMap::rev(d) : d) == c0;
      if (mono) return "face " + std::to_string(f) + " is a monochromatic directed cycle";
    }
  }
  return {};
}

}  // namespace

AxiomReport schnyder_check(const PlanarMap& m, const SchnyderWood& w) {
  AxiomReport r;
  auto bad = [&](const char* ax, std::string where) {
    r.ok = false;
    r.axiom = ax;
    r.where = std::move(where);
    return r;
  };
  if (static_cast<int>(w.fwd.size()) != m.edge_count() || static_cast<int>(w.bwd.size()) != m.edge_count())
    return bad("W1", "wood has the wrong number of edges");
  for (int e = 0; e < m.edge_count(); ++e) {
    if (w.fwd[e] < 0 || w.fwd[e] > 3 || w.bwd[e] < 0 || w.bwd[e] > 3) return bad("W1", "edge " + std::to_string(e) + " has a bad color");
    if (w.fwd[e] == 0 && w.bwd[e] == 0) return bad("W1", "edge " + std::to_string(e) + " is not oriented");
    if (w.fwd[e] == w.bwd[e]) return bad("W1", "edge " + std::to_string(e) + " is bidirected in one color");
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    std::vector<int> s;
    try {
      s = slots_at(m, w.a, v);
    } catch (const Error&) {
      return bad("W2", "vertex " + std::to_string(v) + " is special but not on the outer face");
    }
    auto msg = w3_at(s, w);
    if (!msg.empty()) return bad("W3", "vertex " + std::to_string(v) + ": " + msg);
  }
  auto msg = w4_faces(m, w);
  if (!msg.empty()) return bad("W4", msg);
  return r;
}

std::vector<SchnyderWood> colorings_of_pattern(const PlanarMap& m, const std::array<int, 3>& a,
                                               const std::vector<char>& out_fwd,
                                               const std::vector<char>& out_bwd, size_t limit) {
  const int n = m.vertex_count();
  std::vector<std::vector<int>> slots(n);
  std::vector<std::vector<int>> outs(n);  // positions of outgoing slots
  auto is_out = [&](int slot) {
    if (slot < 0) return true;
    return (slot & 1) ? out_bwd[slot >> 1] != 0 : out_fwd[slot >> 1] != 0;
  };
  for (int v = 0; v < n; ++v) {
    slots[v] = slots_at(m, a, v);
    for (int q = 0; q < static_cast<int>(slots[v].size()); ++q)
      if (is_out(slots[v][q])) outs[v].push_back(q);
    if (outs[v].size() != 3) return {};
  }
  for (int e = 0; e < m.edge_count(); ++e)
    if (!out_fwd[e] && !out_bwd[e]) return {};
  // BFS order from a1
  std::vector<int> order, pos(n, -1);
  {
    std::deque<int> q{a[0]};
    pos[a[0]] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int d : m.darts_at(v))
        if (pos[m.target(d)] < 0) {
          pos[m.target(d)] = static_cast<int>(order.size() + q.size());
          q.push_back(m.target(d));
        }
    }
  }
  SchnyderWood w;
  w.a = a;
  w.fwd.assign(m.edge_count(), 0);
  w.bwd.assign(m.edge_count(), 0);
  std::vector<char> done(n, 0);
  std::vector<SchnyderWood> found;

  auto set_colors = [&](int v, int first, bool on) {
    const auto& o = outs[v];
    int c = first;
    for (int q : o) {
      int slot = slots[v][q];
      if (slot >= 0) {
        int8_t val = on ? static_cast<int8_t>(c) : 0;
        if (slot & 1) w.bwd[slot >> 1] = val;
        else w.fwd[slot >> 1] = val;
      }
      c = mod3(c - 1);  // ccw order 1,3,2
    }
  };
  auto color_of_slot = [&](int v, int first, int slot) {
    int c = first;
    for (int q : outs[v]) {
      if (slots[v][q] == slot) return c;
      c = mod3(c - 1);
    }
    return 0;
  };
  // all W3 checks involving only finished vertices around v
  auto local_ok = [&](int v) {
    const int deg = static_cast<int>(slots[v].size());
    int p[4] = {-1, -1, -1, -1};
    for (int q : outs[v]) p[out_color(w, slots[v][q])] = q;
    auto dist = [&](int from, int to) { return ((to - from) % deg + deg) % deg; };
    for (int q = 0; q < deg; ++q) {
      int slot = slots[v][q];
      if (slot < 0) continue;
      int u = m.target(slot);
      if (!done[u]) continue;
      int c = in_color(w, slot);
      if (c == 0) continue;
      int oc = out_color(w, slot);
      if (oc != 0 && oc == c) return false;  // W1
      int lo = p[mod3(c - 1)], hi = p[mod3(c + 1)];
      if (dist(lo, q) > dist(lo, hi)) return false;
    }
    return true;
  };
  auto neighbors_ok = [&](int v) {
    if (!local_ok(v)) return false;
    for (int d : m.darts_at(v)) {
      int u = m.target(d);
      if (done[u] && u != v && !local_ok(u)) return false;
    }
    return true;
  };

  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == order.size()) {
      if (!w4_faces(m, w).empty()) return true;
      found.push_back(w);
      return found.size() < limit;
    }
    int v = order[i];
    int special = -1;
    for (int s = 0; s < 3; ++s)
      if (a[s] == v) special = s;
    for (int first = 1; first <= 3; ++first) {
      if (special >= 0 && color_of_slot(v, first, -1 - special) != special + 1) continue;
      set_colors(v, first, true);
      done[v] = 1;
      bool ok = neighbors_ok(v);
      if (ok && !rec(i + 1)) return false;
      done[v] = 0;
      set_colors(v, first, false);
    }
    return true;
  };
  rec(0);
  return found;
}

SchnyderWood colors_from_3orientation(const PlanarMap& tri, const EdgeOrientation& x) {
  auto spec = alpha_t(tri);
  if (!is_alpha_orientation(tri, spec.alpha, x, spec.rules))
    fail(Errc::kNoColoring, "orientation is not a 3-orientation of the inner edges");
  std::vector<char> f(tri.edge_count()), b(tri.edge_count());
  for (int e = 0; e < tri.edge_count(); ++e) {
    if (spec.rules[e] == EdgeRule::kIgnored) {
      f[e] = b[e] = 1;
    } else {
      f[e] = x.forward(e);
      b[e] = !x.forward(e);
    }
  }
  auto woods = colorings_of_pattern(tri, spec.specials, f, b, 2);
  if (woods.empty()) fail(Errc::kNoColoring, "no coloring satisfies the axioms");
  if (woods.size() > 1) fail(Errc::kMultipleColorings, "orientation admits several colorings");
  return woods[0];
}

EdgeOrientation orientation_of(const PlanarMap& tri, const SchnyderWood& w) {
  EdgeOrientation x(tri.edge_count());
  for (int e = 0; e < tri.edge_count(); ++e) x.set(e, w.fwd[e] != 0);
  return x;
}

CountResult schnyder_count_via_completion(const PlanarMap& m, int a1, int a2, int a3, int threads) {
  Completion c = suspension_and_completion(m, a1, a2, a3);
  CountOptions o;
  o.threads = threads;
  return count(c.map, c.alpha, o);
}

BigInt schnyder_count_direct(const PlanarMap& m, int a1, int a2, int a3) {
  const std::array<int, 3> a{a1, a2, a3};
  const int n = m.vertex_count(), me = m.edge_count();
  std::vector<int> need(n, 3), left(n);
  for (int s : a) need[s] = 2;
  for (int v = 0; v < n; ++v) left[v] = m.degree(v);
  std::vector<char> f(me, 0), b(me, 0);
  BigInt total = 0;
  std::function<void(int)> rec = [&](int e) {
    if (e == me) {
      total += colorings_of_pattern(m, a, f, b).size();
      return;
    }
    auto [u, v] = m.edge_ends(e);
    --left[u];
    --left[v];
    for (int st = 0; st < 3; ++st) {
      int du = st != 1, dv = st != 0;  // 0: u->v, 1: v->u, 2: both
      if (need[u] - du < 0 || need[v] - dv < 0) continue;
      if (need[u] - du > left[u] || need[v] - dv > left[v]) continue;
      need[u] -= du;
      need[v] -= dv;
      f[e] = static_cast<char>(du);
      b[e] = static_cast<char>(dv);
      rec(e + 1);
      need[u] += du;
      need[v] += dv;
    }
    f[e] = b[e] = 0;
    ++left[u];
    ++left[v];
  };
  rec(0);
  return total;
}

PlanarMap completion_nonrigid_part(const PlanarMap& m, int a1, int a2, int a3) {
  Completion c = suspension_and_completion(m, a1, a2, a3);
  auto rig = rigid_edges(c.map, c.alpha);
  std::vector<char> is_rigid(c.map.edge_count(), 0);
  for (int e : rig) is_rigid[e] = 1;
  std::vector<int> keep;
  for (int e = 0; e < c.map.edge_count(); ++e)
    if (!is_rigid[e]) keep.push_back(e);
  if (keep.empty()) fail(Errc::kInvalidInput, "every edge of the completion is rigid");
  return submap(c.map, keep);
}

// ---- bipolar ----

BipolarReport bipolar_check(const PlanarMap& m, const EdgeOrientation& x, int s, int t) {
  BipolarReport r;
  const int n = m.vertex_count();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    ++outdeg[tail_of(m, x, e)];
    ++indeg[head_of(m, x, e)];
  }
  r.prop1 = indeg[s] == 0 && outdeg[t] == 0;
  for (int v = 0; v < n && r.prop1; ++v)
    if (v != s && v != t && (indeg[v] == 0 || outdeg[v] == 0)) {
      r.prop1 = false;
      r.message = "vertex " + std::to_string(v) + " lacks incoming or outgoing edges";
    }
  if (!r.prop1 && r.message.empty()) r.message = "s has an incoming edge or t an outgoing edge";
  r.prop2 = true;
  r.prop2p = true;
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& fd = m.face_darts(f);
    int along = 0, src = 0, snk = 0;
    const int L = static_cast<int>(fd.size());
    for (int i = 0; i < L; ++i) {
      along += x.carries(fd[i]);
      bool in_prev = x.carries(fd[(i + L - 1) % L]), out_here = x.carries(fd[i]);
      src += !in_prev && out_here;
      snk += in_prev && !out_here;
    }
    if (along == 0 || along == L) {
      r.prop2 = false;
      if (r.message.empty()) r.message = "face " + std::to_string(f) + " is a directed cycle";
    }
    if (src != 1 || snk != 1) r.prop2p = false;
  }
  r.prop1p = true;
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    const auto& ds = m.darts_at(v);
    int sw = 0;
    for (size_t i = 0; i < ds.size(); ++i) sw += x.carries(ds[i]) != x.carries(ds[(i + 1) % ds.size()]);
    if (sw != 2) r.prop1p = false;
  }
  // acyclic with unique source and sink
  std::vector<int> deg = indeg, q;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 0) q.push_back(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    ++seen;
    for (int d : m.darts_at(v))
      if (x.carries(d) && --deg[m.target(d)] == 0) q.push_back(m.target(d));
  }
  int sources = 0, sinks = 0;
  for (int v = 0; v < n; ++v) {
    sources += indeg[v] == 0;
    sinks += outdeg[v] == 0;
  }
  r.bipolar = seen == n && sources == 1 && sinks == 1 && indeg[s] == 0 && outdeg[t] == 0;
  return r;
}

BigInt bipolar_enumerate(const PlanarMap& m, int s, int t, const Visitor& visit) {
  const int n = m.vertex_count(), me = m.edge_count();
  // edges in BFS order from s
  std::vector<int> order;
  {
    std::vector<char> seen_e(me, 0), seen_v(n, 0);
    std::deque<int> q{s};
    seen_v[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int d : m.darts_at(v)) {
        int e = PlanarMap::edge_of(d);
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order.push_back(e);
        }
        if (!seen_v[m.target(d)]) {
          seen_v[m.target(d)] = 1;
          q.push_back(m.target(d));
        }
      }
    }
  }
  std::vector<int> state(me, -1), in(n, 0), out(n, 0), left(n);
  for (int v = 0; v < n; ++v) left[v] = m.degree(v);
  std::vector<std::vector<int>> succ(n);
  EdgeOrientation x(me);
  BigInt total = 0;
  bool stop = false;
  std::vector<int> mark(n, 0);
  int stamp = 0;
  auto reaches = [&](int from, int to) {
    ++stamp;
    std::vector<int> st{from};
    mark[from] = stamp;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      if (v == to) return true;
      for (int w : succ[v])
        if (mark[w] != stamp) {
          mark[w] = stamp;
          st.push_back(w);
        }
    }
    return false;
  };
  auto vertex_ok = [&](int v) {
    if (v == s) return in[v] == 0;
    if (v == t) return out[v] == 0;
    if (left[v] == 0) return in[v] > 0 && out[v] > 0;
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t i) {
    if (stop) return;
    if (i == order.size()) {
      ++total;
      if (visit && !visit(x)) stop = true;
      return;
    }
    int e = order[i];
    auto [u, v] = m.edge_ends(e);
    for (int fwd = 1; fwd >= 0; --fwd) {
      int a = fwd ? u : v, b = fwd ? v : u;
      if (reaches(b, a)) continue;
      --left[u];
      --left[v];
      ++out[a];
      ++in[b];
      if (vertex_ok(u) && vertex_ok(v)) {
        succ[a].push_back(b);
        x.set(e, fwd);
        rec(i + 1);
        succ[a].pop_back();
      }
      ++left[u];
      ++left[v];
      --out[a];
      --in[b];
      if (stop) return;
    }
  };
  if (n == 1) return 1;
  rec(0);
  return total;
}

std::vector<int> rosenstiehl_alpha(const PlanarMap& m, int s, int t) {
  std::vector<int> a(m.vertex_count() + m.face_count(), 2);
  a[s] = 0;
  a[t] = 0;
  return a;
}

EdgeOrientation bipolar_to_angle(const PlanarMap& m, const EdgeOrientation& b) {
  EdgeOrientation y(m.dart_count());
  for (int d = 0; d < m.dart_count(); ++d) y.set(d, b.carries(d) != b.carries(m.next_ccw(d)));
  return y;
}

EdgeOrientation angle_to_bipolar(const PlanarMap& m, const EdgeOrientation& y, int s, int t) {
  const int n = m.vertex_count();
  if (y.size() != m.dart_count()) fail(Errc::kInvalidInput, "angle orientation has the wrong size");
  std::vector<int> out(m.dart_count(), -1);
  std::vector<char> queued(n, 0);
  std::deque<int> q;
  for (int d : m.darts_at(s)) {
    out[d] = 1;
    out[PlanarMap::rev(d)] = 0;
  }
  q.push_back(s);
  queued[s] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    const auto& ds = m.darts_at(v);
    int k0 = -1;
    for (size_t i = 0; i < ds.size(); ++i)
      if (out[ds[i]] >= 0) k0 = static_cast<int>(i);
    if (k0 < 0) fail(Errc::kInternal, "propagation reached a vertex without a known edge");
    const int L = static_cast<int>(ds.size());
    int cur = out[ds[k0]];
    for (int j = 1; j <= L; ++j) {
      int prev = ds[(k0 + j - 1) % L], d = ds[(k0 + j) % L];
      cur ^= y.forward(prev);  // switch corner between prev and next_ccw(prev)
      if (out[d] >= 0 && out[d] != cur) fail(Errc::kInvalidInput, "angle orientation is not a 2-orientation image");
      out[d] = cur;
      int r = PlanarMap::rev(d);
      if (out[r] >= 0 && out[r] != !cur) fail(Errc::kInvalidInput, "inconsistent edge direction");
      out[r] = !cur;
      int w = m.target(d);
      if (!queued[w]) {
        queued[w] = 1;
        q.push_back(w);
      }
    }
  }
  EdgeOrientation b(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) b.set(e, out[2 * e] == 1);
  (void)t;
  return b;
}

BigInt bipolar_count(const PlanarMap& m, int s, int t, int threads) {
  CountOptions o;
  o.threads = threads;
  return count(angle_graph(m), rosenstiehl_alpha(m, s, t), o).count;
}

// ---- signs ----

namespace {

void require_inner_triangulation(const PlanarMap& m) {
  for (int f = 0; f < m.face_count(); ++f)
    if (f != m.outer_face() && m.face_size(f) != 3)
      fail(Errc::kNotInnerTriangulation, "bounded face " + std::to_string(f) + " is not a triangle");
}

// '+', '-', or 0 when the face has no unique source/sink
char face_sign(const PlanarMap& m, int f, const std::function<int(int)>& carried) {
  const auto& fd = m.face_darts(f);
  const int L = static_cast<int>(fd.size());
  int src = -1, snk = -1, nsrc = 0, nsnk = 0;
  for (int i = 0; i < L; ++i) {
    int in_prev = carried(fd[(i + L - 1) % L]), out_here = carried(fd[i]);
    if (!in_prev && out_here) src = m.origin(fd[i]), ++nsrc;
    if (in_prev && !out_here) snk = m.origin(fd[i]), ++nsnk;
  }
  if (nsrc != 1 || nsnk != 1) return 0;
  for (int d : fd)
    if (m.origin(d) == src && m.target(d) == snk) return '+';
  return '-';
}

}  // namespace

std::string sign_encode(const PlanarMap& m, const EdgeOrientation& b) {
  require_inner_triangulation(m);
  std::string out;
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face()) continue;
    char c = face_sign(m, f, [&](int d) { return static_cast<int>(b.carries(d)); });
    if (!c) fail(Errc::kInvalidInput, "face " + std::to_string(f) + " has no unique source and sink");
    out.push_back(c);
  }
  return out;
}

EdgeOrientation sign_decode(const PlanarMap& m, int s, int t, const std::string& signs) {
  require_inner_triangulation(m);
  std::vector<int> bounded;
  for (int f = 0; f < m.face_count(); ++f)
    if (f != m.outer_face()) bounded.push_back(f);
  if (signs.size() != bounded.size()) fail(Errc::kInvalidInput, "sign vector has the wrong length");
  for (char c : signs)
    if (c != '+' && c != '-') fail(Errc::kInvalidInput, "signs must be + or -");
  std::vector<int> dir(m.edge_count(), -1);  // 1: along the canonical dart
  auto carried = [&](int d) -> int {
    int e = PlanarMap::edge_of(d);
    if (dir[e] < 0) return -1;
    return PlanarMap::is_canonical(d) ? dir[e] : !dir[e];
  };
  auto orient = [&](int d) { dir[PlanarMap::edge_of(d)] = PlanarMap::is_canonical(d) ? 1 : 0; };
  // the outer boundary: two paths from s to t
  const auto& od = m.face_darts(m.outer_face());
  const int L = static_cast<int>(od.size());
  int ps = -1, pt = -1;
  for (int i = 0; i < L; ++i) {
    if (m.origin(od[i]) == s && ps < 0) ps = i;
    if (m.origin(od[i]) == t && pt < 0) pt = i;
  }
  if (ps < 0 || pt < 0) fail(Errc::kInvalidInput, "s and t must lie on the outer face");
  for (int i = ps; i != pt; i = (i + 1) % L) orient(od[i]);
  for (int i = pt; i != ps; i = (i + 1) % L) orient(PlanarMap::rev(od[i]));

  auto vertex_rule = [&]() -> bool {
    for (int v = 0; v < m.vertex_count(); ++v) {
      const auto& ds = m.darts_at(v);
      const int D = static_cast<int>(ds.size());
      int nin = 0, nout = 0, switches = 0, prev = -1, first = -1;
      for (int d : ds) {
        int c = carried(d);
        if (c < 0) continue;
        (c ? nout : nin)++;
        if (prev >= 0 && c != prev) ++switches;
        if (first < 0) first = c;
        prev = c;
      }
      bool changed = false;
      if (v == s || v == t) {
        for (int d : ds)
          if (carried(d) < 0) orient(v == s ? d : PlanarMap::rev(d)), changed = true;
        if (changed) return true;
        continue;
      }
      if (nin == 0 || nout == 0) continue;
      if (prev != first) ++switches;
      if (switches > 2) fail(Errc::kAxiomViolation, "vertex " + std::to_string(v) + " has more than two bundles");
      for (int i = 0; i < D; ++i) {
        if (carried(ds[i]) >= 0) continue;
        int j = i, k = i;
        do j = (j + 1) % D;
        while (carried(ds[j]) < 0);
        do k = (k + D - 1) % D;
        while (carried(ds[k]) < 0);
        // a gap between two known edges of one direction belongs to that bundle
        if (carried(ds[j]) == carried(ds[k])) {
          orient(carried(ds[j]) ? ds[i] : PlanarMap::rev(ds[i]));
          changed = true;
        }
      }
      if (changed) return true;
    }
    return false;
  };
  auto face_rule = [&]() -> bool {
    for (size_t fi = 0; fi < bounded.size(); ++fi) {
      const auto& fd = m.face_darts(bounded[fi]);
      int unknown = -1, nunk = 0;
      for (int d : fd)
        if (carried(d) < 0) unknown = d, ++nunk;
      if (nunk == 0) {
        if (face_sign(m, bounded[fi], carried) != signs[fi])
          fail(Errc::kAxiomViolation, "face " + std::to_string(bounded[fi]) + " contradicts its sign");
        continue;
      }
      if (nunk != 1) continue;
      int fits = 0, pick = -1;
      for (int opt = 0; opt < 2; ++opt) {
        auto trial = [&](int d) { return PlanarMap::edge_of(d) == PlanarMap::edge_of(unknown) ? (d == unknown ? opt : !opt) : carried(d); };
        if (face_sign(m, bounded[fi], trial) == signs[fi]) ++fits, pick = opt;
      }
      if (fits != 1) fail(Errc::kAxiomViolation, "face " + std::to_string(bounded[fi]) + " cannot take its sign");
      orient(pick ? unknown : PlanarMap::rev(unknown));
      return true;
    }
    return false;
  };
  while (vertex_rule() || face_rule()) {
  }
  for (int e = 0; e < m.edge_count(); ++e)
    if (dir[e] < 0) fail(Errc::kStalled, "decoding stalled with undirected edges");
  EdgeOrientation b(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) b.set(e, dir[e] == 1);
  if (!bipolar_check(m, b, s, t).bipolar) fail(Errc::kAxiomViolation, "decoded orientation is not bipolar");
  if (sign_encode(m, b) != signs) fail(Errc::kAxiomViolation, "decoded orientation has other signs");
  return b;
}

bool sign_validity_matching(const PlanarMap& m, int s, int t, const std::string& signs, bool outer_from_vector) {
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_size(f) != 3) fail(Errc::kNotInnerTriangulation, "map is not a triangulation");
  std::vector<char> sign(m.face_count(), 0);
  size_t k = 0;
  for (int f = 0; f < m.face_count(); ++f)
    if (f != m.outer_face()) {
      if (k >= signs.size()) fail(Errc::kInvalidInput, "sign vector too short");
      sign[f] = signs[k++];
    }
  if (k != signs.size()) fail(Errc::kInvalidInput, "sign vector too long");
  auto st = m.find_dart(s, t);
  if (!st) fail(Errc::kInvalidInput, "s and t must be adjacent");
  // The bounded face at st has the same sign in every bipolar orientation: '+'
  // when it lies left of s->t. The outer face takes the opposite sign. Reading
  // the sign off the vector instead accepts vectors that no orientation has.
  const bool st_left = m.face_of(*st) != m.outer_face();
  sign[m.outer_face()] = st_left ? '-' : '+';
  if (outer_from_vector) {
    int f_st = st_left ? m.face_of(*st) : m.face_of(PlanarMap::rev(*st));
    sign[m.outer_face()] = sign[f_st] == '-' ? '+' : '-';
  }
  std::vector<int> aid(m.vertex_count(), -1);
  int na = 0;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (v != s && v != t) aid[v] = na++;
  for (char want : {'+', '-'}) {
    std::vector<int> bid(m.face_count(), -1);
    int nb = 0;
    for (int f = 0; f < m.face_count(); ++f)
      if (sign[f] == want) bid[f] = nb++;
    Bipartite g;
    g.na = na;
    g.nb = nb;
    g.adj.assign(na, {});
    for (int d = 0; d < m.dart_count(); ++d) {
      int v = m.origin(d), f = m.face_of(d);
      if (aid[v] >= 0 && bid[f] >= 0) g.adj[aid[v]].push_back(bid[f]);
    }
    if (!unique_perfect_matching(g)) return false;
  }
  return true;
}

// ---- Lieb ----

PlanarMap lieb_grid(int k, int l) {
  Generated g = generate({Family::kGrid, k, l, {}});
  PlanarMap a = angle_graph(g.map);
  const int outer_v = g.map.vertex_count() + g.map.outer_face();
  std::vector<int> keep;
  for (int e = 0; e < a.edge_count(); ++e) {
    auto [u, v] = a.edge_ends(e);
    if (u != outer_v && v != outer_v) keep.push_back(e);
  }
  PlanarMap q = submap(a, keep);
  int best = 0;
  for (int f = 1; f < q.face_count(); ++f)
    if (q.face_size(f) > q.face_size(best)) best = f;
  std::vector<std::vector<int>> rot(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) rot[v] = q.darts_at(v);
  MapFlags fl;
  fl.allow_multi = true;
  PlanarMap out = PlanarMap::from_darts(q.vertex_count(), q.edge_list(), rot, q.face_darts(best)[0], fl);
  std::vector<std::string> labels;
  for (int v = 0; v < q.vertex_count(); ++v) labels.push_back(q.label(v));
  out.set_labels(labels);
  return out;
}

LiebSpec lieb_spec(const PlanarMap& q) {
  LiebSpec sp;
  const int of = q.outer_face();
  std::vector<char> on_outer(q.vertex_count(), 0);
  for (int d : q.face_darts(of)) on_outer[q.origin(d)] = 1;
  for (int f = 0; f < q.face_count(); ++f)
    if (f != of && q.face_size(f) != 4) fail(Errc::kNotGridLike, "bounded face " + std::to_string(f) + " is not a square");
  sp.alpha.assign(q.vertex_count(), kFreeVertex);
  for (int v = 0; v < q.vertex_count(); ++v)
    if (!on_outer[v]) {
      if (q.degree(v) != 4) fail(Errc::kNotGridLike, "inner vertex " + std::to_string(v) + " has degree " + std::to_string(q.degree(v)));
      sp.alpha[v] = 2;
    }
  sp.rules.assign(q.edge_count(), EdgeRule::kFree);
  for (int e = 0; e < q.edge_count(); ++e)
    if (q.face_of(2 * e) == of || q.face_of(2 * e + 1) == of) sp.rules[e] = EdgeRule::kIgnored;
  return sp;
}

std::vector<int> lieb_encode(const PlanarMap& q, const EdgeOrientation& x, int ref_face, int ref_color) {
  auto sp = lieb_spec(q);
  const int of = q.outer_face();
  if (ref_face < 0) ref_face = of == 0 ? 1 : 0;
  if (ref_face == of || ref_face >= q.face_count()) fail(Errc::kInvalidInput, "reference face must be bounded");
  std::vector<int> c(q.face_count(), -1);
  c[ref_face] = ((ref_color % 3) + 3) % 3;
  std::deque<int> bfs{ref_face};
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop_front();
    for (int d : q.face_darts(f)) {
      int g = q.face_of(PlanarMap::rev(d));
      if (g == of) continue;
      int want = (c[f] + (x.carries(d) ? 1 : 2)) % 3;
      if (c[g] < 0) {
        c[g] = want;
        bfs.push_back(g);
      } else if (c[g] != want) {
        fail(Errc::kInvalidInput, "orientation is not an inner 2-orientation");
      }
    }
  }
  for (int f = 0; f < q.face_count(); ++f)
    if (f != of && c[f] < 0) fail(Errc::kNotGridLike, "bounded faces are not connected");
  return c;
}

EdgeOrientation lieb_decode(const PlanarMap& q, const std::vector<int>& colors) {
  auto sp = lieb_spec(q);
  if (static_cast<int>(colors.size()) != q.face_count()) fail(Errc::kInvalidInput, "one color per face expected");
  EdgeOrientation x(q.edge_count());
  for (int e = 0; e < q.edge_count(); ++e) {
    if (sp.rules[e] == EdgeRule::kIgnored) continue;
    int diff = ((colors[q.face_of(2 * e + 1)] - colors[q.face_of(2 * e)]) % 3 + 3) % 3;
    if (diff == 0) fail(Errc::kInvalidInput, "adjacent squares share a color");
    x.set(e, diff == 1);
  }
  return x;
}

BigInt count_face_colorings(const PlanarMap& q) {
  const int of = q.outer_face();
  std::vector<int> faces;
  for (int f = 0; f < q.face_count(); ++f)
    if (f != of) faces.push_back(f);
  std::vector<std::vector<int>> adj(q.face_count());
  for (int e = 0; e < q.edge_count(); ++e) {
    int a = q.face_of(2 * e), b = q.face_of(2 * e + 1);
    if (a != of && b != of && a != b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<int> c(q.face_count(), -1);
  BigInt total = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == faces.size()) {
      ++total;
      return;
    }
    int f = faces[i];
    for (int col = 0; col < 3; ++col) {
      bool ok = true;
      for (int g : adj[f]) ok = ok && c[g] != col;
      if (!ok) continue;
      c[f] = col;
      rec(i + 1);
      c[f] = -1;
    }
  };
  rec(0);
  return total;
}

// ---- strip ----

std::vector<int> strip_inner_edges(const PlanarMap& strip, int l) {
  std::vector<int> out;
  auto edge = [&](int u, int v) {
    auto d = strip.find_dart(u, v);
    if (!d) fail(Errc::kInvalidInput, "map is not the strip T_{2,l}");
    return PlanarMap::edge_of(*d);
  };
  for (int j = 1; j < l; ++j) {
    if (j > 1) out.push_back(edge(grid_id(l, 1, j), grid_id(l, 2, j)));
    out.push_back(edge(grid_id(l, 2, j), grid_id(l, 1, j + 1)));
  }
  return out;
}

std::string strip_encode(const PlanarMap& strip, int l, const EdgeOrientation& x) {
  EdgeOrientation b0 = canonical_orientation({Family::kStrip, 2, l, {}});
  std::string out;
  for (int e : strip_inner_edges(strip, l)) out.push_back(x.forward(e) != b0.forward(e) ? '1' : '0');
  return out;
}

EdgeOrientation strip_decode(const PlanarMap& strip, int l, const std::string& seq) {
  auto inner = strip_inner_edges(strip, l);
  if (seq.size() != inner.size()) fail(Errc::kInvalidInput, "sequence length must be n - 3");
  if (!is_sparse(seq)) fail(Errc::kInvalidInput, "sequence is not sparse");
  EdgeOrientation x = canonical_orientation({Family::kStrip, 2, l, {}});
  for (size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == '1') x.toggle(inner[i]);
  return x;
}

bool is_sparse(const std::string& seq) {
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != '0' && seq[i] != '1') return false;
    if (i > 0 && seq[i] == '1' && seq[i - 1] == '1') return false;
  }
  return true;
}

// ---- hexagons ----

namespace {

std::optional<HexSchemeResult> try_scheme(const Generated& g, const std::vector<HexCell>& cells) {
  Completion c = suspension_and_completion(g.map, g.specials[0], g.specials[1], g.specials[2]);
  const PlanarMap& cm = c.map;
  auto pedge = [&](int u, int v) {
    auto d = g.map.find_dart(u, v);
    if (!d) fail(Errc::kInternal, "hexagon edge missing");
    return PlanarMap::edge_of(*d);
  };
  // completion edge between primal vertex v and the edge vertex of primal edge e
  auto cedge = [&](int v, int e) {
    auto d = cm.find_dart(v, c.edge_vertex[e]);
    if (!d) fail(Errc::kInternal, "completion edge missing");
    return PlanarMap::edge_of(*d);
  };
  std::vector<std::vector<int>> zone(cells.size());
  // (corner, cell) -> its two zone completion edges
  std::vector<std::pair<int, std::array<int, 2>>> pieces;
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    const auto& h = cells[ci].corner;
    const auto& ctr = cells[ci].center;
    std::vector<int> pe;
    for (int i = 0; i < 3; ++i) pe.push_back(pedge(ctr[i], ctr[(i + 1) % 3]));
    for (int i = 0; i < 3; ++i) {
      pe.push_back(pedge(ctr[i], h[2 * i]));
      pe.push_back(pedge(ctr[i], h[2 * i + 1]));
    }
    // sides of the three 4-faces
    const int quad[3][2] = {{1, 2}, {3, 4}, {5, 0}};
    for (auto& qs : quad) pe.push_back(pedge(h[qs[0]], h[qs[1]]));
    std::set<int> ze;
    for (int e : pe) {
      int x = c.edge_vertex[e];
      for (int d : cm.darts_at(x)) ze.insert(PlanarMap::edge_of(d));
    }
    zone[ci].assign(ze.begin(), ze.end());
    for (int j = 0; j < 6; ++j) {
      int conn = pedge(ctr[j / 2], h[j]);
      int side = j % 2 ? pedge(h[j], h[(j + 1) % 6]) : pedge(h[j], h[(j + 5) % 6]);
      pieces.push_back({h[j], {cedge(h[j], conn), cedge(h[j], side)}});
    }
  }
  // X0 on the split completion: every (corner, cell) piece sends exactly one
  // of its two zone edges out
  const int n = cm.vertex_count();
  std::vector<int> alpha = c.alpha;
  std::vector<std::pair<int, int>> edges = cm.edge_list();
  std::vector<std::vector<int>> rot(n + pieces.size());
  for (size_t p = 0; p < pieces.size(); ++p) {
    int v = pieces[p].first, pv = n + static_cast<int>(p);
    for (int e : pieces[p].second) {
      if (edges[e].first == v) edges[e].first = pv;
      else edges[e].second = pv;
    }
    alpha[v] -= 1;
    alpha.push_back(1);
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    rot[edges[e].first].push_back(2 * static_cast<int>(e));
    rot[edges[e].second].push_back(2 * static_cast<int>(e) + 1);
  }
  MapFlags fl;
  fl.planar = false;
  fl.allow_multi = true;
  PlanarMap split = PlanarMap::from_darts(n + static_cast<int>(pieces.size()), edges, rot, 0, fl);
  auto x0 = find_orientation(split, alpha);
  if (!x0) return std::nullopt;
  if (!is_alpha_orientation(cm, c.alpha, *x0)) fail(Errc::kInternal, "split orientation is not an alpha_S orientation");
  HexSchemeResult r;
  r.map = g.map;
  r.specials = {g.specials[0], g.specials[1], g.specials[2]};
  r.product = 1;
  r.zone_edges = static_cast<int>(zone.empty() ? 0 : zone[0].size());
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    EdgeRules rules(cm.edge_count());
    for (int e = 0; e < cm.edge_count(); ++e) rules[e] = x0->forward(e) ? EdgeRule::kForward : EdgeRule::kBackward;
    for (int e : zone[ci]) rules[e] = EdgeRule::kFree;
    CountOptions o;
    o.rules = rules;
    o.method = CountMethod::kSearch;
    BigInt local = count(cm, c.alpha, o).count;
    r.local.push_back(local);
    r.product *= local;
  }
  return r;
}

}  // namespace

HexSchemeResult hexagon_flip_scheme(int k, int l) {
  Generated h = generate({Family::kHexGrid, k, l, {}});
  auto cells = hex_cells(k, l);
  const auto& od = h.map.face_darts(h.map.outer_face());
  const int L = static_cast<int>(od.size());
  std::vector<std::array<int, 3>> splits{{0, L / 3, 2 * L / 3}};
  for (int i = 1; i < L; ++i)
    for (int j = i + 1; j < L; ++j) splits.push_back({0, i, j});
  for (auto sp : splits) {
    Generated g = augment_outer(h.map, h.map.origin(od[sp[0]]), h.map.origin(od[sp[1]]), h.map.origin(od[sp[2]]));
    if (auto r = try_scheme(g, cells)) {
      r->split = sp;
      return *r;
    }
  }
  fail(Errc::kInfeasible, "no attachment of the outer triangle admits the hexagon scheme");
}

}  // namespace oc
