#include "orientcount/planar_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace oc {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::kOk: return "Ok";
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kNonSymmetricAdjacency: return "NonSymmetricAdjacency";
    case Errc::kEulerViolation: return "EulerViolation";
    case Errc::kLoopEdge: return "LoopEdge";
    case Errc::kMultiEdge: return "MultiEdge";
    case Errc::kNotThreeConnected: return "NotThreeConnected";
    case Errc::kSpecialsNotOnOuterFace: return "SpecialVerticesNotOnOuterFace";
    case Errc::kBadParameters: return "BadParameters";
    case Errc::kUnknownFace: return "UnknownFace";
    case Errc::kNoCanonicalDefined: return "NoCanonicalDefined";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kCycleNotDirected: return "CycleNotDirected";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kLatticeViolation: return "LatticeViolation";
    case Errc::kNoColoring: return "NoColoring";
    case Errc::kMultipleColorings: return "MultipleColorings";
    case Errc::kNotInnerTriangulation: return "NotInnerTriangulation";
    case Errc::kStalled: return "Stalled";
    case Errc::kAxiomViolation: return "AxiomViolation";
    case Errc::kNotGridLike: return "NotGridLike";
    case Errc::kSizeExceeded: return "SizeExceeded";
    case Errc::kDisconnected: return "Disconnected";
    case Errc::kNotPrimitive: return "NotPrimitive";
    case Errc::kNoConvergence: return "NoConvergence";
    case Errc::kUnknownSuite: return "UnknownSuite";
    case Errc::kParse: return "ParseError";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

PlanarMap PlanarMap::from_rotations(const std::vector<std::vector<int>>& rot, int outer_from,
                                    int outer_to) {
  const int n = static_cast<int>(rot.size());
  std::vector<std::map<int, int>> seen(n);
  for (int u = 0; u < n; ++u) {
    for (int v : rot[u]) {
      if (v < 0 || v >= n) fail(Errc::kInvalidInput, "neighbor out of range at vertex " + std::to_string(u));
      if (v == u) fail(Errc::kLoopEdge, "loop at vertex " + std::to_string(u));
      if (++seen[u][v] > 1)
        fail(Errc::kMultiEdge, "repeated neighbor " + std::to_string(v) + " at vertex " + std::to_string(u));
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v : rot[u])
      if (!seen[v].count(u))
        fail(Errc::kNonSymmetricAdjacency,
             std::to_string(u) + " lists " + std::to_string(v) + " but not conversely");

  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> eid;
  for (int u = 0; u < n; ++u)
    for (int v : rot[u])
      if (u < v) {
        eid[{u, v}] = static_cast<int>(edges.size());
        edges.push_back({u, v});
      }
  auto dart = [&](int u, int v) {
    return u < v ? 2 * eid.at({u, v}) : 2 * eid.at({v, u}) + 1;
  };
  std::vector<std::vector<int>> rd(n);
  for (int u = 0; u < n; ++u)
    for (int v : rot[u]) rd[u].push_back(dart(u, v));
  if (outer_from < 0 || outer_from >= n || !seen[outer_from].count(outer_to))
    fail(Errc::kInvalidInput, "outer dart is not an edge");
  return from_darts(n, edges, rd, dart(outer_from, outer_to));
}

PlanarMap PlanarMap::from_darts(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<std::vector<int>>& rotation, int outer_dart,
                                MapFlags flags) {
  PlanarMap m;
  m.n_ = n;
  m.flags_ = flags;
  const int nd = 2 * static_cast<int>(edges.size());
  if (static_cast<int>(rotation.size()) != n) fail(Errc::kInvalidInput, "rotation count differs from n");
  if (nd == 0) fail(Errc::kInvalidInput, "map without edges");
  m.origin_.resize(nd);
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u < 0 || u >= n || v < 0 || v >= n) fail(Errc::kInvalidInput, "edge endpoint out of range");
    if (u == v && !flags.allow_multi) fail(Errc::kLoopEdge, "loop at vertex " + std::to_string(u));
    m.origin_[2 * e] = u;
    m.origin_[2 * e + 1] = v;
  }
  m.next_.assign(nd, -1);
  m.prev_.assign(nd, -1);
  std::vector<char> placed(nd, 0);
  m.vdarts_ = rotation;
  for (int v = 0; v < n; ++v) {
    const auto& r = rotation[v];
    for (size_t i = 0; i < r.size(); ++i) {
      int d = r[i];
      if (d < 0 || d >= nd || m.origin_[d] != v || placed[d])
        fail(Errc::kInvalidInput, "bad dart in rotation of vertex " + std::to_string(v));
      placed[d] = 1;
      int nx = r[(i + 1) % r.size()];
      m.next_[d] = nx;
      m.prev_[nx] = d;
    }
  }
  for (int d = 0; d < nd; ++d)
    if (!placed[d]) fail(Errc::kNonSymmetricAdjacency, "dart missing from its origin rotation");
  if (outer_dart < 0 || outer_dart >= nd) fail(Errc::kInvalidInput, "outer dart out of range");
  m.outer_dart_ = outer_dart;
  m.finish();
  if (!flags.allow_multi && !m.is_simple()) fail(Errc::kMultiEdge, "parallel edges in a simple map");
  if (flags.planar) {
    if (!m.connected()) fail(Errc::kInvalidInput, "map is not connected");
    if (m.n_ - m.edge_count() + m.face_count() != 2)
      fail(Errc::kEulerViolation, "n - m + f = " +
                                      std::to_string(m.n_ - m.edge_count() + m.face_count()));
  }
  return m;
}

void PlanarMap::finish() {
  const int nd = dart_count();
  face_of_.assign(nd, -1);
  fdarts_.clear();
  for (int d = 0; d < nd; ++d) {
    if (face_of_[d] != -1) continue;
    const int f = static_cast<int>(fdarts_.size());
    fdarts_.emplace_back();
    int x = d;
    while (face_of_[x] == -1) {
      face_of_[x] = f;
      fdarts_[f].push_back(x);
      x = face_next(x);
    }
  }
}

std::vector<std::pair<int, int>> PlanarMap::edge_list() const {
  std::vector<std::pair<int, int>> out(edge_count());
  for (int e = 0; e < edge_count(); ++e) out[e] = edge_ends(e);
  return out;
}

std::vector<int> PlanarMap::neighbors(int v) const {
  std::vector<int> out;
  for (int d : vdarts_[v]) out.push_back(target(d));
  return out;
}

std::vector<std::vector<int>> PlanarMap::rotations() const {
  std::vector<std::vector<int>> r(n_);
  for (int v = 0; v < n_; ++v) r[v] = neighbors(v);
  return r;
}

std::optional<int> PlanarMap::find_dart(int u, int v) const {
  for (int d : vdarts_[u])
    if (target(d) == v) return d;
  return std::nullopt;
}

std::vector<int> PlanarMap::face_vertices(int f) const {
  std::vector<int> out;
  for (int d : fdarts_[f]) out.push_back(origin_[d]);
  return out;
}

bool PlanarMap::is_simple() const {
  std::set<std::pair<int, int>> s;
  for (int d = 0; d < dart_count(); ++d) {
    if (origin(d) == target(d)) return false;
    if (!s.insert({origin(d), target(d)}).second) return false;
  }
  return true;
}

bool PlanarMap::connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int d : vdarts_[v]) {
      int w = target(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        st.push_back(w);
      }
    }
  }
  return cnt == n_;
}

std::string PlanarMap::label(int v) const {
  if (v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

bool operator==(const PlanarMap& a, const PlanarMap& b) {
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count()) return false;
  if (a.outer_dart() != b.outer_dart()) return false;
  for (int v = 0; v < a.vertex_count(); ++v)
    if (a.darts_at(v) != b.darts_at(v)) return false;
  for (int d = 0; d < a.dart_count(); ++d)
    if (a.origin(d) != b.origin(d)) return false;
  return true;
}

bool isomorphic(const PlanarMap& a, const PlanarMap& b) {
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count()) return false;
  const int nd = a.dart_count();
  for (int start = 0; start < nd; ++start) {
    std::vector<int> phi(nd, -1), inv(nd, -1), vmap(a.vertex_count(), -1);
    std::vector<int> st{0};
    phi[0] = start;
    inv[start] = 0;
    bool ok = true;
    while (ok && !st.empty()) {
      int x = st.back();
      st.pop_back();
      int y = phi[x];
      int ov = a.origin(x), ow = b.origin(y);
      if (vmap[ov] == -1) vmap[ov] = ow;
      else if (vmap[ov] != ow) { ok = false; break; }
      const std::pair<int, int> steps[2] = {{a.next_ccw(x), b.next_ccw(y)},
                                            {PlanarMap::rev(x), PlanarMap::rev(y)}};
      for (auto [xa, yb] : steps) {
        if (phi[xa] == -1 && inv[yb] == -1) {
          phi[xa] = yb;
          inv[yb] = xa;
          st.push_back(xa);
        } else if (phi[xa] != yb) {
          ok = false;
          break;
        }
      }
    }
    if (ok && std::find(phi.begin(), phi.end(), -1) == phi.end()) {
      std::vector<int> vs = vmap;
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) == vs.end() && vs.front() >= 0) return true;
    }
  }
  return false;
}

namespace {

bool connected_without(const PlanarMap& m, int x, int y) {
  const int n = m.vertex_count();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (v != x && v != y) { start = v; break; }
  if (start < 0) return true;
  std::vector<char> seen(n, 0);
  seen[x] = seen[y] = 1;
  seen[start] = 1;
  std::vector<int> st{start};
  int cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int d : m.darts_at(v)) {
      int w = m.target(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        st.push_back(w);
      }
    }
  }
  return cnt == n - (x == y ? 1 : 2);
}

}  // namespace

bool is_three_connected(const PlanarMap& m) {
  const int n = m.vertex_count();
  if (!m.is_simple() || !m.connected()) return false;
  if (n < 4) return n == 3 && m.edge_count() == 3;
  if (n > 1000) fail(Errc::kSizeExceeded, "3-connectivity test limited to n <= 1000");
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (!connected_without(m, x, y)) return false;
  return true;
}

PlanarMap mirror(const PlanarMap& m) {
  std::vector<std::vector<int>> rot(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) rot[v].assign(m.darts_at(v).rbegin(), m.darts_at(v).rend());
  MapFlags fl;
  fl.allow_multi = m.allows_multi();
  fl.planar = m.planar();
  // the outer face keeps its darts but is walked the other way
  PlanarMap out = PlanarMap::from_darts(m.vertex_count(), m.edge_list(), rot, PlanarMap::rev(m.outer_dart()), fl);
  std::vector<std::string> labels;
  for (int v = 0; v < m.vertex_count(); ++v) labels.push_back(m.label(v));
  out.set_labels(labels);
  return out;
}

PlanarMap submap(const PlanarMap& m, const std::vector<int>& keep_edges, std::vector<int>* old_ids) {
  std::vector<int> id(m.vertex_count(), -1), old;
  std::vector<char> keep(m.edge_count(), 0);
  for (int e : keep_edges) keep[e] = 1;
  for (int v = 0; v < m.vertex_count(); ++v)
    for (int d : m.darts_at(v))
      if (keep[PlanarMap::edge_of(d)] && id[v] < 0) {
        id[v] = static_cast<int>(old.size());
        old.push_back(v);
      }
  std::vector<int> new_edge(m.edge_count(), -1);
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < m.edge_count(); ++e)
    if (keep[e]) {
      new_edge[e] = static_cast<int>(edges.size());
      auto [u, v] = m.edge_ends(e);
      edges.push_back({id[u], id[v]});
    }
  auto nd = [&](int d) { return 2 * new_edge[PlanarMap::edge_of(d)] + (d & 1); };
  std::vector<std::vector<int>> rot(old.size());
  for (size_t i = 0; i < old.size(); ++i)
    for (int d : m.darts_at(old[i]))
      if (keep[PlanarMap::edge_of(d)]) rot[i].push_back(nd(d));
  // keep the old outer dart when it survives
  int od = 0;
  if (keep[PlanarMap::edge_of(m.outer_dart())]) od = nd(m.outer_dart());
  MapFlags fl;
  fl.allow_multi = m.allows_multi();
  fl.planar = m.planar();
  PlanarMap out = PlanarMap::from_darts(static_cast<int>(old.size()), edges, rot, od, fl);
  std::vector<std::string> labels;
  for (int v : old) labels.push_back(m.label(v));
  out.set_labels(labels);
  if (old_ids) *old_ids = old;
  return out;
}

PlanarMap dual(const PlanarMap& m) {
  const int f = m.face_count();
  std::vector<std::pair<int, int>> edges(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) edges[e] = {m.face_of(2 * e), m.face_of(2 * e + 1)};
  std::vector<std::vector<int>> rot(f);
  for (int g = 0; g < f; ++g) rot[g] = m.face_darts(g);
  MapFlags fl;
  fl.allow_multi = true;
  fl.planar = m.planar();
  return PlanarMap::from_darts(f, edges, rot, m.outer_dart(), fl);
}

PlanarMap angle_graph(const PlanarMap& m) {
  const int n = m.vertex_count();
  const int nd = m.dart_count();
  std::vector<std::pair<int, int>> edges(nd);
  for (int d = 0; d < nd; ++d) edges[d] = {m.origin(d), n + m.face_of(d)};
  std::vector<std::vector<int>> rot(n + m.face_count());
  for (int v = 0; v < n; ++v)
    for (int d : m.darts_at(v)) rot[v].push_back(2 * d);
  // the face vertex meets its corners in traversal order
  for (int g = 0; g < m.face_count(); ++g)
    for (int d : m.face_darts(g)) rot[n + g].push_back(2 * d + 1);
  MapFlags fl;
  fl.allow_multi = true;
  fl.planar = m.planar();
  // the outer face vertex lies in the unbounded region: the dart from it to the
  // origin of the outer dart has the unbounded face on its left
  int od = 2 * m.outer_dart() + 1;
  PlanarMap out = PlanarMap::from_darts(n + m.face_count(), edges, rot, od, fl);
  std::vector<std::string> labels(n + m.face_count());
  for (int v = 0; v < n; ++v) labels[v] = m.label(v);
  for (int g = 0; g < m.face_count(); ++g) labels[n + g] = "F" + std::to_string(g);
  out.set_labels(labels);
  return out;
}

Completion suspension_and_completion(const PlanarMap& m, int a1, int a2, int a3) {
  if (!is_three_connected(m)) fail(Errc::kNotThreeConnected, "completion needs a 3-connected map");
  const int n = m.vertex_count();
  const int spec[3] = {a1, a2, a3};
  for (int s : spec)
    if (s < 0 || s >= n) fail(Errc::kSpecialsNotOnOuterFace, "special vertex out of range");
  const int fo = m.outer_face();
  std::vector<int> od = m.face_darts(fo);
  auto at = [&](int v) {
    for (size_t i = 0; i < od.size(); ++i)
      if (m.origin(od[i]) == v) return static_cast<int>(i);
    return -1;
  };
  int p[3] = {at(a1), at(a2), at(a3)};
  for (int i = 0; i < 3; ++i)
    if (p[i] < 0) fail(Errc::kSpecialsNotOnOuterFace, "vertex " + std::to_string(spec[i]) + " not on outer face");
  if (a1 == a2 || a2 == a3 || a1 == a3) fail(Errc::kSpecialsNotOnOuterFace, "special vertices coincide");
  std::rotate(od.begin(), od.begin() + p[0], od.end());
  // segment a1->a2 attaches to b3, a2->a3 to b1, a3->a1 to b2 (0-based 2, 0, 1)
  std::vector<int> seg(m.dart_count(), -1);
  {
    int cur = -1, seen = 0;
    for (int d : od) {
      int u = m.origin(d);
      if (u == a1) { cur = 2; seen |= 1; }
      else if (u == a2) { cur = 0; if (seen != 1) fail(Errc::kSpecialsNotOnOuterFace, "specials not in clockwise order"); seen |= 2; }
      else if (u == a3) { cur = 1; if (seen != 3) fail(Errc::kSpecialsNotOnOuterFace, "specials not in clockwise order"); seen |= 4; }
      seg[d] = cur;
    }
  }

  Completion c;
  int next_id = 0;
  auto add = [&](VertexClass k) {
    c.cls.push_back(k);
    return next_id++;
  };
  for (int v = 0; v < n; ++v) add(VertexClass::kPrimal);
  c.face_vertex.assign(m.face_count(), -1);
  for (int g = 0; g < m.face_count(); ++g)
    if (g != fo) c.face_vertex[g] = add(VertexClass::kDual);
  for (int i = 0; i < 3; ++i) c.b[i] = add(VertexClass::kDual);
  c.edge_vertex.resize(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) c.edge_vertex[e] = add(VertexClass::kEdge);
  for (int i = 0; i < 3; ++i) c.ray[i] = add(VertexClass::kEdge);
  c.v_inf = add(VertexClass::kInfinity);
  for (int i = 0; i < 3; ++i) c.a[i] = spec[i];

  auto ev = [&](int d) { return c.edge_vertex[PlanarMap::edge_of(d)]; };
  auto dv = [&](int d) {
    int g = m.face_of(d);
    return g == fo ? c.b[seg[d]] : c.face_vertex[g];
  };
  std::vector<std::vector<int>> R(next_id);
  for (int u = 0; u < n; ++u) {
    for (int d : m.darts_at(u)) {
      R[u].push_back(ev(d));
      for (int i = 0; i < 3; ++i)
        if (u == spec[i] && m.face_of(d) == fo) R[u].push_back(c.ray[i]);
    }
  }
  for (int g = 0; g < m.face_count(); ++g)
    if (g != fo)
      for (int d : m.face_darts(g)) R[c.face_vertex[g]].push_back(ev(d));
  for (int e = 0; e < m.edge_count(); ++e) {
    int d = 2 * e;
    R[c.edge_vertex[e]] = {m.origin(d), dv(d ^ 1), m.target(d), dv(d)};
  }
  for (int i = 0; i < 3; ++i) {
    auto& r = R[c.b[i]];
    r = {c.v_inf, c.ray[(i + 1) % 3]};
    for (int d : od)
      if (seg[d] == i) r.push_back(ev(d));
    r.push_back(c.ray[(i + 2) % 3]);
    R[c.ray[i]] = {spec[i], c.b[(i + 2) % 3], c.v_inf, c.b[(i + 1) % 3]};
  }
  R[c.v_inf] = {c.ray[0], c.b[2], c.ray[1], c.b[0], c.ray[2], c.b[1]};

  c.map = PlanarMap::from_rotations(R, c.v_inf, c.ray[0]);
  c.alpha.resize(next_id);
  for (int v = 0; v < next_id; ++v) {
    switch (c.cls[v]) {
      case VertexClass::kPrimal:
      case VertexClass::kDual: c.alpha[v] = 3; break;
      case VertexClass::kEdge: c.alpha[v] = 1; break;
      case VertexClass::kInfinity: c.alpha[v] = 0; break;
    }
  }
  std::vector<std::string> labels(next_id);
  for (int v = 0; v < n; ++v) labels[v] = m.label(v);
  for (int g = 0; g < m.face_count(); ++g)
    if (g != fo) labels[c.face_vertex[g]] = "F" + std::to_string(g);
  for (int i = 0; i < 3; ++i) {
    labels[c.b[i]] = "b" + std::to_string(i + 1);
    labels[c.ray[i]] = "r" + std::to_string(i + 1);
  }
  for (int e = 0; e < m.edge_count(); ++e) labels[c.edge_vertex[e]] = "e" + std::to_string(e);
  labels[c.v_inf] = "v_inf";
  c.map.set_labels(labels);
  return c;
}

Subdivision subdivide(const PlanarMap& m, const std::vector<int>& alpha) {
  const int n = m.vertex_count();
  const int me = m.edge_count();
  if (static_cast<int>(alpha.size()) != n) fail(Errc::kInvalidInput, "alpha size differs from n");
  std::vector<std::pair<int, int>> edges(2 * me);
  for (int e = 0; e < me; ++e) {
    auto [u, v] = m.edge_ends(e);
    edges[2 * e] = {u, n + e};
    edges[2 * e + 1] = {v, n + e};
  }
  // primal dart 2e (at u) -> 4e, dart 2e+1 (at v) -> 4e+2
  auto img = [](int d) { return (d & 1) ? 4 * (d >> 1) + 2 : 4 * (d >> 1); };
  std::vector<std::vector<int>> rot(n + me);
  for (int v = 0; v < n; ++v)
    for (int d : m.darts_at(v)) rot[v].push_back(img(d));
  for (int e = 0; e < me; ++e) rot[n + e] = {4 * e + 1, 4 * e + 3};
  MapFlags fl;
  fl.planar = m.planar();
  fl.allow_multi = m.allows_multi();
  Subdivision s{PlanarMap::from_darts(n + me, edges, rot, img(m.outer_dart()), fl), alpha};
  s.alpha.resize(n + me, 1);
  return s;
}

}  // namespace oc
