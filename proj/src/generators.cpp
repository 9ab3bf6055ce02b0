#include "orientcount/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>

namespace oc {

namespace {

const std::pair<const char*, Family> kNames[] = {
    {"grid", Family::kGrid},
    {"torus-grid", Family::kTorusGrid},
    {"augmented-grid", Family::kAugmentedGrid},
    {"quad-grid", Family::kQuadGrid},
    {"tri-grid", Family::kTriGrid},
    {"tri-torus", Family::kTriTorus},
    {"augmented-tri-grid", Family::kAugmentedTriGrid},
    {"hex-grid", Family::kHexGrid},
    {"stacked", Family::kStacked},
    {"strip", Family::kStrip},
};

using Rot = std::vector<std::vector<int>>;

struct Pt {
  double x, y;
};

Rot rot_from_coords(const std::vector<Pt>& P, const std::vector<std::pair<int, int>>& edges) {
  Rot rot(P.size());
  for (auto [u, v] : edges) {
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (size_t v = 0; v < P.size(); ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      return std::atan2(P[a].y - P[v].y, P[a].x - P[v].x) < std::atan2(P[b].y - P[v].y, P[b].x - P[v].x);
    });
  }
  return rot;
}

int rpos(const std::vector<int>& r, int x) {
  auto it = std::find(r.begin(), r.end(), x);
  if (it == r.end()) fail(Errc::kInternal, "rotation lookup failed");
  return static_cast<int>(it - r.begin());
}

std::pair<int, int> face_next(const Rot& rot, std::pair<int, int> d) {
  auto [u, v] = d;
  const auto& r = rot[v];
  int i = rpos(r, u);
  return {v, r[(i + static_cast<int>(r.size()) - 1) % r.size()]};
}

std::vector<std::pair<int, int>> walk(const Rot& rot, std::pair<int, int> d) {
  std::vector<std::pair<int, int>> f{d};
  for (auto e = face_next(rot, d); e != d; e = face_next(rot, e)) f.push_back(e);
  return f;
}

// Any dart out of x whose left face meets every vertex in `need`.
std::pair<int, int> dart_with_face(const Rot& rot, int x, const std::vector<int>& need) {
  for (int y : rot[x]) {
    auto f = walk(rot, {x, y});
    std::set<int> vs;
    for (auto [a, b] : f) vs.insert(a);
    bool all = true;
    for (int w : need) all = all && vs.count(w);
    if (all) return {x, y};
  }
  fail(Errc::kInternal, "no face with the requested vertices");
}

std::vector<std::pair<int, int>> grid_edges(int k, int l) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      if (j < l) e.push_back({grid_id(l, i, j), grid_id(l, i, j + 1)});
      if (i < k) e.push_back({grid_id(l, i, j), grid_id(l, i + 1, j)});
    }
  return e;
}

std::vector<Pt> grid_points(int k, int l) {
  std::vector<Pt> P(k * l);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) P[grid_id(l, i, j)] = {static_cast<double>(j), static_cast<double>(-i)};
  return P;
}

std::vector<std::string> grid_labels(int k, int l) {
  std::vector<std::string> s;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) s.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return s;
}

Rot tri_rot(int k, int l) {
  auto e = grid_edges(k, l);
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j < l; ++j) e.push_back({grid_id(l, i, j), grid_id(l, i - 1, j + 1)});
  return rot_from_coords(grid_points(k, l), e);
}

// Join a1, a2, a3 to the three boundary arcs s1..s2, s2..s3, s3..s1 of the
// outer face (walked from dart (s1, next)); returns the outer dart (a1, a2).
std::pair<int, int> augment(Rot& rot, std::pair<int, int> outer, int s1, int s2, int s3) {
  auto bd = walk(rot, outer);
  std::vector<int> cyc;
  for (auto [a, b] : bd) cyc.push_back(a);
  auto at = [&](int v) { return static_cast<int>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin()); };
  std::rotate(cyc.begin(), cyc.begin() + at(s1), cyc.end());
  const int L = static_cast<int>(cyc.size());
  int p2 = at(s2), p3 = at(s3);
  if (!(0 < p2 && p2 < p3 && p3 < L)) fail(Errc::kInternal, "boundary split out of order");
  std::vector<std::vector<int>> arcs(3);
  for (int i = 0; i <= p2; ++i) arcs[0].push_back(cyc[i]);
  for (int i = p2; i <= p3; ++i) arcs[1].push_back(cyc[i]);
  for (int i = p3; i <= L; ++i) arcs[2].push_back(cyc[i % L]);
  const int n = static_cast<int>(rot.size());
  int a[3] = {n, n + 1, n + 2};
  auto pick_of = [&](std::vector<int> vs) {
    std::vector<char> p(n + 3, 0);
    for (int v : vs) p[v] = 1;
    return p;
  };
  insert_in_face(rot, outer.first, outer.second, pick_of(arcs[0]));
  std::vector<int> need1 = arcs[1];
  need1.push_back(a[0]);
  auto d1 = dart_with_face(rot, a[0], need1);
  insert_in_face(rot, d1.first, d1.second, pick_of(need1));
  std::vector<int> need2 = arcs[2];
  need2.push_back(a[0]);
  need2.push_back(a[1]);
  auto d2 = dart_with_face(rot, a[1], need2);
  insert_in_face(rot, d2.first, d2.second, pick_of(need2));
  auto tri = walk(rot, {a[0], a[1]});
  if (tri.size() != 3) fail(Errc::kInternal, "augmentation did not close the outer triangle");
  return {a[0], a[1]};
}

std::pair<int, int> outer_of_coords(const Rot& rot, const std::vector<Pt>& P) {
  // the outer face is the one with negative signed area
  std::set<std::pair<int, int>> seen;
  for (size_t u = 0; u < rot.size(); ++u)
    for (int v : rot[u]) {
      std::pair<int, int> d{static_cast<int>(u), v};
      if (seen.count(d)) continue;
      auto f = walk(rot, d);
      double area = 0;
      for (auto [a, b] : f) {
        seen.insert({a, b});
        area += P[a].x * P[b].y - P[b].x * P[a].y;
      }
      if (area < 0) return d;
    }
  fail(Errc::kInternal, "no outer face found");
}

Generated make_grid(int k, int l) {
  Generated g;
  g.map = PlanarMap::from_rotations(rot_from_coords(grid_points(k, l), grid_edges(k, l)), grid_id(l, 1, 1),
                                    grid_id(l, 1, 2));
  g.map.set_labels(grid_labels(k, l));
  return g;
}

Generated with_triangle(Rot rot, std::pair<int, int> outer, int s1, int s2, int s3,
                        std::vector<std::string> labels) {
  auto od = augment(rot, outer, s1, s2, s3);
  Generated g;
  g.map = PlanarMap::from_rotations(rot, od.first, od.second);
  labels.resize(rot.size() - 3);
  labels.push_back("a1");
  labels.push_back("a2");
  labels.push_back("a3");
  g.map.set_labels(labels);
  const int n = g.map.vertex_count();
  g.specials = {n - 3, n - 2, n - 1};
  g.alpha.assign(n, 3);
  for (int s : g.specials) g.alpha[s] = 0;
  g.rules.assign(g.map.edge_count(), EdgeRule::kFree);
  for (int d : g.map.face_darts(g.map.outer_face())) g.rules[PlanarMap::edge_of(d)] = EdgeRule::kIgnored;
  return g;
}

Generated make_augmented(int k, int l, bool tri) {
  Rot rot = tri ? tri_rot(k, l) : rot_from_coords(grid_points(k, l), grid_edges(k, l));
  return with_triangle(rot, {grid_id(l, 1, 1), grid_id(l, 1, 2)}, grid_id(l, 1, 1), grid_id(l, 1, l),
                       grid_id(l, k, l), grid_labels(k, l));
}

Generated make_quad(int k, int l) {
  Rot rot = rot_from_coords(grid_points(k, l), grid_edges(k, l));
  const int n = k * l;
  std::vector<char> pick(n + 1, 0);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      if ((i == 1 || i == k || j == 1 || j == l) && (i + j) % 2 == 1) pick[grid_id(l, i, j)] = 1;
  int vinf = insert_in_face(rot, grid_id(l, 1, 1), grid_id(l, 1, 2), pick);
  auto od = dart_with_face(rot, vinf, {grid_id(l, 1, 1)});
  Generated g;
  g.map = PlanarMap::from_rotations(rot, od.first, od.second);
  auto labels = grid_labels(k, l);
  labels.push_back("v_inf");
  g.map.set_labels(labels);
  g.specials = {grid_id(l, 1, 1), vinf};
  g.alpha.assign(n + 1, 2);
  g.alpha[grid_id(l, 1, 1)] = 0;
  g.alpha[vinf] = 0;
  return g;
}

Generated make_tri(int k, int l) {
  Generated g;
  g.map = PlanarMap::from_rotations(tri_rot(k, l), grid_id(l, 1, 1), grid_id(l, 1, 2));
  g.map.set_labels(grid_labels(k, l));
  g.alpha.assign(k * l, 2);
  for (int i = 2; i < k; ++i)
    for (int j = 2; j < l; ++j) g.alpha[grid_id(l, i, j)] = 3;
  g.alpha[grid_id(l, 1, 1)] = 1;
  g.alpha[grid_id(l, 1, l)] = 1;
  g.alpha[grid_id(l, k, l)] = 1;
  return g;
}

Generated make_torus(int k, int l, bool tri) {
  const int n = k * l;
  auto wrap = [&](int i, int j) {
    if (tri) {
      while (j > l) j -= l, i -= 1;
      while (j < 1) j += l, i += 1;
    } else {
      j = ((j - 1) % l + l) % l + 1;
    }
    i = ((i - 1) % k + k) % k + 1;
    return grid_id(l, i, j);
  };
  const int per = tri ? 3 : 2;
  std::vector<std::pair<int, int>> edges(per * n);
  std::vector<std::vector<int>> rot(n);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      int v = grid_id(l, i, j);
      if (tri) {
        edges[3 * v] = {v, wrap(i, j + 1)};          // right
        edges[3 * v + 1] = {v, wrap(i - 1, j + 1)};  // up-right
        edges[3 * v + 2] = {v, wrap(i - 1, j)};      // up
      } else {
        edges[2 * v] = {v, wrap(i, j + 1)};      // right
        edges[2 * v + 1] = {v, wrap(i + 1, j)};  // down
      }
    }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      int v = grid_id(l, i, j);
      if (tri) {
        int left = wrap(i, j - 1), dl = wrap(i + 1, j - 1), down = wrap(i + 1, j);
        rot[v] = {2 * (3 * v), 2 * (3 * v + 1), 2 * (3 * v + 2), 2 * (3 * left) + 1, 2 * (3 * dl + 1) + 1,
                  2 * (3 * down + 2) + 1};
      } else {
        int up = wrap(i - 1, j), left = wrap(i, j - 1);
        rot[v] = {2 * (2 * v), 2 * (2 * up + 1) + 1, 2 * (2 * left) + 1, 2 * (2 * v + 1)};
      }
    }
  MapFlags fl;
  fl.planar = false;
  fl.allow_multi = true;
  Generated g;
  g.map = PlanarMap::from_darts(n, edges, rot, 0, fl);
  g.map.set_labels(grid_labels(k, l));
  g.alpha.assign(n, per);
  return g;
}

struct HexGeometry {
  std::vector<Pt> P;
  std::vector<std::pair<int, int>> edges;
  std::vector<HexCell> cells;
};

HexGeometry hex_geometry(int k, int l) {
  const double s3 = std::sqrt(3.0);
  struct Raw {
    double cx, cy;
  };
  std::vector<Raw> centers;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < l; ++c) centers.push_back({c * s3 + r * s3 / 2, -1.5 * r});
  auto key = [](double x, double y) {
    return std::make_pair(static_cast<long>(std::lround(x * 1000)), static_cast<long>(std::lround(y * 1000)));
  };
  // collect hexagon corners, number them top to bottom, left to right
  std::map<std::pair<long, long>, Pt> corners;
  auto corner_pt = [&](const Raw& h, int i) {
    double a = (30.0 + 60.0 * i) * std::numbers::pi / 180.0;
    return Pt{h.cx + std::cos(a), h.cy + std::sin(a)};
  };
  for (const auto& h : centers)
    for (int i = 0; i < 6; ++i) {
      Pt p = corner_pt(h, i);
      corners.emplace(key(p.x, p.y), p);
    }
  std::vector<std::pair<std::pair<long, long>, Pt>> sorted(corners.begin(), corners.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  HexGeometry g;
  std::map<std::pair<long, long>, int> id;
  for (auto& [kk, p] : sorted) {
    id[kk] = static_cast<int>(g.P.size());
    g.P.push_back(p);
  }
  std::set<std::pair<int, int>> es;
  auto add = [&](int a, int b) { es.insert({std::min(a, b), std::max(a, b)}); };
  for (const auto& h : centers) {
    HexCell cell;
    for (int i = 0; i < 6; ++i) {
      Pt p = corner_pt(h, i);
      cell.corner[i] = id.at(key(p.x, p.y));
    }
    for (int i = 0; i < 3; ++i) {
      double a = (60.0 + 120.0 * i) * std::numbers::pi / 180.0;
      cell.center[i] = static_cast<int>(g.P.size());
      g.P.push_back({h.cx + 0.45 * std::cos(a), h.cy + 0.45 * std::sin(a)});
    }
    for (int i = 0; i < 6; ++i) add(cell.corner[i], cell.corner[(i + 1) % 6]);
    for (int i = 0; i < 3; ++i) {
      add(cell.center[i], cell.center[(i + 1) % 3]);
      add(cell.center[i], cell.corner[2 * i]);
      add(cell.center[i], cell.corner[2 * i + 1]);
    }
    g.cells.push_back(cell);
  }
  g.edges.assign(es.begin(), es.end());
  return g;
}

Generated make_hex(int k, int l) {
  HexGeometry hg = hex_geometry(k, l);
  Rot rot = rot_from_coords(hg.P, hg.edges);
  auto od = outer_of_coords(rot, hg.P);
  Generated g;
  g.map = PlanarMap::from_rotations(rot, od.first, od.second);
  std::vector<std::string> labels(hg.P.size());
  for (size_t c = 0; c < hg.cells.size(); ++c)
    for (int i = 0; i < 3; ++i) labels[hg.cells[c].center[i]] = "c" + std::to_string(c) + "." + std::to_string(i);
  g.map.set_labels(labels);
  return g;
}

Generated make_strip(int l) {
  Generated g;
  g.map = PlanarMap::from_rotations(tri_rot(2, l), grid_id(l, 1, 1), grid_id(l, 1, 2));
  g.map.set_labels(grid_labels(2, l));
  g.specials = {grid_id(l, 1, 1), grid_id(l, 2, l)};
  return g;
}

}  // namespace

Family family_from_name(const std::string& name) {
  for (auto& [s, f] : kNames)
    if (name == s) return f;
  fail(Errc::kBadParameters, "unknown family '" + name + "'");
}

std::string family_name(Family f) {
  for (auto& [s, g] : kNames)
    if (g == f) return s;
  return "?";
}

int insert_in_face(std::vector<std::vector<int>>& rot, int u, int v, const std::vector<char>& pick) {
  auto f = walk(rot, {u, v});
  const int x = static_cast<int>(rot.size());
  std::vector<std::pair<int, int>> corners;
  std::set<int> used;
  for (auto [a, b] : f)
    if (a < static_cast<int>(pick.size()) && pick[a] && used.insert(a).second) corners.push_back({a, b});
  rot.emplace_back();
  for (auto [a, b] : corners) {
    auto& r = rot[a];
    r.insert(r.begin() + rpos(r, b) + 1, x);
    rot[x].push_back(a);
  }
  return x;
}

std::vector<std::array<int, 3>> bounded_triangles(const PlanarMap& m) {
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face()) continue;
    auto vs = m.face_vertices(f);
    if (vs.size() != 3) fail(Errc::kInvalidInput, "bounded face is not a triangle");
    std::array<int, 3> t{vs[0], vs[1], vs[2]};
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlanarMap stacked_triangulation(const std::vector<int>& sequence) {
  Rot rot{{2, 1}, {0, 2}, {1, 0}};
  for (int choice : sequence) {
    PlanarMap m = PlanarMap::from_rotations(rot, 0, 1);
    auto tris = bounded_triangles(m);
    if (choice < 0 || choice >= static_cast<int>(tris.size()))
      fail(Errc::kUnknownFace, "stacking choice " + std::to_string(choice) + " names no bounded face");
    auto t = tris[choice];
    // find a dart of that face
    int dart = -1;
    for (int f = 0; f < m.face_count() && dart < 0; ++f) {
      if (f == m.outer_face()) continue;
      auto vs = m.face_vertices(f);
      std::sort(vs.begin(), vs.end());
      if (vs[0] == t[0] && vs[1] == t[1] && vs[2] == t[2]) dart = m.face_darts(f)[0];
    }
    std::vector<char> pick(rot.size(), 0);
    for (int v : t) pick[v] = 1;
    insert_in_face(rot, m.origin(dart), m.target(dart), pick);
  }
  return PlanarMap::from_rotations(rot, 0, 1);
}

TriangulationSpec alpha_t(const PlanarMap& tri) {
  const auto& od = tri.face_darts(tri.outer_face());
  if (od.size() != 3) fail(Errc::kInvalidInput, "outer face is not a triangle");
  for (int f = 0; f < tri.face_count(); ++f)
    if (tri.face_size(f) != 3) fail(Errc::kInvalidInput, "map is not a triangulation");
  TriangulationSpec s;
  for (int i = 0; i < 3; ++i) s.specials[i] = tri.origin(od[i]);
  s.alpha.assign(tri.vertex_count(), 3);
  for (int a : s.specials) s.alpha[a] = 0;
  s.rules.assign(tri.edge_count(), EdgeRule::kFree);
  for (int d : od) s.rules[PlanarMap::edge_of(d)] = EdgeRule::kIgnored;
  return s;
}

Generated generate(const FamilySpec& spec) {
  const int k = spec.k, l = spec.l;
  if (spec.family != Family::kStacked && (k < 2 || l < 2))
    fail(Errc::kBadParameters, "k and l must be at least 2");
  if ((spec.family == Family::kHexGrid) && (k > 40 || l > 40)) fail(Errc::kBadParameters, "hex grid too large");
  switch (spec.family) {
    case Family::kGrid: return make_grid(k, l);
    case Family::kTorusGrid: return make_torus(k, l, false);
    case Family::kAugmentedGrid: return make_augmented(k, l, false);
    case Family::kQuadGrid: return make_quad(k, l);
    case Family::kTriGrid: return make_tri(k, l);
    case Family::kTriTorus: return make_torus(k, l, true);
    case Family::kAugmentedTriGrid: return make_augmented(k, l, true);
    case Family::kHexGrid: return make_hex(k, l);
    case Family::kStrip:
      if (k != 2) fail(Errc::kBadParameters, "strip has k = 2");
      return make_strip(l);
    case Family::kStacked: {
      Generated g;
      g.map = stacked_triangulation(spec.stacking);
      auto t = alpha_t(g.map);
      g.alpha = t.alpha;
      g.rules = t.rules;
      g.specials = {t.specials[0], t.specials[1], t.specials[2]};
      return g;
    }
  }
  fail(Errc::kBadParameters, "unknown family");
}

std::vector<HexCell> hex_cells(int k, int l) { return hex_geometry(k, l).cells; }

Generated augment_outer(const PlanarMap& m, int s1, int s2, int s3) {
  std::vector<std::string> labels;
  for (int v = 0; v < m.vertex_count(); ++v) labels.push_back(m.label(v));
  return with_triangle(m.rotations(), {m.origin(m.outer_dart()), m.target(m.outer_dart())}, s1, s2, s3, labels);
}

Generated augmented_hex(int k, int l) {
  Generated h = generate({Family::kHexGrid, k, l, {}});
  const auto& od = h.map.face_darts(h.map.outer_face());
  const int L = static_cast<int>(od.size());
  // three arcs of (nearly) equal length, starting at the outer dart
  return augment_outer(h.map, h.map.origin(od[0]), h.map.origin(od[L / 3]), h.map.origin(od[2 * L / 3]));
}

namespace {

// orientation where the dart u -> v is carried, for every listed pair
EdgeOrientation orient_pairs(const PlanarMap& m, const std::vector<std::pair<int, int>>& pairs) {
  EdgeOrientation x(m.edge_count());
  for (auto [u, v] : pairs) {
    auto d = m.find_dart(u, v);
    if (!d) fail(Errc::kInternal, "missing edge in canonical orientation");
    x.set(PlanarMap::edge_of(*d), PlanarMap::is_canonical(*d));
  }
  return x;
}

std::vector<std::pair<int, int>> tri_canonical_pairs(int k, int l) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      if (i > 1) p.push_back({grid_id(l, i, j), grid_id(l, i - 1, j)});          // up
      if (j < l) p.push_back({grid_id(l, i, j), grid_id(l, i, j + 1)});          // right
      if (i < k && j > 1) p.push_back({grid_id(l, i, j), grid_id(l, i + 1, j - 1)});  // left-down
    }
  return p;
}

}  // namespace

EdgeOrientation canonical_orientation(const FamilySpec& spec) {
  const int k = spec.k, l = spec.l;
  Generated g = generate(spec);
  EdgeOrientation x;
  switch (spec.family) {
    case Family::kTriGrid: {
      x = orient_pairs(g.map, tri_canonical_pairs(k, l));
      if (!is_alpha_orientation(g.map, g.alpha, x)) fail(Errc::kInternal, "canonical orientation misses alpha*");
      return x;
    }
    case Family::kAugmentedTriGrid: {
      auto p = tri_canonical_pairs(k, l);
      for (int d = 0; d < g.map.dart_count(); ++d) {
        int u = g.map.origin(d), v = g.map.target(d);
        if (u < k * l && v >= k * l) p.push_back({u, v});
      }
      x = orient_pairs(g.map, p);
      // outer triangle edges are ignored; leave them canonical
      if (!is_alpha_orientation(g.map, g.alpha, x, g.rules))
        fail(Errc::kInternal, "canonical orientation is not a 3-orientation");
      return x;
    }
    case Family::kStrip: {
      std::vector<std::pair<int, int>> p;
      for (int j = 1; j < l; ++j) {
        p.push_back({grid_id(l, 1, j), grid_id(l, 1, j + 1)});
        p.push_back({grid_id(l, 2, j), grid_id(l, 2, j + 1)});
        p.push_back({grid_id(l, 2, j), grid_id(l, 1, j + 1)});  // diagonals up
      }
      for (int j = 1; j <= l; ++j) p.push_back({grid_id(l, 1, j), grid_id(l, 2, j)});  // verticals down
      return orient_pairs(g.map, p);
    }
    case Family::kGrid: {
      // snake: odd rows to the right, even rows to the left, verticals down
      std::vector<std::pair<int, int>> p;
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j < l; ++j) {
          if (i % 2) p.push_back({grid_id(l, i, j), grid_id(l, i, j + 1)});
          else p.push_back({grid_id(l, i, j + 1), grid_id(l, i, j)});
        }
      for (int i = 1; i < k; ++i)
        for (int j = 1; j <= l; ++j) p.push_back({grid_id(l, i, j), grid_id(l, i + 1, j)});
      EdgeOrientation b = orient_pairs(g.map, p);
      PlanarMap a = angle_graph(g.map);
      // switch corners point from the vertex to the face
      EdgeOrientation y(a.edge_count());
      for (int d = 0; d < g.map.dart_count(); ++d) {
        bool out1 = b.carries(d), out2 = b.carries(g.map.next_ccw(d));
        y.set(d, out1 != out2);
      }
      return y;
    }
    default:
      fail(Errc::kNoCanonicalDefined, "no canonical orientation for family " + family_name(spec.family));
  }
}

std::vector<std::pair<int, int>> torus_grid_edges(int k, int l) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      int v = grid_id(l, i, j);
      int r = grid_id(l, i, j % l + 1), d = grid_id(l, i % k + 1, j);
      e.push_back({std::min(v, r), std::max(v, r)});
      e.push_back({std::min(v, d), std::max(v, d)});
    }
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<std::pair<int, int>> quad_grid_torus_edges(int k, int l) {
  Generated g = make_quad(k, l);
  const int vinf = k * l;
  std::vector<std::pair<int, int>> e;
  for (int ed = 0; ed < g.map.edge_count(); ++ed) {
    auto [u, v] = g.map.edge_ends(ed);
    if (v == vinf || u == vinf) {
      int x = u == vinf ? v : u;
      int i = x / l + 1, j = x % l + 1;
      int y;
      if (i == 1 && j >= 2) y = grid_id(l, k, j);
      else if (i == k && j >= 2) y = grid_id(l, 1, j);
      else if (j == 1 && i >= 2) y = grid_id(l, i, l);
      else if (j == l && i >= 2) y = grid_id(l, i, 1);
      else fail(Errc::kInternal, "v_inf edge without reassignment rule");
      u = x;
      v = y;
    }
    e.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(e.begin(), e.end());
  return e;
}

PlanarMap map_from_coords(const std::vector<std::pair<double, double>>& pts,
                          const std::vector<std::pair<int, int>>& edges) {
  std::vector<Pt> P;
  for (auto [x, y] : pts) P.push_back({x, y});
  Rot rot = rot_from_coords(P, edges);
  auto od = outer_of_coords(rot, P);
  return PlanarMap::from_rotations(rot, od.first, od.second);
}

PlanarMap octahedron() {
  return map_from_coords({{0, 10}, {-9, -5}, {9, -5}, {0, -3}, {2.6, 1.5}, {-2.6, 1.5}},
                         {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {3, 1}, {3, 2}, {4, 2}, {4, 0},
                          {5, 0}, {5, 1}});
}

std::optional<PlanarMap> flip_edge(const PlanarMap& m, int e) {
  const int d = 2 * e;
  const int od = m.outer_dart();
  if (m.face_of(d) == m.outer_face() || m.face_of(d ^ 1) == m.outer_face()) return std::nullopt;
  if (m.face_size(m.face_of(d)) != 3 || m.face_size(m.face_of(d ^ 1)) != 3) return std::nullopt;
  const int u = m.origin(d), v = m.target(d);
  const int x = m.target(m.face_next(d)), y = m.target(m.face_next(d ^ 1));
  if (x == y || m.find_dart(x, y) || m.degree(u) <= 3 || m.degree(v) <= 3) return std::nullopt;
  Rot rot = m.rotations();
  auto erase = [&](int a, int b) { rot[a].erase(rot[a].begin() + rpos(rot[a], b)); };
  erase(u, v);
  erase(v, u);
  rot[x].insert(rot[x].begin() + rpos(rot[x], u) + 1, y);
  rot[y].insert(rot[y].begin() + rpos(rot[y], v) + 1, x);
  return PlanarMap::from_rotations(rot, m.origin(od), m.target(od));
}

PlanarMap random_triangulation(int n, uint64_t seed, int flips) {
  if (n < 3) fail(Errc::kBadParameters, "n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<int> seq;
  for (int i = 0; i < n - 3; ++i) seq.push_back(static_cast<int>(rng() % (2 * i + 1)));
  PlanarMap m = stacked_triangulation(seq);
  for (int i = 0; i < flips; ++i) {
    auto r = flip_edge(m, static_cast<int>(rng() % m.edge_count()));
    if (r) m = *r;
  }
  return m;
}

}  // namespace oc
