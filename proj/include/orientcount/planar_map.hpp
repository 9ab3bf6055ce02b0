#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orientcount/common.hpp"

namespace oc {

struct MapFlags {
  bool allow_multi = false;  // parallel edges / loops created by a construction
  bool planar = true;        // false for torus rotation systems, no Euler check
};

// Rotation system. Edge e owns darts 2e (canonical, edges[e].first -> second)
// and 2e+1. Rotations are counterclockwise; the outer dart has the unbounded
// face on its left.
class PlanarMap {
 public:
  PlanarMap() = default;

  static PlanarMap from_rotations(const std::vector<std::vector<int>>& rot, int outer_from,
                                  int outer_to);
  static PlanarMap from_darts(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<std::vector<int>>& rotation, int outer_dart,
                              MapFlags flags = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(origin_.size() / 2); }
  int dart_count() const { return static_cast<int>(origin_.size()); }
  int face_count() const { return static_cast<int>(fdarts_.size()); }

  static int rev(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  static bool is_canonical(int d) { return (d & 1) == 0; }

  int origin(int d) const { return origin_[d]; }
  int target(int d) const { return origin_[d ^ 1]; }
  int next_ccw(int d) const { return next_[d]; }
  int prev_ccw(int d) const { return prev_[d]; }
  // next dart along the face on the left of d
  int face_next(int d) const { return prev_[d ^ 1]; }
  int face_of(int d) const { return face_of_[d]; }

  int outer_dart() const { return outer_dart_; }
  int outer_face() const { return face_of_[outer_dart_]; }

  const std::vector<int>& darts_at(int v) const { return vdarts_[v]; }
  const std::vector<int>& face_darts(int f) const { return fdarts_[f]; }
  int degree(int v) const { return static_cast<int>(vdarts_[v].size()); }
  int face_size(int f) const { return static_cast<int>(fdarts_[f].size()); }

  std::pair<int, int> edge_ends(int e) const { return {origin_[2 * e], origin_[2 * e + 1]}; }
  std::vector<std::pair<int, int>> edge_list() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::vector<int>> rotations() const;
  std::optional<int> find_dart(int u, int v) const;
  std::vector<int> face_vertices(int f) const;

  bool planar() const { return flags_.planar; }
  bool allows_multi() const { return flags_.allow_multi; }
  bool is_simple() const;
  bool connected() const;

  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  std::string label(int v) const;

 private:
  void finish();

  int n_ = 0;
  std::vector<int> origin_, next_, prev_, face_of_;
  std::vector<std::vector<int>> vdarts_, fdarts_;
  int outer_dart_ = 0;
  MapFlags flags_;
  std::vector<std::string> labels_;
};

bool operator==(const PlanarMap& a, const PlanarMap& b);

// Orientation preserving isomorphism of rotation systems (ignores the outer face).
bool isomorphic(const PlanarMap& a, const PlanarMap& b);

bool is_three_connected(const PlanarMap& m);

// Mirror image: every rotation reversed.
PlanarMap mirror(const PlanarMap& m);

// Map induced by the kept edges, on the vertices they touch (renumbered in
// increasing order; old ids in *old_ids). Must be connected.
PlanarMap submap(const PlanarMap& m, const std::vector<int>& keep_edges, std::vector<int>* old_ids = nullptr);

// Dual darts share ids with the primal darts: dart d of the dual starts at face_of(d).
PlanarMap dual(const PlanarMap& m);

// Vertices 0..n-1 are primal, n+f is face f. Angle edge d corresponds to the corner
// between d and next_ccw(d); its canonical dart runs vertex -> face.
PlanarMap angle_graph(const PlanarMap& m);

enum class VertexClass { kPrimal, kDual, kEdge, kInfinity };

struct Completion {
  PlanarMap map;
  std::vector<int> alpha;
  std::vector<VertexClass> cls;
  std::vector<int> face_vertex;  // primal face -> vertex (-1 for the outer face)
  std::vector<int> edge_vertex;  // primal edge -> vertex
  int a[3] = {0, 0, 0};
  int b[3] = {0, 0, 0};
  int ray[3] = {0, 0, 0};  // edge vertices on the half-edges at a_i
  int v_inf = 0;
};

// a1, a2, a3 must appear in this order along the outer face traversal.
Completion suspension_and_completion(const PlanarMap& m, int a1, int a2, int a3);

struct Subdivision {
  PlanarMap map;           // vertex n+e subdivides edge e
  std::vector<int> alpha;  // 1 on subdivision vertices
};

// Edge e=(u,v) becomes edges 2e=(u,x_e) and 2e+1=(v,x_e).
Subdivision subdivide(const PlanarMap& m, const std::vector<int>& alpha);

}  // namespace oc
