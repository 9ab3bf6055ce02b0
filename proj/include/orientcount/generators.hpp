#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orientcount/alpha_engine.hpp"
#include "orientcount/planar_map.hpp"

namespace oc {

enum class Family {
  kGrid,
  kTorusGrid,
  kAugmentedGrid,
  kQuadGrid,
  kTriGrid,
  kTriTorus,
  kAugmentedTriGrid,
  kHexGrid,
  kStacked,
  kStrip,
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

struct FamilySpec {
  Family family = Family::kGrid;
  int k = 2;
  int l = 2;
  std::vector<int> stacking;  // face choices for stacked triangulations
};

struct Generated {
  PlanarMap map;
  std::vector<int> alpha;     // empty when the family has no canonical spec
  EdgeRules rules;            // ignored edges for suspended triangulations
  std::vector<int> specials;  // a1,a2,a3 / (1,1),v_inf / source,sink
};

// Grid vertex (i,j), 1-based, row-major.
inline int grid_id(int l, int i, int j) { return (i - 1) * l + (j - 1); }

Generated generate(const FamilySpec& spec);

// Canonical orientations: tri-grid (alpha*), augmented-tri-grid (Schnyder
// 3-orientation), strip (standard bipolar B0). For the grid family the result
// lives on angle_graph(grid) and is the image of the snake bipolar orientation.
EdgeOrientation canonical_orientation(const FamilySpec& spec);

PlanarMap stacked_triangulation(const std::vector<int>& sequence);
// Bounded faces of a triangulation in the order used to name stacking choices.
std::vector<std::array<int, 3>> bounded_triangles(const PlanarMap& m);

// Inner-edge rules and alpha_T for a plane triangulation with outer triangle
// a1,a2,a3 (clockwise along the outer face).
struct TriangulationSpec {
  std::vector<int> alpha;
  EdgeRules rules;
  std::array<int, 3> specials{};
};
TriangulationSpec alpha_t(const PlanarMap& tri);

// Insert a vertex into the face left of dart (u -> v) of a rotation system, joined
// to the first corner of every vertex w on that face with pick[w] set.
int insert_in_face(std::vector<std::vector<int>>& rot, int u, int v, const std::vector<char>& pick);

// Edges of the quad grid after moving the v_inf edges onto the torus (k, l even).
std::vector<std::pair<int, int>> quad_grid_torus_edges(int k, int l);
std::vector<std::pair<int, int>> torus_grid_edges(int k, int l);

// Hexagon bookkeeping for the filled hexagonal grid.
struct HexCell {
  std::array<int, 6> corner;  // h0..h5 counterclockwise from angle 30 degrees
  std::array<int, 3> center;  // c0..c2, c_i joined to h_{2i}, h_{2i+1}
};
std::vector<HexCell> hex_cells(int k, int l);

// Triangle a1,a2,a3 around the map; a_i is joined to the outer boundary arc from
// s_i to s_{i+1} (taken along the outer face from the outer dart). Attaches
// alpha_T style spec: 3 on old vertices, 0 on the specials, outer triangle ignored.
Generated augment_outer(const PlanarMap& m, int s1, int s2, int s3);
// H_{k,l} with the outer boundary cut into three arcs of near equal length.
Generated augmented_hex(int k, int l);

// Straight-line drawing; rotations by angle, outer face by signed area.
PlanarMap map_from_coords(const std::vector<std::pair<double, double>>& pts,
                          const std::vector<std::pair<int, int>>& edges);
PlanarMap octahedron();

// Replace inner edge e of a triangulation by the other diagonal of its two
// triangles. nullopt when that would create a multi-edge or touch the outer face.
std::optional<PlanarMap> flip_edge(const PlanarMap& m, int e);

// Random stacking followed by random flips; deterministic in the seed.
PlanarMap random_triangulation(int n, uint64_t seed, int flips = 40);

}  // namespace oc
