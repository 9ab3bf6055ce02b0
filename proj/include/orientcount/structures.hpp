#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orientcount/alpha_engine.hpp"
#include "orientcount/planar_map.hpp"
#include "orientcount/reductions.hpp"

namespace oc {

// ---- Schnyder woods ----

// fwd[e] is the color of edge e directed along its canonical dart (0: not
// directed that way), bwd[e] the color against it. Half-edges at a_i are implicit.
struct SchnyderWood {
  std::vector<int8_t> fwd, bwd;
  std::array<int, 3> a{};
};

struct AxiomReport {
  bool ok = true;
  std::string axiom;  // W1..W4 of the first violation
  std::string where;
};

AxiomReport schnyder_check(const PlanarMap& m, const SchnyderWood& w);

// Every coloring of the given primal pattern that satisfies the axioms.
// out_fwd[e]/out_bwd[e] say whether edge e is directed along / against its
// canonical dart. Stops after `limit` woods.
std::vector<SchnyderWood> colorings_of_pattern(const PlanarMap& m, const std::array<int, 3>& a,
                                               const std::vector<char>& out_fwd,
                                               const std::vector<char>& out_bwd, size_t limit = 1000000);

// Triangulation with outer triangle a1,a2,a3 (tri.outer face), x an alpha_T
// orientation of the inner edges. Throws NoColoring / MultipleColorings.
SchnyderWood colors_from_3orientation(const PlanarMap& tri, const EdgeOrientation& x);
// Primal orientation of a wood (outer edges take their canonical direction).
EdgeOrientation orientation_of(const PlanarMap& tri, const SchnyderWood& w);

// Number of woods by completion, and the completion itself.
CountResult schnyder_count_via_completion(const PlanarMap& m, int a1, int a2, int a3, int threads = 1);

// Brute force over primal patterns (uni- or bidirected edges) and colorings.
// Practical for m up to about 20.
BigInt schnyder_count_direct(const PlanarMap& m, int a1, int a2, int a3);

// Subgraph of the completion spanned by its non-rigid edges.
PlanarMap completion_nonrigid_part(const PlanarMap& m, int a1, int a2, int a3);

// ---- bipolar orientations ----

struct BipolarReport {
  bool bipolar = false;  // acyclic with unique source s and unique sink t
  bool prop1 = false;    // every v != s,t has in- and out-edges
  bool prop2 = false;    // no directed facial cycle
  bool prop1p = false;   // in/out edges form two bundles at v != s,t
  bool prop2p = false;   // every face has one source and one sink
  std::string message;
  bool ok() const { return prop1 && prop2; }
};

BipolarReport bipolar_check(const PlanarMap& m, const EdgeOrientation& x, int s, int t);

// Direct enumeration of bipolar orientations (search with acyclicity pruning).
BigInt bipolar_enumerate(const PlanarMap& m, int s, int t, const Visitor& visit = nullptr);

// 2-orientation spec on the angle graph: 2 everywhere, 0 at s and t.
std::vector<int> rosenstiehl_alpha(const PlanarMap& m, int s, int t);
EdgeOrientation bipolar_to_angle(const PlanarMap& m, const EdgeOrientation& b);
EdgeOrientation angle_to_bipolar(const PlanarMap& m, const EdgeOrientation& y, int s, int t);
BigInt bipolar_count(const PlanarMap& m, int s, int t, int threads = 1);

// ---- +/- encoding on inner triangulations ----

// One char per bounded face in face-id order, '+' or '-'.
std::string sign_encode(const PlanarMap& m, const EdgeOrientation& b);
// Throws Stalled or AxiomViolation when the signs are not an encoding.
EdgeOrientation sign_decode(const PlanarMap& m, int s, int t, const std::string& signs);
// Triangulation, s and t adjacent on the outer face; `signs` over bounded faces
// (the unbounded sign follows the convention of the face at edge st).
// With outer_from_vector the outer sign is read off the vector's entry at the
// st face; that reading also accepts vectors with the wrong sign there.
bool sign_validity_matching(const PlanarMap& m, int s, int t, const std::string& signs, bool outer_from_vector = false);

// ---- face colorings of grid-like quadrangulations ----

// Angle graph of G_{k,l} without its outer-face vertex.
PlanarMap lieb_grid(int k, int l);
// Inner edges: edges between two bounded faces. Demands: 2 on vertices off the
// outer face (all of degree 4), free on the outer face.
struct LiebSpec {
  std::vector<int> alpha;
  EdgeRules rules;
};
LiebSpec lieb_spec(const PlanarMap& q);
// Colors in {0,1,2} per bounded face, face id order (outer face entry is -1).
std::vector<int> lieb_encode(const PlanarMap& q, const EdgeOrientation& x, int ref_face = -1, int ref_color = 0);
EdgeOrientation lieb_decode(const PlanarMap& q, const std::vector<int>& colors);
BigInt count_face_colorings(const PlanarMap& q);

// ---- strip T_{2,l} ----

std::vector<int> strip_inner_edges(const PlanarMap& strip, int l);
std::string strip_encode(const PlanarMap& strip, int l, const EdgeOrientation& x);
EdgeOrientation strip_decode(const PlanarMap& strip, int l, const std::string& seq);
bool is_sparse(const std::string& seq);

// ---- filled hexagons ----

struct HexSchemeResult {
  PlanarMap map;                  // H_{k,l} plus the outer triangle used
  std::array<int, 3> specials{};
  std::array<int, 3> split{};     // positions on the outer walk of H where the arcs meet
  std::vector<BigInt> local;      // per hexagon
  BigInt product;
  int zone_edges = 0;             // completion edges free per hexagon
};
// Fixes every completion edge outside one hexagon's zone to a reference
// orientation X0 and counts what is left, hexagon by hexagon. Hexagon zones
// are disjoint and X0 sends exactly one of the two zone edges out of each
// corner per hexagon, so the local choices combine freely: the product is a
// lower bound for the number of Schnyder woods of `map`.
HexSchemeResult hexagon_flip_scheme(int k, int l);

}  // namespace oc
