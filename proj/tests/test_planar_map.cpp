#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "orientcount/generators.hpp"
#include "orientcount/planar_map.hpp"

using namespace oc;

TEST_CASE("K4 has the expected counts and is self-dual") {
  PlanarMap k4 = stacked_triangulation({0});
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.face_count() == 4);
  CHECK(isomorphic(dual(k4), k4));
  CHECK(is_three_connected(k4));
}

TEST_CASE("Euler and degree sums hold for generated plane maps") {
  for (auto fam : {Family::kGrid, Family::kQuadGrid, Family::kTriGrid, Family::kAugmentedGrid,
                   Family::kAugmentedTriGrid, Family::kHexGrid}) {
    Generated g = generate({fam, 3, 3, {}});
    const PlanarMap& m = g.map;
    CHECK(m.vertex_count() - m.edge_count() + m.face_count() == 2);
    int deg = 0;
    for (int v = 0; v < m.vertex_count(); ++v) deg += m.degree(v);
    CHECK(deg == 2 * m.edge_count());
  }
}

TEST_CASE("dual of the dual is the map again") {
  for (int k = 2; k <= 4; ++k) {
    PlanarMap g = generate({Family::kGrid, k, k + 1, {}}).map;
    CHECK(isomorphic(dual(dual(g)), g));
  }
  PlanarMap oct = octahedron();
  CHECK(isomorphic(dual(dual(oct)), oct));
}

TEST_CASE("angle graph is a quadrangulation on n + f vertices") {
  PlanarMap g = generate({Family::kGrid, 3, 4, {}}).map;
  PlanarMap a = angle_graph(g);
  CHECK(a.vertex_count() == g.vertex_count() + g.face_count());
  CHECK(a.edge_count() == 2 * g.edge_count());
  for (int f = 0; f < a.face_count(); ++f) CHECK(a.face_size(f) == 4);
  // one face per primal edge
  CHECK(a.face_count() == g.edge_count());
}

TEST_CASE("completion of K4") {
  PlanarMap k4 = stacked_triangulation({0});
  auto t = alpha_t(k4);
  Completion c = suspension_and_completion(k4, t.specials[0], t.specials[1], t.specials[2]);
  int counts[4] = {0, 0, 0, 0};
  for (auto cl : c.cls) ++counts[static_cast<int>(cl)];
  CHECK(counts[0] == 4);  // primal
  CHECK(counts[1] == 6);  // 3 inner faces + 3 b_i
  CHECK(counts[2] == 9);  // 6 edges + 3 rays
  CHECK(counts[3] == 1);
  CHECK(c.map.vertex_count() == 20);
  CHECK(std::accumulate(c.alpha.begin(), c.alpha.end(), 0) == c.map.edge_count());
  for (int v = 0; v < c.map.vertex_count(); ++v)
    if (c.cls[v] == VertexClass::kEdge) {
      CHECK(c.map.degree(v) == 4);
      CHECK(c.alpha[v] == 1);
    }
}

TEST_CASE("subdivision doubles the edges and keeps orientations") {
  PlanarMap oct = octahedron();
  auto alpha = random_alpha(oct, 5);
  Subdivision s = subdivide(oct, alpha);
  CHECK(s.map.vertex_count() == oct.vertex_count() + oct.edge_count());
  CHECK(s.map.edge_count() == 2 * oct.edge_count());
  CHECK(count_value(s.map, s.alpha) == count_value(oct, alpha));
}

TEST_CASE("rotation systems are validated") {
  CHECK(code_of([] { PlanarMap::from_rotations({{1}, {}}, 0, 1); }) == Errc::kNonSymmetricAdjacency);
  CHECK(code_of([] { PlanarMap::from_rotations({{0}}, 0, 0); }) != Errc::kOk);
  CHECK(code_of([] { PlanarMap::from_rotations({{1, 1}, {0, 0}}, 0, 1); }) != Errc::kOk);
}

TEST_CASE("mirror is an involution") {
  PlanarMap g = generate({Family::kTriGrid, 3, 3, {}}).map;
  CHECK(mirror(mirror(g)) == g);
}
