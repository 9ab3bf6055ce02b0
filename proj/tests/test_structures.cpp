#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "orientcount/combinatorics.hpp"
#include "orientcount/generators.hpp"
#include "orientcount/structures.hpp"

using namespace oc;

TEST_CASE("stacked triangulations have 2^(n-3) bipolar orientations") {
  for (auto seq : std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2, 1}, {0, 0, 0, 3}}) {
    PlanarMap m = stacked_triangulation(seq);
    int s = m.origin(m.outer_dart()), t = m.target(m.outer_dart());
    BigInt want = BigInt(1) << (m.vertex_count() - 3);
    CHECK(bipolar_count(m, s, t) == want);
    CHECK(bipolar_enumerate(m, s, t) == want);
  }
}

TEST_CASE("bipolar orientations pass their checks") {
  PlanarMap oct = octahedron();
  int s = oct.origin(oct.outer_dart()), t = oct.target(oct.outer_dart());
  BigInt n = bipolar_enumerate(oct, s, t, [&](const EdgeOrientation& x) {
    BipolarReport r = bipolar_check(oct, x, s, t);
    CHECK(r.bipolar);
    CHECK(r.ok());
    CHECK(r.prop1p);
    CHECK(r.prop2p);
    return true;
  });
  CHECK(n == bipolar_count(oct, s, t));
}

TEST_CASE("strip codec") {
  for (int l = 2; l <= 5; ++l) {
    Generated g = generate({Family::kStrip, 2, l, {}});
    int s = g.specials[0], t = g.specials[1];
    CHECK(bipolar_count(g.map, s, t) == fibonacci(2 * l - 1));
    for (auto& q : sparse_sequences(2 * l - 3)) {
      CHECK(is_sparse(q));
      EdgeOrientation x = strip_decode(g.map, l, q);
      CHECK(strip_encode(g.map, l, x) == q);
    }
  }
  CHECK(!is_sparse("0110"));
}

TEST_CASE("octahedron has two Schnyder woods") {
  PlanarMap oct = octahedron();
  auto spec = alpha_t(oct);
  CHECK(count_value(oct, spec.alpha, spec.rules) == 2);
  CHECK(schnyder_count_direct(oct, spec.specials[0], spec.specials[1], spec.specials[2]) == 2);
  CHECK(schnyder_count_via_completion(oct, spec.specials[0], spec.specials[1], spec.specials[2]).count == 2);
  enumerate(
      oct, spec.alpha,
      [&](const EdgeOrientation& x) {
        SchnyderWood w = colors_from_3orientation(oct, x);
        CHECK(schnyder_check(oct, w).ok);
        return true;
      },
      spec.rules);
}

TEST_CASE("K4 has one Schnyder wood") {
  PlanarMap k4 = stacked_triangulation({0});
  auto spec = alpha_t(k4);
  CHECK(count_value(k4, spec.alpha, spec.rules) == 1);
}

TEST_CASE("sign codec on K4 and the octahedron") {
  for (const PlanarMap& m : {stacked_triangulation({0}), octahedron()}) {
    int s = m.origin(m.outer_dart()), t = m.target(m.outer_dart());
    std::set<std::string> image;
    bipolar_enumerate(m, s, t, [&](const EdgeOrientation& b) {
      std::string g = sign_encode(m, b);
      CHECK(g.size() == static_cast<size_t>(m.face_count() - 1));
      CHECK(sign_decode(m, s, t, g) == b);
      CHECK(sign_validity_matching(m, s, t, g));
      image.insert(g);
      return true;
    });
    CHECK(BigInt(image.size()) == bipolar_count(m, s, t));
  }
}

TEST_CASE("face colorings of grid-like quadrangulations") {
  for (int k = 2; k <= 3; ++k) {
    PlanarMap q = lieb_grid(k, k + 1);
    LiebSpec spec = lieb_spec(q);
    BigInt orientations = count_value(q, spec.alpha, spec.rules);
    CHECK(count_face_colorings(q) == 3 * orientations);
    enumerate(
        q, spec.alpha,
        [&](const EdgeOrientation& x) {
          auto colors = lieb_encode(q, x);
          EdgeOrientation y = lieb_decode(q, colors);
          for (int e = 0; e < q.edge_count(); ++e)
            if (spec.rules[e] != EdgeRule::kIgnored) CHECK(y.forward(e) == x.forward(e));
          return true;
        },
        spec.rules);
  }
}

TEST_CASE("bipolar orientations map to 2-orientations of the angle graph") {
  Generated g = generate({Family::kGrid, 2, 3, {}});
  int s = grid_id(3, 1, 1), t = grid_id(3, 2, 3);
  PlanarMap a = angle_graph(g.map);
  auto alpha = rosenstiehl_alpha(g.map, s, t);
  CHECK(count_value(a, alpha) == bipolar_enumerate(g.map, s, t));
}
