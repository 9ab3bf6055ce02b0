#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "orientcount/generators.hpp"

using namespace oc;

namespace {

PlanarMap triangle() { return map_from_coords({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("triangle examples") {
  PlanarMap t = triangle();
  CHECK(count_value(t, {1, 1, 1}) == 2);
  CHECK(count_value(t, {2, 1, 0}) == 1);
  CHECK(code_of([&] { count_value(t, {3, 0, 0}); }) != Errc::kOk);  // 3 > degree
  PlanarMap sq = map_from_coords({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(count_value(sq, {2, 2, 0, 0}) == 0);
  CHECK(!feasible(sq, {2, 2, 0, 0}));
  CHECK(count_value(sq, {2, 0, 2, 0}) == 1);
  CHECK(code_of([&] { check_spec(t, {1, 1}); }) != Errc::kOk);
}

TEST_CASE("search, frontier and brute force agree") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    PlanarMap m = random_triangulation(5 + static_cast<int>(seed % 3), seed);
    if (m.edge_count() > 18) continue;
    auto alpha = random_alpha(m, seed * 7);
    BigInt brute = brute_force_count(m, alpha);
    CountOptions s, f;
    s.method = CountMethod::kSearch;
    f.method = CountMethod::kFrontier;
    CHECK(count(m, alpha, s).count == brute);
    CHECK(count(m, alpha, f).count == brute);
    CHECK(brute >= 1);
  }
  Generated q = generate({Family::kQuadGrid, 4, 4, {}});
  CountOptions s, f;
  s.method = CountMethod::kSearch;
  f.method = CountMethod::kFrontier;
  CHECK(count(q.map, q.alpha, s).count == count(q.map, q.alpha, f).count);
}

TEST_CASE("threads do not change counts") {
  Generated g = generate({Family::kTriGrid, 4, 4, {}});
  CountOptions a, b;
  a.method = b.method = CountMethod::kSearch;
  b.threads = 4;
  CHECK(count(g.map, g.alpha, a).count == count(g.map, g.alpha, b).count);
}

TEST_CASE("enumeration lists distinct valid orientations") {
  PlanarMap oct = octahedron();
  auto alpha = random_alpha(oct, 3);
  std::set<std::string> seen;
  bool valid = true;
  enumerate(oct, alpha, [&](const EdgeOrientation& x) {
    valid = valid && is_alpha_orientation(oct, alpha, x);
    seen.insert(x.bits());
    return true;
  });
  CHECK(valid);
  CHECK(BigInt(seen.size()) == count_value(oct, alpha));
  int visits = 0;
  bool finished = enumerate(oct, alpha, [&](const EdgeOrientation&) { return ++visits < 2; });
  CHECK(!finished);
  CHECK(visits == 2);
}

TEST_CASE("bit strings round trip") {
  EdgeOrientation x(70);
  x.set(0, true);
  x.set(65, true);
  x.toggle(3);
  CHECK(EdgeOrientation::from_bits(x.bits()) == x);
  CHECK(x.bits().size() == 70);
}

TEST_CASE("rigid edges are fixed in every orientation") {
  PlanarMap t = triangle();
  CHECK(rigid_edges(t, {2, 1, 0}).size() == 3);
  CHECK(rigid_edges(t, {1, 1, 1}).empty());
  PlanarMap oct = octahedron();
  auto alpha = random_alpha(oct, 11);
  auto rig = rigid_edges(oct, alpha);
  auto x0 = find_orientation(oct, alpha);
  REQUIRE(x0.has_value());
  enumerate(oct, alpha, [&](const EdgeOrientation& x) {
    for (int e : rig) CHECK(x.forward(e) == x0->forward(e));
    return true;
  });
}

TEST_CASE("edge rules restrict the count") {
  PlanarMap t = triangle();
  EdgeRules r(3, EdgeRule::kFree);
  r[0] = EdgeRule::kForward;
  CHECK(count_value(t, {1, 1, 1}, r) == 1);
  r[0] = EdgeRule::kIgnored;
  // path 1-2-0 with out-degrees summing to 2
  CHECK(count_value(t, {1, 1, 0}, r) == 1);
}

TEST_CASE("lattice of the 4x4 quad grid") {
  Generated q = generate({Family::kQuadGrid, 4, 4, {}});
  Lattice l = lattice(q.map, q.alpha);
  CHECK(BigInt(l.elements.size()) == count_value(q.map, q.alpha));
  CHECK(l.connected);
  CHECK(l.minimum >= 0);
  CHECK(l.maximum >= 0);
  if (l.elements.size() <= 200) CHECK(l.order_checked);
}

TEST_CASE("flips connect all orientations") {
  PlanarMap oct = octahedron();
  auto alpha = random_alpha(oct, 2);
  Lattice l = lattice(oct, alpha);
  CHECK(l.connected);
  CHECK(BigInt(l.elements.size()) == count_value(oct, alpha));
  LatticeOptions small;
  small.cap = 1;
  if (l.elements.size() > 1) CHECK(code_of([&] { lattice(oct, alpha, small); }) == Errc::kCapExceeded);
}

TEST_CASE("face cycles flip to valid orientations") {
  PlanarMap oct = octahedron();
  auto alpha = random_alpha(oct, 9);
  auto x = find_orientation(oct, alpha);
  REQUIRE(x.has_value());
  int flips = 0;
  for (int f = 0; f < oct.face_count(); ++f) {
    const auto& ds = oct.face_darts(f);
    bool directed = true;
    for (int d : ds) directed = directed && x->carries(d);
    if (!directed) continue;
    EdgeOrientation y = flip(oct, *x, make_cycle(oct, ds));
    CHECK(is_alpha_orientation(oct, alpha, y));
    ++flips;
  }
  CHECK(flips >= 0);
}
