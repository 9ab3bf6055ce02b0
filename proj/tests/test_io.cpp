#include <doctest.h>

#include "helpers.hpp"
#include "orientcount/generators.hpp"
#include "orientcount/io.hpp"

using namespace oc;

TEST_CASE("pmap round trip") {
  Generated g = generate({Family::kTriGrid, 3, 4, {}});
  std::string text = write_pmap(g.map, g.alpha);
  MapWithAlpha r = read_pmap(text);
  CHECK(r.map == g.map);
  CHECK(r.alpha == g.alpha);
  CHECK(r.rules.empty());
  CHECK(write_pmap(r.map, r.alpha) == text);
}

TEST_CASE("torus maps use the dart form") {
  Generated g = generate({Family::kTorusGrid, 4, 4, {}});
  std::string text = write_pmap(g.map, g.alpha);
  CHECK(text.find("surface: torus") != std::string::npos);
  MapWithAlpha r = read_map_any(text);
  CHECK(r.map == g.map);
  CHECK(!r.map.planar());
  CHECK(count_value(r.map, std::vector<int>(16, 2)) == 2970);
}

TEST_CASE("ignored edges survive both formats") {
  Generated g = generate({Family::kAugmentedTriGrid, 3, 3, {}});
  REQUIRE(!g.rules.empty());
  MapWithAlpha p = read_map_any(write_pmap(g.map, g.alpha, g.rules));
  MapWithAlpha j = read_map_any(write_map_json(g.map, g.alpha, g.rules));
  CHECK(p.rules == g.rules);
  CHECK(j.rules == g.rules);
  CHECK(j.map == g.map);
  CHECK(count_value(p.map, p.alpha, p.rules) == count_value(g.map, g.alpha, g.rules));
}

TEST_CASE("json round trip") {
  PlanarMap oct = octahedron();
  auto alpha = random_alpha(oct, 1);
  MapWithAlpha r = read_map_json(write_map_json(oct, alpha));
  CHECK(r.map == oct);
  CHECK(r.alpha == alpha);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { read_pmap("rot 0: 1\n"); }) == Errc::kParse);
  CHECK(code_of([] { read_pmap("n 2\nrot 0: 1\nrot 1: 0\n"); }) == Errc::kParse);
  CHECK(code_of([] { read_pmap("n 2\nrot 0: x\nrot 1: 0\nouter: 0 1\n"); }) == Errc::kParse);
  CHECK(code_of([] { read_pmap("n 2\nfoo: 1\n"); }) == Errc::kParse);
  CHECK(code_of([] { read_map_json("{\"n\": 3"); }) == Errc::kParse);
  CHECK(code_of([] { read_pmap("n 2\nrot 0: 1\nrot 1:\nouter: 0 1\n"); }) == Errc::kNonSymmetricAdjacency);
}

TEST_CASE("alpha formats") {
  CHECK(read_alpha("1,1,1", 3) == std::vector<int>{1, 1, 1});
  CHECK(read_alpha("[2, 1, 0]", 3) == std::vector<int>{2, 1, 0});
  CHECK(read_alpha("alpha 0: 2\nalpha 1: 1\nalpha 2: 0\n", 3) == std::vector<int>{2, 1, 0});
  CHECK(read_alpha("2 1 0", 3) == std::vector<int>{2, 1, 0});
  CHECK(code_of([] { read_alpha("1,1", 3); }) != Errc::kOk);
}

TEST_CASE("dot output names every vertex") {
  PlanarMap k4 = stacked_triangulation({0});
  std::string d = map_dot(k4);
  CHECK(d.find("graph") != std::string::npos);
  CHECK(d.find("--") != std::string::npos);
}
