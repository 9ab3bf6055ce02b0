#include <doctest.h>

#include "helpers.hpp"
#include "orientcount/generators.hpp"
#include "orientcount/reductions.hpp"

using namespace oc;

namespace {

Bipartite complete_bipartite(int n) {
  Bipartite g;
  g.na = g.nb = n;
  g.adj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.adj[i].push_back(j);
  return g;
}

}  // namespace

TEST_CASE("spanning trees") {
  CHECK(spanning_tree_count(stacked_triangulation({0})) == 16);
  CHECK(spanning_tree_count(octahedron()) == 384);
  CHECK(spanning_tree_count(generate({Family::kGrid, 2, 2, {}}).map) == 4);
  CHECK(spanning_tree_count(generate({Family::kGrid, 3, 3, {}}).map) == 192);
}

TEST_CASE("unique perfect matchings") {
  Bipartite path;
  path.na = path.nb = 2;
  path.adj = {{0}, {0, 1}};
  CHECK(unique_perfect_matching(path));
  CHECK(!unique_perfect_matching(complete_bipartite(2)));
}

TEST_CASE("perfect matching backends agree") {
  for (int n = 1; n <= 6; ++n) {
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Bipartite g = complete_bipartite(n);
    CHECK(perfect_matching_count(g, PmMethod::kRyser) == fact);
    CHECK(perfect_matching_count(g, PmMethod::kBrute) == fact);
    CHECK(perfect_matching_count(g, PmMethod::kFrontier) == fact);
  }
  Bipartite h = grid_minus_corner(5, 5);
  BigInt r = perfect_matching_count(h, PmMethod::kRyser, 2);
  CHECK(r == perfect_matching_count(h, PmMethod::kFrontier));
  CHECK(r == 192);  // spanning trees of G_{3,3}
}

TEST_CASE("f-factors and the Tutte blow-up reproduce the count") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    PlanarMap m = random_triangulation(5, seed);
    auto alpha = random_alpha(m, seed);
    BigInt cnt = count_value(m, alpha);
    FFactorInstance ff = alpha_to_f_factor(m, alpha);
    CHECK(f_factor_count(ff.graph, ff.f) == cnt);
    BlowUp bu = tutte_blowup(ff);
    BigInt pm = perfect_matching_count(bu.graph, PmMethod::kFrontier);
    CHECK(pm % bu.multiplier == 0);
    CHECK(pm / bu.multiplier == cnt);
  }
}

TEST_CASE("two-factor statistics") {
  TwoFactorStats s = two_factor_stats(3);
  CHECK(s.c == 6);
  CHECK(s.a == 4);
  CHECK(s.b == 2);
  CHECK(s.identities);
}

TEST_CASE("grid product") {
  GridProductReport g = grid_matching_product(2, 2);
  CHECK(g.spanning_trees == 4);
  CHECK(g.matchings == 4);
  CHECK(g.corrected_agrees);
  GridProductReport h = grid_matching_product(3, 3);
  CHECK(h.spanning_trees == 192);
  CHECK(h.matchings == 192);
  CHECK(h.corrected_agrees);
}
