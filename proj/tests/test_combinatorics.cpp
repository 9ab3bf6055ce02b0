#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "orientcount/combinatorics.hpp"
#include "orientcount/generators.hpp"

using namespace oc;

TEST_CASE("classic sequences") {
  CHECK(catalan(4) == 14);
  CHECK(fibonacci(10) == 55);
  CHECK(binomial(10, 3) == 120);
  const int bax[] = {1, 2, 6, 22, 92, 422};
  for (int n = 1; n <= 6; ++n) CHECK(baxter(n) == bax[n - 1]);
  auto [a, b] = phi_power(5);
  CHECK(b == 5);
  CHECK(a == 11);
  CHECK(schnyder_total(1) == catalan(3) * catalan(1) - catalan(2) * catalan(2));
}

TEST_CASE("fibonacci suite") {
  for (int n = 0; n <= 25; ++n) {
    FibSuite f = fib_suite(n);
    CHECK(f.binet);
    CHECK(f.convolution);
    CHECK(f.r_sum);
    CHECK(f.enumeration_ok);
  }
  CHECK(sparse_sequences(4).size() == 8);
}

TEST_CASE("crossover recursion") {
  Crossover x = crossover_recursion(50);
  CHECK(x.x[1] == 6);
  CHECK(x.y[1] == 7);
  CHECK(x.decreasing);
  CHECK(x.above_c);
}

TEST_CASE("inequalities behind the bounds") {
  CHECK(check_central_binomial(30));
  CHECK(check_schnyder_degree(30));
  CHECK(check_growth_chain(1000));
}

TEST_CASE("bounds dominate small counts") {
  PlanarMap k4 = stacked_triangulation({0});
  std::vector<int> alpha = {3, 1, 1, 1};
  BigInt measured = count_value(k4, alpha);
  auto rs = bound_reports(k4, alpha, InstanceKind::kGeneral, &measured);
  CHECK(!rs.empty());
  for (auto& r : rs)
    if (r.applicable) CHECK(r.dominates);
  // every orientation of K4 with a source of degree 3: the other three edges are free
  CHECK(measured == 2);
  PlanarMap oct = octahedron();
  auto bip = bound_reports(oct, {}, InstanceKind::kBipolar, nullptr, oct.origin(oct.outer_dart()),
                           oct.target(oct.outer_dart()));
  CHECK(!bip.empty());
}

TEST_CASE("independent sets") {
  auto is = independent_set(octahedron());
  CHECK(is.size() == 2);
  auto k4 = independent_set(stacked_triangulation({0}));
  CHECK(k4.size() == 1);
}

TEST_CASE("named constants") {
  CHECK(std::fabs(constant("lieb") - 8 * std::sqrt(3.0) / 9) < 1e-12);
  CHECK(std::fabs(constant("baxter") - 1.5 * std::sqrt(3.0)) < 1e-12);
}
