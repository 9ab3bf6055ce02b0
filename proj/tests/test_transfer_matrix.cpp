#include <doctest.h>

#include <cmath>

#include "orientcount/transfer_matrix.hpp"

using namespace oc;

TEST_CASE("state spaces are central binomials") {
  CHECK(build_transfer(3).states.size() == 20);
  CHECK(build_transfer(2).states.size() == 6);
  CHECK(build_transfer(4).states.size() == 70);
  TransferMatrices tm = build_transfer(2);
  CHECK(tm.states[tm.alternating] == 0b0101);
  CHECK(is_primitive(tm.t));
}

TEST_CASE("alternating counts") {
  CHECK(alternating_count(2, 2) == 64);
  CHECK(alternating_count(2, 2) == alternating_count_engine(2, 2));
  CHECK(alternating_count(2, 3) == alternating_count(3, 2));
  CHECK(alternating_count(2, 3) == alternating_count_engine(2, 3));
}

TEST_CASE("dominant eigenvalue") {
  EigenResult e = dominant_eigenvalue(build_transfer(4), 1e-11);
  CHECK(e.lower <= e.lambda);
  CHECK(e.lambda <= e.upper);
  CHECK(std::fabs(e.lambda - 418.2717) / 418.2717 < 1e-6);
  CHECK(e.upper - e.lower <= 1e-9 * e.lambda);
}
