#pragma once

#include <cstdint>
#include <vector>

#include "orientcount/common.hpp"

namespace oc {

// Column states of a torus with 2k rows: bit r set means the horizontal edge
// in row r points right. Exactly k bits are set; states are listed in
// increasing numeric order.
struct TransferMatrices {
  int k = 0;
  std::vector<uint32_t> states;
  std::vector<std::vector<uint8_t>> tu, td;  // wrap edge up / down
  std::vector<std::vector<uint64_t>> t;      // tu * td
  int alternating = 0;                       // index of the state 0101... (row 0 right)
};

// 1 <= k <= 6.
TransferMatrices build_transfer(int k);

// Whether the vertical cycle of one column admits out-degree 2 everywhere,
// given the horizontal edge directions on its left and right, with the wrap
// edge (row 2k-1 to row 0) pointing down (row 2k-1 -> row 0) or up.
bool column_ok(int k, uint32_t left, uint32_t right, bool wrap_down);

bool is_primitive(const std::vector<std::vector<uint64_t>>& t);

struct EigenResult {
  double lambda = 0;
  double lower = 0, upper = 0;  // Collatz-Wielandt certificate
  int iterations = 0;
  std::vector<double> widths;   // relative certificate width per iteration
};

// Power iteration from the all-ones vector. Throws NotPrimitive, NoConvergence.
EigenResult dominant_eigenvalue(const TransferMatrices& tm, double tol = 1e-10, int max_iter = 1000000);

// <e_A, T^l e_A>: Eulerian orientations of the 2k x 2l torus grid whose wrap
// edges alternate (vertical ones up in even columns, horizontal ones right in
// even rows).
BigInt alternating_count(int k, int l);

// The same number by running the orientation engine on the torus grid with
// the wrap edges fixed.
BigInt alternating_count_engine(int k, int l);

}  // namespace oc
