#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orientcount/common.hpp"
#include "orientcount/planar_map.hpp"

namespace oc {

BigInt fibonacci(int n);
BigInt catalan(int n);
BigInt binomial(int n, int k);
// Triple binomial sum.
BigInt baxter(int n);
// Schnyder woods summed over all triangulations: C_{n+2} C_n - C_{n+1}^2.
BigInt schnyder_total(int n);

// phi^n in Z[phi] written as (a + b sqrt5)/2; F_n = b.
std::pair<BigInt, BigInt> phi_power(int n);

struct FibSuite {
  int n = 0;
  BigInt f;
  bool binet = false;        // sqrt5-part of phi^n - psi^n equals F_n
  bool convolution = false;  // sum F_i F_{n-i} = (n(F_{n+1}+F_{n-1}) - F_n)/5
  std::vector<BigInt> r;     // r[i-1] = r_n(i) = F_i F_{n+1-i}, i = 1..n
  bool r_sum = false;        // sum r_n(i) = (2(n+1)F_n + n F_{n+1})/5
  bool enumerated = false;   // sparse sequences listed (n <= 20)
  bool enumeration_ok = true;
};

FibSuite fib_suite(int n);

// Sparse 0-1 strings of length n, as strings.
std::vector<std::string> sparse_sequences(int n);

struct Crossover {
  std::vector<BigInt> x, y;
  bool decreasing = false;  // x_k/y_k strictly decreasing
  bool above_c = false;     // x_k/y_k > (1+sqrt33)/8, via 4t^2 - t - 2 > 0
};

Crossover crossover_recursion(int k);

// ---- bounds ----

enum class InstanceKind {
  kGeneral,          // alpha-orientations of a plane map
  kTriangulation3,   // 3-orientations (Schnyder woods) of a plane triangulation
  kQuadrangulation2, // 2-orientations of a plane quadrangulation
  kBipolar,          // bipolar orientations of an inner triangulation
};

// A bound of the form radicand^(1/root); comparisons raise the measured count
// to the root and stay in exact rationals.
struct BoundReport {
  std::string name;
  bool applicable = true;
  std::string note;
  BigRational radicand;
  int root = 1;
  double value = 0;
  bool has_measured = false;
  BigInt measured;
  bool dominates = true;
};

// Exact maximum independent set by branch and bound (n <= 64), greedy above.
std::vector<int> independent_set(const PlanarMap& m);

// For kBipolar `alpha` is ignored and s, t name the poles.
std::vector<BoundReport> bound_reports(const PlanarMap& m, const std::vector<int>& alpha, InstanceKind kind,
                                       const BigInt* measured = nullptr, int s = -1, int t = -1);

// d(v) choose floor(d/2) over 2^(d-1) <= 3/4 for d = 3..dmax.
bool check_central_binomial(int dmax);
// d choose 3 times 2^(1-d) <= 5/8 for d = 3..dmax.
bool check_schnyder_degree(int dmax);
// 2^(2n-4) (3/4)^(n/4) <= 3.73^n for n = 1..nmax, in logarithms.
bool check_growth_chain(int nmax);

struct NamedConstant {
  std::string name;
  double value;
  std::string meaning;
};

const std::vector<NamedConstant>& formula_constants();
double constant(const std::string& name);

}  // namespace oc
