#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orientcount/common.hpp"
#include "orientcount/planar_map.hpp"

namespace oc {

struct Bipartite {
  int na = 0, nb = 0;
  std::vector<std::vector<int>> adj;  // A side -> B vertices
};

// One perfect matching, then look for an alternating cycle.
bool unique_perfect_matching(const Bipartite& g);

// Plain undirected (multi)graph, used where no embedding is needed.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

Graph graph_of(const PlanarMap& m);

// alpha-orientations of m <-> f-factors of the subdivision with f = alpha'.
// A factor edge is an edge directed from an original vertex to an edge vertex.
struct FFactorInstance {
  Graph graph;         // vertex n+e subdivides edge e
  std::vector<int> f;
  int original_n = 0;  // vertices below this index are the original ones
};

FFactorInstance alpha_to_f_factor(const PlanarMap& m, const std::vector<int>& alpha);

// Exhaustive search over edge subsets with degree pruning.
BigInt f_factor_count(const Graph& g, const std::vector<int>& f);

struct BlowUp {
  Bipartite graph;
  BigInt multiplier;  // prod (d(v) - f(v))!
  int ports = 0;      // vertices standing for incident edges
  int inner = 0;      // vertices of the K_{d, d-f} gadgets that are not ports
};

// Every vertex v becomes d(v) ports joined to d(v)-f(v) inner vertices. The
// input must be bipartite with the original vertices on one side.
BlowUp tutte_blowup(const FFactorInstance& inst);

enum class PmMethod { kAuto, kRyser, kBrute, kFrontier };

// Number of perfect matchings. Ryser needs na <= 30, brute force is meant for
// small graphs, the frontier DP handles anything whose frontier fits 64 bits.
BigInt perfect_matching_count(const Bipartite& g, PmMethod method = PmMethod::kAuto, int threads = 1);

// Fraction-free elimination on a reduced Laplacian. Parallel edges count.
BigInt spanning_tree_count(const Graph& g);
inline BigInt spanning_tree_count(const PlanarMap& m) { return spanning_tree_count(graph_of(m)); }

// Grid G_{a,b} without vertex (a,1), split by colour class.
Bipartite grid_minus_corner(int a, int b);

struct GridProductReport {
  int k = 0, l = 0;
  double printed = 0;    // prod_{i=1..k} prod_{j=1..l} (4 - 2cos(pi i/k) - 2cos(pi j/l))
  double corrected = 0;  // (1/kl) prod over 0<=i<k, 0<=j<l, (i,j) != (0,0)
  BigInt spanning_trees;
  BigInt matchings;      // perfect matchings of G_{2k-1,2l-1} - (2k-1,1)
  bool printed_agrees = false;
  bool corrected_agrees = false;
};

GridProductReport grid_matching_product(int k, int l);

struct TwoFactorStats {
  int i = 0;
  BigInt c, a, b;  // all, containing e0, avoiding e0 (2-factors of K_{i,i})
  bool identities = false;
};

TwoFactorStats two_factor_stats(int i);

}  // namespace oc
