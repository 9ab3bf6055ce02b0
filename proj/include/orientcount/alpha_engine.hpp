#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orientcount/common.hpp"
#include "orientcount/planar_map.hpp"

namespace oc {

// Demand value for a vertex whose out-degree is left unconstrained.
inline constexpr int kFreeVertex = -1;

// Per-edge rule: free, fixed along the canonical dart, fixed against it, or
// ignored (the edge takes no part in the orientation at all).
enum class EdgeRule : int8_t { kFree = -1, kBackward = 0, kForward = 1, kIgnored = 2 };
using EdgeRules = std::vector<EdgeRule>;

class EdgeOrientation {
 public:
  EdgeOrientation() = default;
  explicit EdgeOrientation(int m) : m_(m), w_((m + 63) / 64, 0) {}

  int size() const { return m_; }
  bool forward(int e) const { return (w_[e >> 6] >> (e & 63)) & 1U; }
  void set(int e, bool fwd) {
    if (fwd) w_[e >> 6] |= (uint64_t{1} << (e & 63));
    else w_[e >> 6] &= ~(uint64_t{1} << (e & 63));
  }
  void toggle(int e) { w_[e >> 6] ^= (uint64_t{1} << (e & 63)); }
  // true when dart d points the way its edge is oriented
  bool carries(int d) const { return forward(d >> 1) == ((d & 1) == 0); }
  std::string bits() const;
  static EdgeOrientation from_bits(const std::string& s);
  const std::vector<uint64_t>& words() const { return w_; }

  bool operator==(const EdgeOrientation& o) const { return m_ == o.m_ && w_ == o.w_; }
  bool operator<(const EdgeOrientation& o) const { return w_ < o.w_; }

 private:
  int m_ = 0;
  std::vector<uint64_t> w_;
};

struct EdgeOrientationHash {
  size_t operator()(const EdgeOrientation& x) const;
};

int tail_of(const PlanarMap& m, const EdgeOrientation& x, int e);
int head_of(const PlanarMap& m, const EdgeOrientation& x, int e);
std::vector<int> out_degrees(const PlanarMap& m, const EdgeOrientation& x, const EdgeRules& rules = {});
bool is_alpha_orientation(const PlanarMap& m, const std::vector<int>& alpha, const EdgeOrientation& x,
                          const EdgeRules& rules = {});

void check_spec(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules = {});

bool feasible(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules = {});
std::optional<EdgeOrientation> find_orientation(const PlanarMap& m, const std::vector<int>& alpha,
                                                const EdgeRules& rules = {});

using Visitor = std::function<bool(const EdgeOrientation&)>;

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t solutions = 0;
};

// Depth-first search with unit propagation. Returns false if the visitor stopped it.
bool enumerate(const PlanarMap& m, const std::vector<int>& alpha, const Visitor& visit,
               const EdgeRules& rules = {}, SearchStats* stats = nullptr);

enum class CountMethod { kAuto, kSearch, kFrontier };

struct CountOptions {
  CountMethod method = CountMethod::kAuto;
  int threads = 1;
  EdgeRules rules;
};

struct CountResult {
  BigInt count = 0;
  uint64_t nodes = 0;
  int rigid_edges = -1;  // filled by callers that ask for it
  double ms = 0;
  std::string method;
};

CountResult count(const PlanarMap& m, const std::vector<int>& alpha, const CountOptions& opt = {});
inline BigInt count_value(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules = {}) {
  CountOptions o;
  o.rules = rules;
  return count(m, alpha, o).count;
}

// Plain enumeration of all 2^m patterns (m limited by max_m).
BigInt brute_force_count(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules = {},
                         int max_m = 18);

// Edges (ids) that have the same direction in every alpha-orientation.
std::vector<int> rigid_edges(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules = {});

enum class Chirality { kCw, kCcw };

struct FlipCycle {
  std::vector<int> darts;
  Chirality chirality = Chirality::kCcw;
};

// Interior on the left is ccw. Darts must form a simple closed walk.
Chirality classify_cycle(const PlanarMap& m, const std::vector<int>& darts);
FlipCycle make_cycle(const PlanarMap& m, const std::vector<int>& darts);
EdgeOrientation flip(const PlanarMap& m, const EdgeOrientation& x, const FlipCycle& c);

struct LatticeOptions {
  size_t cap = 100000;
  size_t exhaustive_cap = 200;  // closure, meet/join and distributivity below this size
  EdgeRules rules;
};

struct Lattice {
  std::vector<EdgeOrientation> elements;
  // down[i] lists j with elements[j] obtained from elements[i] by reversing a
  // ccw region boundary, i.e. j lies left of i
  std::vector<std::vector<int>> down;
  std::vector<std::vector<int>> regions;  // faces grouped across rigid edges
  int minimum = -1;
  int maximum = -1;
  bool connected = false;
  bool order_checked = false;  // meet/join/distributivity were verified
  std::vector<std::vector<int>> meet, join;
};

Lattice lattice(const PlanarMap& m, const std::vector<int>& alpha, const LatticeOptions& opt = {});

std::string lattice_dot(const PlanarMap& m, const Lattice& l);

}  // namespace oc
