#pragma once

#include <random>

#include "orientcount/alpha_engine.hpp"
#include "orientcount/common.hpp"

// Error kind thrown by f, kOk when nothing is thrown.
template <class F>
oc::Errc code_of(F&& f) {
  try {
    f();
  } catch (const oc::Error& e) {
    return e.code();
  }
  return oc::Errc::kOk;
}

// Out-degrees of a random orientation: always a feasible alpha.
inline std::vector<int> random_alpha(const oc::PlanarMap& m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  oc::EdgeOrientation x(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) x.set(e, rng() & 1U);
  return oc::out_degrees(m, x);
}
