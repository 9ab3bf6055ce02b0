#include "orientcount/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orientcount/alpha_engine.hpp"
#include "orientcount/generators.hpp"

namespace oc {

bool column_ok(int k, uint32_t left, uint32_t right, bool wrap_down) {
  const int rows = 2 * k;
  // upward edge between r-1 and r is an out-edge of r
  bool prev_down = wrap_down;  // edge entering row 0 from above
  for (int r = 0; r < rows; ++r) {
    int need = 2 - (((left >> r) & 1U) ? 0 : 1) - (((right >> r) & 1U) ? 1 : 0);
    int have = prev_down ? 0 : 1;
    if (r == rows - 1) {
      // the edge below is the wrap edge again
      return have + (wrap_down ? 1 : 0) == need;
    }
    int down = need - have;
    if (down < 0 || down > 1) return false;
    prev_down = down == 1;
  }
  return false;
}

TransferMatrices build_transfer(int k) {
  if (k < 1 || k > 6) fail(Errc::kSizeExceeded, "2k must be between 2 and 12");
  TransferMatrices tm;
  tm.k = k;
  const int rows = 2 * k;
  for (uint32_t s = 0; s < (1U << rows); ++s)
    if (__builtin_popcount(s) == k) tm.states.push_back(s);
  const int n = static_cast<int>(tm.states.size());
  uint32_t alt = 0;
  for (int r = 0; r < rows; r += 2) alt |= 1U << r;
  tm.alternating = static_cast<int>(std::find(tm.states.begin(), tm.states.end(), alt) - tm.states.begin());
  tm.tu.assign(n, std::vector<uint8_t>(n, 0));
  tm.td.assign(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      tm.tu[i][j] = column_ok(k, tm.states[i], tm.states[j], false);
      tm.td[i][j] = column_ok(k, tm.states[i], tm.states[j], true);
    }
  tm.t.assign(n, std::vector<uint64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m)
      if (tm.tu[i][m])
        for (int j = 0; j < n; ++j) tm.t[i][j] += tm.td[m][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (tm.tu[i][j] != tm.td[j][i] || tm.t[i][j] != tm.t[j][i])
        fail(Errc::kInternal, "transfer matrix symmetry broken");
  return tm;
}

bool is_primitive(const std::vector<std::vector<uint64_t>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<char>> b(n, std::vector<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = t[i][j] != 0;
  // B^(2^s) for s up to log2(n^2) covers Wielandt's (n-1)^2+1
  int rounds = 1;
  while ((1LL << rounds) < static_cast<long long>(n) * n + 1) ++rounds;
  for (int s = 0; s <= rounds; ++s) {
    bool pos = true;
    for (int i = 0; i < n && pos; ++i)
      for (int j = 0; j < n && pos; ++j) pos = b[i][j];
    if (pos) return true;
    std::vector<std::vector<char>> c(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < n; ++m)
        if (b[i][m])
          for (int j = 0; j < n; ++j) c[i][j] |= b[m][j];
    b.swap(c);
  }
  return false;
}

EigenResult dominant_eigenvalue(const TransferMatrices& tm, double tol, int max_iter) {
  if (!is_primitive(tm.t)) fail(Errc::kNotPrimitive, "transfer matrix is not primitive");
  const int n = static_cast<int>(tm.t.size());
  std::vector<double> v(n, 1.0), w(n);
  EigenResult r;
  for (int it = 1; it <= max_iter; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<double>(tm.t[i][j]) * v[j];
      w[i] = s;
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0, num = 0, den = 0;
    for (int i = 0; i < n; ++i) {
      double q = w[i] / v[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      num += v[i] * w[i];
      den += v[i] * v[i];
    }
    r.iterations = it;
    r.lower = lo;
    r.upper = hi;
    r.lambda = num / den;  // Rayleigh quotient, T is symmetric
    r.widths.push_back((hi - lo) / lo);
    if ((hi - lo) <= tol * lo) return r;
    double norm = *std::max_element(w.begin(), w.end());
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  fail(Errc::kNoConvergence, "power iteration did not converge");
}

BigInt alternating_count(int k, int l) {
  if (l < 1) fail(Errc::kBadParameters, "l >= 1");
  TransferMatrices tm = build_transfer(k);
  const int n = static_cast<int>(tm.states.size());
  std::vector<BigInt> x(n, 0), y(n);
  x[tm.alternating] = 1;
  for (int step = 0; step < l; ++step) {
    for (int j = 0; j < n; ++j) {
      BigInt s = 0;
      for (int i = 0; i < n; ++i)
        if (tm.t[i][j] && x[i] != 0) s += x[i] * tm.t[i][j];
      y[j] = s;
    }
    x.swap(y);
  }
  return x[tm.alternating];
}

BigInt alternating_count_engine(int k, int l) {
  const int rows = 2 * k, cols = 2 * l;
  Generated g = generate({Family::kTorusGrid, rows, cols, {}});
  EdgeRules rules(g.map.edge_count(), EdgeRule::kFree);
  for (int r = 0; r < rows; ++r) {
    int v = grid_id(cols, r + 1, cols);
    rules[2 * v] = r % 2 == 0 ? EdgeRule::kForward : EdgeRule::kBackward;  // right in even rows
  }
  for (int c = 0; c < cols; ++c) {
    int v = grid_id(cols, rows, c + 1);
    // canonical dart of the wrap edge runs from the last row down to row 0
    rules[2 * v + 1] = c % 2 == 0 ? EdgeRule::kBackward : EdgeRule::kForward;
  }
  std::vector<int> alpha(g.map.vertex_count(), 2);
  return count_value(g.map, alpha, rules);
}

}  // namespace oc
