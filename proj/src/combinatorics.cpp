#include "orientcount/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>

namespace oc {

namespace {

std::mutex memo_mu;
std::vector<BigInt> fib_memo{0, 1};

BigInt pow_big(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

BigRational pow_rat(const BigRational& b, int e) {
  BigRational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BigInt fibonacci(int n) {
  if (n < 0) fail(Errc::kBadParameters, "n >= 0");
  std::lock_guard<std::mutex> lk(memo_mu);
  while (static_cast<int>(fib_memo.size()) <= n) fib_memo.push_back(fib_memo.end()[-1] + fib_memo.end()[-2]);
  return fib_memo[n];
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt baxter(int n) {
  if (n < 1) return n == 0 ? 1 : 0;
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
  return s / (binomial(n + 1, 1) * binomial(n + 1, 2));
}

BigInt schnyder_total(int n) { return catalan(n + 2) * catalan(n) - catalan(n + 1) * catalan(n + 1); }

std::pair<BigInt, BigInt> phi_power(int n) {
  BigInt a = 2, b = 0;  // 1 = (2 + 0 sqrt5)/2
  for (int i = 0; i < n; ++i) {
    // times (1 + sqrt5)/2
    BigInt na = (a + 5 * b) / 2, nb = (a + b) / 2;
    a = na;
    b = nb;
  }
  return {a, b};
}

std::vector<std::string> sparse_sequences(int n) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void()> go = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    cur.push_back('0');
    go();
    cur.pop_back();
    if (cur.empty() || cur.back() == '0') {
      cur.push_back('1');
      go();
      cur.pop_back();
    }
  };
  go();
  return out;
}

FibSuite fib_suite(int n) {
  FibSuite s;
  s.n = n;
  s.f = fibonacci(n);
  auto [a, b] = phi_power(n);
  // psi^n is the conjugate (a - b sqrt5)/2, so phi^n - psi^n = b sqrt5
  s.binet = b == s.f && a * a - 5 * b * b == 4 * (n % 2 ? -1 : 1);
  BigInt conv = 0;
  for (int i = 0; i <= n; ++i) conv += fibonacci(i) * fibonacci(n - i);
  BigInt rhs = n >= 1 ? BigInt(n * (fibonacci(n + 1) + fibonacci(n - 1)) - s.f) : BigInt(0);
  s.convolution = 5 * conv == rhs;
  BigInt rsum = 0;
  for (int i = 1; i <= n; ++i) {
    s.r.push_back(fibonacci(i) * fibonacci(n + 1 - i));
    rsum += s.r.back();
  }
  s.r_sum = 5 * rsum == 2 * (n + 1) * s.f + n * fibonacci(n + 1);
  if (n <= 20) {
    s.enumerated = true;
    auto seqs = sparse_sequences(n);
    std::vector<uint64_t> ones(n, 0);
    for (auto& q : seqs)
      for (int i = 0; i < n; ++i) ones[i] += q[i] == '1';
    s.enumeration_ok = BigInt(seqs.size()) == fibonacci(n + 2);
    for (int i = 0; i < n; ++i) s.enumeration_ok = s.enumeration_ok && BigInt(ones[i]) == s.r[i];
  }
  return s;
}

Crossover crossover_recursion(int k) {
  Crossover c;
  c.x.push_back(1);
  c.y.push_back(1);
  for (int i = 1; i <= k; ++i) {
    BigInt x = 4 * c.x.back() + 2 * c.y.back();
    BigInt y = 4 * c.x.back() + 3 * c.y.back();
    c.x.push_back(x);
    c.y.push_back(y);
  }
  c.decreasing = true;
  c.above_c = true;
  for (int i = 0; i <= k; ++i) {
    const BigInt &x = c.x[i], &y = c.y[i];
    // t = x/y > 0 and 4t^2 - t - 2 > 0  <=>  t above the positive root
    if (!(4 * x * x - x * y - 2 * y * y > 0)) c.above_c = false;
    if (i > 0 && !(x * c.y[i - 1] < c.x[i - 1] * y)) c.decreasing = false;
  }
  return c;
}

std::vector<int> independent_set(const PlanarMap& m) {
  const int n = m.vertex_count();
  std::vector<std::vector<int>> nb(n);
  for (int v = 0; v < n; ++v) {
    nb[v] = m.neighbors(v);
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }
  if (n > 64) {
    std::vector<int> order(n), out;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return nb[a].size() < nb[b].size(); });
    std::vector<char> blocked(n, 0);
    for (int v : order)
      if (!blocked[v]) {
        out.push_back(v);
        blocked[v] = 1;
        for (int w : nb[v]) blocked[w] = 1;
      }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : nb[v])
      if (w != v) adj[v] |= uint64_t{1} << w;
  uint64_t best = 0;
  int best_size = 0;
  std::function<void(uint64_t, uint64_t, int)> go = [&](uint64_t cand, uint64_t cur, int size) {
    if (size + __builtin_popcountll(cand) <= best_size) return;
    if (!cand) {
      best = cur;
      best_size = size;
      return;
    }
    // a vertex with at most one candidate neighbour can always be taken
    for (uint64_t c = cand; c; c &= c - 1) {
      int v = __builtin_ctzll(c);
      if (__builtin_popcountll(adj[v] & cand) <= 1) {
        go(cand & ~adj[v] & ~(uint64_t{1} << v), cur | (uint64_t{1} << v), size + 1);
        return;
      }
    }
    int v = -1, dmax = -1;
    for (uint64_t c = cand; c; c &= c - 1) {
      int u = __builtin_ctzll(c), d = __builtin_popcountll(adj[u] & cand);
      if (d > dmax) dmax = d, v = u;
    }
    go(cand & ~adj[v] & ~(uint64_t{1} << v), cur | (uint64_t{1} << v), size + 1);
    go(cand & ~(uint64_t{1} << v), cur, size);
  };
  uint64_t all = n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  // isolated vertices do not help the bounds, leave them out
  for (int v = 0; v < n; ++v)
    if (!adj[v]) all &= ~(uint64_t{1} << v);
  go(all, 0, 0);
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if ((best >> v) & 1U) out.push_back(v);
  return out;
}

namespace {

BoundReport make(const std::string& name, BigRational radicand, int root, const BigInt* measured) {
  BoundReport r;
  r.name = name;
  r.radicand = radicand;
  r.root = root;
  r.value = std::pow(radicand.convert_to<double>(), 1.0 / root);
  if (measured) {
    r.has_measured = true;
    r.measured = *measured;
    r.dominates = BigRational(pow_big(*measured, root)) <= radicand;
  }
  return r;
}

BigRational power_of(int num, int den, int n) { return pow_rat(BigRational(num, den), n); }

}  // namespace

std::vector<BoundReport> bound_reports(const PlanarMap& m, const std::vector<int>& alpha, InstanceKind kind,
                                       const BigInt* measured, int s, int t) {
  std::vector<BoundReport> out;
  const int n = m.vertex_count(), me = m.edge_count();
  if (kind == InstanceKind::kBipolar) {
    if (s < 0 || t < 0) fail(Errc::kBadParameters, "bipolar bounds need s and t");
    const int f = m.face_count(), finf = m.face_size(m.outer_face());
    out.push_back(make("sign-vectors 2^(f-1)", pow_big(2, f - 1), 1, measured));
    BigRational base = BigRational(pow_big(4, n - 1), pow_big(2, finf));
    out.push_back(make("4^(n-1) 2^(-f_inf) (31/32)^((n-2)/4)", pow_rat(base, 4) * power_of(31, 32, n - 2), 4,
                       measured));
    out.push_back(make("3.97^n", power_of(397, 100, n), 1, measured));
    return out;
  }
  if (static_cast<int>(alpha.size()) != n) fail(Errc::kInvalidInput, "alpha has wrong length");
  // spanning forest
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int forest = 0;
  for (auto [u, v] : m.edge_list())
    if (find(u) != find(v)) parent[find(u)] = find(v), ++forest;
  out.push_back(make("2^(m-|A|)", pow_big(2, me - forest), 1, measured));

  BoundReport eq1;
  if (n >= 3 && m.is_simple() && m.planar()) {
    auto ind = independent_set(m);
    int i2 = 0;
    BigRational prod = 1;
    for (int v : ind) {
      int d = m.degree(v);
      if (d == 2) {
        ++i2;
        continue;
      }
      prod *= BigRational(binomial(d, alpha[v]), pow_big(2, d - 1));
    }
    BigRational head = 2 * n - 4 - i2 >= 0 ? BigRational(pow_big(2, 2 * n - 4 - i2))
                                           : BigRational(1, pow_big(2, i2 + 4 - 2 * n));
    eq1 = make("independent-set bound", head * prod, 1, measured);
    eq1.note = "|I|=" + std::to_string(ind.size()) + " |I2|=" + std::to_string(i2);
  } else {
    eq1.name = "independent-set bound";
    eq1.applicable = false;
    eq1.note = "needs a simple plane map with n >= 3";
  }
  out.push_back(eq1);
  out.push_back(make("3.73^n", power_of(373, 100, n), 1, measured));
  if (kind == InstanceKind::kTriangulation3) {
    out.push_back(make("2^(2n-4) (5/8)^(n/4)", pow_rat(BigRational(pow_big(2, std::max(0, 2 * n - 4))), 4) *
                                                   power_of(5, 8, n),
                       4, measured));
    out.push_back(make("3.56^n", power_of(356, 100, n), 1, measured));
  }
  if (kind == InstanceKind::kQuadrangulation2) {
    out.push_back(make("2^n", pow_big(2, n), 1, measured));
    out.push_back(make("1.91^n", power_of(191, 100, n), 1, measured));
  }
  return out;
}

bool check_central_binomial(int dmax) {
  for (int d = 3; d <= dmax; ++d)
    if (BigRational(binomial(d, d / 2), pow_big(2, d - 1)) > BigRational(3, 4)) return false;
  return true;
}

bool check_schnyder_degree(int dmax) {
  for (int d = 3; d <= dmax; ++d)
    if (BigRational(binomial(d, 3) * 2, pow_big(2, d)) > BigRational(5, 8)) return false;
  return true;
}

bool check_growth_chain(int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    long double lhs = (2.0L * n - 4) * std::log(2.0L) + (n / 4.0L) * std::log(0.75L);
    long double rhs = n * std::log(3.73L);
    if (lhs > rhs) return false;
  }
  return true;
}

const std::vector<NamedConstant>& formula_constants() {
  static const std::vector<NamedConstant> table = {
      {"lieb", 8 * std::sqrt(3.0) / 9, "square ice, Eulerian orientations of the square grid per vertex"},
      {"baxter", 3 * std::sqrt(3.0) / 2, "Eulerian orientations of the triangular grid per vertex"},
      {"matching_exponent", 0.29156090403081878, "log of perfect matchings per vertex of the square grid (Catalan/pi)"},
      {"grid_schnyder", 3.2099, "Schnyder woods of G*_{k,l} per grid vertex, e^(4 Catalan/pi)"},
      {"spanning_tree_low", 5.02, "spanning trees, best plane family known"},
      {"spanning_tree_high", 5.34, "spanning trees, upper bound for plane graphs"},
      {"tri_schnyder_low", 2.37, "Schnyder woods of triangulations, lower"},
      {"tri_schnyder_high", 3.56, "Schnyder woods of triangulations, upper"},
      {"schnyder_3conn_high", 8.0, "Schnyder woods of 3-connected maps, upper"},
      {"alpha_high", 3.73, "alpha-orientations of plane maps, upper"},
      {"two_orient_low", 1.53, "2-orientations of quadrangulations, lower"},
      {"two_orient_high", 1.91, "2-orientations of quadrangulations, upper"},
      {"bipolar_low", 2.91, "bipolar orientations, lower"},
      {"bipolar_high", 3.97, "bipolar orientations, upper"},
      {"crossover_c", (1 + std::sqrt(33.0)) / 8, "limit of x_k/y_k"},
  };
  return table;
}

double constant(const std::string& name) {
  for (auto& c : formula_constants())
    if (c.name == name) return c.value;
  fail(Errc::kBadParameters, "unknown constant " + name);
}

}  // namespace oc
