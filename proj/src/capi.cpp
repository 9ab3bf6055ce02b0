#include "orientcount/orientcount.h"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include <json.hpp>

#include "orientcount/alpha_engine.hpp"
#include "orientcount/combinatorics.hpp"
#include "orientcount/generators.hpp"
#include "orientcount/io.hpp"
#include "orientcount/planar_map.hpp"
#include "orientcount/reductions.hpp"
#include "orientcount/structures.hpp"
#include "orientcount/transfer_matrix.hpp"
#include "orientcount/verify.hpp"

struct oc_map {
  oc::PlanarMap map;
  std::vector<int> alpha;
  oc::EdgeRules rules;
  std::vector<int> specials;
};

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

thread_local std::string g_last_error;

// 12 significant digits, and the same text every run
Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return Json::parse(buf);
}

std::string dec(const oc::BigInt& x) { return x.str(); }

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

char* emit(const Json& j) { return dup(j.dump(2) + "\n"); }

Json header(const char* what) {
  Json j;
  j["schema"] = "orientcount/1";
  j["result"] = what;
  return j;
}

template <class F>
int guarded(F&& f) {
  try {
    int rc = f();
    if (rc == OC_OK) g_last_error.clear();
    return rc;
  } catch (const oc::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OC_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) oc::fail(oc::Errc::kInvalidInput, std::string(what) + " is null");
}

const std::vector<int>& alpha_of(const oc_map* m) {
  if (m->alpha.empty()) oc::fail(oc::Errc::kInvalidInput, "map has no alpha");
  return m->alpha;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool is_triangulation(const oc::PlanarMap& m) {
  if (!m.planar() || !m.is_simple()) return false;
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_size(f) != 3) return false;
  return true;
}

std::array<int, 3> pick_specials(const oc_map* m, int a1, int a2, int a3) {
  if (a1 >= 0 && a2 >= 0 && a3 >= 0) return {a1, a2, a3};
  if (m->specials.size() >= 3) return {m->specials[0], m->specials[1], m->specials[2]};
  auto fv = m->map.face_vertices(m->map.outer_face());
  if (fv.size() != 3) oc::fail(oc::Errc::kBadParameters, "give a1 a2 a3: the outer face is not a triangle");
  return {fv[0], fv[1], fv[2]};
}

std::pair<int, int> pick_poles(const oc_map* m, int s, int t) {
  if (s >= 0 && t >= 0) return {s, t};
  return {m->map.origin(m->map.outer_dart()), m->map.target(m->map.outer_dart())};
}

}  // namespace

extern "C" {

const char* oc_version(void) { return "1.0.0"; }

const char* oc_status_name(int status) {
  if (status == OC_CHECK_FAILED) return "CheckFailed";
  return oc::errc_name(static_cast<oc::Errc>(status));
}

const char* oc_last_error(void) { return g_last_error.c_str(); }

void oc_string_free(char* s) { std::free(s); }

int oc_map_generate(const char* family, int k, int l, const int* stacking, int nstacking, oc_map** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    oc::FamilySpec spec{oc::family_from_name(family), k, l, {}};
    if (stacking && nstacking > 0) spec.stacking.assign(stacking, stacking + nstacking);
    oc::Generated g = oc::generate(spec);
    *out = new oc_map{std::move(g.map), std::move(g.alpha), std::move(g.rules), std::move(g.specials)};
    return OC_OK;
  });
}

int oc_map_parse(const char* text, oc_map** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    oc::MapWithAlpha r = oc::read_map_any(text);
    *out = new oc_map{std::move(r.map), std::move(r.alpha), std::move(r.rules), {}};
    return OC_OK;
  });
}

int oc_map_write(const oc_map* m, const char* format, char** out) {
  return guarded([&] {
    need(m, "map");
    need(out, "out");
    std::string f = format ? format : "pmap";
    if (f == "pmap") *out = dup(oc::write_pmap(m->map, m->alpha, m->rules));
    else if (f == "json") *out = dup(oc::write_map_json(m->map, m->alpha, m->rules));
    else if (f == "dot") *out = dup(oc::map_dot(m->map));
    else oc::fail(oc::Errc::kBadParameters, "format must be pmap, json or dot");
    return OC_OK;
  });
}

void oc_map_free(oc_map* m) { delete m; }

int oc_map_size(const oc_map* m, int* vertices, int* edges, int* faces) {
  return guarded([&] {
    need(m, "map");
    if (vertices) *vertices = m->map.vertex_count();
    if (edges) *edges = m->map.edge_count();
    if (faces) *faces = m->map.face_count();
    return OC_OK;
  });
}

int oc_map_set_alpha(oc_map* m, const int* alpha, int n) {
  return guarded([&] {
    need(m, "map");
    need(alpha, "alpha");
    if (n != m->map.vertex_count()) oc::fail(oc::Errc::kInvalidInput, "alpha needs one entry per vertex");
    m->alpha.assign(alpha, alpha + n);
    return OC_OK;
  });
}

int oc_map_set_alpha_text(oc_map* m, const char* text) {
  return guarded([&] {
    need(m, "map");
    need(text, "text");
    m->alpha = oc::read_alpha(text, m->map.vertex_count());
    return OC_OK;
  });
}

int oc_count(const oc_map* m, const oc_count_options* opt, char** json) {
  return guarded([&] {
    need(m, "map");
    need(json, "json");
    oc_count_options o = opt ? *opt : oc_count_options{1, 0, 1, 0};
    const auto& alpha = alpha_of(m);
    oc::check_spec(m->map, alpha, m->rules);
    auto t0 = Clock::now();
    Json j = header("count");
    if (o.method == 3) {
      j["count"] = dec(oc::brute_force_count(m->map, alpha, m->rules, 30));
      j["method"] = "brute-force";
    } else {
      oc::CountOptions co;
      co.threads = std::max(1, o.threads);
      co.rules = m->rules;
      co.method = o.method == 1 ? oc::CountMethod::kSearch
                  : o.method == 2 ? oc::CountMethod::kFrontier
                                  : oc::CountMethod::kAuto;
      oc::CountResult r = oc::count(m->map, alpha, co);
      j["count"] = dec(r.count);
      j["method"] = r.method;
      j["nodes"] = r.nodes;
    }
    if (o.rigid) {
      if (j["count"] == "0") {
        j["rigid_edges"] = nullptr;
      } else {
        auto re = oc::rigid_edges(m->map, alpha, m->rules);
        j["rigid_edges"] = re.size();
        j["rigid"] = re;
      }
    }
    if (o.timing) j["ms"] = num(ms_since(t0));
    *json = emit(j);
    return OC_OK;
  });
}

int oc_enumerate(const oc_map* m, long long limit, char** json) {
  return guarded([&] {
    need(m, "map");
    need(json, "json");
    const auto& alpha = alpha_of(m);
    oc::check_spec(m->map, alpha, m->rules);
    Json list = Json::array();
    bool complete = oc::enumerate(
        m->map, alpha,
        [&](const oc::EdgeOrientation& x) {
          list.push_back(x.bits());
          return limit <= 0 || static_cast<long long>(list.size()) < limit;
        },
        m->rules);
    Json j = header("enumerate");
    j["listed"] = list.size();
    j["complete"] = complete;
    j["orientations"] = std::move(list);
    *json = emit(j);
    return OC_OK;
  });
}

int oc_lattice(const oc_map* m, const char* format, long long cap, char** out) {
  return guarded([&] {
    need(m, "map");
    need(out, "out");
    oc::LatticeOptions lo;
    if (cap > 0) lo.cap = static_cast<size_t>(cap);
    lo.rules = m->rules;
    oc::Lattice L = oc::lattice(m->map, alpha_of(m), lo);
    std::string f = format ? format : "json";
    if (f == "dot") {
      *out = dup(oc::lattice_dot(m->map, L));
      return OC_OK;
    }
    if (f != "json") oc::fail(oc::Errc::kBadParameters, "format must be json or dot");
    Json j = header("lattice");
    j["size"] = L.elements.size();
    j["regions"] = L.regions.size();
    j["minimum"] = L.minimum;
    j["maximum"] = L.maximum;
    j["connected"] = L.connected;
    j["order_checked"] = L.order_checked;
    Json el = Json::array(), cov = Json::array();
    for (size_t i = 0; i < L.elements.size(); ++i) {
      el.push_back(L.elements[i].bits());
      for (int k : L.down[i]) cov.push_back({i, k});
    }
    j["elements"] = std::move(el);
    j["covers"] = std::move(cov);
    *out = emit(j);
    return OC_OK;
  });
}

int oc_schnyder(const oc_map* m, int a1, int a2, int a3, int enumerate, long long limit, int threads, char** json) {
  return guarded([&] {
    need(m, "map");
    need(json, "json");
    Json j = header("schnyder");
    if (is_triangulation(m->map)) {
      oc::TriangulationSpec ts = oc::alpha_t(m->map);
      j["via"] = "3-orientations";
      j["specials"] = ts.specials;
      oc::CountOptions co;
      co.threads = std::max(1, threads);
      co.rules = ts.rules;
      j["count"] = dec(oc::count(m->map, ts.alpha, co).count);
      if (enumerate) {
        Json woods = Json::array();
        bool complete = oc::enumerate(
            m->map, ts.alpha,
            [&](const oc::EdgeOrientation& x) {
              oc::SchnyderWood w = oc::colors_from_3orientation(m->map, x);
              Json arcs = Json::array();
              for (int e = 0; e < m->map.edge_count(); ++e) {
                auto [u, v] = m->map.edge_ends(e);
                if (w.fwd[e]) arcs.push_back({u, v, w.fwd[e]});
                if (w.bwd[e]) arcs.push_back({v, u, w.bwd[e]});
              }
              woods.push_back(std::move(arcs));
              return limit <= 0 || static_cast<long long>(woods.size()) < limit;
            },
            ts.rules);
        j["complete"] = complete;
        j["woods"] = std::move(woods);
      }
    } else {
      if (enumerate) oc::fail(oc::Errc::kInvalidInput, "wood enumeration needs a triangulation; use --count");
      auto a = pick_specials(m, a1, a2, a3);
      j["via"] = "completion";
      j["specials"] = a;
      oc::CountResult r = oc::schnyder_count_via_completion(m->map, a[0], a[1], a[2], std::max(1, threads));
      j["count"] = dec(r.count);
      if (r.rigid_edges >= 0) j["rigid_edges"] = r.rigid_edges;
    }
    *json = emit(j);
    return OC_OK;
  });
}

int oc_bipolar(const oc_map* m, int s, int t, int with_signs, long long limit, int threads, char** json) {
  return guarded([&] {
    need(m, "map");
    need(json, "json");
    auto [src, snk] = pick_poles(m, s, t);
    Json j = header("bipolar");
    j["source"] = src;
    j["sink"] = snk;
    j["count"] = dec(oc::bipolar_count(m->map, src, snk, std::max(1, threads)));
    if (with_signs || limit > 0) {
      Json list = Json::array();
      bool complete = true;
      oc::bipolar_enumerate(m->map, src, snk, [&](const oc::EdgeOrientation& b) {
        if (limit > 0 && static_cast<long long>(list.size()) >= limit) {
          complete = false;
          return false;
        }
        Json o;
        o["bits"] = b.bits();
        if (with_signs) o["signs"] = oc::sign_encode(m->map, b);
        list.push_back(std::move(o));
        return true;
      });
      j["complete"] = complete;
      j["orientations"] = std::move(list);
    }
    *json = emit(j);
    return OC_OK;
  });
}

int oc_reduce(const oc_map* m, const char* via, int threads, char** json) {
  return guarded([&] {
    need(m, "map");
    need(json, "json");
    const auto& alpha = alpha_of(m);
    for (auto r : m->rules)
      if (r != oc::EdgeRule::kFree) oc::fail(oc::Errc::kInvalidInput, "reductions take maps without edge rules");
    std::string how = via ? via : "matching";
    Json j = header("reduce");
    j["via"] = how;
    oc::BigInt direct = oc::count_value(m->map, alpha);
    j["count"] = dec(direct);
    oc::FFactorInstance ff = oc::alpha_to_f_factor(m->map, alpha);
    j["subdivision"] = {{"vertices", ff.graph.n}, {"edges", ff.graph.edges.size()}};
    oc::BigInt implied;
    if (how == "f-factor") {
      implied = oc::f_factor_count(ff.graph, ff.f);
      j["f_factors"] = dec(implied);
    } else if (how == "matching") {
      oc::BlowUp bu = oc::tutte_blowup(ff);
      oc::BigInt pm = oc::perfect_matching_count(bu.graph, oc::PmMethod::kAuto, std::max(1, threads));
      size_t arcs = 0;
      for (auto& a : bu.graph.adj) arcs += a.size();
      j["blowup"] = {{"side_a", bu.graph.na}, {"side_b", bu.graph.nb}, {"edges", arcs},
                     {"ports", bu.ports},    {"inner", bu.inner}};
      j["multiplier"] = dec(bu.multiplier);
      j["perfect_matchings"] = dec(pm);
      if (pm % bu.multiplier != 0) oc::fail(oc::Errc::kInternal, "matching count not divisible by the multiplier");
      implied = pm / bu.multiplier;
    } else {
      oc::fail(oc::Errc::kBadParameters, "via must be matching or f-factor");
    }
    j["implied_count"] = dec(implied);
    j["agrees"] = implied == direct;
    *json = emit(j);
    return implied == direct ? OC_OK : OC_CHECK_FAILED;
  });
}

int oc_eigen(int two_k, double tol, char** json) {
  return guarded([&] {
    need(json, "json");
    if (two_k % 2) oc::fail(oc::Errc::kBadParameters, "2k must be even");
    if (!(tol > 0)) tol = 1e-10;
    oc::TransferMatrices tm = oc::build_transfer(two_k / 2);
    oc::EigenResult r = oc::dominant_eigenvalue(tm, tol);
    Json j = header("eigen");
    j["two_k"] = two_k;
    j["dimension"] = tm.states.size();
    j["lambda"] = num(r.lambda);
    j["lower"] = num(r.lower);
    j["upper"] = num(r.upper);
    j["iterations"] = r.iterations;
    j["per_row_pair"] = num(std::pow(r.lambda, 2.0 / two_k));
    *json = emit(j);
    return OC_OK;
  });
}

int oc_eigen_ratio(int two_a, int two_b, double tol, char** json) {
  return guarded([&] {
    need(json, "json");
    if (two_a % 2 || two_b % 2 || two_a <= two_b) oc::fail(oc::Errc::kBadParameters, "need even 2a > 2b");
    if (!(tol > 0)) tol = 1e-11;
    auto ra = oc::dominant_eigenvalue(oc::build_transfer(two_a / 2), tol);
    auto rb = oc::dominant_eigenvalue(oc::build_transfer(two_b / 2), tol);
    // two more rows per step, two columns per transfer step
    const double e = 1.0 / (2.0 * (two_a - two_b));
    Json j = header("eigen-ratio");
    j["two_a"] = two_a;
    j["two_b"] = two_b;
    j["exponent"] = num(e);
    j["ratio"] = num(std::pow(ra.lambda / rb.lambda, e));
    j["certified_lower"] = num(std::pow(ra.lower / rb.upper, e));
    j["certified_upper"] = num(std::pow(ra.upper / rb.lower, e));
    *json = emit(j);
    return OC_OK;
  });
}

int oc_bounds(const oc_map* m, const char* kind, const char* measured, int s, int t, char** json) {
  return guarded([&] {
    need(m, "map");
    need(json, "json");
    std::string k = kind ? kind : "";
    // work on the edges that take part
    oc::PlanarMap map = m->map;
    std::vector<int> alpha = m->alpha;
    bool dropped = false;
    if (!m->rules.empty() && k != "bipolar") {
      std::vector<int> keep, old;
      for (int e = 0; e < m->map.edge_count(); ++e)
        if (m->rules[e] != oc::EdgeRule::kIgnored) keep.push_back(e);
      if (static_cast<int>(keep.size()) < m->map.edge_count()) {
        map = oc::submap(m->map, keep, &old);
        if (!alpha.empty()) {
          std::vector<int> a;
          for (int v : old) a.push_back(alpha[v]);
          alpha = a;
        }
        dropped = true;
      }
    }
    if (k.empty()) {
      bool tri = is_triangulation(m->map), quad = map.planar();
      for (int f = 0; f < map.face_count() && quad; ++f) quad = map.face_size(f) == 4;
      k = tri && dropped ? "triangulation" : quad ? "quadrangulation" : "general";
    }
    oc::InstanceKind ik = k == "general"           ? oc::InstanceKind::kGeneral
                          : k == "triangulation"   ? oc::InstanceKind::kTriangulation3
                          : k == "quadrangulation" ? oc::InstanceKind::kQuadrangulation2
                          : k == "bipolar"         ? oc::InstanceKind::kBipolar
                                                   : (oc::fail(oc::Errc::kBadParameters, "unknown kind " + k),
                                                      oc::InstanceKind::kGeneral);
    auto [src, snk] = pick_poles(m, s, t);
    if (ik != oc::InstanceKind::kBipolar && alpha.empty()) oc::fail(oc::Errc::kInvalidInput, "map has no alpha");
    oc::BigInt meas;
    bool has = false;
    if (measured && std::string(measured) == "auto") {
      meas = ik == oc::InstanceKind::kBipolar ? oc::bipolar_count(map, src, snk) : oc::count_value(map, alpha);
      has = true;
    } else if (measured && *measured) {
      try {
        meas = oc::BigInt(measured);
      } catch (const std::exception&) {
        oc::fail(oc::Errc::kParse, std::string("measured count is not an integer: ") + measured);
      }
      has = true;
    }
    auto reps = oc::bound_reports(map, alpha, ik, has ? &meas : nullptr, src, snk);
    Json j = header("bounds");
    j["kind"] = k;
    if (has) j["measured"] = dec(meas);
    Json arr = Json::array();
    bool all = true;
    for (auto& r : reps) {
      Json b;
      b["name"] = r.name;
      b["applicable"] = r.applicable;
      if (!r.note.empty()) b["note"] = r.note;
      if (r.applicable) {
        b["radicand"] = r.radicand.str();
        b["root"] = r.root;
        b["value"] = num(r.value);
        if (r.has_measured) b["dominates"] = r.dominates;
        if (r.has_measured && !r.dominates) all = false;
      }
      arr.push_back(std::move(b));
    }
    j["bounds"] = std::move(arr);
    if (has) j["all_dominate"] = all;
    *json = emit(j);
    return all ? OC_OK : OC_CHECK_FAILED;
  });
}

int oc_verify(const char* suite, int threads, int timing, char** json) {
  return guarded([&] {
    need(json, "json");
    std::vector<std::string> names;
    if (!suite || !*suite || std::string(suite) == "all") names = oc::suite_names();
    else names.push_back(suite);
    Json j = header("verify");
    Json arr = Json::array();
    bool all = true;
    for (auto& n : names) {
      oc::SuiteReport r = oc::run_suite(n, std::max(1, threads));
      Json s;
      s["suite"] = r.name;
      s["criterion"] = r.criterion;
      s["title"] = r.title;
      s["pass"] = r.pass;
      Json cs = Json::array();
      for (auto& c : r.checks) {
        Json x;
        x["what"] = c.what;
        x["pass"] = c.pass;
        if (c.info) x["info"] = true;
        if (!c.detail.empty() && (!c.timing || timing)) x["detail"] = c.detail;
        cs.push_back(std::move(x));
      }
      s["checks"] = std::move(cs);
      if (timing) s["ms"] = num(r.ms);
      all = all && r.pass;
      arr.push_back(std::move(s));
    }
    j["pass"] = all;
    j["suites"] = std::move(arr);
    *json = emit(j);
    return all ? OC_OK : OC_CHECK_FAILED;
  });
}

int oc_verify_suite_count(void) { return static_cast<int>(oc::suite_names().size()); }

const char* oc_verify_suite_name(int i) {
  const auto& n = oc::suite_names();
  if (i < 0 || i >= static_cast<int>(n.size())) return nullptr;
  return n[i].c_str();
}

}  // extern "C"
