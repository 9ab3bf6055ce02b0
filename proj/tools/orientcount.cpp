// orientcount command line. Talks to the engine only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orientcount/orientcount.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kError = 2 };

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct MapArgs {
  std::string map;
  std::string alpha_file;
  std::string alpha_inline;
};

void add_map_args(CLI::App* c, MapArgs& a, bool alpha = true) {
  c->add_option("--map", a.map, "pmap or JSON file, - for stdin")->required();
  if (alpha) {
    auto* f = c->add_option("--alpha", a.alpha_file, "alpha file (overrides alpha lines in the map)");
    auto* i = c->add_option("--alpha-inline", a.alpha_inline, "alpha as a list, e.g. \"1,1,1\"");
    f->excludes(i);
  }
}

// Owns a map handle; reports failures on stderr.
class Map {
 public:
  explicit Map(const MapArgs& a) {
    std::string text = slurp(a.map);
    check(oc_map_parse(text.c_str(), &m_));
    if (!a.alpha_file.empty()) check(oc_map_set_alpha_text(m_, slurp(a.alpha_file).c_str()));
    if (!a.alpha_inline.empty()) check(oc_map_set_alpha_text(m_, a.alpha_inline.c_str()));
  }
  ~Map() { oc_map_free(m_); }
  Map(const Map&) = delete;
  Map& operator=(const Map&) = delete;
  oc_map* get() const { return m_; }

  static void check(int rc) {
    if (rc != OC_OK) throw std::runtime_error(std::string(oc_status_name(rc)) + ": " + oc_last_error());
  }

 private:
  oc_map* m_ = nullptr;
};

// Prints a JSON result; CHECK_FAILED still prints it.
int finish(int rc, char** outp) {
  char* out = *outp;
  if (out) {
    std::fputs(out, stdout);
    oc_string_free(out);
  }
  if (rc == OC_OK) return kPass;
  if (rc == OC_CHECK_FAILED) {
    std::fprintf(stderr, "check failed\n");
    return kFail;
  }
  std::fprintf(stderr, "error: %s: %s\n", oc_status_name(rc), oc_last_error());
  return kError;
}

void human_report(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  for (auto& s : j["suites"]) {
    std::fprintf(stderr, "[%2d] %-22s %s\n", s["criterion"].get<int>(), s["suite"].get<std::string>().c_str(),
                 s["pass"].get<bool>() ? "PASS" : "FAIL");
    for (auto& c : s["checks"]) {
      const char* tag = c.value("info", false) ? "info" : c["pass"].get<bool>() ? " ok " : "FAIL";
      std::string d = c.value("detail", "");
      std::fprintf(stderr, "      %s %s%s%s\n", tag, c["what"].get<std::string>().c_str(), d.empty() ? "" : ": ",
                   d.c_str());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and enumeration of alpha-orientations of planar maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(oc_version()));

  // generate
  auto* gen = app.add_subcommand("generate", "build a named map family");
  std::string family, out_fmt = "pmap";
  int k = 2, l = 2;
  std::vector<int> stacking;
  gen->add_option("--family", family,
                  "grid, torus-grid, augmented-grid, quad-grid, tri-grid, tri-torus, augmented-tri-grid, hex-grid, "
                  "stacked, strip")
      ->required();
  gen->add_option("--k", k, "rows");
  gen->add_option("--l", l, "columns");
  gen->add_option("--stacking", stacking, "face choices for stacked triangulations")->delimiter(',');
  gen->add_option("--out", out_fmt, "pmap, json or dot")->check(CLI::IsMember({"pmap", "json", "dot"}));

  // count
  auto* cnt = app.add_subcommand("count", "count alpha-orientations");
  MapArgs cnt_map;
  add_map_args(cnt, cnt_map);
  int threads = 1;
  std::string method = "auto";
  bool no_rigid = false, timing = false;
  cnt->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
  cnt->add_option("--method", method, "auto, search, frontier or brute")
      ->check(CLI::IsMember({"auto", "search", "frontier", "brute"}));
  cnt->add_flag("--no-rigid", no_rigid, "skip rigid-edge detection");
  cnt->add_flag("--timing", timing, "report wall-clock ms");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "list alpha-orientations as bit strings");
  MapArgs en_map;
  add_map_args(en, en_map);
  long long limit = 0;
  en->add_option("--limit", limit, "stop after this many (0: all)");

  // lattice
  auto* lat = app.add_subcommand("lattice", "distributive lattice of alpha-orientations");
  MapArgs lat_map;
  add_map_args(lat, lat_map);
  std::string lat_out = "json";
  long long cap = 0;
  lat->add_option("--out", lat_out, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  lat->add_option("--cap", cap, "maximum number of elements");

  // schnyder
  auto* sch = app.add_subcommand("schnyder", "Schnyder woods");
  MapArgs sch_map;
  add_map_args(sch, sch_map, false);
  int a1 = -1, a2 = -1, a3 = -1;
  bool sch_count = false, sch_enum = false;
  sch->add_option("--a1", a1);
  sch->add_option("--a2", a2);
  sch->add_option("--a3", a3);
  auto* sc = sch->add_flag("--count", sch_count, "count woods");
  sch->add_flag("--enumerate", sch_enum, "list woods (triangulations)")->excludes(sc);
  sch->add_option("--limit", limit, "stop after this many woods");
  sch->add_option("--threads", threads)->check(CLI::Range(1, 256));

  // bipolar
  auto* bip = app.add_subcommand("bipolar", "bipolar orientations");
  MapArgs bip_map;
  add_map_args(bip, bip_map, false);
  int src = -1, snk = -1;
  bool bip_count = false, bip_signs = false;
  bip->add_option("--source", src);
  bip->add_option("--sink", snk);
  auto* bc = bip->add_flag("--count", bip_count, "count only");
  bip->add_flag("--signs", bip_signs, "list orientations with their +/- vectors")->excludes(bc);
  bip->add_option("--limit", limit, "stop listing after this many");
  bip->add_option("--threads", threads)->check(CLI::Range(1, 256));

  // reduce
  auto* red = app.add_subcommand("reduce", "count through f-factors or perfect matchings");
  MapArgs red_map;
  add_map_args(red, red_map);
  std::string via = "matching";
  red->add_option("--via", via, "matching or f-factor")->check(CLI::IsMember({"matching", "f-factor"}));
  red->add_option("--threads", threads)->check(CLI::Range(1, 256));

  // eigen
  auto* eig = app.add_subcommand("eigen", "transfer matrix eigenvalues");
  int two_k = 0;
  double tol = 0;
  std::vector<int> ratio;
  auto* tk = eig->add_option("--two-k", two_k, "number of rows (even, 2..12)");
  eig->add_option("--tol", tol, "relative width of the certificate interval");
  eig->add_option("--ratio", ratio, "two row counts, e.g. 10 8")->expected(2)->excludes(tk);

  // bounds
  auto* bnd = app.add_subcommand("bounds", "evaluate upper bounds");
  MapArgs bnd_map;
  add_map_args(bnd, bnd_map);
  std::string measured, kind;
  bnd->add_option("--measured", measured, "known count, or auto to count");
  bnd->add_option("--kind", kind, "general, triangulation, quadrangulation or bipolar")
      ->check(CLI::IsMember({"general", "triangulation", "quadrangulation", "bipolar"}));
  bnd->add_option("--source", src);
  bnd->add_option("--sink", snk);

  // verify
  auto* ver = app.add_subcommand("verify", "run acceptance suites");
  std::string suite = "all";
  bool list = false, quiet = false;
  ver->add_option("suite", suite, "suite name or all");
  ver->add_option("--threads", threads)->check(CLI::Range(1, 256));
  ver->add_flag("--timing", timing, "include wall-clock readings");
  ver->add_flag("--list", list, "print suite names");
  ver->add_flag("--quiet", quiet, "no report on stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    char* out = nullptr;
    if (gen->parsed()) {
      oc_map* m = nullptr;
      Map::check(oc_map_generate(family.c_str(), k, l, stacking.data(), static_cast<int>(stacking.size()), &m));
      int rc = oc_map_write(m, out_fmt.c_str(), &out);
      oc_map_free(m);
      return finish(rc, &out);
    }
    if (cnt->parsed()) {
      Map m(cnt_map);
      int mi = method == "search" ? 1 : method == "frontier" ? 2 : method == "brute" ? 3 : 0;
      oc_count_options o{threads, mi, no_rigid ? 0 : 1, timing ? 1 : 0};
      return finish(oc_count(m.get(), &o, &out), &out);
    }
    if (en->parsed()) {
      Map m(en_map);
      return finish(oc_enumerate(m.get(), limit, &out), &out);
    }
    if (lat->parsed()) {
      Map m(lat_map);
      return finish(oc_lattice(m.get(), lat_out.c_str(), cap, &out), &out);
    }
    if (sch->parsed()) {
      Map m(sch_map);
      return finish(oc_schnyder(m.get(), a1, a2, a3, sch_enum ? 1 : 0, limit, threads, &out), &out);
    }
    if (bip->parsed()) {
      Map m(bip_map);
      return finish(oc_bipolar(m.get(), src, snk, bip_signs ? 1 : 0, limit, threads, &out), &out);
    }
    if (red->parsed()) {
      Map m(red_map);
      return finish(oc_reduce(m.get(), via.c_str(), threads, &out), &out);
    }
    if (eig->parsed()) {
      if (ratio.size() == 2) return finish(oc_eigen_ratio(ratio[0], ratio[1], tol, &out), &out);
      if (two_k == 0) throw std::runtime_error("eigen needs --two-k or --ratio");
      return finish(oc_eigen(two_k, tol, &out), &out);
    }
    if (bnd->parsed()) {
      Map m(bnd_map);
      return finish(oc_bounds(m.get(), kind.empty() ? nullptr : kind.c_str(),
                              measured.empty() ? nullptr : measured.c_str(), src, snk, &out),
                    &out);
    }
    if (ver->parsed()) {
      if (list) {
        for (int i = 0; i < oc_verify_suite_count(); ++i) std::printf("%s\n", oc_verify_suite_name(i));
        return kPass;
      }
      int rc = oc_verify(suite.c_str(), threads, timing ? 1 : 0, &out);
      if (out && !quiet) human_report(out);
      return finish(rc, &out);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  }
  return kError;
}
