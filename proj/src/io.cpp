#include "orientcount/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

namespace oc {

namespace {

bool needs_dart_form(const PlanarMap& m) { return !m.planar() || !m.is_simple(); }

void alpha_lines(std::ostringstream& os, const std::vector<int>& alpha) {
  for (size_t v = 0; v < alpha.size(); ++v) os << "alpha " << v << ": " << alpha[v] << "\n";
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(Errc::kParse, "pmap line " + std::to_string(line) + ": " + msg);
}

std::vector<int> ints_after_colon(const std::string& s, int line) {
  auto c = s.find(':');
  if (c == std::string::npos) parse_fail(line, "missing ':'");
  std::istringstream is(s.substr(c + 1));
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
      out.push_back(x);
    } catch (const std::logic_error&) {
      parse_fail(line, "bad integer '" + tok + "'");
    }
  }
  return out;
}

int index_before_colon(const std::string& s, const std::string& kw, int line) {
  auto c = s.find(':');
  try {
    return std::stoi(s.substr(kw.size(), c - kw.size()));
  } catch (const std::logic_error&) {
    parse_fail(line, "bad index");
  }
}

void apply_ignores(MapWithAlpha& out, const std::vector<std::pair<int, int>>& uv, const std::vector<int>& es) {
  if (uv.empty() && es.empty()) return;
  out.rules.assign(out.map.edge_count(), EdgeRule::kFree);
  for (auto [u, v] : uv) {
    auto d = out.map.find_dart(u, v);
    if (!d) fail(Errc::kParse, "ignore: no edge " + std::to_string(u) + " " + std::to_string(v));
    out.rules[*d >> 1] = EdgeRule::kIgnored;
  }
  for (int e : es) {
    if (e < 0 || e >= out.map.edge_count()) fail(Errc::kParse, "ignore-edge: no edge " + std::to_string(e));
    out.rules[e] = EdgeRule::kIgnored;
  }
}

}  // namespace

std::string write_pmap(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules) {
  std::ostringstream os;
  os << "n " << m.vertex_count() << "\n";
  if (needs_dart_form(m)) {
    os << "surface: " << (m.planar() ? "plane" : "torus") << "\n";
    for (int e = 0; e < m.edge_count(); ++e) {
      auto [u, v] = m.edge_ends(e);
      os << "edge " << e << ": " << u << " " << v << "\n";
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
      os << "rotd " << v << ":";
      for (int d : m.darts_at(v)) os << " " << d;
      os << "\n";
    }
    os << "outerd: " << m.outer_dart() << "\n";
  } else {
    for (int v = 0; v < m.vertex_count(); ++v) {
      os << "rot " << v << ":";
      for (int u : m.neighbors(v)) os << " " << u;
      os << "\n";
    }
    os << "outer: " << m.origin(m.outer_dart()) << " " << m.target(m.outer_dart()) << "\n";
  }
  alpha_lines(os, alpha);
  for (int e = 0; e < static_cast<int>(rules.size()); ++e) {
    if (rules[e] != EdgeRule::kIgnored) continue;
    if (needs_dart_form(m)) {
      os << "ignore-edge: " << e << "\n";
    } else {
      auto [u, v] = m.edge_ends(e);
      os << "ignore: " << u << " " << v << "\n";
    }
  }
  return os.str();
}

MapWithAlpha read_pmap(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int ln = 0, n = -1;
  std::vector<std::vector<int>> rot, rotd;
  std::vector<std::pair<int, int>> edges;
  std::map<int, int> alpha;
  std::vector<std::pair<int, int>> ignore_uv;
  std::vector<int> ignore_e;
  int ou = -1, ov = -1, od = -1;
  bool torus = false, dart_form = false;
  auto check_v = [&](int v) {
    if (n < 0) parse_fail(ln, "'n' must come first");
    if (v < 0 || v >= n) parse_fail(ln, "vertex " + std::to_string(v) + " out of range");
  };
  while (std::getline(is, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "n") {
      if (!(ls >> n) || n < 1) parse_fail(ln, "bad vertex count");
      rot.assign(n, {});
      rotd.assign(n, {});
    } else if (kw == "rot") {
      int v = index_before_colon(line.substr(line.find("rot")), "rot", ln);
      check_v(v);
      rot[v] = ints_after_colon(line, ln);
      for (int u : rot[v]) check_v(u);
    } else if (kw == "rotd") {
      dart_form = true;
      int v = index_before_colon(line.substr(line.find("rotd")), "rotd", ln);
      check_v(v);
      rotd[v] = ints_after_colon(line, ln);
    } else if (kw == "edge") {
      dart_form = true;
      int e = index_before_colon(line.substr(line.find("edge")), "edge", ln);
      auto uv = ints_after_colon(line, ln);
      if (uv.size() != 2 || e != static_cast<int>(edges.size())) parse_fail(ln, "edges must be listed in order");
      check_v(uv[0]);
      check_v(uv[1]);
      edges.push_back({uv[0], uv[1]});
    } else if (kw == "outer:") {
      auto uv = ints_after_colon(line, ln);
      if (uv.size() != 2) parse_fail(ln, "outer needs two vertices");
      ou = uv[0];
      ov = uv[1];
    } else if (kw == "outerd:") {
      auto d = ints_after_colon(line, ln);
      if (d.size() != 1) parse_fail(ln, "outerd needs one dart");
      od = d[0];
    } else if (kw == "ignore:") {
      auto uv = ints_after_colon(line, ln);
      if (uv.size() != 2) parse_fail(ln, "ignore needs two vertices");
      check_v(uv[0]);
      check_v(uv[1]);
      ignore_uv.push_back({uv[0], uv[1]});
    } else if (kw == "ignore-edge:") {
      auto e = ints_after_colon(line, ln);
      if (e.size() != 1) parse_fail(ln, "ignore-edge needs one edge");
      ignore_e.push_back(e[0]);
    } else if (kw == "surface:") {
      std::string s;
      ls >> s;
      if (s != "plane" && s != "torus") parse_fail(ln, "unknown surface '" + s + "'");
      torus = s == "torus";
    } else if (kw == "alpha") {
      int v = index_before_colon(line.substr(line.find("alpha")), "alpha", ln);
      check_v(v);
      auto a = ints_after_colon(line, ln);
      if (a.size() != 1) parse_fail(ln, "alpha needs one value");
      alpha[v] = a[0];
    } else {
      parse_fail(ln, "unknown keyword '" + kw + "'");
    }
  }
  if (n < 0) fail(Errc::kParse, "pmap: missing 'n'");
  MapWithAlpha out;
  if (dart_form) {
    MapFlags fl;
    fl.allow_multi = true;
    fl.planar = !torus;
    if (od < 0) fail(Errc::kParse, "pmap: missing 'outerd'");
    out.map = PlanarMap::from_darts(n, edges, rotd, od, fl);
  } else {
    if (ou < 0) fail(Errc::kParse, "pmap: missing 'outer'");
    out.map = PlanarMap::from_rotations(rot, ou, ov);
  }
  if (!alpha.empty()) {
    if (static_cast<int>(alpha.size()) != n) fail(Errc::kParse, "pmap: alpha must be given for every vertex");
    for (auto [v, a] : alpha) out.alpha.push_back(a);
  }
  apply_ignores(out, ignore_uv, ignore_e);
  return out;
}

std::string write_map_json(const PlanarMap& m, const std::vector<int>& alpha, const EdgeRules& rules) {
  nlohmann::ordered_json j;
  j["n"] = m.vertex_count();
  if (needs_dart_form(m)) {
    j["surface"] = m.planar() ? "plane" : "torus";
    auto es = nlohmann::ordered_json::array();
    for (auto [u, v] : m.edge_list()) es.push_back({u, v});
    j["edges"] = es;
    auto r = nlohmann::ordered_json::array();
    for (int v = 0; v < m.vertex_count(); ++v) r.push_back(m.darts_at(v));
    j["rotd"] = r;
    j["outerd"] = m.outer_dart();
  } else {
    j["rot"] = m.rotations();
    j["outer"] = {m.origin(m.outer_dart()), m.target(m.outer_dart())};
  }
  if (!alpha.empty()) j["alpha"] = alpha;
  auto ig = nlohmann::ordered_json::array();
  for (int e = 0; e < static_cast<int>(rules.size()); ++e)
    if (rules[e] == EdgeRule::kIgnored) {
      if (needs_dart_form(m)) {
        ig.push_back(e);
      } else {
        auto [u, v] = m.edge_ends(e);
        ig.push_back({u, v});
      }
    }
  if (!ig.empty()) j["ignore"] = ig;
  return j.dump() + "\n";
}

MapWithAlpha read_map_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::kParse, std::string("json: ") + e.what());
  }
  MapWithAlpha out;
  try {
    int n = j.at("n").get<int>();
    if (j.contains("rotd")) {
      MapFlags fl;
      fl.allow_multi = true;
      fl.planar = j.value("surface", std::string("plane")) != "torus";
      auto es = j.at("edges").get<std::vector<std::pair<int, int>>>();
      out.map = PlanarMap::from_darts(n, es, j.at("rotd").get<std::vector<std::vector<int>>>(),
                                      j.at("outerd").get<int>(), fl);
    } else {
      auto rot = j.at("rot").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(rot.size()) != n) fail(Errc::kParse, "json: rot must have n entries");
      auto o = j.at("outer").get<std::vector<int>>();
      if (o.size() != 2) fail(Errc::kParse, "json: outer needs two vertices");
      out.map = PlanarMap::from_rotations(rot, o[0], o[1]);
    }
    if (j.contains("alpha")) out.alpha = j["alpha"].get<std::vector<int>>();
    std::vector<std::pair<int, int>> uv;
    std::vector<int> es;
    if (j.contains("ignore"))
      for (auto& x : j["ignore"]) {
        if (x.is_array()) uv.push_back(x.get<std::pair<int, int>>());
        else es.push_back(x.get<int>());
      }
    apply_ignores(out, uv, es);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::kParse, std::string("json: ") + e.what());
  }
  if (!out.alpha.empty() && static_cast<int>(out.alpha.size()) != out.map.vertex_count())
    fail(Errc::kParse, "json: alpha must have n entries");
  return out;
}

MapWithAlpha read_map_any(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return read_map_json(text);
  return read_pmap(text);
}

std::vector<int> read_alpha(const std::string& text, int n) {
  std::vector<int> a;
  auto p = text.find_first_not_of(" \t\r\n");
  if (p == std::string::npos) fail(Errc::kParse, "empty alpha");
  if (text[p] == '[') {
    try {
      a = nlohmann::json::parse(text).get<std::vector<int>>();
    } catch (const std::exception& e) {
      fail(Errc::kParse, std::string("alpha json: ") + e.what());
    }
  } else if (text.find("alpha") != std::string::npos) {
    std::istringstream is(text);
    std::string line;
    std::map<int, int> got;
    int ln = 0;
    while (std::getline(is, line)) {
      ++ln;
      std::istringstream ls(line);
      std::string kw;
      if (!(ls >> kw) || kw != "alpha") continue;
      int v = index_before_colon(line.substr(line.find("alpha")), "alpha", ln);
      auto x = ints_after_colon(line, ln);
      if (x.size() != 1 || v < 0 || v >= n) parse_fail(ln, "bad alpha line");
      got[v] = x[0];
    }
    for (auto [v, x] : got) a.push_back(x);
    if (static_cast<int>(got.size()) != n) a.clear();
  } else {
    std::string s = text;
    for (char& c : s)
      if (c == ',') c = ' ';
    std::istringstream is(s);
    int x;
    while (is >> x) a.push_back(x);
    if (!is.eof()) fail(Errc::kParse, "alpha: bad list");
  }
  if (static_cast<int>(a.size()) != n)
    fail(Errc::kParse, "alpha has " + std::to_string(a.size()) + " entries, map has " + std::to_string(n));
  return a;
}

std::string map_dot(const PlanarMap& m) {
  std::ostringstream os;
  os << "graph map {\n";
  for (int v = 0; v < m.vertex_count(); ++v) os << "  " << v << " [label=\"" << m.label(v) << "\"];\n";
  for (auto [u, v] : m.edge_list()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path);
  if (!f) fail(Errc::kInvalidInput, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

}  // namespace oc
