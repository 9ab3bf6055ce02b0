#pragma once

#include <string>
#include <vector>

#include "orientcount/alpha_engine.hpp"
#include "orientcount/planar_map.hpp"

namespace oc {

struct MapWithAlpha {
  PlanarMap map;
  std::vector<int> alpha;  // empty when the text carries no alpha lines
  EdgeRules rules;         // empty unless some edge is marked ignored
};

// pmap v1. Simple maps: `n`, `rot v: ...`, `outer: v u`, optional `alpha v: k`
// and `ignore: u v` for edges left out of the orientation.
// Maps with parallel edges or on the torus use the dart form: `surface: torus`,
// `edge e: u v`, `rotd v: <dart ids>`, `outerd: d`, `ignore-edge: e`.
std::string write_pmap(const PlanarMap& m, const std::vector<int>& alpha = {}, const EdgeRules& rules = {});
MapWithAlpha read_pmap(const std::string& text);

std::string write_map_json(const PlanarMap& m, const std::vector<int>& alpha = {}, const EdgeRules& rules = {});
MapWithAlpha read_map_json(const std::string& text);

// Sniffs JSON (leading '{') or pmap.
MapWithAlpha read_map_any(const std::string& text);

// Alpha as `alpha v: k` lines, a JSON array, or a comma/space separated list.
std::vector<int> read_alpha(const std::string& text, int n);

std::string map_dot(const PlanarMap& m);

std::string read_file_or_stdin(const std::string& path);

}  // namespace oc
