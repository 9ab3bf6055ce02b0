// C API: handles, error codes, JSON shape.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "orientcount/orientcount.h"

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    ++failures;
    std::printf("FAIL %s (last error: %s)\n", what, oc_last_error());
  }
}

nlohmann::json take(char* s) {
  nlohmann::json j = nlohmann::json::parse(s ? s : "null");
  oc_string_free(s);
  return j;
}

}  // namespace

int main() {
  expect(std::strlen(oc_version()) > 0, "version");
  expect(std::string(oc_status_name(OC_PARSE_ERROR)).size() > 0, "status name");

  oc_map* m = nullptr;
  expect(oc_map_generate("tri-grid", 3, 3, nullptr, 0, &m) == OC_OK, "generate tri-grid");
  int n = 0, e = 0, f = 0;
  expect(oc_map_size(m, &n, &e, &f) == OC_OK && n == 9 && n - e + f == 2, "size");

  oc_count_options o{1, 0, 1, 0};
  char* out = nullptr;
  expect(oc_count(m, &o, &out) == OC_OK, "count");
  auto j = take(out);
  expect(j["schema"] == "orientcount/1" && j["result"] == "count", "schema tag");
  expect(j["count"].is_string(), "count is a string");
  expect(!j.contains("ms"), "no ms without timing");
  std::string c1 = j["count"];

  // search and frontier must agree
  o.method = 1;
  expect(oc_count(m, &o, &out) == OC_OK, "count search");
  expect(take(out)["count"] == c1, "search = auto");
  o.method = 2;
  expect(oc_count(m, &o, &out) == OC_OK, "count frontier");
  expect(take(out)["count"] == c1, "frontier = auto");

  // write and parse back
  expect(oc_map_write(m, "pmap", &out) == OC_OK, "write pmap");
  oc_map* m2 = nullptr;
  expect(oc_map_parse(out, &m2) == OC_OK, "parse pmap");
  oc_string_free(out);
  o.method = 0;
  expect(oc_count(m2, &o, &out) == OC_OK && take(out)["count"] == c1, "count after round trip");
  oc_map_free(m2);

  // error paths
  oc_map* bad = nullptr;
  expect(oc_map_parse("n 2\nrot 0: 1\n", &bad) == OC_PARSE_ERROR && bad == nullptr, "parse error code");
  expect(std::strlen(oc_last_error()) > 0, "last error set");
  expect(oc_map_generate("moebius", 2, 2, nullptr, 0, &bad) == OC_BAD_PARAMETERS, "unknown family");
  int wrong[2] = {1, 1};
  expect(oc_map_set_alpha(m, wrong, 2) != OC_OK, "alpha length checked");
  expect(oc_count(nullptr, &o, &out) != OC_OK, "null map rejected");
  expect(oc_verify("nope", 1, 0, &out) == OC_UNKNOWN_SUITE, "unknown suite");
  oc_map_free(m);

  // triangle with alpha = 1: two cyclic orientations
  oc_map* t = nullptr;
  expect(oc_map_parse("n 3\nrot 0: 1 2\nrot 1: 2 0\nrot 2: 0 1\nouter: 0 1\n", &t) == OC_OK, "parse triangle");
  expect(oc_map_set_alpha_text(t, "1,1,1") == OC_OK, "alpha text");
  expect(oc_count(t, &o, &out) == OC_OK && take(out)["count"] == "2", "triangle count");
  expect(oc_enumerate(t, 0, &out) == OC_OK, "enumerate");
  expect(take(out)["orientations"].size() == 2, "two orientations listed");
  expect(oc_reduce(t, "matching", 1, &out) == OC_OK, "reduce matching");
  expect(take(out)["agrees"] == true, "matching chain agrees");
  oc_map_free(t);

  // stacked triangulation: Schnyder woods and bipolar orientations
  int stack[2] = {0, 1};
  oc_map* s = nullptr;
  expect(oc_map_generate("stacked", 0, 0, stack, 2, &s) == OC_OK, "stacked");
  expect(oc_bipolar(s, -1, -1, 0, 0, 1, &out) == OC_OK && take(out)["count"] == "4", "2^(n-3) bipolar");
  expect(oc_schnyder(s, -1, -1, -1, 0, 0, 1, &out) == OC_OK, "schnyder");
  oc_map_free(s);

  expect(oc_eigen(4, 1e-10, &out) == OC_OK, "eigen");
  auto ev = take(out);
  expect(ev["lambda"].get<double>() > 1, "eigenvalue positive");

  // identical output twice
  char *a = nullptr, *b = nullptr;
  expect(oc_verify("fibonacci", 1, 0, &a) == OC_OK && oc_verify("fibonacci", 1, 0, &b) == OC_OK, "verify");
  expect(a && b && std::strcmp(a, b) == 0, "verify output reproducible");
  oc_string_free(a);
  oc_string_free(b);

  std::printf("%s (%d failures)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
