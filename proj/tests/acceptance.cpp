// One line per acceptance criterion. Tolerances live in the engine's suites
// (eigenvalues: 4 significant figures, certified ratio floor 1.537).
#include <cstdio>
#include <string>

#include "orientcount/orientcount.h"

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::stoi(argv[1]) : 4;
  int failed = 0;
  for (int i = 0; i < oc_verify_suite_count(); ++i) {
    const char* name = oc_verify_suite_name(i);
    char* out = nullptr;
    int rc = oc_verify(name, threads, 0, &out);
    const bool pass = rc == OC_OK;
    if (!pass) ++failed;
    std::printf("criterion %2d %-22s %s\n", i + 1, name, pass ? "PASS" : "FAIL");
    if (!pass) {
      if (out) std::printf("%s", out);
      else std::printf("  %s: %s\n", oc_status_name(rc), oc_last_error());
    }
    std::fflush(stdout);
    oc_string_free(out);
  }
  std::printf("%d of %d criteria pass\n", oc_verify_suite_count() - failed, oc_verify_suite_count());
  return failed ? 1 : 0;
}
